#include "ncfgl/word.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "ncfgl/errors.hpp"

namespace ncfgl {
namespace {

struct LettersHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

class WordPool {
  public:
    static WordPool& instance() {
        static WordPool pool;
        return pool;
    }

    Word intern(std::span<const uint32_t> letters) {
        std::vector<uint32_t> key(letters.begin(), letters.end());
        {
            std::shared_lock lk(mutex_);
            auto it = index_.find(key);
            if (it != index_.end()) return it->second;
        }
        std::unique_lock lk(mutex_);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        uint32_t weight = 0;
        for (uint32_t x : key) {
            if (x == 0) throw BadInput("word letters must be positive generator indices");
            weight += x;
        }
        storage_.push_back(WordData{weight, static_cast<uint32_t>(key.size()), key});
        Word w = &storage_.back();
        index_.emplace(std::move(key), w);
        return w;
    }

  private:
    std::shared_mutex mutex_;
    std::deque<WordData> storage_;  // deque: stable addresses
    std::unordered_map<std::vector<uint32_t>, Word, LettersHash> index_;
};

}  // namespace

Word intern_word(std::span<const uint32_t> letters) { return WordPool::instance().intern(letters); }

Word intern_word(std::initializer_list<uint32_t> letters) {
    return intern_word(std::span<const uint32_t>(letters.begin(), letters.size()));
}

Word empty_word() {
    static Word e = intern_word(std::span<const uint32_t>{});
    return e;
}

Word single_letter(uint32_t k) {
    uint32_t buf[1] = {k};
    return intern_word(std::span<const uint32_t>(buf, 1));
}

Word concat_words(Word a, Word b) {
    if (a->length == 0) return b;
    if (b->length == 0) return a;
    std::vector<uint32_t> letters;
    letters.reserve(a->length + b->length);
    letters.insert(letters.end(), a->letters.begin(), a->letters.end());
    letters.insert(letters.end(), b->letters.begin(), b->letters.end());
    return intern_word(letters);
}

int word_cmp(Word a, Word b) {
    if (a == b) return 0;
    if (a->weight != b->weight) return a->weight < b->weight ? -1 : 1;
    if (a->length != b->length) return a->length < b->length ? -1 : 1;
    for (uint32_t i = 0; i < a->length; ++i)
        if (a->letters[i] != b->letters[i]) return a->letters[i] < b->letters[i] ? -1 : 1;
    return 0;
}

namespace {
void rec_compositions(int rest, std::vector<uint32_t>& acc, std::vector<Word>& out) {
    if (rest == 0) {
        out.push_back(intern_word(acc));
        return;
    }
    for (int first = 1; first <= rest; ++first) {
        acc.push_back(static_cast<uint32_t>(first));
        rec_compositions(rest - first, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Word> basis_words(int weight) {
    if (weight < 0) throw BadInput("basis_words: negative weight");
    if (weight == 0) return {empty_word()};
    std::vector<Word> out;
    std::vector<uint32_t> acc;
    rec_compositions(weight, acc, out);
    std::sort(out.begin(), out.end(), [](Word a, Word b) { return word_cmp(a, b) < 0; });
    return out;
}

}  // namespace ncfgl

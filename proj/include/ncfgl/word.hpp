#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ncfgl {

// A word in the free monoid on generator indices 1,2,3,...
// Words are interned: equal letter sequences share one WordData, so equality
// is pointer equality and weight/length lookups are a dereference.
struct WordData {
    uint32_t weight;  // sum of letters
    uint32_t length;
    std::vector<uint32_t> letters;
};

using Word = const WordData*;

Word intern_word(std::span<const uint32_t> letters);
Word intern_word(std::initializer_list<uint32_t> letters);
Word empty_word();
Word single_letter(uint32_t k);
Word concat_words(Word a, Word b);

// canonical order: weight asc, then length asc, then lex asc on letters
int word_cmp(Word a, Word b);

// All words of the given weight in canonical order (2^{w-1} of them for w >= 1).
std::vector<Word> basis_words(int weight);

}  // namespace ncfgl

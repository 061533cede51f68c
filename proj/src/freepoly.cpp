#include "ncfgl/freepoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "ncfgl/errors.hpp"

namespace ncfgl {

FreePoly FreePoly::constant(Int c) { return from_word(empty_word(), std::move(c)); }

FreePoly FreePoly::gen(uint32_t k) { return from_word(single_letter(k)); }

FreePoly FreePoly::from_word(Word w, Int c) {
    FreePoly p;
    if (c != 0) p.terms_.push_back(Term{w, std::move(c)});
    return p;
}

FreePoly FreePoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return word_cmp(a.w, b.w) < 0; });
    FreePoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().w == t.w)
            p.terms_.back().c += t.c;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.c == 0; });
    return p;
}

bool FreePoly::operator==(const FreePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].w != o.terms_[i].w || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Int FreePoly::coeff(Word w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, Word key) {
        return word_cmp(t.w, key) < 0;
    });
    if (it != terms_.end() && it->w == w) return it->c;
    return 0;
}

FreePoly FreePoly::operator-() const {
    FreePoly p(*this);
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    FreePoly out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && word_cmp(terms_[i].w, o.terms_[j].w) < 0)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || word_cmp(o.terms_[j].w, terms_[i].w) < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Int c = terms_[i].c + o.terms_[j].c;
            if (c != 0) out.terms_.push_back(Term{terms_[i].w, std::move(c)});
            ++i, ++j;
        }
    }
    return out;
}

FreePoly FreePoly::operator-(const FreePoly& o) const { return *this + (-o); }

FreePoly FreePoly::operator*(const FreePoly& o) const {
    std::unordered_map<Word, Int> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc[concat_words(a.w, b.w)] += a.c * b.c;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (c != 0) terms.push_back(Term{w, std::move(c)});
    return from_terms(std::move(terms));
}

FreePoly& FreePoly::operator+=(const FreePoly& o) { return *this = *this + o; }
FreePoly& FreePoly::operator-=(const FreePoly& o) { return *this = *this - o; }
FreePoly& FreePoly::operator*=(const FreePoly& o) { return *this = *this * o; }

FreePoly FreePoly::operator*(const Int& s) const {
    if (s == 0) return {};
    FreePoly p(*this);
    for (auto& t : p.terms_) t.c *= s;
    return p;
}

FreePoly FreePoly::truncate_weight(int w) const {
    FreePoly p;
    for (const auto& t : terms_)
        if (static_cast<int>(t.w->weight) <= w) p.terms_.push_back(t);
    return p;
}

FreePoly FreePoly::weight_component(int w) const {
    FreePoly p;
    for (const auto& t : terms_)
        if (static_cast<int>(t.w->weight) == w) p.terms_.push_back(t);
    return p;
}

int FreePoly::max_weight() const {
    return terms_.empty() ? 0 : static_cast<int>(terms_.back().w->weight);
}

std::optional<int> FreePoly::homogeneous_weight() const {
    if (terms_.empty()) return std::nullopt;
    int w = static_cast<int>(terms_.front().w->weight);
    if (static_cast<int>(terms_.back().w->weight) != w) return std::nullopt;
    return w;
}

std::optional<int> FreePoly::min_word_length() const {
    if (terms_.empty()) return std::nullopt;
    uint32_t len = terms_.front().w->length;
    for (const auto& t : terms_) len = std::min(len, t.w->length);
    return static_cast<int>(len);
}

int FreePoly::cmp(const FreePoly& a, const FreePoly& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = word_cmp(a.terms_[i].w, b.terms_[i].w);
        if (c != 0) return c;
        if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

namespace {

void append_word_text(std::ostringstream& os, Word w, const std::string& gen_name) {
    for (uint32_t i = 0; i < w->length; ++i) {
        if (i) os << '*';
        os << gen_name << w->letters[i];
    }
}

void append_magnitude(std::ostringstream& os, const Int& c, Word w, const std::string& gen_name) {
    Int a = c < 0 ? Int(-c) : c;
    if (w->length == 0) {
        os << a.str();
        return;
    }
    if (a != 1) os << a.str() << '*';
    append_word_text(os, w, gen_name);
}

}  // namespace

std::string FreePoly::to_text(const std::string& gen_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            if (t.c < 0) os << '-';
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        append_magnitude(os, t.c, t.w, gen_name);
    }
    return os.str();
}

std::string FreePoly::to_latex(const std::string& gen_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            if (t.c < 0) os << '-';
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        Int a = t.c < 0 ? Int(-t.c) : t.c;
        if (t.w->length == 0) {
            os << a.str();
            continue;
        }
        if (a != 1) os << a.str() << ' ';
        for (uint32_t i = 0; i < t.w->length;) {
            uint32_t j = i;
            while (j < t.w->length && t.w->letters[j] == t.w->letters[i]) ++j;
            if (i) os << ' ';
            os << gen_name << "_{" << t.w->letters[i] << '}';
            if (j - i > 1) os << "^{" << (j - i) << '}';
            i = j;
        }
    }
    return os.str();
}

std::string FreePoly::to_json() const {
    nlohmann::json j;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : terms_) {
        nlohmann::json jt;
        jt["c"] = t.c.str();
        jt["w"] = t.w->letters;
        j["terms"].push_back(jt);
    }
    return j.dump();
}

FreePoly FreePoly::from_json(const std::string& doc) {
    nlohmann::json j = nlohmann::json::parse(doc);
    std::vector<Term> terms;
    for (const auto& jt : j.at("terms")) {
        std::vector<uint32_t> letters = jt.at("w").get<std::vector<uint32_t>>();
        terms.push_back(Term{intern_word(letters), Int(jt.at("c").get<std::string>())});
    }
    return from_terms(std::move(terms));
}

namespace {

struct Parser {
    const std::string& s;
    const std::string& gen;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    bool peek_gen() {
        skip_ws();
        return s.compare(pos, gen.size(), gen) == 0;
    }
    Int parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw BadInput("expected integer at position " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }
    uint32_t parse_gen_index() {
        pos += gen.size();
        Int k = parse_uint();
        if (k <= 0 || k > 1000000) throw BadInput("generator index out of range");
        return static_cast<uint32_t>(k);
    }

    // term := uint ['*' gens] | gens, where gens := gen ('*' gen)*
    FreePoly::Term parse_term() {
        Int c = 1;
        std::vector<uint32_t> letters;
        if (peek_digit()) {
            c = parse_uint();
            if (!eat('*')) return {intern_word(letters), c};
        }
        if (!peek_gen()) throw BadInput("expected generator at position " + std::to_string(pos));
        letters.push_back(parse_gen_index());
        while (eat('*')) {
            if (peek_digit()) throw BadInput("integer factor must come first in a term");
            if (!peek_gen()) throw BadInput("expected generator after '*'");
            letters.push_back(parse_gen_index());
        }
        return {intern_word(letters), c};
    }

    FreePoly run() {
        std::vector<FreePoly::Term> terms;
        skip_ws();
        if (pos == s.size()) throw BadInput("empty polynomial text");
        bool neg = eat('-');
        if (!neg) eat('+');
        auto t = parse_term();
        if (neg) t.c = -t.c;
        terms.push_back(t);
        for (;;) {
            skip_ws();
            if (pos == s.size()) break;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                throw BadInput("expected '+' or '-' at position " + std::to_string(pos));
            t = parse_term();
            if (neg) t.c = -t.c;
            terms.push_back(t);
        }
        return FreePoly::from_terms(std::move(terms));
    }
};

}  // namespace

FreePoly FreePoly::parse(const std::string& text, const std::string& gen_name) {
    if (text == "0") return {};
    Parser p{text, gen_name};
    return p.run();
}

}  // namespace ncfgl

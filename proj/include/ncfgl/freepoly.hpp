#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncfgl/bigint.hpp"
#include "ncfgl/word.hpp"

namespace ncfgl {

// Element of the weight-graded free associative ring Z<Z1,Z2,...>.
// Terms are kept in canonical word order (weight, length, lex) with no zeros,
// so equal polynomials have equal representations.
class FreePoly {
  public:
    struct Term {
        Word w;
        Int c;
    };

    FreePoly() = default;

    static FreePoly constant(Int c);
    static FreePoly one() { return constant(1); }
    static FreePoly gen(uint32_t k);                 // Z_k
    static FreePoly from_word(Word w, Int c = 1);
    static FreePoly from_terms(std::vector<Term> terms);  // normalizes

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const FreePoly& o) const;
    bool operator!=(const FreePoly& o) const { return !(*this == o); }

    const std::vector<Term>& terms() const { return terms_; }
    Int coeff(Word w) const;
    size_t term_count() const { return terms_.size(); }

    FreePoly operator-() const;
    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly operator*(const FreePoly& o) const;
    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);
    FreePoly& operator*=(const FreePoly& o);
    FreePoly operator*(const Int& s) const;
    friend FreePoly operator*(const Int& s, const FreePoly& p) { return p * s; }

    // drop all terms of weight > w (w < 0 clears everything)
    FreePoly truncate_weight(int w) const;
    FreePoly weight_component(int w) const;
    int max_weight() const;  // 0 for the zero polynomial
    std::optional<int> homogeneous_weight() const;  // nullopt if 0 or mixed

    // filtration by minimal word length; nullopt for the zero polynomial
    std::optional<int> min_word_length() const;

    // deterministic total order (term-by-term canonical compare), used for sorting
    static int cmp(const FreePoly& a, const FreePoly& b);

    // "3*Z1*Z2 - Z2*Z1"; gen_name is the letter prefix ("Z").
    std::string to_text(const std::string& gen_name = "Z") const;
    std::string to_latex(const std::string& gen_name = "Z") const;
    std::string to_json() const;
    static FreePoly parse(const std::string& text, const std::string& gen_name = "Z");
    static FreePoly from_json(const std::string& json_doc);

  private:
    std::vector<Term> terms_;
};

inline FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

// a ~ Z_k viewed inside the augmentation-ideal filtration: degree = min word length
inline std::optional<int> ideal_filtration_degree(const FreePoly& a) { return a.min_word_length(); }

}  // namespace ncfgl

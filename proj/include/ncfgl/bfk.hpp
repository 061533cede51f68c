#pragma once

#include <span>

#include "ncfgl/engine.hpp"
#include "ncfgl/freepoly.hpp"

namespace ncfgl {

// Element of the free ring on phi_1, phi_2, ... (weight(phi_k) = k), acting on
// the Z-ring through the phi operators. Same word machinery as FreePoly; only
// the alphabet display differs.
class BElement {
  public:
    BElement() = default;
    explicit BElement(FreePoly p) : p_(std::move(p)) {}
    static BElement one() { return BElement(FreePoly::one()); }
    static BElement gen(uint32_t k) { return BElement(FreePoly::gen(k)); }
    static BElement from_word(Word w, Int c = 1) { return BElement(FreePoly::from_word(w, std::move(c))); }

    const FreePoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    bool operator==(const BElement& o) const { return p_ == o.p_; }
    bool operator!=(const BElement& o) const { return !(*this == o); }

    BElement operator+(const BElement& o) const { return BElement(p_ + o.p_); }
    BElement operator-(const BElement& o) const { return BElement(p_ - o.p_); }
    BElement operator*(const BElement& o) const { return BElement(p_ * o.p_); }
    BElement operator*(const Int& s) const { return BElement(p_ * s); }
    BElement operator-() const { return BElement(-p_); }

    std::string to_text() const;   // "2*phi[1,3] + phi[2]"
    std::string to_json() const;

  private:
    FreePoly p_;
};

// Sum of b' (x) b'' terms, canonically sorted.
class BTensor {
  public:
    struct Term {
        Word left;
        Word right;
        Int c;
    };

    BTensor() = default;
    static BTensor from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const BTensor& o) const;

    BTensor operator+(const BTensor& o) const;
    BTensor operator-(const BTensor& o) const;
    BTensor operator*(const BTensor& o) const;  // componentwise concatenation
    BTensor operator*(const Int& s) const;

    BElement left_contract() const;   // m: multiply the two legs
    BElement apply_counit_left() const;
    BElement apply_counit_right() const;

    std::string to_text() const;

  private:
    std::vector<Term> terms_;
};

// Q_j^{(n)} = sum over weak compositions i_1+...+i_n = j of phi_{i_1}...phi_{i_n}
BElement q_poly(int n, int j);

// Delta(phi_n) = sum_{p+q=n} phi_p (x) Q_q^{(1+p)} for Shifted (the validated
// form); AsPrinted uses Q_q^{(p)} (the paper's displayed index, kept for the
// falsification test). Extended multiplicatively to words.
enum class CoproductIndexing { Shifted, AsPrinted };

BTensor coproduct(const BElement& b, CoproductIndexing idx = CoproductIndexing::Shifted);
Int counit(const BElement& b);
BElement antipode(const BElement& b);

// Action on the Z-ring: words act by composition, phi_{i1}(phi_{i2}(...(a))).
FreePoly act(const BElement& b, const FreePoly& a, const FglEngine& engine);

// Three-leg tensors, enough for the coassociativity checks.
struct BTensor3 {
    struct Term {
        Word a, b, c;
        Int coeff;
    };
    std::vector<Term> terms;
    bool operator==(const BTensor3& o) const;
};
BTensor3 coproduct_left(const BTensor& t, CoproductIndexing idx);   // (Delta (x) id)
BTensor3 coproduct_right(const BTensor& t, CoproductIndexing idx);  // (id (x) Delta)

}  // namespace ncfgl

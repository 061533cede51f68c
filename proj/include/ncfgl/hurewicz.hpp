#pragma once

#include <functional>
#include <optional>

#include "ncfgl/tseries.hpp"

namespace ncfgl {

// Which (p,q) naming the published braiding table uses. Direct reads the
// defining expansion literally; PaperFigures transposes the indices (the form
// the printed tables and commutator identities follow). Internal rewriting
// always works with the direct table; the convention only renames entries.
enum class Convention { Direct, PaperFigures };

const char* convention_name(Convention c);
std::optional<Convention> convention_from_name(const std::string& name);

// Coefficients of powers of the orientation series: coeff(k, m) is the
// left coefficient of T^m in X(T)^k, a FreePoly of weight m - k.
class XPowers {
  public:
    explicit XPowers(int order);
    int order() const { return order_; }
    const FreePoly& coeff(int k, int m) const;

  private:
    int order_;
    std::vector<std::vector<FreePoly>> c_;  // c_[k][m]
};

// Left-coefficient expansion over ordered monomials x_1^{e_1} ... x_n^{e_n}.
class XExpansion {
  public:
    XExpansion(int nvars, int order);
    static XExpansion monomial(int nvars, int order, ExpVec e, FreePoly c);
    static XExpansion var(int nvars, int order, int j);  // x_{j+1}

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<ExpVec, FreePoly, GradedLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const XExpansion& o) const;

    FreePoly coeff(const ExpVec& e) const;
    void add_term(const ExpVec& e, const FreePoly& c);

    XExpansion operator+(const XExpansion& o) const;
    XExpansion operator-(const XExpansion& o) const;
    XExpansion operator-() const;
    XExpansion left_mul(const FreePoly& c) const;
    XExpansion operator*(const Int& s) const;
    XExpansion truncated(int order) const;
    XExpansion degree_component(int d) const;

    std::string to_json() const;

  private:
    int nvars_;
    int order_;
    std::map<ExpVec, FreePoly, GradedLexLess> terms_;
};

TSeries realize(const XExpansion& e, const XPowers& xp);
// noncommutative product computed through the model
XExpansion xe_mul(const XExpansion& a, const XExpansion& b, const XPowers& xp);

// Triangular extraction of a (non-Laurent) series over the ordered monomial
// basis. Total and exact: realize(extract_left(s)) == s up to the order.
XExpansion extract_left(const TSeries& s, const XPowers& xp);
// same peeling, stopping once the leading monomial exceeds max_degree
XExpansion extract_left_capped(const TSeries& s, const XPowers& xp, int max_degree);

// r_j with T = sum_j r_j X(T)^{1+j}; returns r_0..r_{order-1}
std::vector<FreePoly> reversion(int order);

struct RewriteRules {
    int order;
    // x_2 x_1 = sum upsilon_direct(p,q) x_1^{1+p} x_2^{1+q}
    std::function<FreePoly(int p, int q)> upsilon_direct;
    // x r = sum_k phi_k(r) x^{1+k}
    std::function<FreePoly(int k, const FreePoly& r)> phi;
};

struct RewriteFactor {
    int var = -1;       // 0-based variable index, or -1 for a scalar factor
    FreePoly scalar;    // used when var < 0
    static RewriteFactor variable(int j) { return RewriteFactor{j, {}}; }
    static RewriteFactor coefficient(FreePoly c) { return RewriteFactor{-1, std::move(c)}; }
};

// Rewrites a product of variables and scalars into the ordered-monomial
// expansion using the leftmost violation first, truncating at x-degree order.
XExpansion normal_order_rewrite(const std::vector<RewriteFactor>& factors, const RewriteRules& rules,
                                int nvars, int order);

}  // namespace ncfgl

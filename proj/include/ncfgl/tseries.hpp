#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncfgl/freepoly.hpp"

namespace ncfgl {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// total degree asc, then lex asc
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Multivariate (Laurent) series in central variables T_1..T_n with FreePoly
// coefficients, truncated at total degree `order`. Exponents may go down to
// -order. Coefficients multiply in the order of the factors (left/right
// matters); the T's commute with everything.
class TSeries {
  public:
    TSeries(int nvars, int order);
    static TSeries unit(int nvars, int order);
    static TSeries monomial(int nvars, int order, ExpVec e, FreePoly c);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<ExpVec, FreePoly, GradedLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_negative_exponents() const;
    bool operator==(const TSeries& o) const;

    FreePoly coeff(const ExpVec& e) const;
    void add_term(const ExpVec& e, const FreePoly& c);  // respects truncation

    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator*(const TSeries& o) const;  // Cauchy product, truncated
    TSeries left_mul(const FreePoly& c) const;
    TSeries right_mul(const FreePoly& c) const;
    TSeries operator*(const Int& s) const;
    TSeries operator-() const;

    TSeries truncated(int order) const;
    // drop weight(coeff) + total_degree > bound (for graded bookkeeping)
    TSeries truncate_total_grade(int bound) const;

    // two-sided inverse of a series that is a univariate unit multiple of T_var:
    // lowest term must be exactly 1*T_var (throws NotInvertible otherwise)
    TSeries invert(int var) const;

    // this must be univariate (nvars == 1, no Laurent part): T -> T_1 + ... + T_k
    TSeries substitute_sum(int k) const;

    // central ring map T_j -> sum_a images[j][a] * T_a into a new variable space;
    // requires no negative exponents
    TSeries apply_linear(int new_nvars, const std::vector<std::vector<int>>& images) const;

    TSeries swap_vars(int i, int j) const;
    TSeries set_var_zero(int var) const;  // keeps variable count

    std::string to_json() const;

  private:
    int nvars_;
    int order_;
    std::map<ExpVec, FreePoly, GradedLexLess> terms_;
};

// X(T_var) = T_var + sum_{k>=1} Z_k T_var^{1+k} in an nvars-variable space
TSeries orientation_series(int var, int nvars, int order);

}  // namespace ncfgl

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncfgl/engine.hpp"
#include "ncfgl/hurewicz.hpp"

namespace ncfgl {

// composition of positive integers; empty = the unit monomial m_{}
using Composition = std::vector<int>;

// Left-coefficient combination of quasi-symmetric monomials m_I.
struct QSymElement {
    int order = 0;  // compositions with total size > order are absent
    std::map<Composition, FreePoly, GradedLexLess> terms;

    static QSymElement unit(int order);
    static QSymElement monomial(int order, Composition I, FreePoly c = FreePoly::one());

    bool is_zero() const { return terms.empty(); }
    bool operator==(const QSymElement& o) const { return order == o.order && terms == o.terms; }
    FreePoly coeff(const Composition& I) const;
    void add_term(Composition I, const FreePoly& c);
    QSymElement operator+(const QSymElement& o) const;
    QSymElement operator-(const QSymElement& o) const;
    int max_length() const;

    std::string to_text() const;
    std::string to_json() const;
};

// sum over increasing placements of I into nvars slots
XExpansion m_expansion(const Composition& I, int nvars, int order);
// inverse of the above on quasi-symmetric expansions, checking every spread
QSymElement qsym_from_xexpansion(const XExpansion& xe, int degree_cap);

// yx = xy + sum_{p<q} theta_{p,q} (x^p y^q - y^p x^q)
struct ThetaTable {
    int order = 0;
    std::map<std::pair<int, int>, FreePoly> t;  // keys p < q
    FreePoly theta(int p, int q) const;         // extends to all p,q >= 1
};
ThetaTable theta_table(int order);
XExpansion e2(const ThetaTable& th);

// Vieta coordinates y_k = v_k x_k v_k^{-1} and the monic divisors v_k,
// both stored over n_vars variables through x-degree <= order.
struct VietaFrame {
    int n_vars = 0;
    int order = 0;
    std::vector<XExpansion> y;
    std::vector<XExpansion> v;
};
VietaFrame vieta(int n_vars, int order);

// propagated Chern class: sum over k-subsets of the product y_k...y_1
QSymElement chern(int k, int n_vars, int order);
QSymElement cprime(int n, int n_vars, int order);

// product in QSym computed through the model; nvars = 0 picks the sum of
// the factors' length bounds
QSymElement qsym_mul(const QSymElement& a, const QSymElement& b, int order, int nvars = 0);

// m_I * r = sum_J Q_J^{(I)}(phi)(r) m_{I+J}
QSymElement qsym_scalar(const Composition& I, const FreePoly& r, int order, const FglEngine& engine);

// deconcatenation coproduct, coefficients kept on the left leg
struct QSymTensorTerm {
    Composition left;
    Composition right;
    FreePoly c;
};
std::vector<QSymTensorTerm> whitney_coproduct(const QSymElement& a);

// B with x_2 x_1 = B x_1 x_2, computed as X(T2)X(T1)X(T2)^{-1}X(T1)^{-1}
std::map<std::pair<int, int>, FreePoly> splitting_B(int order);

FreePoly abelianize(const FreePoly& f);
// (id (x) pi) Delta f == f (x) 1 under the deconcatenation coproduct
bool cotensor_member(const FreePoly& f);

std::vector<Int> partition_numbers(int n_max);
// graded dimensions u_w with sum_i p(i) u_{w-i} = 2^{w-1}, cross-checked by
// enumerating the free generator family
std::vector<Int> graded_dims(int w_max);
// generators phi_{i_1}...phi_{i_n} Ups_{p,q} with i_1 >= ... >= i_n >= p < q, by weight
std::vector<Int> generator_counts(int w_max);

}  // namespace ncfgl

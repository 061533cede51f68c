#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>

#include "ncfgl/hurewicz.hpp"

namespace ncfgl {

struct UpsilonTable {
    int order = 0;
    Convention convention = Convention::PaperFigures;
    std::map<std::pair<int, int>, FreePoly> u;  // p+q <= order, zero entries omitted
};

struct FglTable {
    int order = 0;
    std::map<std::pair<int, int>, FreePoly> a;  // i+j <= order+1, zero entries omitted
};

struct BezoutResult {
    Int g;                    // gcd of binomial(n,1..n-1)
    std::vector<Int> lambda;  // lambda_1..lambda_{n-1}
};

// Deterministic Bezout coefficients: iterated extended Euclid over the middle
// binomials, accumulating onto the smallest indices first.
BezoutResult bezout_lambdas(int n);

// Per-order context caching the derived tables. Tables are built lazily under
// a lock and never change after publication.
class FglEngine {
  public:
    explicit FglEngine(int order, Convention convention = Convention::PaperFigures);

    int order() const { return order_; }
    Convention convention() const { return convention_; }
    const XPowers& xpowers() const { return xp_; }

    // phi_k(a); exact for weight(a) + k <= order
    FreePoly phi(int k, const FreePoly& a) const;
    // phi_{w_1}(phi_{w_2}(...(a)))
    FreePoly phi_word(std::span<const int> w, const FreePoly& a) const;

    const FreePoly& upsilon(int p, int q) const;  // engine convention
    const FreePoly& upsilon(int p, int q, Convention conv) const;
    const FreePoly& upsilon_direct(int p, int q) const;
    UpsilonTable upsilon_table(Convention conv) const;

    const FreePoly& fgl_coeff(int i, int j) const;  // a_{i,j}
    FglTable fgl_table() const;

    // iota_k with x +_F iota(x) = 0; index k = 1..order, iota_1 = -1
    const std::vector<FreePoly>& formal_inverse() const;

    FreePoly generator_X(int n) const;

    RewriteRules rules() const;

  private:
    const std::map<std::pair<int, int>, FreePoly>& direct_table() const;
    const std::map<std::pair<int, int>, FreePoly>& fgl_map() const;

    int order_;
    Convention convention_;
    XPowers xp_;

    mutable std::mutex mutex_;
    mutable std::unique_ptr<std::map<std::pair<int, int>, FreePoly>> upsilon_direct_;
    mutable std::unique_ptr<std::map<std::pair<int, int>, FreePoly>> fgl_;
    mutable std::unique_ptr<std::vector<FreePoly>> inverse_;
};

}  // namespace ncfgl

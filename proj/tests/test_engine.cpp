#include "doctest.h"

#include <vector>

#include "ncfgl/engine.hpp"
#include "ncfgl/errors.hpp"

using namespace ncfgl;

namespace {

Int binom(int n, int k) {
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("conventions rename the braiding table by transposition") {
    FglEngine eng(6);
    CHECK(eng.convention() == Convention::PaperFigures);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q) {
            CHECK(eng.upsilon(p, q, Convention::PaperFigures) == eng.upsilon_direct(q, p));
            CHECK(eng.upsilon(p, q, Convention::Direct) == eng.upsilon_direct(p, q));
        }
    FglEngine dir(4, Convention::Direct);
    CHECK(dir.upsilon(1, 2) == dir.upsilon_direct(1, 2));

    auto table = eng.upsilon_table(Convention::Direct);
    CHECK(table.order == 6);
    CHECK(table.convention == Convention::Direct);
    for (const auto& [pq, c] : table.u) {
        CHECK(!c.is_zero());
        CHECK(c == eng.upsilon_direct(pq.first, pq.second));
    }
}

TEST_CASE("braiding table basics") {
    FglEngine eng(6);
    CHECK(eng.upsilon(0, 0) == FreePoly::one());
    for (int k = 1; k <= 5; ++k) {
        CHECK(eng.upsilon(k, 0).is_zero());
        CHECK(eng.upsilon(0, k).is_zero());
    }
    CHECK(eng.upsilon(2, 2).is_zero());
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; p + q <= 5; ++q) {
            const FreePoly& u = eng.upsilon(p, q);
            if (!u.is_zero()) CHECK(u.homogeneous_weight() == p + q);
        }
}

TEST_CASE("group-law coefficients") {
    FglEngine eng(6);
    CHECK(eng.fgl_coeff(1, 0) == FreePoly::one());
    CHECK(eng.fgl_coeff(0, 1) == FreePoly::one());
    CHECK(eng.fgl_coeff(0, 0).is_zero());
    CHECK(eng.fgl_coeff(1, 1) == FreePoly::parse("2*Z1"));
    for (const auto& [ij, a] : eng.fgl_table().a) {
        if (ij.first + ij.second <= 1) continue;
        CHECK(!a.is_zero());
        CHECK(a.homogeneous_weight() == ij.first + ij.second - 1);
    }
}

TEST_CASE("formal inverse coefficients") {
    FglEngine eng(6);
    const auto& io = eng.formal_inverse();
    REQUIRE(io.size() == 7);
    CHECK(io[0].is_zero());
    CHECK(io[1] == -FreePoly::one());
    for (int k = 2; k <= 6; ++k) {
        CHECK(!io[k].is_zero());
        CHECK(io[k].homogeneous_weight() == k - 1);
    }
}

TEST_CASE("precision limits surface as PrecisionExhausted") {
    FglEngine eng(6);
    CHECK_THROWS_AS(eng.phi(6, FreePoly::gen(1)), PrecisionExhausted);
    CHECK_NOTHROW(eng.phi(5, FreePoly::gen(1)));
    CHECK_THROWS_AS(eng.upsilon(5, 2), PrecisionExhausted);
    CHECK_THROWS_AS(eng.fgl_coeff(8, 0), PrecisionExhausted);
    CHECK_NOTHROW(eng.fgl_coeff(7, 0));
    CHECK_THROWS_AS(eng.generator_X(7), PrecisionExhausted);
    CHECK_THROWS_AS(eng.phi(-1, FreePoly::gen(1)), BadInput);
    CHECK_THROWS_AS(eng.upsilon(-1, 0), BadInput);
    CHECK_THROWS_AS(FglEngine(0), BadInput);
    CHECK(eng.phi(0, FreePoly::gen(2)) == FreePoly::gen(2));
}

TEST_CASE("phi_word composes outer-first") {
    FglEngine eng(7);
    FreePoly a = FreePoly::gen(2);
    std::vector<int> w{1, 2};
    CHECK(eng.phi_word(w, a) == eng.phi(1, eng.phi(2, a)));
    std::vector<int> w3{1, 1, 1};
    CHECK(eng.phi_word(w3, a) == eng.phi(1, eng.phi(1, eng.phi(1, a))));
    std::vector<int> empty;
    CHECK(eng.phi_word(empty, a) == a);
}

TEST_CASE("rewrite rules closure mirrors the engine tables") {
    FglEngine eng(6);
    RewriteRules rules = eng.rules();
    CHECK(rules.order == 6);
    CHECK(rules.upsilon_direct(1, 2) == eng.upsilon_direct(1, 2));
    CHECK(rules.phi(1, FreePoly::gen(2)) == eng.phi(1, FreePoly::gen(2)));
}

TEST_CASE("bezout combinations hit the binomial gcd") {
    // gcd of binomial(n,1..n-1) is p on prime powers p^k, else 1
    const std::vector<std::pair<int, int>> want{
        {2, 2}, {3, 3}, {4, 2}, {5, 5}, {6, 1}, {7, 7}, {8, 2}, {9, 3}, {10, 1}, {11, 11}, {12, 1}};
    for (auto [n, g] : want) {
        BezoutResult r = bezout_lambdas(n);
        CHECK(r.g == g);
        REQUIRE(int(r.lambda.size()) == n - 1);
        Int s = 0;
        for (int k = 1; k <= n - 1; ++k) s += r.lambda[k - 1] * binom(n, k);
        CHECK(s == r.g);
    }
    CHECK_THROWS_AS(bezout_lambdas(1), BadInput);
}

TEST_CASE("generators have the expected grading") {
    FglEngine eng(7);
    for (int n = 1; n <= 6; ++n) {
        FreePoly x = eng.generator_X(n);
        CHECK(!x.is_zero());
        CHECK(x.homogeneous_weight() == n);
    }
    CHECK(eng.generator_X(1) == FreePoly::parse("2*Z1"));
    CHECK_THROWS_AS(eng.generator_X(0), BadInput);
}

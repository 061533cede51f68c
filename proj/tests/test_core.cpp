#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncfgl/errors.hpp"
#include "ncfgl/freepoly.hpp"
#include "ncfgl/hurewicz.hpp"
#include "ncfgl/tseries.hpp"

using namespace ncfgl;

TEST_CASE("words intern and compare canonically") {
    Word a = intern_word({1, 2});
    Word b = intern_word({1, 2});
    CHECK(a == b);
    CHECK(a->weight == 3);
    CHECK(a->length == 2);
    CHECK(empty_word()->length == 0);
    CHECK(empty_word()->weight == 0);
    CHECK(single_letter(4) == intern_word({4}));
    CHECK(concat_words(a, single_letter(3)) == intern_word({1, 2, 3}));
    CHECK(concat_words(empty_word(), a) == a);

    // weight first, then length, then lex
    CHECK(word_cmp(intern_word({3}), intern_word({1, 3})) < 0);
    CHECK(word_cmp(intern_word({4}), intern_word({1, 3})) < 0);
    CHECK(word_cmp(intern_word({1, 3}), intern_word({2, 2})) < 0);
    CHECK(word_cmp(a, b) == 0);
}

TEST_CASE("basis_words enumerates compositions in order") {
    for (int w = 1; w <= 10; ++w) {
        auto ws = basis_words(w);
        CHECK(ws.size() == (size_t{1} << (w - 1)));
        for (size_t i = 0; i < ws.size(); ++i) {
            CHECK(ws[i]->weight == uint32_t(w));
            if (i) CHECK(word_cmp(ws[i - 1], ws[i]) < 0);
        }
    }
}

TEST_CASE("freepoly parse and print round trip") {
    FreePoly p = FreePoly::parse("3*Z1*Z2 - Z2*Z1 + 2*Z3");
    CHECK(p.to_text() == "2*Z3 + 3*Z1*Z2 - Z2*Z1");
    CHECK(FreePoly::parse(p.to_text()) == p);
    CHECK(FreePoly::parse("0").is_zero());
    CHECK(FreePoly::parse("-Z1") == -FreePoly::gen(1));
    CHECK(p.coeff(intern_word({1, 2})) == 3);
    CHECK(p.coeff(intern_word({9})) == 0);
    CHECK(p.term_count() == 3);
    CHECK(FreePoly::from_json(p.to_json()) == p);
    CHECK(FreePoly::from_json(FreePoly().to_json()).is_zero());
}

TEST_CASE("freepoly algebra and grading") {
    FreePoly z1 = FreePoly::gen(1), z2 = FreePoly::gen(2);
    CHECK(z1 * z2 != z2 * z1);
    CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z1 * z2 + z2 * z1 - z2 * z2);
    CHECK(commutator(z1, z1).is_zero());
    CHECK((z1 * Int(3)) - (Int(3) * z1) == FreePoly());

    FreePoly p = FreePoly::parse("Z1*Z1 - 2*Z4*Z1");
    CHECK(p.max_weight() == 5);
    CHECK(!p.homogeneous_weight().has_value());
    CHECK(p.truncate_weight(2) == FreePoly::parse("Z1*Z1"));
    CHECK(p.weight_component(5) == FreePoly::parse("-2*Z4*Z1"));
    CHECK(p.min_word_length() == 2);
    CHECK(!FreePoly().min_word_length().has_value());

    FreePoly h = FreePoly::parse("Z2*Z1 + Z3");
    CHECK(h.homogeneous_weight() == 3);
    CHECK(h.min_word_length() == 1);
    CHECK(FreePoly::cmp(z1, z2) < 0);
    CHECK(FreePoly::cmp(z1, z1) == 0);
}

TEST_CASE("tseries keeps coefficient sides across the central product") {
    const int ord = 6;
    TSeries x = orientation_series(0, 2, ord);
    TSeries y = orientation_series(1, 2, ord);
    TSeries xy = x * y, yx = y * x;
    CHECK(xy.coeff({1, 1}) == FreePoly::one());
    // T's commute, coefficients do not: same monomial, opposite word order
    CHECK(xy.coeff({2, 3}) == FreePoly::parse("Z1*Z2"));
    CHECK(yx.coeff({2, 3}) == FreePoly::parse("Z2*Z1"));
    CHECK(xy.left_mul(FreePoly::gen(3)).coeff({1, 1}) == FreePoly::gen(3));
    CHECK((xy - xy).is_zero());
    CHECK(xy + yx == yx + xy);
    CHECK(x.swap_vars(0, 1) == y);
    CHECK(x.set_var_zero(0).is_zero());
}

TEST_CASE("tseries inversion is exact to the truncation") {
    const int ord = 8;
    TSeries x = orientation_series(0, 1, ord);
    TSeries xi = x.invert(0);
    CHECK(xi.has_negative_exponents());
    CHECK(xi.coeff({-1}) == FreePoly::one());
    CHECK(xi.coeff({0}) == -FreePoly::gen(1));
    CHECK(xi.coeff({1}) == FreePoly::parse("-Z2 + Z1*Z1"));
    CHECK(x * xi == TSeries::unit(1, ord));
    CHECK(xi * x == TSeries::unit(1, ord));
    CHECK_THROWS_AS(TSeries::unit(1, ord).invert(0), NotInvertible);
    CHECK_THROWS_AS((x * x).invert(0), NotInvertible);
}

TEST_CASE("tseries substitution maps") {
    const int ord = 5;
    TSeries x = orientation_series(0, 1, ord);
    TSeries s = x.substitute_sum(2);
    CHECK(s.coeff({1, 0}) == FreePoly::one());
    CHECK(s.coeff({0, 1}) == FreePoly::one());
    CHECK(s.coeff({1, 1}) == FreePoly::gen(1) * Int(2));  // Z1*(T1+T2)^2 cross term
    TSeries back = s.apply_linear(1, {{1}, {0}});  // T1 -> T, T2 -> 0
    CHECK(back == x);
}

TEST_CASE("xpowers matches the defining series") {
    XPowers xp(7);
    CHECK(xp.coeff(0, 0) == FreePoly::one());
    CHECK(xp.coeff(1, 1) == FreePoly::one());
    for (int m = 2; m <= 7; ++m) CHECK(xp.coeff(1, m) == FreePoly::gen(uint32_t(m - 1)));
    CHECK(xp.coeff(2, 2) == FreePoly::one());
    CHECK(xp.coeff(2, 3) == FreePoly::gen(1) * Int(2));
    CHECK(xp.coeff(3, 7).homogeneous_weight() == 4);
    CHECK(xp.coeff(2, 1).is_zero());
}

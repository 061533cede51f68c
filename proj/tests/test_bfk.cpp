#include "doctest.h"

#include "ncfgl/bfk.hpp"
#include "ncfgl/engine.hpp"

using namespace ncfgl;

TEST_CASE("q polynomials enumerate weak compositions") {
    CHECK(q_poly(3, 0) == BElement::one());
    CHECK(q_poly(1, 3) == BElement::gen(3));
    CHECK(q_poly(2, 2) == BElement(FreePoly::parse("2*Z2 + Z1*Z1")));
    CHECK(q_poly(2, 1) == BElement(FreePoly::parse("2*Z1")));
    // Q_j^{(n)} counts n-leg weak compositions: constant term in phi grading
    CHECK(q_poly(3, 2) == BElement(FreePoly::parse("3*Z2 + 3*Z1*Z1")));
}

TEST_CASE("coproduct on the first generators") {
    Word e = empty_word();
    Word w1 = single_letter(1);
    Word w2 = single_letter(2);
    BTensor d1 = coproduct(BElement::gen(1));
    CHECK(d1 == BTensor::from_terms({{e, w1, 1}, {w1, e, 1}}));
    BTensor d2 = coproduct(BElement::gen(2));
    CHECK(d2 == BTensor::from_terms({{e, w2, 1}, {w1, w1, 2}, {w2, e, 1}}));

    // multiplicative on products
    BElement a = BElement::gen(1) + BElement::gen(2);
    BElement b = BElement::gen(1) * BElement::gen(3);
    CHECK(coproduct(a * b) == coproduct(a) * coproduct(b));
    CHECK(coproduct(BElement::one()) == BTensor::from_terms({{e, e, 1}}));
}

TEST_CASE("counit and antipode on small elements") {
    CHECK(counit(BElement::one()) == 1);
    CHECK(counit(BElement::gen(2)) == 0);
    CHECK(counit(BElement::one() * Int(5) - BElement::gen(1)) == 5);
    CHECK(antipode(BElement::gen(1)) == -BElement::gen(1));
    CHECK(antipode(BElement::gen(2)) == BElement(FreePoly::parse("-Z2 + 2*Z1*Z1")));
    // anti-homomorphism on a product of generators
    BElement p = BElement::gen(1) * BElement::gen(2);
    BElement want = antipode(BElement::gen(2)) * antipode(BElement::gen(1));
    CHECK(antipode(p) == want);
}

TEST_CASE("tensor contraction helpers") {
    BTensor d = coproduct(BElement::gen(2));
    CHECK(d.apply_counit_left() == BElement::gen(2));
    CHECK(d.apply_counit_right() == BElement::gen(2));
    // m(S (x) id) Delta phi_2 = counit(phi_2) = 0
    BTensor sd = BTensor::from_terms([&] {
        std::vector<BTensor::Term> ts;
        for (const auto& t : d.terms()) {
            BElement s = antipode(BElement::from_word(t.left));
            for (const auto& st : s.poly().terms()) ts.push_back({st.w, t.right, st.c * t.c});
        }
        return ts;
    }());
    CHECK(sd.left_contract().is_zero());
}

TEST_CASE("action factors through composition") {
    FglEngine eng(7);
    FreePoly r = FreePoly::gen(2);
    BElement w21 = BElement::from_word(intern_word({2, 1}));
    std::vector<int> w{2, 1};
    CHECK(act(w21, r, eng) == eng.phi_word(w, r));
    BElement a = BElement::gen(1), b = BElement::gen(2);
    CHECK(act(a * b, r, eng) == act(a, act(b, r, eng), eng));
    CHECK(act(BElement::one(), r, eng) == r);
    CHECK(act(a + b, r, eng) == act(a, r, eng) + act(b, r, eng));
}

TEST_CASE("printed coproduct indexing fails the axioms") {
    // the displayed index drops a leg: counit breaks already on phi_1
    BElement g1 = BElement::gen(1);
    BTensor d1p = coproduct(g1, CoproductIndexing::AsPrinted);
    bool counit_ok =
        d1p.apply_counit_left() == g1 && d1p.apply_counit_right() == g1;
    CHECK(!counit_ok);

    // and coassociativity breaks from phi_2 on
    BTensor d2p = coproduct(BElement::gen(2), CoproductIndexing::AsPrinted);
    CHECK(!(coproduct_left(d2p, CoproductIndexing::AsPrinted) ==
            coproduct_right(d2p, CoproductIndexing::AsPrinted)));

    // while the validated indexing passes both on the same elements
    BTensor d2 = coproduct(BElement::gen(2));
    CHECK(coproduct_left(d2, CoproductIndexing::Shifted) ==
          coproduct_right(d2, CoproductIndexing::Shifted));
}

TEST_CASE("phi alphabet printing") {
    BElement b = BElement::gen(2) * Int(2) + BElement::gen(1) * BElement::gen(3);
    CHECK(b.to_text() == "2*phi[2] + phi[1,3]");
    CHECK(BElement().to_text() == "0");
}

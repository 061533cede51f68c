"""Smoke test for the _core extension, run straight from the build tree."""

import _core as m


def main():
    eng = m.Engine(8)
    assert eng.order == 8
    assert eng.convention == "paper-figures"

    z2 = m.FreePoly.parse("Z2")
    assert eng.phi(1, z2).to_text() == "Z1*Z2 - Z2*Z1"
    assert eng.fgl_coeff(1, 1).to_text() == "2*Z1"
    assert eng.upsilon(2, 2).is_zero()
    assert eng.upsilon(1, 2) == eng.upsilon_direct(2, 1)

    a = m.FreePoly.gen(1)
    b = m.FreePoly.gen(2)
    assert (a * b - b * a) == m.commutator(a, b)
    assert (2 * a).to_text() == "2*Z1"
    assert (-a) + a == m.FreePoly.parse("0")
    assert m.FreePoly.parse(m.commutator(a, b).to_text()) == m.commutator(a, b)

    target = m.commutator(eng.generator_X(1), eng.generator_X(2))
    res = m.express(target, [("Ups[1,2]", eng.upsilon(1, 2))])
    assert res["status"] == "unique"
    assert res["combo"] == [("Ups[1,2]", 6)]

    dims = m.graded_dims(8)
    assert dims == [1, 0, 0, 1, 2, 5, 9, 19, 37]
    assert m.generator_counts(6) == [0, 0, 0, 1, 2, 5, 8]

    rows = m.ranks(4, 6)
    assert [r["weight"] for r in rows] == [1, 2, 3, 4]
    assert all(r["ok"] and r["rank"] == r["family"] for r in rows)
    assert [r["index"] for r in rows] == [2, 12, 96, 69120]

    terms = m.qsym_mul_monomials([1], [1], 6)
    lookup = {tuple(comp): poly for comp, poly in terms}
    assert not lookup[(1, 1)].is_zero()

    reports = m.run_suite("splitting", 8, 8)
    assert reports and all(r["ok"] for r in reports)

    figs = m.reproduce_figures(8)
    assert set(figs) == {"figure1.txt", "figure2.txt", "figure3.txt", "displays.txt"}

    err = None
    try:
        eng.phi(9, z2)
    except m.PrecisionExhausted as e:
        err = e
    assert err is not None

    print("smoke ok")


if __name__ == "__main__":
    main()

#include "doctest.h"

#include <random>

#include "ncfgl/hnf.hpp"

using namespace ncfgl;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IntMat m(int(rows.size()), int(rows.begin()->size()));
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (long v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

IntMat random_mat(int rows, int cols, int bound, std::mt19937& rng) {
    IntMat m(rows, cols);
    std::uniform_int_distribution<int> d(-bound, bound);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = d(rng);
    return m;
}

void check_hnf_shape(const IntMat& m, const HnfResult& res) {
    CHECK(res.u * m == res.h);
    CHECK(res.u * res.v == IntMat::identity(m.rows));
    CHECK(int(res.pivot_col.size()) == res.rank);
    int prev = -1;
    for (int r = 0; r < res.rank; ++r) {
        int pc = res.pivot_col[r];
        CHECK(pc > prev);
        prev = pc;
        const Int& piv = res.h.at(r, pc);
        CHECK(piv > 0);
        for (int c = 0; c < pc; ++c) CHECK(res.h.at(r, c) == 0);
        for (int above = 0; above < r; ++above) {
            CHECK(res.h.at(above, pc) >= 0);
            CHECK(res.h.at(above, pc) < piv);
        }
    }
    for (int r = res.rank; r < res.h.rows; ++r)
        for (int c = 0; c < res.h.cols; ++c) CHECK(res.h.at(r, c) == 0);
}

}  // namespace

TEST_CASE("hermite form of a known matrix") {
    IntMat m = from_rows({{2, 3, 6, 2}, {5, 6, 1, 6}, {8, 3, 1, 1}});
    auto res = hermite_normal_form(m);
    IntMat want = from_rows({{1, 0, 50, -11}, {0, 3, 28, -2}, {0, 0, 61, -13}});
    CHECK(res.h == want);
    CHECK(res.rank == 3);
    check_hnf_shape(m, res);

    auto id = hermite_normal_form(IntMat::identity(4));
    CHECK(id.h == IntMat::identity(4));
    CHECK(id.rank == 4);
}

TEST_CASE("hermite form properties on random matrices") {
    std::mt19937 rng(7u);
    for (int trial = 0; trial < 12; ++trial) {
        int rows = 2 + int(rng() % 6);
        int cols = 2 + int(rng() % 6);
        IntMat m = random_mat(rows, cols, 9, rng);
        auto res = hermite_normal_form(m);
        check_hnf_shape(m, res);
        CHECK(integer_rank(m) == res.rank);
    }
    // rank-deficient by construction: duplicate rows
    IntMat m(4, 3);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int c = 0; c < 3; ++c) {
        m.at(0, c) = d(rng);
        m.at(1, c) = m.at(0, c);
        m.at(2, c) = d(rng);
        m.at(3, c) = m.at(0, c) + m.at(2, c);
    }
    auto res = hermite_normal_form(m);
    CHECK(res.rank <= 2);
    check_hnf_shape(m, res);
}

TEST_CASE("hermite form on a larger dense instance") {
    std::mt19937 rng(20260814u);
    IntMat m = random_mat(32, 32, 9, rng);
    auto res = hermite_normal_form(m);
    check_hnf_shape(m, res);
    CHECK(res.rank == 32);  // random dense square: full rank
}

TEST_CASE("integer solving") {
    {
        IntMat m = from_rows({{2, 0}, {0, 3}});
        auto s = solve_integer(m, {Int(4), Int(9)});
        REQUIRE(s.status == IntSolve::Unique);
        CHECK(s.x == std::vector<Int>{2, 3});
    }
    {
        IntMat m = from_rows({{2}});
        auto s = solve_integer(m, {Int(1)});
        CHECK(s.status == IntSolve::NoSolutionIntegral);
        CHECK(!s.obstruction.empty());
    }
    {
        IntMat m = from_rows({{1}, {1}});
        auto s = solve_integer(m, {Int(0), Int(1)});
        CHECK(s.status == IntSolve::NoSolutionRational);
        CHECK(!s.obstruction.empty());
    }
    {
        IntMat m = from_rows({{1, 1}});
        auto s = solve_integer(m, {Int(2)});
        REQUIRE(s.status == IntSolve::NonUnique);
        CHECK(s.x[0] + s.x[1] == 2);
    }
    // random solvable systems: plant x, solve m*x = b
    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + int(rng() % 4);
        IntMat m = random_mat(n + 1, n, 8, rng);
        std::vector<Int> x0(n);
        for (auto& v : x0) v = d(rng);
        std::vector<Int> b(n + 1, 0);
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c < n; ++c) b[r] += m.at(r, c) * x0[c];
        auto s = solve_integer(m, b);
        REQUIRE((s.status == IntSolve::Unique || s.status == IntSolve::NonUnique));
        std::vector<Int> mb(n + 1, 0);
        for (int r = 0; r <= n; ++r)
            for (int c = 0; c < n; ++c) mb[r] += m.at(r, c) * s.x[c];
        CHECK(mb == b);
        if (s.status == IntSolve::Unique && integer_rank(m) == n) CHECK(s.x == x0);
    }
}

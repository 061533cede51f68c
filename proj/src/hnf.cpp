#include "ncfgl/hnf.hpp"

#include <algorithm>

#include "ncfgl/errors.hpp"

namespace ncfgl {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw BadInput("IntMat: dimension mismatch");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Int& w = o.at(k, j);
                if (w != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct HnfWork {
    IntMat h, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < h.cols; ++c) std::swap(h.at(i, c), h.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void negate_row(int i) {
        for (int c = 0; c < h.cols; ++c) h.at(i, c) = -h.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        for (int r = 0; r < v.rows; ++r) v.at(r, i) = -v.at(r, i);
    }
    // row_i -= q * row_j; inverse op on v: col_j += q * col_i
    void row_sub(int i, int j, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < h.cols; ++c) h.at(i, c) -= q * h.at(j, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
        for (int r = 0; r < v.rows; ++r) v.at(r, j) += q * v.at(r, i);
    }
};

}  // namespace

HnfResult hermite_normal_form(const IntMat& m) {
    HnfWork w{m, IntMat::identity(m.rows), IntMat::identity(m.rows)};
    int r0 = 0;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols && r0 < m.rows; ++c) {
        // gcd-reduce the column below r0 until a single nonzero entry remains
        for (;;) {
            int best = -1;
            for (int r = r0; r < w.h.rows; ++r) {
                if (w.h.at(r, c) == 0) continue;
                if (best < 0 || abs(w.h.at(r, c)) < abs(w.h.at(best, c))) best = r;
            }
            if (best < 0) break;  // column is zero below r0
            bool others = false;
            for (int r = r0; r < w.h.rows; ++r) {
                if (r == best || w.h.at(r, c) == 0) continue;
                others = true;
                Int q = floor_div(w.h.at(r, c), w.h.at(best, c));
                w.row_sub(r, best, q);
            }
            if (!others) {
                w.swap_rows(r0, best);
                break;
            }
        }
        if (w.h.at(r0, c) == 0) continue;
        if (w.h.at(r0, c) < 0) w.negate_row(r0);
        for (int r = 0; r < r0; ++r) {
            Int q = floor_div(w.h.at(r, c), w.h.at(r0, c));
            w.row_sub(r, r0, q);
        }
        pivots.push_back(c);
        ++r0;
    }
    HnfResult res;
    res.h = std::move(w.h);
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    res.rank = static_cast<int>(pivots.size());
    res.pivot_col = std::move(pivots);
    return res;
}

int integer_rank(const IntMat& m) { return hermite_normal_form(m).rank; }

IntSolve solve_integer(const IntMat& m, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw BadInput("solve_integer: rhs size mismatch");
    // column operations on m = row HNF of the transpose: m * u'^T = h'^T
    IntMat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    HnfResult hf = hermite_normal_form(t);

    IntSolve out;
    std::vector<Int> residual = b;
    std::vector<Int> y(m.cols);
    for (int p = 0; p < hf.rank; ++p) {
        int row = hf.pivot_col[p];  // leading row of column p of h'^T
        const Int& lead = hf.h.at(p, row);
        if (residual[row] % lead != 0) {
            out.status = IntSolve::NoSolutionIntegral;
            out.obstruction = "coordinate " + std::to_string(row) + " requires division by " + lead.str();
            return out;
        }
        y[p] = residual[row] / lead;
        if (y[p] != 0)
            for (int r = 0; r < m.rows; ++r) residual[r] -= y[p] * hf.h.at(p, r);
    }
    for (int r = 0; r < m.rows; ++r) {
        if (residual[r] != 0) {
            out.status = IntSolve::NoSolutionRational;
            out.obstruction = "coordinate " + std::to_string(r) + " is outside the column span";
            return out;
        }
    }
    // x = u'^T y, free coordinates already zero
    out.x.assign(m.cols, 0);
    for (int j = 0; j < m.cols; ++j) {
        Int acc = 0;
        for (int p = 0; p < m.cols; ++p) {
            if (y[p] == 0) continue;
            acc += hf.u.at(p, j) * y[p];
        }
        out.x[j] = acc;
    }
    out.status = hf.rank < m.cols ? IntSolve::NonUnique : IntSolve::Unique;
    return out;
}

}  // namespace ncfgl

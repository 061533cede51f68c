#pragma once

#include <string>
#include <vector>

#include "ncfgl/bigint.hpp"

namespace ncfgl {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static IntMat identity(int n);
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Row-style Hermite normal form: h = u * input with u unimodular (v = u^{-1}
// maintained alongside, so u*v = identity certifies unimodularity). Pivots are
// positive, entries above a pivot are reduced into [0, pivot), pivot columns
// strictly increase.
struct HnfResult {
    IntMat h;
    IntMat u;
    IntMat v;
    int rank = 0;
    std::vector<int> pivot_col;  // per pivot row
};

HnfResult hermite_normal_form(const IntMat& m);

int integer_rank(const IntMat& m);

// Solve m * x = b over the integers.
struct IntSolve {
    enum Status { Unique, NonUnique, NoSolutionRational, NoSolutionIntegral };
    Status status = NoSolutionRational;
    std::vector<Int> x;        // valid for Unique/NonUnique (canonical choice)
    std::string obstruction;   // set for the failure statuses
};

IntSolve solve_integer(const IntMat& m, const std::vector<Int>& b);

}  // namespace ncfgl

#pragma once

#include <string>
#include <vector>

#include "ncfgl/engine.hpp"
#include "ncfgl/hnf.hpp"

namespace ncfgl {

// Named weight-homogeneous dictionary entry for integer re-expression.
struct DictEntry {
    std::string name;
    FreePoly value;
};

struct ExpressResult {
    enum Status { Unique, NonUnique, NotInSpan };
    Status status = NotInSpan;
    std::vector<std::pair<std::string, Int>> combo;  // nonzero coefficients, dictionary order
    std::string detail;                              // obstruction / tie-break note

    std::string to_text() const;  // "6*Ups[1,2]" style
};

// Solve target = sum c_i * dict[i].value over the integers (HNF over the
// weight-w word basis). Target must be weight-homogeneous; on a non-unique
// solve the canonical solution in dictionary order is returned and flagged.
ExpressResult express(const FreePoly& target, const std::vector<DictEntry>& dict);

// Iterated-commutator generator phi_{i_1}...phi_{i_n}(Upsilon_{p,q}) with
// i_1 >= ... >= i_n >= p < q.
struct GenSpec {
    std::vector<int> ivec;
    int p = 1;
    int q = 2;

    int weight() const;
    std::string name() const;  // "phi[1,1]Ups[1,2]", "Ups[2,3]"
};

// All generators of weight <= w_max, ordered by (weight, p, q, ivec).
std::vector<GenSpec> commutator_generators(int w_max);

// Dictionary for one weight: all products (generator word) * (ascending
// X-monomial) of total weight exactly w, names like "Ups[1,2].X[1]^2".
std::vector<DictEntry> module_family(int w, const FglEngine& eng);

struct BasisRow {
    int weight = 0;
    int family_size = 0;   // enumerated dictionary monomials
    Int expected;          // 2^{w-1}
    int rank = 0;          // integer rank of the expansion matrix
    bool count_ok = false; // family_size == expected
    bool full_rank = false;
    Int index;             // product of HNF pivots (sublattice index); 0 on rank defect
};

// Freeness bookkeeping for weights 1..w_max (spec: full rank and the
// convolution count 2^{w-1} at each weight).
std::vector<BasisRow> basis_check(int w_max, const FglEngine& eng);

struct RelationReport {
    std::string relation;
    bool ok = false;
    std::string lhs;  // canonical text of both sides (equal when ok)
    std::string rhs;
};

bool all_ok(const std::vector<RelationReport>& reports);
std::string reports_to_json(const std::vector<RelationReport>& reports);

// Exact identity suite: weak anti-symmetry sums, the unreduced Remark
// displays, Jacobi residues, modular length congruences. Requires
// w_max <= eng.order().
std::vector<RelationReport> verify_relation_suite(int w_max, const FglEngine& eng);

// [X1,X2], [X1,X3], [X2,X3] against their closed forms.
std::vector<RelationReport> verify_commutators(const FglEngine& eng);

}  // namespace ncfgl

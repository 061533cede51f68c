#pragma once

#include <map>

#include "ncfgl/relations.hpp"

namespace ncfgl {

// Published-table reproduction: phi_k(Z_l), the braiding table, the group-law
// coefficients a_{i,j}. Requires eng.order() >= 7.
std::vector<RelationReport> verify_figures(const FglEngine& eng);

// Vieta coordinates y2, y3 (x-degree <= 7) and Chern classes c2, c3
// (degree <= 8, m_I basis) against their closed coefficient tables.
std::vector<RelationReport> verify_vieta_chern(const FglEngine& eng);

// m1*m1 at order 8 and the commutative specialization of qsym_mul against the
// classical quasi-shuffle recursion for all composition pairs of size <= 4.
std::vector<RelationReport> verify_qsym(const FglEngine& eng);

// Hopf axioms for the phi-ring through weight w_max, the module-algebra
// compatibility on randomized pairs, comodule consistency on x-powers.
std::vector<RelationReport> verify_hopf(int w_max, const FglEngine& eng);

// Braiding consistency at the given truncation: rewrite vs extraction for all
// permutations of <= 4 variables, the antipode swap formula, double-swap
// involutivity, two-sided formal inverse.
std::vector<RelationReport> verify_braiding(int order, const FglEngine& eng);

// Graded dimensions by convolution and direct enumeration, and the module
// freeness rank check through basis_w_max.
std::vector<RelationReport> verify_dims(int w_max, int basis_w_max, const FglEngine& eng);

// Splitting coefficients B_{n,m}: unit term, commutator leading term,
// cotensor membership.
std::vector<RelationReport> verify_splitting(int order);

// Canonical text payloads of the published tables and the y/c displays,
// keyed by file name. Pure function of (order, convention).
std::map<std::string, std::string> reproduce_figures(const FglEngine& eng);

}  // namespace ncfgl

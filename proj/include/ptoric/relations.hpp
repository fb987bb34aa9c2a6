#pragma once

#include <string>
#include <vector>

#include "ptoric/certify.hpp"

namespace ptoric {

// Boundary-divisor component data for a toric scenario: defining polynomial,
// torus character of the defining monomial, and class vector in the
// scenario's divisor class lattice.
struct DivisorSet {
    std::vector<std::string> names;
    std::vector<MultiPoly> polys;
    std::vector<std::vector<long long>> weights;  // per component, length = torus rank
    std::vector<std::vector<long long>> classes;  // per component, class lattice coords
};

struct ToricRelation {
    std::vector<long long> lambda;

    std::vector<int> plus_set() const;
    std::vector<int> minus_set() const;
};

// Checks sum lambda_i [D_i] = 0 in the class lattice.
bool relation_valid(const ToricRelation& r, const DivisorSet& d);

// Monomial products prod D_i^{lambda_i} split by sign; throws when the two
// sides fail to have equal multi-degree.
std::pair<MultiPoly, MultiPoly> split_relation(const ToricRelation& r, const DivisorSet& d);

// Integer basis of the sublattice of toric characters annihilating the weight
// of D+ - D-. Rows are combination vectors over the full toric moment maps.
std::vector<std::vector<long long>> reduced_moment_combinations(const ToricRelation& r,
                                                                const DivisorSet& d);

// Kernel of an integer row vector: basis of {a : a . w = 0}.
std::vector<std::vector<long long>> integer_kernel_of_row(const std::vector<long long>& w);

// True when the integer span of `a` equals the integer span of `b` (both are
// bases of rank-k sublattices of Z^n).
bool same_integer_span(const std::vector<std::vector<long long>>& a,
                       const std::vector<std::vector<long long>>& b);

struct ScreenRow {
    ToricRelation relation;
    std::vector<long long> rho;
    long long sum_rho = 0;
    long long sum_positive = 0;
    bool middle = false;
};

// For each relation, rho_i = intersection index of D_i with the section
// (root count of the pullback polynomial) and the middle-case verdict.
std::vector<ScreenRow> screen_relations(const DivisorSet& d,
                                        const std::vector<ToricRelation>& relations,
                                        const std::vector<PairPoly>& section_coords);

}  // namespace ptoric

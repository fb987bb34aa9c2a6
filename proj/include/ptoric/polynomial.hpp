#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ptoric/core.hpp"

namespace ptoric {

// Polynomial in the homogeneous coordinates of a product of projective
// factors. Variables are indexed 0..nvars-1, concatenated factor by factor;
// `factor_sizes` holds dim+1 per factor so multi-degrees can be checked.
struct MultiPoly {
    struct Term {
        cplx coeff;
        std::vector<int> exp;  // length nvars
    };
    int nvars = 0;
    std::vector<int> factor_sizes;
    std::vector<Term> terms;

    MultiPoly() = default;
    MultiPoly(int nv, std::vector<int> sizes) : nvars(nv), factor_sizes(std::move(sizes)) {}

    static MultiPoly monomial(int nv, std::vector<int> sizes, cplx c, const std::vector<int>& exp);
    static MultiPoly variable(int nv, std::vector<int> sizes, int var);

    cplx eval(const std::vector<cplx>& z) const;
    MultiPoly partial(int var) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly pow(int k) const;

    bool empty() const { return terms.empty(); }
    // Per-factor homogeneous degree; throws when terms disagree.
    std::vector<int> multidegree() const;
    bool is_multihomogeneous() const;
    double coeff_norm() const;  // sum of |coeff|, used to normalize residuals
    std::string to_string(const std::vector<std::string>& var_names = {}) const;
};

// Homogeneous polynomial in a parameter pair (s0, s1): coeffs[k] multiplies
// s0^(d-k) s1^k where d = coeffs.size()-1.
struct PairPoly {
    std::vector<cplx> coeffs;

    PairPoly() = default;
    explicit PairPoly(std::vector<cplx> c) : coeffs(std::move(c)) {}
    static PairPoly constant(cplx c, int degree_pad = 0);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    cplx eval(cplx s0, cplx s1) const;
    cplx eval_affine(cplx s) const { return eval(cplx(1, 0), s); }

    PairPoly operator*(const PairPoly& o) const;
    PairPoly operator+(const PairPoly& o) const;
    PairPoly operator-(const PairPoly& o) const;
    PairPoly scaled(cplx c) const;
    PairPoly pow(int k) const;
    // d/ds of the affine polynomial p(1, s), returned as coefficients in s.
    PairPoly affine_derivative() const;

    double coeff_norm() const;
    void trim(double tol = 0.0);
    int order_at_zero(double tol) const;      // multiplicity of root s = 0
    int order_at_infinity(double tol) const;  // multiplicity of root [0:1]... at s0 = 0
    int effective_degree(double tol) const;   // degree ignoring tiny leading coeffs

    // Roots of the affine polynomial (Durand-Kerner). Multiple roots come out
    // as clusters; `cluster_tol` merges them and reports multiplicities.
    std::vector<std::pair<cplx, int>> affine_roots(double cluster_tol = 1e-6) const;
};

// Substitute coordinate polynomials (one PairPoly per homogeneous variable)
// into a MultiPoly. Coordinate polys must have equal degree within a factor.
PairPoly compose(const MultiPoly& p, const std::vector<PairPoly>& coords);

}  // namespace ptoric

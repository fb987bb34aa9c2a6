#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptoric/chain.hpp"
#include "ptoric/pencil.hpp"

namespace ptoric {

// Moebius transform of the parameter sphere, s -> (a s + b) / (c s + d).
struct MobiusMap {
    cplx a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};
    cplx apply(cplx s) const;
    std::string label;
};

// Rational parametrization CP^1 -> M: one homogeneous polynomial in (s0, s1)
// per ambient homogeneous coordinate (equal degree within each factor).
struct SectionCurve {
    std::vector<PairPoly> coord_polys;  // length = ambient nvars
    std::vector<int> factor_dims;
    int covering_degree_d = 0;          // registry value, verified numerically
    std::vector<MobiusMap> involutions; // deck transformations on the parameter
    std::string name;

    ProductPoint eval_pair(cplx s0, cplx s1) const;
    ProductPoint eval(cplx s) const { return eval_pair(cplx(1, 0), s); }
    ProductPoint eval_infinity() const { return eval_pair(cplx(0, 0), cplx(1, 0)); }
};

// Max |f_i(sigma(s))| over a 256-point parameter grid covering the sphere.
double section_residuals(const SectionCurve& sigma, const std::vector<MomentMap>& reduced,
                         int grid = 256);

// Measured symplectic area of the whole section (two hemisphere charts).
double section_area(const AmbientSpace& M, const SectionCurve& sigma, double tol = 1e-8);

// Number of parameter-domain solutions of Psi(sigma(s)) ~ q, counted by the
// argument principle on a growing contour plus the explicit count at
// infinity. q must be a regular base value.
int covering_degree(const AmbientSpace& M, const SectionCurve& sigma, const PencilMap& psi,
                    const std::vector<cplx>& q);

struct BranchPoint {
    cplx param;                 // affine parameter (1e300 encodes infinity)
    std::vector<cplx> base;     // image under Psi
};

// Parameters where the base-chart coordinate of Psi o sigma has vanishing
// derivative, paired with their base images.
std::vector<BranchPoint> branch_points(const SectionCurve& sigma, const PencilMap& psi);

// Circle (plus optional low-order Fourier perturbation) in the parameter
// domain of the section.
struct LoopSpec {
    cplx center{0, 0};
    double radius = 0;
    std::vector<cplx> fourier;  // coefficients of e^{2pi i k t}, k = 2,3,...
    int orientation = 1;

    cplx point(double t) const;  // t in [0,1)
};

struct DeckDisjointResult {
    bool disjoint = true;
    double min_distance = 0;
};

// Minimum chart distance between the sampled loop and each deck-transform
// image of it.
DeckDisjointResult deck_orbit_disjoint(const LoopSpec& loop, const SectionCurve& sigma,
                                       double tol, int samples = 256);

double min_branch_distance(const LoopSpec& loop, const std::vector<BranchPoint>& branches,
                           int samples = 256);

// The disc on the section bounded by the loop, as a parametrized chain.
ParametrizedChain disc_chain(const SectionCurve& sigma, const LoopSpec& loop);

// Chain covering the full section parameter hemisphere |s| <= 1 or >= 1.
ParametrizedChain hemisphere_chain(const SectionCurve& sigma, bool inner);

struct LoopSearchConstraints {
    double max_radius = 0;        // hard cap (piece geometry)
    double branch_margin = 1e-3;  // chart distance kept from branch points
};

// Bisect the loop radius around `center` until the bounded disc has the
// target area. Throws Infeasible when the reachable area stays short.
LoopSpec loop_with_disc_area(const AmbientSpace& M, const SectionCurve& sigma,
                             const std::vector<BranchPoint>& branches, cplx center,
                             double target_area, double tol,
                             const LoopSearchConstraints& constraints);

}  // namespace ptoric

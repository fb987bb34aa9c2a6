#pragma once

#include <functional>
#include <string>

#include "ptoric/ambient.hpp"

namespace ptoric {

// Closed-form real function on the ambient manifold, scale invariant in every
// factor's homogeneous coordinates.
struct MomentMap {
    std::string name;
    std::function<double(const ProductPoint&)> f;
    double value_bound = 1.0;  // registry bound on |f|

    double operator()(const ProductPoint& p) const { return f(p); }
};

// Directional derivative of f at p along tangent components (central
// difference with one Richardson level, step h).
double differential(const MomentMap& f, const AmbientSpace& M, const ProductPoint& p,
                    const std::vector<int>& charts, const std::vector<cplx>& comps,
                    double h = 1e-5);

double differential(const MomentMap& f, const AmbientSpace& M, const TangentVector& v,
                    double h = 1e-5);

// Lower-order stencil variant used by accuracy cross-checks.
double differential_order2(const MomentMap& f, const AmbientSpace& M, const ProductPoint& p,
                           const std::vector<int>& charts, const std::vector<cplx>& comps,
                           double h = 1e-5);

// The unique constrained tangent X with omega(X, v) = df(v) for all tangent v.
TangentVector hamiltonian_field(const AmbientSpace& M, const MomentMap& f, const ProductPoint& p);

double poisson_bracket(const AmbientSpace& M, const MomentMap& f, const MomentMap& g,
                       const ProductPoint& p);

// RK4 flow of X_f with per-step renormalization and Newton projection back
// onto the constraints. `steps` counts for |t| = 2*pi and is scaled down
// proportionally for shorter times; it doubles until the endpoint stabilizes.
ProductPoint flow(const AmbientSpace& M, const MomentMap& f, const ProductPoint& p, double t,
                  int steps = 256, double endpoint_tol = 1e-7);

// Single-resolution variant used by period scans.
ProductPoint flow_fixed_steps(const AmbientSpace& M, const MomentMap& f, const ProductPoint& p,
                              double t, int nsteps);

}  // namespace ptoric

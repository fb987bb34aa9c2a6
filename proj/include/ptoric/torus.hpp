#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ptoric/section.hpp"

namespace ptoric {

// Sampled n-torus in M. `points` is the row-major grid over `shape`; `map`
// is the underlying smooth parametrization (angles in [0,1)^n) that produced
// the grid and is kept for sub-grid differentiation.
struct TorusSample {
    std::vector<int> shape;
    std::vector<ProductPoint> points;
    std::function<ProductPoint(const std::vector<double>&)> map;
    std::string scenario;
    LoopSpec loop;
    std::vector<double> levels;

    int rank() const { return static_cast<int>(shape.size()); }
    std::size_t size() const { return points.size(); }
    std::size_t index(const std::vector<int>& idx) const;
};

// Integer phase weights (per homogeneous ambient coordinate) of one fiber
// circle action.
struct PhaseAction {
    std::vector<int> weights;
    std::string name;
};

ProductPoint apply_phases(const ProductPoint& p, const std::vector<PhaseAction>& actions,
                          const std::vector<double>& angles01);

// Torus from a section loop and explicit fiber circle actions:
// (u, t_1..t_{n-1}) -> phases(sigma(loop(u))).
TorusSample build_torus_from_phases(const AmbientSpace& M, const SectionCurve& sigma,
                                    const LoopSpec& loop,
                                    const std::vector<PhaseAction>& actions,
                                    const std::vector<int>& shape);

// Max over grid nodes and axis pairs of |omega(d_i T, d_j T)| with tangents by
// central differences of the parametrization at sub-grid step fd_step.
double lagrangian_residual(const AmbientSpace& M, const TorusSample& T, double fd_step = 1e-4);

// Max deviation of each moment map across the stored grid.
double moment_constancy(const TorusSample& T, const std::vector<MomentMap>& moments);

double max_manifold_residual(const AmbientSpace& M, const TorusSample& T);

// Max base-chart distance between Psi(grid point) and the prescribed loop
// image on the pencil base.
double pencil_image_residual(const PencilMap& psi, const SectionCurve& sigma,
                             const TorusSample& T);

// Orbit of `weights` through p0 swept toward its limit point: the chain
// (u, v) -> zeta^w . p0 with zeta = u e^{2 pi i v}; boundary at u = 1 is the
// fiber circle through p0. Used as the explicit bounding disc of fiber basis
// loops.
ParametrizedChain weighted_orbit_chain(const ProductPoint& p0, const PhaseAction& action,
                                       const std::vector<int>& factor_dims);

}  // namespace ptoric

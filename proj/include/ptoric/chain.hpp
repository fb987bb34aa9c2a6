#pragma once

#include <functional>

#include "ptoric/ambient.hpp"

namespace ptoric {

enum class ChainKind { Disc, Cylinder, Loop };

// Smooth map from the parameter rectangle [0,1]^2 (disc/cylinder) or from the
// circle (loop) into the ambient manifold.
struct ParametrizedChain {
    ChainKind kind = ChainKind::Disc;
    std::function<ProductPoint(double, double)> map;     // (u,v) on [0,1]^2
    std::function<ProductPoint(double)> loop;            // t on [0,1)

    static ParametrizedChain disc(std::function<ProductPoint(double, double)> m) {
        ParametrizedChain c;
        c.kind = ChainKind::Disc;
        c.map = std::move(m);
        return c;
    }
    static ParametrizedChain cylinder(std::function<ProductPoint(double, double)> m) {
        ParametrizedChain c;
        c.kind = ChainKind::Cylinder;
        c.map = std::move(m);
        return c;
    }
};

double image_residual(const AmbientSpace& M, const ParametrizedChain& chain, int samples = 64);

// Pullback symplectic area at fixed dyadic refinement level: 2^level x 2^level
// cells, 7-point Gauss-Legendre per axis in each cell.
double chain_area_at_level(const AmbientSpace& M, const ParametrizedChain& chain, int level);

// Adaptive area: refines until successive levels differ by < tol.
// Throws NonConvergent after max_levels doublings.
double chain_area(const AmbientSpace& M, const ParametrizedChain& chain, double tol = 1e-8,
                  int max_levels = 12);

// Orientation-signed area of a parameter-plane region on a curve: the chain
// (u,v) -> curve(center + u*radius*e^{2pi i v}).
}  // namespace ptoric

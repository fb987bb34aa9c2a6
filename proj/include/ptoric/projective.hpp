#pragma once

#include <vector>

#include "ptoric/core.hpp"

namespace ptoric {

// A point of CP^m stored as m+1 homogeneous coordinates; any nonzero complex
// rescaling represents the same point.
struct HomogeneousPoint {
    std::vector<cplx> coords;

    HomogeneousPoint() = default;
    explicit HomogeneousPoint(std::vector<cplx> z) : coords(std::move(z)) {}

    int dim() const { return static_cast<int>(coords.size()) - 1; }
    double norm() const;
    bool is_zero(double tol = 1e-300) const;
};

// Unit norm, first nonzero coordinate rotated to phase 0.
HomogeneousPoint normalize(const HomogeneousPoint& p);

bool projectively_equal(const HomogeneousPoint& a, const HomogeneousPoint& b, double tol = 1e-9);

// Index of the coordinate with largest modulus; the canonical chart choice.
int best_chart(const HomogeneousPoint& p);

// Affine coordinates z_i / z_chart, i != chart, in coordinate order.
std::vector<cplx> chart_coords(const HomogeneousPoint& p, int chart);

HomogeneousPoint point_from_chart(int dim, int chart, const std::vector<cplx>& affine);

struct ProductPoint {
    std::vector<HomogeneousPoint> factors;

    ProductPoint() = default;
    explicit ProductPoint(std::vector<HomogeneousPoint> f) : factors(std::move(f)) {}

    int n_factors() const { return static_cast<int>(factors.size()); }
    // Concatenated homogeneous coordinates (for polynomial evaluation).
    std::vector<cplx> flat() const;
};

ProductPoint normalize(const ProductPoint& p);
bool projectively_equal(const ProductPoint& a, const ProductPoint& b, double tol = 1e-9);

// Per-factor chart selection (largest modulus).
std::vector<int> best_charts(const ProductPoint& p);

// Concatenated affine coordinates for the given per-factor charts.
// Throws ChartUndefined when a selected coordinate vanishes at p.
std::vector<cplx> chart_coords(const ProductPoint& p, const std::vector<int>& charts);

ProductPoint point_from_chart(const std::vector<int>& dims, const std::vector<int>& charts,
                              const std::vector<cplx>& affine);

// Chart transition for tangent components: reexpress a tangent vector given by
// affine components in `from` charts as components in `to` charts at p.
// Internally lifts to homogeneous representatives, so any valid chart pair
// works and the map is exactly linear.
std::vector<cplx> transport_tangent(const ProductPoint& p, const std::vector<int>& from,
                                    const std::vector<int>& to, const std::vector<cplx>& comps);

// Chordal distance between two parameter values on CP^1 (affine + infinity).
double chart_distance(cplx a, cplx b);

}  // namespace ptoric

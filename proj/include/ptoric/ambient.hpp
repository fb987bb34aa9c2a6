#pragma once

#include <random>
#include <string>
#include <vector>

#include "ptoric/polynomial.hpp"
#include "ptoric/projective.hpp"

namespace ptoric {

// Product of projective spaces, possibly cut by multi-homogeneous polynomial
// constraints (hypersurface case). Carries the monotonicity coefficient and
// an area scale applied uniformly to the symplectic form.
struct AmbientSpace {
    std::vector<int> factor_dims;
    std::vector<MultiPoly> constraints;
    int monotonicity_k = 1;
    double area_scale = 1.0;
    std::string name;

    int n_factors() const { return static_cast<int>(factor_dims.size()); }
    int nvars() const;
    std::vector<int> var_sizes() const;  // dim+1 per factor
    int chart_dim() const;               // complex dimension of the product
    int complex_dim() const { return chart_dim() - static_cast<int>(constraints.size()); }

    MultiPoly make_poly() const { return MultiPoly(nvars(), var_sizes()); }
};

struct OnManifoldResult {
    bool ok = true;
    double residual = 0.0;
};

OnManifoldResult on_manifold(const AmbientSpace& M, const ProductPoint& p, double tol = 1e-8);

// Tangent vector at `base`, components in the per-factor affine charts
// `charts` (concatenated). For hypersurface ambients the components are
// expected to annihilate every constraint differential.
struct TangentVector {
    ProductPoint base;
    std::vector<int> charts;
    std::vector<cplx> comps;
};

TangentVector make_tangent(const AmbientSpace& M, const ProductPoint& p,
                           const std::vector<cplx>& comps);

// Complex-linear differentials of all constraints at p in the given charts.
std::vector<std::vector<cplx>> constraint_differentials(const AmbientSpace& M,
                                                        const ProductPoint& p,
                                                        const std::vector<int>& charts);

// Orthogonal projection (chart Hermitian metric) onto the kernel of the
// constraint differentials.
std::vector<cplx> project_to_constraint_tangent(const AmbientSpace& M, const ProductPoint& p,
                                                const std::vector<int>& charts,
                                                std::vector<cplx> comps);

double constraint_tangency_residual(const AmbientSpace& M, const TangentVector& v);

// Normalized Fubini-Study symplectic form, summed over factors and scaled by
// area_scale. Each projective line class has area 1.
double symplectic_value(const AmbientSpace& M, const ProductPoint& p, const TangentVector& u,
                        const TangentVector& v);

// Same, with both vectors given directly as components in `charts` at p.
double symplectic_value_comps(const AmbientSpace& M, const ProductPoint& p,
                              const std::vector<int>& charts, const std::vector<cplx>& u,
                              const std::vector<cplx>& v);

TangentVector apply_complex_structure(const AmbientSpace& M, const TangentVector& v);

// Newton projection of a nearby point onto the constraint locus; factors are
// renormalized first. Throws ProjectionFailure after max_iter.
ProductPoint project_to_manifold(const AmbientSpace& M, ProductPoint p, int max_iter = 10,
                                 double tol = 1e-12);

ProductPoint random_manifold_point(const AmbientSpace& M, std::mt19937_64& rng);

// Real basis of the constrained tangent space at p (orthonormalized chart
// vectors), dimension 2 * complex_dim().
std::vector<std::vector<cplx>> tangent_basis(const AmbientSpace& M, const ProductPoint& p,
                                             const std::vector<int>& charts);

}  // namespace ptoric

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptoric/hamiltonian.hpp"

namespace ptoric {

// The pencil map Psi: components are equal multi-degree polynomials; for the
// quadric/flag cases the image lies on a projective line inside CP^2_w cut by
// `base_constraint` (linear relation sum c_i w_i = 0).
struct PencilMap {
    std::vector<MultiPoly> components;
    std::optional<std::vector<cplx>> base_constraint;
    // Two points spanning the base line (or [1:0],[0:1] for CP^1_w); used to
    // produce a scalar chart coordinate on the base.
    std::vector<std::vector<cplx>> span;
    std::vector<std::vector<cplx>> singular_values;
    std::string base_set_description;
    std::string name;

    int n_components() const { return static_cast<int>(components.size()); }
};

// Normalized base point [w_0 : w_1 : ...] at p. Throws OnBaseSet when every
// component is below 1e-12 at the unit representative.
std::vector<cplx> pencil_value(const PencilMap& psi, const ProductPoint& p);

double base_constraint_residual(const PencilMap& psi, const std::vector<cplx>& w);

// Affine coordinate of w on the base line: w = alpha * span[0] + beta * span[1],
// returns beta/alpha (infinity encoded by huge modulus guarded at call sites).
cplx base_affine_coordinate(const PencilMap& psi, const std::vector<cplx>& w);

struct InvarianceResult {
    double max_residual = 0.0;
};

// Max over N random manifold points of |d/ds (base coordinate of Psi) along
// X_f|; fiber-preserving moment maps give ~0.
InvarianceResult check_invariance(const AmbientSpace& M, const PencilMap& psi, const MomentMap& f,
                                  int samples, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace ptoric

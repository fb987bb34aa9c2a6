#pragma once

#include <string>
#include <vector>

#include "ptoric/ambient.hpp"

namespace ptoric {

// Meromorphic top form with poles along a torus-invariant anticanonical
// divisor. Two evaluation models cover every scenario:
//  - ToricProduct: wedge of dt_i/t_i in the designated affine charts of a
//    plain product of projective factors.
//  - HypersurfaceResidue: residue form dz_J / ((dF/dz_j0) * G) on a
//    hypersurface {F = 0}, in a fixed designated chart with a fixed solved
//    coordinate j0.
struct MeromorphicVolumeForm {
    enum class Kind { ToricProduct, HypersurfaceResidue };
    Kind kind = Kind::ToricProduct;
    std::vector<int> charts;   // designated chart per factor
    MultiPoly pole_monomial;   // G; pole divisor description
    int constraint_index = 0;  // which ambient constraint is F
    int solved_var = 0;        // j0, global homogeneous variable index
    std::string name;
};

// Pairing of the form with a frame of n tangent vectors given as components
// in `frame_charts` at p. Multilinear alternating; complex-linear via the
// (1,0) identification of chart components.
cplx volume_form_value(const AmbientSpace& M, const MeromorphicVolumeForm& omega,
                       const ProductPoint& p, const std::vector<int>& frame_charts,
                       const std::vector<std::vector<cplx>>& frame);

cplx volume_form_value(const AmbientSpace& M, const MeromorphicVolumeForm& omega,
                       const std::vector<TangentVector>& frame);

}  // namespace ptoric

#include "ptoric/volume_form.hpp"

#include <cmath>

namespace ptoric {

namespace {

cplx det_complex(std::vector<std::vector<cplx>> a) {
    const std::size_t n = a.size();
    cplx det(1, 0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) return cplx(0, 0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            cplx f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

cplx volume_form_value(const AmbientSpace& M, const MeromorphicVolumeForm& omega,
                       const ProductPoint& p, const std::vector<int>& frame_charts,
                       const std::vector<std::vector<cplx>>& frame) {
    const ProductPoint q = normalize(p);
    const int n = static_cast<int>(frame.size());
    if (n != M.complex_dim()) throw InvalidInput("volume_form_value: frame size");
    // Re-express the frame in the designated charts.
    std::vector<std::vector<cplx>> vecs(n);
    for (int i = 0; i < n; ++i)
        vecs[i] = (frame_charts == omega.charts)
                      ? frame[i]
                      : transport_tangent(q, frame_charts, omega.charts, frame[i]);

    if (omega.kind == MeromorphicVolumeForm::Kind::ToricProduct) {
        const std::vector<cplx> t = chart_coords(q, omega.charts);
        cplx denom(1, 0);
        for (const cplx& ti : t) {
            if (std::abs(ti) < 1e-10) throw OnPoleLocus("toric coordinate ~ 0");
            denom *= ti;
        }
        std::vector<std::vector<cplx>> mat(n, std::vector<cplx>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mat[i][j] = vecs[j][i];  // column = frame vector
        return det_complex(mat) / denom;
    }

    // Hypersurface residue form. Affine coordinates in the designated chart;
    // drop the solved coordinate and divide by dF/dz_j0 and G.
    const MultiPoly& F = M.constraints.at(omega.constraint_index);
    // Pivot-normalized homogeneous representative.
    std::vector<cplx> z;
    std::vector<int> offsets(M.n_factors(), 0);
    {
        int off = 0;
        for (int f = 0; f < M.n_factors(); ++f) {
            offsets[f] = off;
            const cplx pivot = q.factors[f].coords[omega.charts[f]];
            if (std::abs(pivot) < 1e-12) throw OnPoleLocus("designated chart invalid at point");
            for (int j = 0; j <= M.factor_dims[f]; ++j)
                z.push_back(q.factors[f].coords[j] / pivot);
            off += M.factor_dims[f] + 1;
        }
    }
    const double g_scale = std::max(omega.pole_monomial.coeff_norm(), 1e-300);
    const cplx G = omega.pole_monomial.eval(z);
    if (std::abs(G) < 1e-10 * g_scale) throw OnPoleLocus("pole monomial ~ 0");
    const cplx dF = F.partial(omega.solved_var).eval(z);
    if (std::abs(dF) < 1e-12) throw OnPoleLocus("solved coordinate derivative ~ 0");

    // Map global homogeneous variable index -> chart component slot.
    std::vector<int> slot_of_var(z.size(), -1);
    {
        int slot = 0;
        for (int f = 0; f < M.n_factors(); ++f)
            for (int j = 0; j <= M.factor_dims[f]; ++j) {
                if (j == omega.charts[f]) continue;
                slot_of_var[offsets[f] + j] = slot++;
            }
    }
    std::vector<int> keep;
    for (std::size_t v = 0; v < slot_of_var.size(); ++v)
        if (slot_of_var[v] >= 0 && static_cast<int>(v) != omega.solved_var)
            keep.push_back(slot_of_var[v]);
    if (static_cast<int>(keep.size()) != n)
        throw InvalidInput("volume_form_value: solved coordinate not in chart");
    std::vector<std::vector<cplx>> mat(n, std::vector<cplx>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[i][j] = vecs[j][keep[i]];
    return det_complex(mat) / (dF * G);
}

cplx volume_form_value(const AmbientSpace& M, const MeromorphicVolumeForm& omega,
                       const std::vector<TangentVector>& frame) {
    if (frame.empty()) throw InvalidInput("volume_form_value: empty frame");
    std::vector<std::vector<cplx>> comps;
    comps.reserve(frame.size());
    for (const TangentVector& v : frame) {
        if (!projectively_equal(v.base, frame.front().base, 1e-8))
            throw InvalidInput("volume_form_value: frame base mismatch");
        comps.push_back(v.charts == frame.front().charts
                            ? v.comps
                            : transport_tangent(v.base, v.charts, frame.front().charts, v.comps));
    }
    return volume_form_value(M, omega, frame.front().base, frame.front().charts, comps);
}

}  // namespace ptoric

#include "ptoric/pencil.hpp"

#include <cmath>

namespace ptoric {

std::vector<cplx> pencil_value(const PencilMap& psi, const ProductPoint& p) {
    const ProductPoint u = normalize(p);
    const std::vector<cplx> z = u.flat();
    std::vector<cplx> w(psi.components.size());
    double mx = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double scale = std::max(psi.components[i].coeff_norm(), 1e-300);
        w[i] = psi.components[i].eval(z) / scale;
        mx = std::max(mx, std::abs(w[i]));
    }
    if (mx < 1e-12) throw OnBaseSet("all pencil components vanish at point");
    for (cplx& c : w) c /= mx;
    return w;
}

double base_constraint_residual(const PencilMap& psi, const std::vector<cplx>& w) {
    if (!psi.base_constraint) return 0.0;
    cplx s(0, 0);
    double mx = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += (*psi.base_constraint)[i] * w[i];
        mx = std::max(mx, std::abs(w[i]));
    }
    return std::abs(s) / std::max(mx, 1e-300);
}

cplx base_affine_coordinate(const PencilMap& psi, const std::vector<cplx>& w) {
    const auto& a = psi.span.at(0);
    const auto& b = psi.span.at(1);
    // Least squares in the 2-dim span; exact when w lies on the line.
    cplx aa(0, 0), ab(0, 0), bb(0, 0), aw(0, 0), bw(0, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        aa += a[i] * std::conj(a[i]);
        ab += a[i] * std::conj(b[i]);
        bb += b[i] * std::conj(b[i]);
        aw += w[i] * std::conj(a[i]);
        bw += w[i] * std::conj(b[i]);
    }
    const cplx det = aa * bb - ab * std::conj(ab);
    if (std::abs(det) < 1e-300) throw InvalidInput("degenerate base span");
    const cplx alpha = (aw * bb - bw * ab) / det;
    const cplx beta = (bw * aa - aw * std::conj(ab)) / det;
    if (std::abs(alpha) < 1e-14 * std::abs(beta)) return cplx(1e300, 0);
    return beta / alpha;
}

InvarianceResult check_invariance(const AmbientSpace& M, const PencilMap& psi, const MomentMap& f,
                                  int samples, std::uint64_t seed) {
    auto rng = make_rng(seed);
    double worst = 0;
    int done = 0;
    int attempts = 0;
    while (done < samples && attempts < samples * 20) {
        ++attempts;
        ProductPoint p = random_manifold_point(M, rng);
        std::vector<cplx> w;
        try {
            w = pencil_value(psi, p);
        } catch (const OnBaseSet&) {
            continue;
        }
        cplx q0;
        try {
            q0 = base_affine_coordinate(psi, w);
        } catch (const Error&) {
            continue;
        }
        if (std::abs(q0) > 1e3) continue;  // too close to the chart's infinity
        TangentVector x = hamiltonian_field(M, f, p);
        double xn = 0;
        for (const cplx& c : x.comps) xn += std::norm(c);
        xn = std::sqrt(xn);
        if (xn < 1e-12) continue;
        const double h = 1e-6 / xn;
        const std::vector<cplx> t0 = chart_coords(x.base, x.charts);
        auto q_at = [&](double s) {
            std::vector<cplx> t = t0;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += s * x.comps[i];
            ProductPoint pt = point_from_chart(M.factor_dims, x.charts, t);
            if (!M.constraints.empty()) pt = project_to_manifold(M, pt);
            return base_affine_coordinate(psi, pencil_value(psi, pt));
        };
        const cplx dq = (q_at(h) - q_at(-h)) / (2 * h);
        // Normalize by field magnitude so the residual is scale free.
        worst = std::max(worst, std::abs(dq) / xn / (1.0 + std::norm(q0)));
        ++done;
    }
    if (done < samples) throw NonConvergent("check_invariance: not enough usable samples");
    return {worst};
}

}  // namespace ptoric

#include "ptoric/section.hpp"

#include <algorithm>
#include <cmath>

#include "ptoric/winding.hpp"

namespace ptoric {

cplx MobiusMap::apply(cplx s) const {
    const cplx den = c * s + d;
    if (std::abs(den) < 1e-300) return cplx(1e300, 0);
    return (a * s + b) / den;
}

ProductPoint SectionCurve::eval_pair(cplx s0, cplx s1) const {
    std::vector<HomogeneousPoint> fac;
    int pos = 0;
    for (int dim : factor_dims) {
        std::vector<cplx> z(dim + 1);
        for (int j = 0; j <= dim; ++j) z[j] = coord_polys[pos + j].eval(s0, s1);
        pos += dim + 1;
        fac.push_back(HomogeneousPoint(std::move(z)));
    }
    return ProductPoint(std::move(fac));
}

double section_residuals(const SectionCurve& sigma, const std::vector<MomentMap>& reduced,
                         int grid) {
    // Rings of constant |s| chosen so samples cover the parameter sphere.
    const int rings = 16;
    const int per_ring = std::max(4, grid / rings);
    double worst = 0;
    for (int r = 0; r < rings; ++r) {
        const double lat = kPi * (r + 0.5) / rings;
        const double rad = std::tan(lat / 2);
        for (int k = 0; k < per_ring; ++k) {
            const cplx s = std::polar(rad, kTwoPi * k / per_ring);
            const ProductPoint p = sigma.eval(s);
            for (const MomentMap& f : reduced) worst = std::max(worst, std::abs(f(p)));
        }
    }
    return worst;
}

double section_area(const AmbientSpace& M, const SectionCurve& sigma, double tol) {
    double inner = chain_area(M, hemisphere_chain(sigma, true), tol);
    double outer = chain_area(M, hemisphere_chain(sigma, false), tol);
    return inner + outer;
}

namespace {

// Coefficient rows expressing the base-line coordinates (alpha, beta) of w in
// the span basis: alpha = sum alpha_coef[i] * w_i, beta likewise.
void span_coefficients(const PencilMap& psi, std::vector<cplx>& alpha_coef,
                       std::vector<cplx>& beta_coef) {
    const auto& a = psi.span.at(0);
    const auto& b = psi.span.at(1);
    cplx aa(0, 0), ab(0, 0), bb(0, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        aa += a[i] * std::conj(a[i]);
        ab += a[i] * std::conj(b[i]);
        bb += b[i] * std::conj(b[i]);
    }
    const cplx det = aa * bb - ab * std::conj(ab);
    alpha_coef.assign(a.size(), cplx(0, 0));
    beta_coef.assign(a.size(), cplx(0, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        alpha_coef[i] = (std::conj(a[i]) * bb - std::conj(b[i]) * ab) / det;
        beta_coef[i] = (std::conj(b[i]) * aa - std::conj(a[i]) * std::conj(ab)) / det;
    }
}

std::vector<PairPoly> pulled_back_components(const SectionCurve& sigma, const PencilMap& psi) {
    std::vector<PairPoly> w;
    w.reserve(psi.components.size());
    for (const MultiPoly& comp : psi.components) w.push_back(compose(comp, sigma.coord_polys));
    return w;
}

PairPoly linear_combo(const std::vector<PairPoly>& polys, const std::vector<cplx>& coefs) {
    PairPoly acc;
    bool first = true;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        PairPoly term = polys[i].scaled(coefs[i]);
        if (first) {
            acc = term;
            first = false;
        } else {
            acc = acc + term;
        }
    }
    return acc;
}

// Number of affine roots inside |s| < R by the argument principle.
int roots_in_disc(const PairPoly& e, double R) {
    const double scale = std::max(e.coeff_norm(), 1e-300);
    for (int attempt = 0; attempt < 6; ++attempt) {
        const double radius = R * std::pow(1.37, attempt);
        bool hit_root = false;
        auto f = [&](double t) {
            cplx val = e.eval_affine(std::polar(radius, kTwoPi * t));
            if (std::abs(val) < 1e-10 * scale) hit_root = true;
            return val;
        };
        try {
            WindingResult w = winding_number(f, 128);
            if (!hit_root && w.residual < 1e-3) return w.degree;
        } catch (const VanishingPairing&) {
            // fall through to retry with a perturbed contour
        }
    }
    throw ContourThroughRoot("roots_in_disc: contour kept meeting roots");
}

}  // namespace

int covering_degree(const AmbientSpace& M, const SectionCurve& sigma, const PencilMap& psi,
                    const std::vector<cplx>& q) {
    (void)M;
    const std::vector<PairPoly> w = pulled_back_components(sigma, psi);
    PairPoly e;
    if (psi.components.size() == 2) {
        e = w[0].scaled(q.at(1)) - w[1].scaled(q.at(0));
    } else {
        // On the base line w = alpha*span0 + beta*span1; proportionality to q
        // means beta(q)*alpha(w(s)) - alpha(q)*beta(w(s)) = 0.
        std::vector<cplx> ca, cb;
        span_coefficients(psi, ca, cb);
        cplx qa(0, 0), qb(0, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            qa += ca[i] * q[i];
            qb += cb[i] * q[i];
        }
        e = linear_combo(w, ca).scaled(qb) - linear_combo(w, cb).scaled(qa);
    }
    if (e.coeff_norm() < 1e-12) throw IdenticallyZero("covering_degree: pullback vanishes");
    const int at_infinity = e.order_at_infinity(1e-10);
    int affine = roots_in_disc(e, 8.0);
    int affine_wide = roots_in_disc(e, 64.0);
    if (affine_wide != affine) affine_wide = roots_in_disc(e, 512.0);
    return std::max(affine, affine_wide) + at_infinity;
}

std::vector<BranchPoint> branch_points(const SectionCurve& sigma, const PencilMap& psi) {
    const std::vector<PairPoly> w = pulled_back_components(sigma, psi);
    PairPoly alpha, beta;
    if (psi.components.size() == 2) {
        alpha = w[0];
        beta = w[1];
    } else {
        std::vector<cplx> ca, cb;
        span_coefficients(psi, ca, cb);
        alpha = linear_combo(w, ca);
        beta = linear_combo(w, cb);
    }
    // Branch parameters: zeros of d/ds (beta/alpha) = (beta' alpha - beta alpha').
    PairPoly num = beta.affine_derivative() * alpha - beta * alpha.affine_derivative();
    num.trim(1e-13 * std::max(num.coeff_norm(), 1e-300));
    std::vector<BranchPoint> out;
    const double scale = std::max(num.coeff_norm(), 1e-300);
    for (const auto& [root, mult] : num.affine_roots(1e-5)) {
        (void)mult;
        if (std::abs(num.eval_affine(root)) > 1e-6 * scale) continue;
        BranchPoint bp;
        bp.param = root;
        bp.base = pencil_value(psi, sigma.eval(root));
        // Deduplicate clusters.
        bool dup = false;
        for (const auto& prev : out)
            if (chart_distance(prev.param, root) < 1e-6) dup = true;
        if (!dup) out.push_back(std::move(bp));
    }
    // Infinity: examine the reversed-parameter polynomial.
    PairPoly alpha_rev(std::vector<cplx>(alpha.coeffs.rbegin(), alpha.coeffs.rend()));
    PairPoly beta_rev(std::vector<cplx>(beta.coeffs.rbegin(), beta.coeffs.rend()));
    PairPoly num_rev =
        beta_rev.affine_derivative() * alpha_rev - beta_rev * alpha_rev.affine_derivative();
    num_rev.trim(1e-13 * std::max(num_rev.coeff_norm(), 1e-300));
    if (!num_rev.coeffs.empty() &&
        std::abs(num_rev.eval_affine(cplx(0, 0))) < 1e-8 * std::max(num_rev.coeff_norm(), 1e-300)) {
        BranchPoint bp;
        bp.param = cplx(1e300, 0);
        bp.base = pencil_value(psi, sigma.eval_infinity());
        out.push_back(std::move(bp));
    }
    return out;
}

cplx LoopSpec::point(double t) const {
    const double dir = orientation >= 0 ? 1.0 : -1.0;
    cplx s = center + radius * std::polar(1.0, dir * kTwoPi * t);
    for (std::size_t k = 0; k < fourier.size(); ++k)
        s += fourier[k] * std::polar(1.0, dir * kTwoPi * (static_cast<double>(k) + 2.0) * t);
    return s;
}

DeckDisjointResult deck_orbit_disjoint(const LoopSpec& loop, const SectionCurve& sigma, double tol,
                                       int samples) {
    std::vector<cplx> pts(samples);
    for (int i = 0; i < samples; ++i) pts[i] = loop.point(static_cast<double>(i) / samples);
    double min_dist = 1e300;
    for (const MobiusMap& tau : sigma.involutions) {
        for (int i = 0; i < samples; ++i) {
            const cplx img = tau.apply(pts[i]);
            for (int j = 0; j < samples; ++j)
                min_dist = std::min(min_dist, chart_distance(pts[j], img));
        }
    }
    if (sigma.involutions.empty()) min_dist = 0;
    return {min_dist > tol, min_dist};
}

double min_branch_distance(const LoopSpec& loop, const std::vector<BranchPoint>& branches,
                           int samples) {
    double min_dist = 1e300;
    for (int i = 0; i < samples; ++i) {
        const cplx s = loop.point(static_cast<double>(i) / samples);
        for (const BranchPoint& b : branches) {
            double d = std::abs(b.param) > 1e100 ? 1.0 / std::max(std::abs(s), 1e-300)
                                                 : chart_distance(s, b.param);
            min_dist = std::min(min_dist, d);
        }
    }
    return min_dist;
}

ParametrizedChain disc_chain(const SectionCurve& sigma, const LoopSpec& loop) {
    return ParametrizedChain::disc([sig = sigma, l = loop](double u, double v) {
        LoopSpec scaled = l;
        scaled.radius = l.radius * u;
        for (cplx& c : scaled.fourier) c *= u;
        return sig.eval(scaled.point(v));
    });
}

ParametrizedChain hemisphere_chain(const SectionCurve& sigma, bool inner) {
    return ParametrizedChain::disc([sig = sigma, inner](double u, double v) {
        const cplx z = std::polar(u, kTwoPi * v);
        // Outer hemisphere uses the reciprocal chart [z : 1].
        return inner ? sig.eval_pair(cplx(1, 0), z) : sig.eval_pair(z, cplx(1, 0));
    });
}

LoopSpec loop_with_disc_area(const AmbientSpace& M, const SectionCurve& sigma,
                             const std::vector<BranchPoint>& branches, cplx center,
                             double target_area, double tol,
                             const LoopSearchConstraints& constraints) {
    double r_hi = constraints.max_radius > 0 ? constraints.max_radius : 64.0;
    for (const BranchPoint& b : branches) {
        if (std::abs(b.param) > 1e100) continue;
        const double rho = std::abs(b.param - center);
        if (rho > 2 * constraints.branch_margin)
            r_hi = std::min(r_hi, rho - constraints.branch_margin);
    }
    if (r_hi <= constraints.branch_margin)
        throw Infeasible("loop_with_disc_area: no branch-free radius window");

    auto area_of = [&](double r) {
        LoopSpec l;
        l.center = center;
        l.radius = r;
        return chain_area(M, disc_chain(sigma, l), tol / 4);
    };
    const double hi_area = area_of(r_hi);
    if (hi_area < target_area)
        throw Infeasible("loop_with_disc_area: max reachable area " + std::to_string(hi_area) +
                         " below target " + std::to_string(target_area));
    double lo = std::max(1e-6, constraints.branch_margin);
    double lo_area = area_of(lo);
    if (lo_area > target_area)
        throw Infeasible("loop_with_disc_area: minimal feasible loop already exceeds target");
    // Regula falsi with bisection safeguard on the monotone area function.
    double hi = r_hi, fa = lo_area - target_area, fb = hi_area - target_area;
    double mid = lo;
    for (int it = 0; it < 80; ++it) {
        double candidate = (lo * fb - hi * fa) / (fb - fa);
        if (!(candidate > lo && candidate < hi)) candidate = 0.5 * (lo + hi);
        mid = candidate;
        const double fm = area_of(mid) - target_area;
        if (std::abs(fm) < tol) break;
        if ((fm < 0) == (fa < 0)) {
            lo = mid;
            fa = fm;
        } else {
            hi = mid;
            fb = fm;
        }
        if (hi - lo < 1e-14) break;
    }
    LoopSpec found;
    found.center = center;
    found.radius = mid;
    if (min_branch_distance(found, branches) < constraints.branch_margin)
        throw Infeasible("loop_with_disc_area: area-matching loop violates branch margin");
    return found;
}

}  // namespace ptoric

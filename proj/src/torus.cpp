#include "ptoric/torus.hpp"

#include <algorithm>
#include <cmath>

namespace ptoric {

std::size_t TorusSample::index(const std::vector<int>& idx) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) {
        int i = idx[a] % shape[a];
        if (i < 0) i += shape[a];
        flat = flat * shape[a] + static_cast<std::size_t>(i);
    }
    return flat;
}

ProductPoint apply_phases(const ProductPoint& p, const std::vector<PhaseAction>& actions,
                          const std::vector<double>& angles01) {
    std::vector<HomogeneousPoint> fac = p.factors;
    int pos = 0;
    std::vector<double> phase;  // accumulated per homogeneous coordinate
    {
        int total = 0;
        for (const auto& f : fac) total += static_cast<int>(f.coords.size());
        phase.assign(total, 0.0);
    }
    for (std::size_t a = 0; a < actions.size(); ++a) {
        const double theta = kTwoPi * angles01[a];
        for (std::size_t v = 0; v < actions[a].weights.size(); ++v)
            phase[v] += actions[a].weights[v] * theta;
    }
    pos = 0;
    for (auto& f : fac)
        for (auto& z : f.coords) z *= std::polar(1.0, phase[pos++]);
    return ProductPoint(std::move(fac));
}

TorusSample build_torus_from_phases(const AmbientSpace& M, const SectionCurve& sigma,
                                    const LoopSpec& loop, const std::vector<PhaseAction>& actions,
                                    const std::vector<int>& shape) {
    if (shape.size() != actions.size() + 1)
        throw InvalidInput("build_torus_from_phases: shape rank mismatch");
    TorusSample T;
    T.shape = shape;
    T.loop = loop;
    SectionCurve sig = sigma;
    std::vector<PhaseAction> acts = actions;
    LoopSpec lp = loop;
    T.map = [sig, acts, lp](const std::vector<double>& ang) {
        ProductPoint base = sig.eval(lp.point(ang.at(0)));
        std::vector<double> fiber(ang.begin() + 1, ang.end());
        return apply_phases(base, acts, fiber);
    };
    std::size_t total = 1;
    for (int s : shape) total *= static_cast<std::size_t>(s);
    T.points.reserve(total);
    std::vector<int> idx(shape.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t a = shape.size(); a-- > 0;) {
            idx[a] = static_cast<int>(rem % shape[a]);
            rem /= shape[a];
        }
        std::vector<double> ang(shape.size());
        for (std::size_t a = 0; a < shape.size(); ++a)
            ang[a] = static_cast<double>(idx[a]) / shape[a];
        T.points.push_back(normalize(T.map(ang)));
    }
    (void)M;
    return T;
}

double lagrangian_residual(const AmbientSpace& M, const TorusSample& T, double fd_step) {
    if (!T.map) throw InvalidInput("lagrangian_residual: sample has no parametrization");
    for (int s : T.shape)
        if (s < 8) throw InvalidInput("lagrangian_residual: grid shape below 8");
    const int n = T.rank();
    double worst = 0;
    std::vector<int> idx(n, 0);
    std::size_t total = T.size();
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (int a = n - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % T.shape[a]);
            rem /= T.shape[a];
        }
        std::vector<double> ang(n);
        for (int a = 0; a < n; ++a) ang[a] = static_cast<double>(idx[a]) / T.shape[a];
        const ProductPoint p = normalize(T.map(ang));
        const std::vector<int> charts = best_charts(p);
        auto coords_at = [&](const std::vector<double>& a) {
            return chart_coords(normalize(T.map(a)), charts);
        };
        std::vector<std::vector<cplx>> tangents(n);
        for (int a = 0; a < n; ++a) {
            auto d_at = [&](double h) {
                std::vector<double> ap = ang, am = ang;
                ap[a] += h;
                am[a] -= h;
                std::vector<cplx> cp = coords_at(ap), cm = coords_at(am);
                for (std::size_t i = 0; i < cp.size(); ++i) cp[i] = (cp[i] - cm[i]) / (2 * h);
                return cp;
            };
            std::vector<cplx> d1 = d_at(fd_step), d2 = d_at(fd_step / 2);
            for (std::size_t i = 0; i < d1.size(); ++i) d1[i] = (4.0 * d2[i] - d1[i]) / 3.0;
            // Normalize each tangent so the residual is scale free.
            double nn = 0;
            for (const cplx& c : d1) nn += std::norm(c);
            nn = std::sqrt(std::max(nn, 1e-300));
            for (cplx& c : d1) c /= nn;
            tangents[a] = std::move(d1);
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                worst = std::max(
                    worst, std::abs(symplectic_value_comps(M, p, charts, tangents[a], tangents[b])));
    }
    return worst;
}

double moment_constancy(const TorusSample& T, const std::vector<MomentMap>& moments) {
    double worst = 0;
    for (const MomentMap& f : moments) {
        double lo = 1e300, hi = -1e300;
        for (const ProductPoint& p : T.points) {
            const double v = f(p);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        worst = std::max(worst, hi - lo);
    }
    return worst;
}

double max_manifold_residual(const AmbientSpace& M, const TorusSample& T) {
    double worst = 0;
    for (const ProductPoint& p : T.points) worst = std::max(worst, on_manifold(M, p).residual);
    return worst;
}

double pencil_image_residual(const PencilMap& psi, const SectionCurve& sigma,
                             const TorusSample& T) {
    double worst = 0;
    const int nu = T.shape.at(0);
    std::vector<int> idx(T.rank(), 0);
    for (int iu = 0; iu < nu; ++iu) {
        idx[0] = iu;
        const double u = static_cast<double>(iu) / nu;
        const cplx expected =
            base_affine_coordinate(psi, pencil_value(psi, sigma.eval(T.loop.point(u))));
        // Compare along a fiber line of the grid.
        const ProductPoint& p = T.points[T.index(idx)];
        const cplx got = base_affine_coordinate(psi, pencil_value(psi, p));
        worst = std::max(worst, chart_distance(expected, got));
    }
    return worst;
}

ParametrizedChain weighted_orbit_chain(const ProductPoint& p0, const PhaseAction& action,
                                       const std::vector<int>& factor_dims) {
    const ProductPoint base = normalize(p0);
    const std::vector<int> weights = action.weights;
    std::vector<int> dims = factor_dims;
    return ParametrizedChain::disc([base, weights, dims](double u, double v) {
        const cplx zeta = std::polar(1.0, kTwoPi * v) * u;
        std::vector<HomogeneousPoint> fac;
        int pos = 0;
        for (std::size_t f = 0; f < dims.size(); ++f) {
            const int sz = dims[f] + 1;
            int wmin = 0;
            for (int j = 0; j < sz; ++j) wmin = std::min(wmin, weights[pos + j]);
            std::vector<cplx> z(sz);
            for (int j = 0; j < sz; ++j) {
                // zeta^(w - wmin) stays polynomial; zeta = 0 hits the orbit
                // limit point.
                const int e = weights[pos + j] - wmin;
                cplx m(1, 0);
                for (int k = 0; k < e; ++k) m *= zeta;
                z[j] = base.factors[f].coords[j] * m;
            }
            pos += sz;
            fac.push_back(HomogeneousPoint(std::move(z)));
        }
        return ProductPoint(std::move(fac));
    });
}

}  // namespace ptoric

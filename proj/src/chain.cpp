#include "ptoric/chain.hpp"

#include <array>
#include <cmath>

namespace ptoric {

namespace {

// 7-point Gauss-Legendre on [0,1].
constexpr std::array<double, 7> kGlNodes = {
    0.02544604382862074, 0.12923440720030277, 0.29707742431130146, 0.5,
    0.7029225756886985,  0.8707655927996972,  0.9745539561713793};
constexpr std::array<double, 7> kGlWeights = {
    0.06474248308443485, 0.1398526957446383, 0.19091502525255946, 0.20897959183673464,
    0.19091502525255946, 0.1398526957446383, 0.06474248308443485};

struct PullbackIntegrand {
    const AmbientSpace& M;
    const ParametrizedChain& chain;
    double h = 1e-5;

    double operator()(double u, double v) const {
        const ProductPoint p = normalize(chain.map(u, v));
        const std::vector<int> charts = best_charts(p);
        const std::vector<cplx> t0 = chart_coords(p, charts);
        auto coords_at = [&](double a, double b) {
            return chart_coords(normalize(chain.map(a, b)), charts);
        };
        auto diff = [&](int axis, double step) {
            std::vector<cplx> plus, minus;
            if (axis == 0) {
                plus = coords_at(u + step, v);
                minus = coords_at(u - step, v);
            } else {
                plus = coords_at(u, v + step);
                minus = coords_at(u, v - step);
            }
            std::vector<cplx> d(plus.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = (plus[i] - minus[i]) / (2 * step);
            return d;
        };
        // One Richardson level on the central difference.
        auto rich = [&](int axis) {
            std::vector<cplx> d1 = diff(axis, h);
            std::vector<cplx> d2 = diff(axis, h / 2);
            for (std::size_t i = 0; i < d1.size(); ++i) d1[i] = (4.0 * d2[i] - d1[i]) / 3.0;
            return d1;
        };
        const std::vector<cplx> du = rich(0);
        const std::vector<cplx> dv = rich(1);
        return symplectic_value_comps(M, p, charts, du, dv);
    }
};

}  // namespace

double image_residual(const AmbientSpace& M, const ParametrizedChain& chain, int samples) {
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        double u = (i % 8 + 0.5) / 8.0;
        double v = (i / 8 + 0.5) / (samples / 8.0);
        worst = std::max(worst, on_manifold(M, chain.map(u, v)).residual);
    }
    return worst;
}

double chain_area_at_level(const AmbientSpace& M, const ParametrizedChain& chain, int level) {
    if (!chain.map) throw InvalidInput("chain_area: chain has no map");
    PullbackIntegrand f{M, chain};
    const int cells = 1 << level;
    const double w = 1.0 / cells;
    double total = 0;
    for (int ci = 0; ci < cells; ++ci)
        for (int cj = 0; cj < cells; ++cj) {
            double cell = 0;
            for (int a = 0; a < 7; ++a)
                for (int b = 0; b < 7; ++b) {
                    const double u = (ci + kGlNodes[a]) * w;
                    const double v = (cj + kGlNodes[b]) * w;
                    cell += kGlWeights[a] * kGlWeights[b] * f(u, v);
                }
            total += cell * w * w;
        }
    return total;
}

double chain_area(const AmbientSpace& M, const ParametrizedChain& chain, double tol,
                  int max_levels) {
    if (chain.kind == ChainKind::Loop) throw InvalidInput("chain_area: loop has no area");
    double prev = chain_area_at_level(M, chain, 0);
    for (int level = 1; level <= max_levels; ++level) {
        double cur = chain_area_at_level(M, chain, level);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw NonConvergent("chain_area: refinement limit reached");
}

}  // namespace ptoric

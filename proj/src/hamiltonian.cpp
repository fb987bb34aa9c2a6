#include "ptoric/hamiltonian.hpp"

#include <cmath>

namespace ptoric {

namespace {

double directional(const MomentMap& f, const AmbientSpace& M, const ProductPoint& p,
                   const std::vector<int>& charts, const std::vector<cplx>& comps, double step) {
    const std::vector<cplx> t0 = chart_coords(p, charts);
    auto value_at = [&](double s) {
        std::vector<cplx> t = t0;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += s * comps[i];
        return f(point_from_chart(M.factor_dims, charts, t));
    };
    return (value_at(step) - value_at(-step)) / (2 * step);
}

}  // namespace

double differential(const MomentMap& f, const AmbientSpace& M, const ProductPoint& p,
                    const std::vector<int>& charts, const std::vector<cplx>& comps, double h) {
    const double d1 = directional(f, M, p, charts, comps, h);
    const double d2 = directional(f, M, p, charts, comps, h / 2);
    return (4.0 * d2 - d1) / 3.0;
}

double differential(const MomentMap& f, const AmbientSpace& M, const TangentVector& v, double h) {
    return differential(f, M, v.base, v.charts, v.comps, h);
}

double differential_order2(const MomentMap& f, const AmbientSpace& M, const ProductPoint& p,
                           const std::vector<int>& charts, const std::vector<cplx>& comps,
                           double h) {
    return directional(f, M, p, charts, comps, h);
}

TangentVector hamiltonian_field(const AmbientSpace& M, const MomentMap& f, const ProductPoint& p) {
    const ProductPoint q = normalize(p);
    const std::vector<int> charts = best_charts(q);
    const auto basis = tangent_basis(M, q, charts);
    const int n = static_cast<int>(basis.size());
    // omega(X, b_k) = df(b_k) with X = sum x_j b_j gives A^T x = r where
    // A_jk = omega(b_j, b_k).
    std::vector<std::vector<double>> at(n, std::vector<double>(n, 0.0));
    std::vector<double> rhs(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            double w = symplectic_value_comps(M, q, charts, basis[j], basis[k]);
            at[k][j] = w;   // (A^T)_{kj} = A_{jk}
            at[j][k] = -w;
        }
    for (int k = 0; k < n; ++k) rhs[k] = differential(f, M, q, charts, basis[k]);
    std::vector<double> x = solve_linear(std::move(at), std::move(rhs));
    std::vector<cplx> comps(M.chart_dim(), cplx(0, 0));
    for (int j = 0; j < n; ++j)
        for (std::size_t i = 0; i < comps.size(); ++i) comps[i] += x[j] * basis[j][i];
    TangentVector out;
    out.base = q;
    out.charts = charts;
    out.comps = std::move(comps);
    return out;
}

double poisson_bracket(const AmbientSpace& M, const MomentMap& f, const MomentMap& g,
                       const ProductPoint& p) {
    TangentVector xf = hamiltonian_field(M, f, p);
    TangentVector xg = hamiltonian_field(M, g, p);
    return symplectic_value_comps(M, xf.base, xf.charts, xf.comps, xg.comps);
}

namespace {

ProductPoint rk4_step(const AmbientSpace& M, const MomentMap& f, const ProductPoint& p,
                      double dt) {
    const ProductPoint q = normalize(p);
    const std::vector<int> charts = best_charts(q);
    const std::vector<cplx> t0 = chart_coords(q, charts);
    auto field_at = [&](const std::vector<cplx>& t) {
        ProductPoint pt = point_from_chart(M.factor_dims, charts, t);
        TangentVector x = hamiltonian_field(M, f, pt);
        // hamiltonian_field picks its own charts; transport back.
        return transport_tangent(x.base, x.charts, charts, x.comps);
    };
    auto add = [](const std::vector<cplx>& a, const std::vector<cplx>& b, double s) {
        std::vector<cplx> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
        return out;
    };
    std::vector<cplx> k1 = field_at(t0);
    std::vector<cplx> k2 = field_at(add(t0, k1, dt / 2));
    std::vector<cplx> k3 = field_at(add(t0, k2, dt / 2));
    std::vector<cplx> k4 = field_at(add(t0, k3, dt));
    std::vector<cplx> t1(t0.size());
    for (std::size_t i = 0; i < t0.size(); ++i)
        t1[i] = t0[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    ProductPoint out = point_from_chart(M.factor_dims, charts, t1);
    return project_to_manifold(M, out);
}

ProductPoint flow_fixed(const AmbientSpace& M, const MomentMap& f, ProductPoint p, double t,
                        int nsteps) {
    const double dt = t / nsteps;
    for (int i = 0; i < nsteps; ++i) p = rk4_step(M, f, p, dt);
    return p;
}

}  // namespace

ProductPoint flow_fixed_steps(const AmbientSpace& M, const MomentMap& f, const ProductPoint& p,
                              double t, int nsteps) {
    if (t == 0.0) return normalize(p);
    return flow_fixed(M, f, p, t, std::max(1, nsteps));
}

ProductPoint flow(const AmbientSpace& M, const MomentMap& f, const ProductPoint& p, double t,
                  int steps, double endpoint_tol) {
    if (t == 0.0) return normalize(p);
    int nsteps = std::max(4, static_cast<int>(std::ceil(std::abs(t) / kTwoPi * steps)));
    ProductPoint prev = flow_fixed(M, f, p, t, nsteps);
    for (int round = 0; round < 4; ++round) {
        nsteps *= 2;
        ProductPoint cur = flow_fixed(M, f, p, t, nsteps);
        const std::vector<int> charts = best_charts(cur);
        const std::vector<cplx> a = chart_coords(cur, charts);
        const std::vector<cplx> b = chart_coords(normalize(prev), charts);
        double shift = 0;
        for (std::size_t i = 0; i < a.size(); ++i) shift = std::max(shift, std::abs(a[i] - b[i]));
        if (shift < endpoint_tol) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace ptoric

#include "ptoric/ambient.hpp"

#include <algorithm>
#include <cmath>

namespace ptoric {

int AmbientSpace::nvars() const {
    int n = 0;
    for (int d : factor_dims) n += d + 1;
    return n;
}

std::vector<int> AmbientSpace::var_sizes() const {
    std::vector<int> s;
    s.reserve(factor_dims.size());
    for (int d : factor_dims) s.push_back(d + 1);
    return s;
}

int AmbientSpace::chart_dim() const {
    int n = 0;
    for (int d : factor_dims) n += d;
    return n;
}

OnManifoldResult on_manifold(const AmbientSpace& M, const ProductPoint& p, double tol) {
    ProductPoint u = normalize(p);
    const std::vector<cplx> z = u.flat();
    double worst = 0;
    for (const MultiPoly& F : M.constraints) {
        double scale = std::max(F.coeff_norm(), 1e-300);
        worst = std::max(worst, std::abs(F.eval(z)) / scale);
    }
    return {worst < tol, worst};
}

TangentVector make_tangent(const AmbientSpace& M, const ProductPoint& p,
                           const std::vector<cplx>& comps) {
    TangentVector v;
    v.base = normalize(p);
    v.charts = best_charts(v.base);
    v.comps = comps;
    (void)M;
    return v;
}

std::vector<std::vector<cplx>> constraint_differentials(const AmbientSpace& M,
                                                        const ProductPoint& p,
                                                        const std::vector<int>& charts) {
    // d/dt_j of F evaluated through the chart embedding. F is holomorphic, so
    // the differential is complex-linear in the chart components.
    std::vector<std::vector<cplx>> out;
    if (M.constraints.empty()) return out;
    ProductPoint u = normalize(p);
    // Homogeneous representative with chart coordinates set to exactly 1.
    std::vector<cplx> z;
    std::vector<int> var_offset(M.n_factors(), 0);
    {
        int off = 0;
        for (int f = 0; f < M.n_factors(); ++f) {
            var_offset[f] = off;
            const cplx pivot = u.factors[f].coords[charts[f]];
            if (std::abs(pivot) < 1e-14) throw ChartUndefined("constraint_differentials");
            for (int j = 0; j <= M.factor_dims[f]; ++j)
                z.push_back(u.factors[f].coords[j] / pivot);
            off += M.factor_dims[f] + 1;
        }
    }
    for (const MultiPoly& F : M.constraints) {
        std::vector<cplx> row;
        row.reserve(M.chart_dim());
        for (int f = 0; f < M.n_factors(); ++f)
            for (int j = 0; j <= M.factor_dims[f]; ++j) {
                if (j == charts[f]) continue;
                MultiPoly dF = F.partial(var_offset[f] + j);
                row.push_back(dF.eval(z));
            }
        out.push_back(std::move(row));
    }
    return out;
}

static cplx hdot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s(0, 0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

std::vector<cplx> project_to_constraint_tangent(const AmbientSpace& M, const ProductPoint& p,
                                                const std::vector<int>& charts,
                                                std::vector<cplx> comps) {
    auto rows = constraint_differentials(M, p, charts);
    for (const auto& row : rows) {
        // ker of the complex-linear functional v -> row . v; its Hermitian
        // normal is conj(row).
        std::vector<cplx> normal(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) normal[i] = std::conj(row[i]);
        cplx nn = hdot(normal, normal);
        if (std::abs(nn) < 1e-300) continue;
        cplx val(0, 0);
        for (std::size_t i = 0; i < row.size(); ++i) val += row[i] * comps[i];
        for (std::size_t i = 0; i < row.size(); ++i) comps[i] -= val / nn * normal[i];
    }
    return comps;
}

double constraint_tangency_residual(const AmbientSpace& M, const TangentVector& v) {
    auto rows = constraint_differentials(M, v.base, v.charts);
    double worst = 0;
    double vn = 0;
    for (const cplx& c : v.comps) vn += std::norm(c);
    vn = std::sqrt(std::max(vn, 1e-300));
    for (const auto& row : rows) {
        cplx val(0, 0);
        double rn = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            val += row[i] * v.comps[i];
            rn += std::norm(row[i]);
        }
        rn = std::sqrt(std::max(rn, 1e-300));
        worst = std::max(worst, std::abs(val) / (rn * vn));
    }
    return worst;
}

double symplectic_value_comps(const AmbientSpace& M, const ProductPoint& p,
                              const std::vector<int>& charts, const std::vector<cplx>& u,
                              const std::vector<cplx>& v) {
    ProductPoint q = normalize(p);
    double total = 0;
    int pos = 0;
    for (int f = 0; f < M.n_factors(); ++f) {
        const int m = M.factor_dims[f];
        const std::vector<cplx> t = chart_coords(q.factors[f], charts[f]);
        double t2 = 0;
        for (const cplx& c : t) t2 += std::norm(c);
        const double denom = 1.0 + t2;
        cplx uv(0, 0), ut(0, 0), tv(0, 0);
        for (int j = 0; j < m; ++j) {
            uv += u[pos + j] * std::conj(v[pos + j]);
            ut += u[pos + j] * std::conj(t[j]);
            tv += t[j] * std::conj(v[pos + j]);
        }
        const cplx s = uv / denom - ut * tv / (denom * denom);
        total += -(1.0 / kPi) * s.imag();
        pos += m;
    }
    return total * M.area_scale;
}

double symplectic_value(const AmbientSpace& M, const ProductPoint& p, const TangentVector& u,
                        const TangentVector& v) {
    if (!projectively_equal(u.base, v.base, 1e-8) || !projectively_equal(u.base, p, 1e-8))
        throw InvalidInput("symplectic_value: mismatched base points");
    std::vector<cplx> vu = u.comps;
    std::vector<cplx> vv = v.comps;
    std::vector<int> charts = best_charts(normalize(p));
    if (u.charts != charts) vu = transport_tangent(u.base, u.charts, charts, vu);
    if (v.charts != charts) vv = transport_tangent(v.base, v.charts, charts, vv);
    return symplectic_value_comps(M, p, charts, vu, vv);
}

TangentVector apply_complex_structure(const AmbientSpace& M, const TangentVector& v) {
    TangentVector out = v;
    for (cplx& c : out.comps) c *= cplx(0, 1);
    (void)M;  // holomorphic constraints keep the result tangent
    return out;
}

ProductPoint project_to_manifold(const AmbientSpace& M, ProductPoint p, int max_iter, double tol) {
    p = normalize(p);
    if (M.constraints.empty()) return p;
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0;
        {
            const std::vector<cplx> z = p.flat();
            for (const MultiPoly& F : M.constraints)
                worst = std::max(worst, std::abs(F.eval(z)) / std::max(F.coeff_norm(), 1e-300));
        }
        if (worst < tol) return p;
        const std::vector<int> charts = best_charts(p);
        std::vector<cplx> t = chart_coords(p, charts);
        // One Newton step per constraint in chart coordinates.
        for (const MultiPoly& F : M.constraints) {
            const ProductPoint cur = point_from_chart(M.factor_dims, charts, t);
            // Pivot-normalized representative and chart gradient of F.
            std::vector<cplx> zpiv;
            for (int f = 0; f < M.n_factors(); ++f)
                for (int j = 0; j <= M.factor_dims[f]; ++j)
                    zpiv.push_back(cur.factors[f].coords[j] /
                                   cur.factors[f].coords[charts[f]]);
            const cplx val = F.eval(zpiv);
            std::vector<cplx> grad(t.size(), cplx(0, 0));
            int off = 0, pos = 0;
            for (int f = 0; f < M.n_factors(); ++f) {
                for (int j = 0; j <= M.factor_dims[f]; ++j) {
                    if (j == charts[f]) continue;
                    grad[pos++] = F.partial(off + j).eval(zpiv);
                }
                off += M.factor_dims[f] + 1;
            }
            double g2 = 0;
            for (const cplx& g : grad) g2 += std::norm(g);
            if (g2 < 1e-300) throw ProjectionFailure("vanishing constraint gradient");
            for (std::size_t i = 0; i < t.size(); ++i) t[i] -= val * std::conj(grad[i]) / g2;
        }
        p = normalize(point_from_chart(M.factor_dims, charts, t));
    }
    if (on_manifold(M, p, tol * 10).ok) return p;
    throw ProjectionFailure("Newton projection did not converge");
}

ProductPoint random_manifold_point(const AmbientSpace& M, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<HomogeneousPoint> fac;
        for (int d : M.factor_dims) {
            std::vector<cplx> z(d + 1);
            for (cplx& c : z) c = cplx(gauss(rng), gauss(rng));
            fac.push_back(HomogeneousPoint(std::move(z)));
        }
        ProductPoint p(std::move(fac));
        try {
            p = project_to_manifold(M, p, 40, 1e-13);
        } catch (const ProjectionFailure&) {
            continue;
        }
        if (on_manifold(M, p, 1e-9).ok) return p;
    }
    throw ProjectionFailure("random_manifold_point: no convergent sample");
}

std::vector<std::vector<cplx>> tangent_basis(const AmbientSpace& M, const ProductPoint& p,
                                             const std::vector<int>& charts) {
    const int m = M.chart_dim();
    std::vector<std::vector<cplx>> raw;
    for (int j = 0; j < m; ++j)
        for (int re = 0; re < 2; ++re) {
            std::vector<cplx> e(m, cplx(0, 0));
            e[j] = re == 0 ? cplx(1, 0) : cplx(0, 1);
            raw.push_back(project_to_constraint_tangent(M, p, charts, std::move(e)));
        }
    // Real Gram-Schmidt under Re<.,.>; keep 2 * complex_dim vectors.
    auto rdot = [](const std::vector<cplx>& a, const std::vector<cplx>& b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        return s;
    };
    std::vector<std::vector<cplx>> basis;
    const int want = 2 * M.complex_dim();
    for (auto& v : raw) {
        for (const auto& b : basis) {
            double c = rdot(v, b);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
        }
        double n = std::sqrt(std::max(rdot(v, v), 0.0));
        if (n < 1e-7) continue;
        for (cplx& c : v) c /= n;
        basis.push_back(std::move(v));
        if (static_cast<int>(basis.size()) == want) break;
    }
    if (static_cast<int>(basis.size()) != want)
        throw SingularSystem("tangent_basis: rank deficiency");
    return basis;
}

}  // namespace ptoric

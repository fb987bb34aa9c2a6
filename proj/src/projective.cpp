#include "ptoric/projective.hpp"

#include <algorithm>
#include <cmath>

namespace ptoric {

double HomogeneousPoint::norm() const {
    double s = 0;
    for (const cplx& z : coords) s += std::norm(z);
    return std::sqrt(s);
}

bool HomogeneousPoint::is_zero(double tol) const { return norm() <= tol; }

HomogeneousPoint normalize(const HomogeneousPoint& p) {
    const double n = p.norm();
    if (n == 0.0) throw InvalidInput("normalize: all coordinates zero");
    std::vector<cplx> z = p.coords;
    for (cplx& c : z) c /= n;
    // Phase convention: first coordinate above the relative threshold gets
    // phase zero.
    for (const cplx& c : z) {
        if (std::abs(c) > 1e-12) {
            cplx phase = c / std::abs(c);
            for (cplx& w : z) w /= phase;
            break;
        }
    }
    return HomogeneousPoint(std::move(z));
}

bool projectively_equal(const HomogeneousPoint& a, const HomogeneousPoint& b, double tol) {
    if (a.coords.size() != b.coords.size()) return false;
    const double scale = a.norm() * b.norm();
    if (scale == 0.0) return false;
    double worst = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        for (std::size_t j = i + 1; j < a.coords.size(); ++j)
            worst = std::max(worst,
                             std::abs(a.coords[i] * b.coords[j] - a.coords[j] * b.coords[i]));
    return worst <= tol * scale;
}

int best_chart(const HomogeneousPoint& p) {
    int best = 0;
    double mx = -1;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        double m = std::abs(p.coords[i]);
        if (m > mx) {
            mx = m;
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::vector<cplx> chart_coords(const HomogeneousPoint& p, int chart) {
    const cplx pivot = p.coords.at(chart);
    if (std::abs(pivot) <= 1e-14 * std::max(p.norm(), 1e-300))
        throw ChartUndefined("chart coordinate vanishes at point");
    std::vector<cplx> out;
    out.reserve(p.coords.size() - 1);
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        if (static_cast<int>(i) != chart) out.push_back(p.coords[i] / pivot);
    return out;
}

HomogeneousPoint point_from_chart(int dim, int chart, const std::vector<cplx>& affine) {
    if (static_cast<int>(affine.size()) != dim) throw InvalidInput("point_from_chart: size");
    std::vector<cplx> z(dim + 1);
    int k = 0;
    for (int i = 0; i <= dim; ++i) z[i] = (i == chart) ? cplx(1, 0) : affine[k++];
    return HomogeneousPoint(std::move(z));
}

std::vector<cplx> ProductPoint::flat() const {
    std::vector<cplx> out;
    for (const auto& f : factors) out.insert(out.end(), f.coords.begin(), f.coords.end());
    return out;
}

ProductPoint normalize(const ProductPoint& p) {
    std::vector<HomogeneousPoint> f;
    f.reserve(p.factors.size());
    for (const auto& h : p.factors) f.push_back(normalize(h));
    return ProductPoint(std::move(f));
}

bool projectively_equal(const ProductPoint& a, const ProductPoint& b, double tol) {
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (!projectively_equal(a.factors[i], b.factors[i], tol)) return false;
    return true;
}

std::vector<int> best_charts(const ProductPoint& p) {
    std::vector<int> out;
    out.reserve(p.factors.size());
    for (const auto& f : p.factors) out.push_back(best_chart(f));
    return out;
}

std::vector<cplx> chart_coords(const ProductPoint& p, const std::vector<int>& charts) {
    std::vector<cplx> out;
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
        auto c = chart_coords(p.factors[f], charts.at(f));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

ProductPoint point_from_chart(const std::vector<int>& dims, const std::vector<int>& charts,
                              const std::vector<cplx>& affine) {
    std::vector<HomogeneousPoint> fac;
    int pos = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        std::vector<cplx> a(affine.begin() + pos, affine.begin() + pos + dims[f]);
        pos += dims[f];
        fac.push_back(point_from_chart(dims[f], charts[f], a));
    }
    return ProductPoint(std::move(fac));
}

std::vector<cplx> transport_tangent(const ProductPoint& p, const std::vector<int>& from,
                                    const std::vector<int>& to, const std::vector<cplx>& comps) {
    std::vector<cplx> out;
    int pos = 0;
    for (std::size_t f = 0; f < p.factors.size(); ++f) {
        const HomogeneousPoint& h = p.factors[f];
        const int dim = h.dim();
        const int a = from[f];
        const int b = to[f];
        const cplx za = h.coords[a];
        const cplx zb = h.coords[b];
        if (std::abs(za) < 1e-14 * h.norm() || std::abs(zb) < 1e-14 * h.norm())
            throw ChartUndefined("transport_tangent: chart invalid at point");
        // Lift: affine components u_j (j != a) correspond to the homogeneous
        // representative W with W_a = 0, W_j = u_j * z_a.
        std::vector<cplx> lift(dim + 1, cplx(0, 0));
        int k = 0;
        for (int j = 0; j <= dim; ++j) {
            if (j == a) continue;
            lift[j] = comps[pos + k] * za;
            ++k;
        }
        pos += dim;
        // Project into chart b: v_j = (W_j z_b - z_j W_b) / z_b^2.
        for (int j = 0; j <= dim; ++j) {
            if (j == b) continue;
            out.push_back((lift[j] * zb - h.coords[j] * lift[b]) / (zb * zb));
        }
    }
    return out;
}

double chart_distance(cplx a, cplx b) {
    // Work in whichever affine chart keeps both values small: near infinity
    // use the reciprocal chart.
    double direct = std::abs(a - b);
    if (std::abs(a) > 1.0 && std::abs(b) > 1.0) {
        double recip = std::abs(1.0 / a - 1.0 / b);
        return std::min(direct, recip);
    }
    return direct;
}

}  // namespace ptoric

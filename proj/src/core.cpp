#include "ptoric/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ptoric {

std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) throw InvalidInput("solve_linear: bad dimensions");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-13) throw SingularSystem("pivot ~ 0 in linear solve");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

std::optional<Rational> rational_reconstruct(double x, long long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    const double ax = std::abs(x);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = ax;
    for (int it = 0; it < 64; ++it) {
        long long term = static_cast<long long>(std::floor(y));
        long long p2 = term * p1 + p0;
        long long q2 = term * q1 + q0;
        if (q2 > max_den || p2 < 0 || q2 < 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = y - static_cast<double>(term);
        if (std::abs(ax * q1 - p1) <= tol * std::max(1.0, static_cast<double>(q1))) break;
        if (rem < 1e-15) break;
        y = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - ax) > tol) return std::nullopt;
    long long g = std::gcd(p1, q1);
    if (g > 1) {
        p1 /= g;
        q1 /= g;
    }
    return Rational{x < 0 ? -p1 : p1, q1};
}

std::string format_rational(double x, long long max_den, double tol) {
    auto r = rational_reconstruct(x, max_den, tol);
    if (!r) return std::to_string(x);
    if (r->den == 1) return std::to_string(r->num);
    return std::to_string(r->num) + "/" + std::to_string(r->den);
}

}  // namespace ptoric

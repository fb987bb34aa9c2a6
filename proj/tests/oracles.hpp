#pragma once

// Independent oracles used by the test suites. These deliberately avoid the
// library's quadrature/contour code paths: disc areas come from the exact
// spherical-cap formula, Bohr-Sommerfeld levels from denominator LCMs, and
// root counts from a direct polynomial solver.

#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "ptoric/polynomial.hpp"

namespace oracles {

using ptoric::cplx;

// Point of the round unit sphere under the inverse stereographic map of the
// chart with Kaehler potential log(alpha + |s|^2).
inline std::array<double, 3> sphere_point(double alpha, cplx s) {
    const double ra = std::sqrt(alpha);
    const double denom = std::norm(s) + alpha;
    return {2 * ra * s.real() / denom, 2 * ra * s.imag() / denom,
            (std::norm(s) - alpha) / denom};
}

// Exact Fubini-Study area (line normalized to area 1) of the disc
// |s - c| <= r in the chart with potential log(alpha + |s|^2).
inline double cap_area(double alpha, cplx c, double r) {
    namespace st = std;
    auto u1 = sphere_point(alpha, c + r);
    auto u2 = sphere_point(alpha, c + r * cplx(-0.5, st::sqrt(3.0) / 2));
    auto u3 = sphere_point(alpha, c + r * cplx(-0.5, -st::sqrt(3.0) / 2));
    std::array<double, 3> a{u2[0] - u1[0], u2[1] - u1[1], u2[2] - u1[2]};
    std::array<double, 3> b{u3[0] - u1[0], u3[1] - u1[1], u3[2] - u1[2]};
    std::array<double, 3> n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                            a[0] * b[1] - a[1] * b[0]};
    const double nn = st::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (double& x : n) x /= nn;
    const double d = n[0] * u1[0] + n[1] * u1[1] + n[2] * u1[2];
    const auto uc = sphere_point(alpha, c);
    const double side = n[0] * uc[0] + n[1] * uc[1] + n[2] * uc[2];
    return side >= d ? (1.0 - d) / 2.0 : (1.0 + d) / 2.0;
}

// Minimal k with k * (a_i / b_i) integral for all i: lcm of the reduced
// denominators.
inline long long bs_level_lcm(const std::vector<std::pair<long long, long long>>& fracs) {
    long long l = 1;
    for (auto [num, den] : fracs) {
        long long g = std::gcd(std::llabs(num), den);
        l = std::lcm(l, den / g);
    }
    return l;
}

// Total zero count of a homogeneous parameter polynomial over CP^1: direct
// root clustering plus the order at infinity.
inline int root_count(const ptoric::PairPoly& p) {
    int total = p.order_at_infinity(1e-10);
    for (const auto& [root, mult] : p.affine_roots(1e-4)) {
        (void)root;
        total += mult;
    }
    return total;
}

}  // namespace oracles

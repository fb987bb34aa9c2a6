#include "ptoric/certify.hpp"

#include <algorithm>
#include <cmath>

namespace ptoric {

WindingResult winding_number(const std::function<cplx(double)>& f, int initial_samples,
                             int max_samples, double min_modulus_floor) {
    int n = initial_samples;
    bool have_prev_degree = false;
    WindingResult last;
    while (true) {
        double total = 0;
        double min_mod = 1e300;
        cplx prev = f(0.0);
        min_mod = std::min(min_mod, std::abs(prev));
        bool aliased = false;
        for (int i = 1; i <= n; ++i) {
            const cplx cur = f(static_cast<double>(i % n) / n);
            min_mod = std::min(min_mod, std::abs(cur));
            if (min_mod < min_modulus_floor)
                throw VanishingPairing("winding_number: |f| below floor");
            const double step = std::arg(cur / prev);
            if (std::abs(step) >= kPi / 2) {
                aliased = true;
                break;
            }
            total += step;
            prev = cur;
        }
        if (!aliased) {
            WindingResult r;
            r.raw = total / kTwoPi;
            r.degree = static_cast<int>(std::lround(r.raw));
            r.residual = std::abs(r.raw - r.degree);
            r.samples = n;
            r.min_modulus = min_mod;
            // The step bound alone cannot see a pure rotation that aliases
            // below pi/2; confirm the degree across one doubling.
            if (have_prev_degree && last.degree == r.degree) return r;
            have_prev_degree = true;
            last = r;
        }
        if (n >= max_samples) throw AliasLimit("winding_number: sample cap reached");
        n *= 2;
    }
}

PeriodVector period_vector(const AmbientSpace& M, const std::vector<BasisLoop>& loops,
                           double tol) {
    PeriodVector out;
    for (const BasisLoop& bl : loops) {
        // Boundary check: chain(1, v) must trace the loop.
        for (int k = 0; k < 8; ++k) {
            const double v = (k + 0.25) / 8.0;
            if (!projectively_equal(normalize(bl.chain.map(1.0, v)), normalize(bl.loop(v)), 1e-8))
                throw InvalidInput("period_vector: chain boundary does not match loop " + bl.name);
        }
        const double area = chain_area(M, bl.chain, tol);
        const double again = chain_area(M, bl.chain, tol / 4);
        out.values.push_back(mod_one(area));
        out.raw_areas.push_back(area);
        out.verify_delta.push_back(std::abs(again - area));
        out.loop_names.push_back(bl.name);
    }
    return out;
}

BSReport bs_level(const PeriodVector& periods, int k_max, double tol) {
    BSReport rep;
    rep.k_max = k_max;
    rep.tol = tol;
    for (int k = 1; k <= k_max; ++k) {
        bool ok = true;
        for (double p : periods.values)
            if (dist_to_integer(k * p) >= tol) {
                ok = false;
                break;
            }
        if (ok) {
            rep.bounded = true;
            rep.level = k;
            return rep;
        }
    }
    rep.bounded = false;
    return rep;
}

bool is_bs_at(const PeriodVector& periods, int k, double tol) {
    for (double p : periods.values)
        if (dist_to_integer(k * p) >= tol) return false;
    return true;
}

WindingResult maslov_degree(const AmbientSpace& M, const MeromorphicVolumeForm& omega,
                            const std::function<ProductPoint(double)>& loop,
                            const std::function<std::vector<TangentVector>(double)>& frame_fn,
                            int initial_samples) {
    // The frame field must actually live along the loop.
    for (double t : {0.0, 0.37, 0.71}) {
        const auto frame = frame_fn(t);
        if (frame.empty() || !projectively_equal(frame.front().base, normalize(loop(t)), 1e-6))
            throw InvalidInput("maslov_degree: frame is not based on the loop");
    }
    auto pairing = [&](double t) { return volume_form_value(M, omega, frame_fn(t)); };
    return winding_number(pairing, initial_samples);
}

int intersection_index(const PairPoly& pullback) {
    const PairPoly& e = pullback;
    if (e.coeff_norm() < 1e-13) throw IdenticallyZero("intersection_index: zero pullback");
    const double scale = e.coeff_norm();
    // Order at infinity comes from the homogeneous-degree bookkeeping and must
    // be read off before any truncation of high coefficients.
    const int at_infinity = e.order_at_infinity(1e-10);
    // Argument principle on growing contours until the count stabilizes.
    int last = -1;
    for (double radius = 4.0; radius < 1e6; radius *= 4.0) {
        bool bad = false;
        double r = radius;
        int count = -1;
        for (int attempt = 0; attempt < 5; ++attempt) {
            bad = false;
            auto f = [&](double t) {
                const cplx val = e.eval_affine(std::polar(r, kTwoPi * t));
                if (std::abs(val) < 1e-10 * scale) bad = true;
                return val;
            };
            try {
                WindingResult w = winding_number(f, 256);
                if (!bad) {
                    count = w.degree;
                    break;
                }
            } catch (const VanishingPairing&) {
            }
            r *= 1.31;  // perturbed contour
        }
        if (count < 0) throw ContourThroughRoot("intersection_index: contour through root");
        if (count == last) return count + at_infinity;
        last = count;
    }
    throw NonConvergent("intersection_index: contour count did not stabilize");
}

MiddleCaseResult middle_case_check(const std::vector<long long>& lambda,
                                   const std::vector<long long>& rho) {
    if (lambda.size() != rho.size()) throw InvalidInput("middle_case_check: length mismatch");
    MiddleCaseResult r;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] < 0) throw InvalidInput("middle_case_check: negative intersection index");
        r.sum_rho += rho[i];
        if (lambda[i] > 0) r.sum_positive += lambda[i] * rho[i];
    }
    r.margin = r.sum_rho - r.sum_positive;
    r.middle = r.margin > 0;
    return r;
}

}  // namespace ptoric

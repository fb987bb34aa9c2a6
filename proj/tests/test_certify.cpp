#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ptoric/report.hpp"
#include "ptoric/scenario.hpp"

using namespace ptoric;

namespace {

ScenarioContext ctx_of(const std::string& id, TorusKind kind = TorusKind::Chekanov) {
    ScenarioSpec spec;
    spec.id = id;
    spec.kind = kind;
    return build_context(spec);
}

PeriodVector pv(std::initializer_list<double> vals) {
    PeriodVector p;
    p.values = vals;
    return p;
}

}  // namespace

TEST_CASE("period vector of the CP^2 Chekanov torus") {
    ScenarioContext ctx = ctx_of("cp2_chekanov");
    auto branches = branch_points(ctx.sigma, ctx.psi);
    LoopSearchConstraints cons;
    cons.max_radius = 3.0;
    LoopSpec loop = loop_with_disc_area(ctx.M, ctx.sigma, branches, cplx(0, 3), 1.0 / 3.0,
                                        1e-7, cons);
    const ProductPoint p0 = ctx.sigma.eval(loop.point(0.0));
    std::vector<BasisLoop> loops;
    {
        BasisLoop bl;
        bl.name = "section";
        bl.loop = [sig = ctx.sigma, loop](double t) { return sig.eval(loop.point(t)); };
        bl.chain = disc_chain(ctx.sigma, loop);
        loops.push_back(std::move(bl));
    }
    {
        BasisLoop bl;
        bl.name = "s_p";
        PhaseAction a = ctx.fiber_actions[0];
        bl.loop = [p0, a](double t) { return apply_phases(p0, {a}, {t}); };
        bl.chain = weighted_orbit_chain(p0, a, ctx.M.factor_dims);
        loops.push_back(std::move(bl));
    }
    PeriodVector per = period_vector(ctx.M, loops, 1e-6);
    CHECK(dist_to_integer(per.values[0] - 1.0 / 3.0) < 1e-6);
    CHECK(dist_to_integer(per.values[1]) < 1e-6);
    for (double d : per.verify_delta) CHECK(d < 1e-5);

    // Replacing the fiber chain by the complementary half of the conic shifts
    // the raw area by the full fiber area (an integer), leaving the period.
    const PhaseAction& a = ctx.fiber_actions[0];
    PhaseAction flipped = a;
    for (int& w : flipped.weights) w = -w;
    ParametrizedChain other = weighted_orbit_chain(p0, flipped, ctx.M.factor_dims);
    const double area1 = per.raw_areas[1];
    const double area2 = -chain_area(ctx.M, other, 1e-8);  // boundary reversed
    CHECK(std::abs(area1 - area2 - std::round(area1 - area2)) < 1e-5);
    CHECK(std::abs(std::abs(area1 - area2) - 2.0) < 1e-5);  // a full degree-2 fiber
}

TEST_CASE("bs_level: worked examples") {
    BSReport r1 = bs_level(pv({1.0 / 3.0, 0.0}), 64, 1e-4);
    CHECK(r1.bounded);
    CHECK(r1.level == 3);
    BSReport r2 = bs_level(pv({0.5, 0.0, 0.0}), 64, 1e-4);
    CHECK(r2.bounded);
    CHECK(r2.level == 2);
    // 0.353 admits no level up to 64 at tol 1e-4 (brute-force cross-check).
    BSReport r3 = bs_level(pv({0.353, 0.0}), 64, 1e-4);
    bool brute = false;
    for (int k = 1; k <= 64; ++k)
        if (dist_to_integer(k * 0.353) < 1e-4) brute = true;
    CHECK_FALSE(brute);
    CHECK_FALSE(r3.bounded);
    CHECK(is_bs_at(pv({0.25, 0.5}), 4, 1e-6));
    CHECK_FALSE(is_bs_at(pv({0.25, 0.5}), 2, 1e-6));
}

TEST_CASE("bs_level equals the LCM oracle on random rationals") {
    auto rng = make_rng(0xBEEF);
    std::uniform_int_distribution<long long> den(1, 12);
    std::uniform_int_distribution<int> len(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = len(rng);
        std::vector<std::pair<long long, long long>> fracs;
        PeriodVector periods;
        for (int i = 0; i < n; ++i) {
            long long q = den(rng);
            std::uniform_int_distribution<long long> num(0, q - 1);
            long long p = num(rng);
            fracs.push_back({p, q});
            periods.values.push_back(static_cast<double>(p) / q);
        }
        const long long expect = oracles::bs_level_lcm(fracs);
        BSReport rep = bs_level(periods, 30000, 1e-6);
        CHECK(rep.bounded);
        CHECK(rep.level == expect);
    }
}

TEST_CASE("volume form: alternating, complex-linear, toric constancy") {
    ScenarioContext ctx = ctx_of("cp2_chekanov");
    const ProductPoint p = normalize(
        ProductPoint({HomogeneousPoint({cplx(1, 0), cplx(0.7, 0.3), cplx(0.4, -0.8)})}));
    TangentVector u = hamiltonian_field(ctx.M, ctx.full_toric[0], p);
    TangentVector v = hamiltonian_field(ctx.M, ctx.full_toric[1], p);
    const cplx uv = volume_form_value(ctx.M, ctx.omega, {u, v});
    const cplx vu = volume_form_value(ctx.M, ctx.omega, {v, u});
    CHECK(std::abs(uv + vu) < 1e-10 * std::abs(uv));
    CHECK(std::abs(volume_form_value(ctx.M, ctx.omega, {u, u})) < 1e-10 * std::abs(uv));
    TangentVector iu = apply_complex_structure(ctx.M, u);
    const cplx iuv = volume_form_value(ctx.M, ctx.omega, {iu, v});
    CHECK(std::abs(iuv - cplx(0, 1) * uv) < 1e-9 * std::abs(uv));

    // Pairing with the full toric frame is constant along a fiber circle.
    const ProductPoint base = ctx.sigma.eval(cplx(0.9, 0.2));
    cplx first(0, 0);
    for (int i = 0; i < 12; ++i) {
        ProductPoint q = apply_phases(base, {ctx.fiber_actions[0]}, {i / 12.0});
        TangentVector a = hamiltonian_field(ctx.M, ctx.full_toric[0], q);
        TangentVector b = hamiltonian_field(ctx.M, ctx.full_toric[1], q);
        const cplx val = volume_form_value(ctx.M, ctx.omega, {a, b});
        if (i == 0)
            first = val;
        else
            CHECK(std::abs(val - first) < 1e-6 * std::abs(first));
    }
    {
        const ProductPoint near_pole = normalize(
            ProductPoint({HomogeneousPoint({cplx(1, 0), cplx(1e-12, 0), cplx(1, 0)})}));
        TangentVector a = hamiltonian_field(ctx.M, ctx.full_toric[0], near_pole);
        TangentVector b = hamiltonian_field(ctx.M, ctx.full_toric[1], near_pole);
        CHECK_THROWS_AS(volume_form_value(ctx.M, ctx.omega, {a, b}), OnPoleLocus);
    }
}

TEST_CASE("maslov winding: toric frame gives zero, rotating frame gives one") {
    ScenarioContext ctx = ctx_of("cp2_chekanov");
    LoopSpec loop;
    loop.center = cplx(0, 3);
    loop.radius = 2.0;
    auto at = [&](double t) { return ctx.sigma.eval(loop.point(t)); };
    // Full toric frame: degree 0.
    auto toric_frame = [&](double t) {
        const ProductPoint p = at(t);
        return std::vector<TangentVector>{hamiltonian_field(ctx.M, ctx.full_toric[0], p),
                                          hamiltonian_field(ctx.M, ctx.full_toric[1], p)};
    };
    WindingResult w0 = maslov_degree(ctx.M, ctx.omega, at, toric_frame, 64);
    CHECK(w0.degree == 0);
    CHECK(w0.residual < 1e-3);
    // Rotating frame: degree 1.
    auto rot_frame = [&](double t) {
        const ProductPoint p = at(t);
        TangentVector x1 = hamiltonian_field(ctx.M, ctx.reduced[0], p);
        TangentVector xn = hamiltonian_field(ctx.M, ctx.completion, p);
        TangentVector ixn = apply_complex_structure(ctx.M, xn);
        TangentVector nu = xn;
        const double th = kTwoPi * t;
        for (std::size_t i = 0; i < nu.comps.size(); ++i)
            nu.comps[i] = std::cos(th) * xn.comps[i] + std::sin(th) * ixn.comps[i];
        return std::vector<TangentVector>{x1, nu};
    };
    WindingResult w1 = maslov_degree(ctx.M, ctx.omega, at, rot_frame, 64);
    CHECK(w1.degree == 1);
    CHECK(w1.residual < 1e-3);

    // Orientation reversal negates the degree: run the reversed loop with the
    // correspondingly re-indexed frame field.
    auto at_rev = [&](double t) { return at(1.0 - t); };
    auto rot_rev = [&](double t) { return rot_frame(1.0 - t); };
    WindingResult wr = maslov_degree(ctx.M, ctx.omega, at_rev, rot_rev, 64);
    CHECK(wr.degree == -w1.degree);

    // Sample doubling does not change the answer.
    WindingResult w2 = maslov_degree(ctx.M, ctx.omega, at, rot_frame, 128);
    CHECK(w2.degree == w1.degree);
}

TEST_CASE("winding number unwraps aliased phases by doubling") {
    auto f = [](double t) { return std::polar(1.0, 7 * kTwoPi * t); };
    WindingResult w = winding_number(f, 8);
    CHECK(w.degree == 7);
    CHECK(w.samples > 8);  // the 8-sample pass aliases and must be rejected
    CHECK_THROWS_AS(winding_number([](double) { return cplx(0, 0); }, 8), VanishingPairing);
}

TEST_CASE("intersection indices against the direct root-count oracle") {
    {
        ScenarioContext ctx = ctx_of("cp2_chekanov");
        CHECK(intersection_index(ctx.db_pullback) == 3);       // k m = 3 * 1
        CHECK(intersection_index(ctx.dplus_pullback) == 2);    // d
        CHECK(oracles::root_count(ctx.db_pullback) == 3);
        CHECK(oracles::root_count(ctx.dplus_pullback) == 2);
    }
    {
        ScenarioContext ctx = ctx_of("quadric4");
        CHECK(intersection_index(ctx.db_pullback) == 8);       // k m = 4 * 2
        CHECK(intersection_index(ctx.dplus_pullback) == 4);    // d
        CHECK(oracles::root_count(ctx.db_pullback) == 8);
        CHECK(oracles::root_count(ctx.dplus_pullback) == 4);
        CHECK(intersection_index(*ctx.limit_line_dplus) == 2);  // frozen limit-line index
    }
    {
        ScenarioContext ctx = ctx_of("flag_f3", TorusKind::Standard);
        CHECK(intersection_index(ctx.db_pullback) == 4);        // k m = 2 * 2
        CHECK(intersection_index(ctx.dplus_pullback) == 4);     // d
        CHECK(oracles::root_count(ctx.db_pullback) == 4);
        CHECK(intersection_index(*ctx.limit_line_dplus) == 1);
    }
    // Flag D_b of bidegree (2,2) restricted to the section: 4 distinct zeros
    // of the diagonal trace polynomial (oracle: direct root count).
    {
        ScenarioContext ctx = ctx_of("flag_f3", TorusKind::Standard);
        auto roots = ctx.db_pullback.affine_roots(1e-5);
        int distinct = static_cast<int>(roots.size()) +
                       (ctx.db_pullback.order_at_infinity(1e-10) > 0 ? 1 : 0);
        CHECK(distinct == 4);
    }
    CHECK_THROWS_AS(intersection_index(PairPoly({cplx(0, 0), cplx(0, 0)})), IdenticallyZero);
}

TEST_CASE("middle_case_check margins") {
    auto r1 = middle_case_check({1, 1, -2}, {1, 1, 1});
    CHECK(r1.middle);
    CHECK(r1.margin == 1);
    CHECK(r1.sum_rho == 3);
    CHECK(r1.sum_positive == 2);
    auto r2 = middle_case_check({3, 0, -3}, {1, 1, 1});
    CHECK_FALSE(r2.middle);
    CHECK(r2.margin == 0);
    auto r3 = middle_case_check({-1, 1}, {4, 4});
    CHECK(r3.middle);
    CHECK(r3.margin == 4);
    auto r4 = middle_case_check({-2, 2}, {2, 2});
    CHECK_FALSE(r4.middle);
    CHECK(r4.margin == 0);
    CHECK_THROWS_AS(middle_case_check({1, -1}, {1, 1, 1}), InvalidInput);
}

TEST_CASE("rational reconstruction for report fractions") {
    auto r = rational_reconstruct(1.0 / 3.0, 64, 1e-4);
    REQUIRE(r.has_value());
    CHECK(r->num == 1);
    CHECK(r->den == 3);
    auto r2 = rational_reconstruct(0.749999999, 64, 1e-4);
    REQUIRE(r2.has_value());
    CHECK(r2->num == 3);
    CHECK(r2->den == 4);
    CHECK_FALSE(rational_reconstruct(0.3531234, 8, 1e-6).has_value());
}

TEST_CASE("volume form transforms by the exact Jacobian constant across charts") {
    // The invariant toric form written in two different affine charts differs
    // by the Jacobian monomial of the chart change; for the standard form on
    // CP^2 (charts 0 and 1) that factor is the constant -1.
    ScenarioContext ctx = ctx_of("cp2_chekanov");
    MeromorphicVolumeForm omega1 = ctx.omega;
    omega1.charts = {1};
    auto rng = make_rng(83);
    std::uniform_real_distribution<double> uni(-1.2, 1.2);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<cplx> z{cplx(1.0 + uni(rng) * 0.3, uni(rng) * 0.2),
                            cplx(0.9 + uni(rng) * 0.3, uni(rng) * 0.2),
                            cplx(uni(rng) + 1.5, uni(rng))};
        const ProductPoint p = normalize(ProductPoint({HomogeneousPoint(z)}));
        TangentVector u = hamiltonian_field(ctx.M, ctx.reduced[0], p);
        TangentVector v = hamiltonian_field(ctx.M, ctx.completion, p);
        const cplx a = volume_form_value(ctx.M, ctx.omega, {u, v});
        const cplx b = volume_form_value(ctx.M, omega1, {u, v});
        CHECK(std::abs(b + a) < 1e-9 * std::abs(a));
    }
    // Product case: flipping one factor's chart on CP^1 x CP^1 also negates.
    ScenarioContext pp = ctx_of("p1xp1_chekanov");
    MeromorphicVolumeForm flipped = pp.omega;
    flipped.charts = {1, 0};
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<cplx> x{cplx(1, 0), cplx(0.4 + 0.2 * uni(rng), uni(rng) * 0.3)};
        std::vector<cplx> y{cplx(1, 0), cplx(0.7 + 0.2 * uni(rng), uni(rng) * 0.3)};
        const ProductPoint p =
            normalize(ProductPoint({HomogeneousPoint(x), HomogeneousPoint(y)}));
        TangentVector u = hamiltonian_field(pp.M, pp.reduced[0], p);
        TangentVector v = hamiltonian_field(pp.M, pp.completion, p);
        const cplx a = volume_form_value(pp.M, pp.omega, {u, v});
        const cplx b = volume_form_value(pp.M, flipped, {u, v});
        CHECK(std::abs(b + a) < 1e-9 * std::abs(a));
    }
}

#include "ptoric/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace ptoric {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// |z_i|^2 normalized by the factor norm.
std::vector<double> moduli2(const ProductPoint& p, int factor) {
    const HomogeneousPoint& h = p.factors.at(factor);
    double total = 0;
    std::vector<double> out(h.coords.size());
    for (std::size_t i = 0; i < h.coords.size(); ++i) {
        out[i] = std::norm(h.coords[i]);
        total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
}

MomentMap coordinate_weight_moment(std::string name, std::vector<std::vector<int>> weights,
                                   double bound = 1.0) {
    // f = sum over factors of sum_i w_i |z_i|^2 / |z|^2.
    MomentMap m;
    m.name = std::move(name);
    m.value_bound = bound;
    m.f = [w = std::move(weights)](const ProductPoint& p) {
        double acc = 0;
        for (std::size_t f = 0; f < p.factors.size(); ++f) {
            const std::vector<double> m2 = moduli2(p, static_cast<int>(f));
            for (std::size_t i = 0; i < m2.size(); ++i) acc += w[f][i] * m2[i];
        }
        return acc;
    };
    return m;
}

PairPoly pp(std::initializer_list<cplx> coeffs) { return PairPoly(std::vector<cplx>(coeffs)); }

const cplx I1(0, 1);

// ---------------------------------------------------------------- CP^2 ----

ScenarioContext make_cp2(const ScenarioSpec& spec) {
    ScenarioContext ctx;
    ctx.spec = spec;
    ctx.M.factor_dims = {2};
    ctx.M.monotonicity_k = 3;
    ctx.M.name = "cp2";

    ctx.reduced = {coordinate_weight_moment("f1", {{1, -1, 0}})};
    ctx.completion = coordinate_weight_moment("f2", {{0, 0, 1}});
    ctx.frame_fields = ctx.reduced;
    ctx.full_toric = {coordinate_weight_moment("ft1", {{1, 0, 0}}),
                      coordinate_weight_moment("ft2", {{0, 1, 0}})};
    ctx.commuting_pairs = {{0, 1}};

    auto P = [&](std::vector<int> e) {
        return MultiPoly::monomial(3, {3}, cplx(1, 0), e);
    };
    ctx.psi.components = {P({1, 1, 0}), P({0, 0, 2})};  // z0 z1, z2^2
    ctx.psi.span = {{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}};
    ctx.psi.singular_values = {{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}};
    ctx.psi.base_set_description = "{[0:1:0], [1:0:0]}";
    ctx.psi.name = "conic pencil a z0 z1 = b z2^2";

    ctx.sigma.factor_dims = {2};
    ctx.sigma.coord_polys = {pp({1, 0}), pp({1, 0}), pp({0, 1})};  // [s0 : s0 : s1]
    ctx.sigma.covering_degree_d = 2;
    ctx.sigma.involutions = {{cplx(-1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0), "s -> -s"}};
    ctx.sigma.name = "line z0 = z1";

    ctx.fiber_actions = {{{1, -1, 0}, "s_p"}};

    ctx.omega.kind = MeromorphicVolumeForm::Kind::ToricProduct;
    ctx.omega.charts = {0};
    ctx.omega.pole_monomial = P({1, 1, 1});
    ctx.omega.name = "dt1^dt2/(t1 t2), poles on z0 z1 z2 = 0";

    ctx.db_pullback = compose(P({1, 1, 1}), ctx.sigma.coord_polys);
    ctx.dplus_pullback = compose(P({1, 1, 0}), ctx.sigma.coord_polys);

    DivisorSet d;
    d.names = {"z0", "z1", "z2"};
    d.polys = {P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})};
    d.weights = {{1, 0}, {0, 1}, {0, 0}};
    d.classes = {{1}, {1}, {1}};
    ctx.divisors = d;
    ctx.middle_component_pullbacks = {compose(d.polys[0], ctx.sigma.coord_polys),
                                      compose(d.polys[1], ctx.sigma.coord_polys),
                                      compose(d.polys[2], ctx.sigma.coord_polys)};
    ctx.middle_lambda = {1, 1, -2};
    ctx.screen_extra = {{{3, 0, -3}}};

    ctx.meridian_dir = I1;
    ctx.center_candidates = {1.0, 1.5, 2.2, 3.2, 4.6, 6.6};
    ctx.piece_radius_cap = [](cplx c) { return c.imag(); };
    ctx.chekanov_target = 1.0 / 3.0;
    ctx.expected_branch_count = 2;

    ctx.expect_m = 1.0;
    ctx.expect_d = 2;
    ctx.expect_periods = std::vector<double>{1.0 / 3.0, 0.0};
    ctx.expect_level = 3;
    ctx.expect_degree = 1;
    ctx.expect_verdict = "monotone";
    ctx.expect_margin = 1;
    return ctx;
}

// ------------------------------------------------------ CP^1 x CP^1 -------

ScenarioContext make_p1xp1(const ScenarioSpec& spec) {
    ScenarioContext ctx;
    ctx.spec = spec;
    ctx.M.factor_dims = {1, 1};
    ctx.M.monotonicity_k = 2;
    ctx.M.name = "p1xp1";

    ctx.reduced = {coordinate_weight_moment("f1", {{1, 0}, {-1, 0}})};
    ctx.completion = coordinate_weight_moment("f2", {{1, 0}, {1, 0}}, 2.0);
    ctx.frame_fields = ctx.reduced;
    ctx.full_toric = {coordinate_weight_moment("ft1", {{1, 0}, {0, 0}}),
                      coordinate_weight_moment("ft2", {{0, 0}, {1, 0}})};
    ctx.commuting_pairs = {{0, 1}};

    auto P = [&](std::vector<int> e) {
        return MultiPoly::monomial(4, {2, 2}, cplx(1, 0), e);
    };
    // variables: x0 x1 | y0 y1
    ctx.psi.components = {P({1, 0, 1, 0}), P({0, 1, 0, 1})};  // x0 y0, x1 y1
    ctx.psi.span = {{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}};
    ctx.psi.singular_values = {{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}};
    ctx.psi.base_set_description = "pole pairs of the two lines";
    ctx.psi.name = "pencil w1 x0 y0 = w0 x1 y1";

    ctx.sigma.factor_dims = {1, 1};
    ctx.sigma.coord_polys = {pp({1, 0}), pp({0, 1}), pp({1, 0}), pp({0, 1})};
    ctx.sigma.covering_degree_d = 2;
    ctx.sigma.involutions = {{cplx(-1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0), "s -> -s"}};
    ctx.sigma.name = "diagonal x0 y1 = x1 y0";

    ctx.fiber_actions = {{{1, 0, -1, 0}, "l_p"}};

    ctx.omega.kind = MeromorphicVolumeForm::Kind::ToricProduct;
    ctx.omega.charts = {0, 0};
    ctx.omega.pole_monomial = P({1, 1, 1, 1});
    ctx.omega.name = "dt1^dt2/(t1 t2), poles on the 4 boundary lines";

    ctx.db_pullback = compose(P({1, 1, 1, 1}), ctx.sigma.coord_polys);
    ctx.dplus_pullback = compose(P({1, 0, 1, 0}), ctx.sigma.coord_polys);

    DivisorSet d;
    d.names = {"x0", "y0", "x1", "y1"};
    d.polys = {P({1, 0, 0, 0}), P({0, 0, 1, 0}), P({0, 1, 0, 0}), P({0, 0, 0, 1})};
    d.weights = {{1, 0}, {0, 1}, {0, 0}, {0, 0}};
    d.classes = {{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    ctx.divisors = d;
    for (const MultiPoly& q : d.polys)
        ctx.middle_component_pullbacks.push_back(compose(q, ctx.sigma.coord_polys));
    ctx.middle_lambda = {1, 1, -1, -1};

    ctx.meridian_dir = I1;
    ctx.center_candidates = {0.8, 1.0, 1.4, 2.0, 3.0};
    ctx.piece_radius_cap = [](cplx c) { return c.imag(); };
    ctx.chekanov_target = 0.5;
    ctx.expected_branch_count = 2;

    ctx.expect_m = 2.0;
    ctx.expect_d = 2;
    ctx.expect_periods = std::vector<double>{0.5, 0.0};
    ctx.expect_level = 2;
    ctx.expect_degree = 1;
    ctx.expect_verdict = "monotone";
    ctx.expect_margin = 2;
    return ctx;
}

// ------------------------------------------------------------ (CP^1)^n ----

ScenarioContext make_p1_power(const ScenarioSpec& spec) {
    const int n = spec.n;
    if (n < 2 || n > 6) throw InvalidInput("p1_power_n: n must be in [2, 6]");
    ScenarioContext ctx;
    ctx.spec = spec;
    ctx.M.factor_dims.assign(n, 1);
    ctx.M.monotonicity_k = 2;
    ctx.M.name = "p1_power_" + std::to_string(n);

    auto weight_rows = [&](int i, int wi, int j, int wj) {
        std::vector<std::vector<int>> w(n, std::vector<int>{0, 0});
        if (i >= 0) w[i][0] = wi;
        if (j >= 0) w[j][0] = wj;
        return w;
    };
    for (int i = 0; i + 1 < n; ++i)
        ctx.reduced.push_back(coordinate_weight_moment(
            "f" + std::to_string(i + 1), weight_rows(i, 1, i + 1, -1)));
    {
        std::vector<std::vector<int>> w(n, std::vector<int>{1, 0});
        ctx.completion = coordinate_weight_moment("f" + std::to_string(n), w,
                                                  static_cast<double>(n));
    }
    ctx.frame_fields = ctx.reduced;
    for (int i = 0; i < n; ++i)
        ctx.full_toric.push_back(
            coordinate_weight_moment("ft" + std::to_string(i + 1), weight_rows(i, 1, -1, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ctx.commuting_pairs.push_back({i, j});

    const int nv = 2 * n;
    std::vector<int> sizes(n, 2);
    auto P = [&](std::vector<int> e) { return MultiPoly::monomial(nv, sizes, cplx(1, 0), e); };
    std::vector<int> ex(nv, 0), ey(nv, 0);
    for (int i = 0; i < n; ++i) {
        ex[2 * i] = 1;
        ey[2 * i + 1] = 1;
    }
    ctx.psi.components = {P(ex), P(ey)};  // prod x_i, prod y_i
    ctx.psi.span = {{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}};
    ctx.psi.singular_values = {{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}};
    ctx.psi.base_set_description = "intersections D_i^1 cap D_j^2, i != j";
    ctx.psi.name = "pencil w0 = x_1...x_n, w1 = y_1...y_n";

    ctx.sigma.factor_dims = ctx.M.factor_dims;
    for (int i = 0; i < n; ++i) {
        ctx.sigma.coord_polys.push_back(pp({1, 0}));
        ctx.sigma.coord_polys.push_back(pp({0, 1}));
    }
    ctx.sigma.covering_degree_d = n;
    for (int j = 1; j < n; ++j) {
        MobiusMap tau;
        tau.a = std::polar(1.0, kTwoPi * j / n);
        tau.label = "rotation by 2 pi " + std::to_string(j) + "/" + std::to_string(n);
        ctx.sigma.involutions.push_back(tau);
    }
    ctx.sigma.name = "diagonal";

    for (int i = 0; i + 1 < n; ++i) {
        PhaseAction a;
        a.weights.assign(nv, 0);
        a.weights[2 * i] = 1;
        a.weights[2 * (i + 1)] = -1;
        a.name = "c" + std::to_string(i + 1);
        ctx.fiber_actions.push_back(a);
    }

    ctx.omega.kind = MeromorphicVolumeForm::Kind::ToricProduct;
    ctx.omega.charts.assign(n, 0);
    {
        std::vector<int> all(nv, 1);
        ctx.omega.pole_monomial = P(all);
    }
    ctx.omega.name = "wedge dt_i/t_i";

    {
        std::vector<int> all(nv, 1);
        ctx.db_pullback = compose(P(all), ctx.sigma.coord_polys);
        ctx.dplus_pullback = compose(P(ex), ctx.sigma.coord_polys);
    }

    DivisorSet d;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(nv, 0);
        e[2 * i] = 1;
        d.names.push_back("x" + std::to_string(i + 1));
        d.polys.push_back(P(e));
        std::vector<long long> w(n, 0), cls(n, 0);
        w[i] = 1;
        cls[i] = 1;
        d.weights.push_back(w);
        d.classes.push_back(cls);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(nv, 0);
        e[2 * i + 1] = 1;
        d.names.push_back("y" + std::to_string(i + 1));
        d.polys.push_back(P(e));
        std::vector<long long> w(n, 0), cls(n, 0);
        cls[i] = 1;
        d.weights.push_back(w);
        d.classes.push_back(cls);
    }
    ctx.divisors = d;
    for (const MultiPoly& q : d.polys)
        ctx.middle_component_pullbacks.push_back(compose(q, ctx.sigma.coord_polys));
    ctx.middle_lambda.assign(2 * n, 1);
    for (int i = n; i < 2 * n; ++i) ctx.middle_lambda[i] = -1;

    ctx.meridian_dir = std::polar(1.0, kPi / n);
    ctx.center_candidates = {0.8, 1.0, 1.3, 1.7, 2.3, 3.0};
    const double sector = std::sin(kPi / n);
    ctx.piece_radius_cap = [sector](cplx c) { return std::abs(c) * sector; };
    ctx.chekanov_target = 0.5;
    ctx.expected_branch_count = 2;

    ctx.expect_m = static_cast<double>(n);
    ctx.expect_d = n;
    {
        std::vector<double> per(n, 0.0);
        per[0] = 0.5;
        ctx.expect_periods = per;
    }
    ctx.expect_level = 2;
    ctx.expect_degree = 1;
    ctx.expect_verdict = "monotone";
    ctx.expect_margin = n;
    return ctx;
}

// ------------------------------------------------------------- quadric ----

ScenarioContext make_quadric(const ScenarioSpec& spec) {
    const double t = spec.t;
    if (t <= 0.0 || t > 1.0) throw InvalidInput("quadric4: t must lie in (0, 1]");
    ScenarioContext ctx;
    ctx.spec = spec;
    ctx.M.factor_dims = {5};
    ctx.M.monotonicity_k = 4;
    ctx.M.name = "quadric4";
    auto P = [&](std::vector<int> e, cplx c = cplx(1, 0)) {
        return MultiPoly::monomial(6, {6}, c, e);
    };
    ctx.M.constraints = {P({1, 1, 0, 0, 0, 0}) + P({0, 0, 1, 1, 0, 0}) +
                         P({0, 0, 0, 0, 1, 1}, cplx(t, 0))};

    // Cyclic triple over the pair differences g1, g2, g3; the three sum to
    // zero, so they span a rank-2 space of functions.
    ctx.reduced = {coordinate_weight_moment("f1", {{1, -1, 0, 0, -1, 1}}, 2.0),
                   coordinate_weight_moment("f2", {{-1, 1, 1, -1, 0, 0}}, 2.0),
                   coordinate_weight_moment("f3", {{0, 0, -1, 1, 1, -1}}, 2.0)};
    // Independent frame completes the rank-2 reduced span to the full torus.
    ctx.frame_fields = {ctx.reduced[0], ctx.reduced[1],
                        coordinate_weight_moment("h3", {{1, -1, 1, -1, 1, -1}}, 3.0)};
    ctx.completion = coordinate_weight_moment("f4", {{0, 0, 0, 0, 1, 1}});
    ctx.commuting_pairs = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};

    ctx.psi.components = {P({1, 1, 0, 0, 0, 0}), P({0, 0, 1, 1, 0, 0}), P({0, 0, 0, 0, 1, 1})};
    ctx.psi.base_constraint = std::vector<cplx>{cplx(1, 0), cplx(1, 0), cplx(t, 0)};
    ctx.psi.span = {{cplx(1, 0), cplx(-1, 0), cplx(0, 0)},
                    {cplx(0, 0), cplx(-t, 0), cplx(1, 0)}};
    ctx.psi.singular_values = {{cplx(1, 0), cplx(-1, 0), cplx(0, 0)},
                               {cplx(-t, 0), cplx(0, 0), cplx(1, 0)},
                               {cplx(0, 0), cplx(-t, 0), cplx(1, 0)}};
    ctx.psi.base_set_description = "8 planes: z0 z1 = z2 z3 = z4 z5 = 0";
    ctx.psi.name = "w = (z0 z1, z2 z3, z4 z5) on {w0 + w1 + t w2 = 0}";

    // Conic section Q cap {z0=z1, z2=z3, z4=z5}: a = s0^2 - s1^2,
    // b = i (s0^2 + s1^2), c = 2 s0 s1 / sqrt(t).
    const double rt = std::sqrt(t);
    PairPoly a = pp({1, 0, -1});
    PairPoly b = pp({I1, 0, I1});
    PairPoly c = pp({0, cplx(2.0 / rt, 0), 0});
    ctx.sigma.factor_dims = {5};
    ctx.sigma.coord_polys = {a, a, b, b, c, c};
    ctx.sigma.covering_degree_d = 4;
    ctx.sigma.involutions = {
        {cplx(-1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0), "tau1: s -> -s"},
        {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0), "tau3: s -> 1/s"},
        {cplx(0, 0), cplx(-1, 0), cplx(1, 0), cplx(0, 0), "tau2: s -> -1/s"}};
    ctx.sigma.name = "conic Q cap V";

    ctx.fiber_actions = {{{1, -1, 0, 0, 0, 0}, "a1"},
                         {{0, 0, 1, -1, 0, 0}, "a2"},
                         {{0, 0, 0, 0, 1, -1}, "a3"}};

    ctx.omega.kind = MeromorphicVolumeForm::Kind::HypersurfaceResidue;
    ctx.omega.charts = {0};
    ctx.omega.pole_monomial = P({0, 0, 1, 1, 1, 1});  // z2 z3 z4 z5
    ctx.omega.constraint_index = 0;
    ctx.omega.solved_var = 1;  // dF/dz1 = z0
    ctx.omega.name = "residue form with poles on Q cap {z2 z3 z4 z5 = 0}";

    ctx.db_pullback = compose(ctx.omega.pole_monomial, ctx.sigma.coord_polys);
    ctx.dplus_pullback = compose(P({0, 0, 0, 0, 1, 1}), ctx.sigma.coord_polys);
    // Degenerate-limit line through p1+ in Q0: [-i b : -i b : b : b : c : c];
    // z4 z5 pulls back to c^2.
    ctx.limit_line_dplus = pp({0, 0, 1});
    ctx.middle_component_pullbacks = {compose(P({0, 0, 1, 1, 0, 0}), ctx.sigma.coord_polys),
                                      compose(P({0, 0, 0, 0, 1, 1}), ctx.sigma.coord_polys)};
    ctx.middle_lambda = {-1, 1};

    ctx.meridian_dir = I1;
    ctx.center_candidates = {0.40, 0.50, 0.60, 0.35, 0.65};
    ctx.piece_radius_cap = [](cplx cc) {
        return std::min(cc.imag(), 1.0 - std::abs(cc));
    };
    ctx.chekanov_target = 0.25;
    ctx.standard_center = spec.center_index == 2   ? cplx(0, 1)
                          : spec.center_index == 3 ? cplx(1, 0)
                                                   : cplx(0, 0);
    ctx.standard_target = spec.standard_k / 4.0;
    ctx.expected_branch_count = 6;
    ctx.maslov_by_index = spec.kind == TorusKind::Standard;

    ctx.warnings = {
        "registry pencil component w2 corrected to z4 z5 (the z3 z4 variant is inconsistent "
        "with the quadric equation and with w0 + w1 + w2 = 0)",
        "registry third moment-map numerator corrected to |z4|^2 - |z5|^2 for the same reason"};
    if (spec.kind == TorusKind::Standard)
        ctx.warnings.push_back(
            "standard loop areas follow the k/8-of-total convention; the alternative 1/8, 1/4, "
            "3/4 list disagrees at k = 3 and is not used");

    ctx.expect_m = 2.0;
    ctx.expect_d = 4;
    if (spec.kind == TorusKind::Chekanov) {
        ctx.expect_periods = std::vector<double>{0.25, 0.0, 0.0, 0.0};
        ctx.expect_level = 4;
        // Winding degree along the Chekanov loop is reported, not gated.
    } else {
        ctx.expect_periods =
            std::vector<double>{mod_one(spec.standard_k / 4.0), 0.0, 0.0, 0.0};
        ctx.expect_level = spec.standard_k == 2 ? 2 : 4;
        ctx.expect_degree = 2;
        ctx.expect_verdict = spec.standard_k == 2 ? "monotone" : "non-monotone";
    }
    ctx.expect_margin = 4;
    return ctx;
}

// ---------------------------------------------------------------- flag ----

ScenarioContext make_flag(const ScenarioSpec& spec) {
    const double t = spec.t;
    if (t <= 0.0 || t > 1.0) throw InvalidInput("flag_f3: t must lie in (0, 1]");
    ScenarioContext ctx;
    ctx.spec = spec;
    ctx.M.factor_dims = {2, 2};
    ctx.M.monotonicity_k = 2;
    // Section and period bookkeeping follow the diagonal-plane convention, so
    // the form is scaled to half of the product form.
    ctx.M.area_scale = 0.5;
    ctx.M.name = "flag_f3";
    auto P = [&](std::vector<int> e, cplx c = cplx(1, 0)) {
        return MultiPoly::monomial(6, {3, 3}, c, e);
    };
    // variables: x0 x1 x2 | y0 y1 y2
    ctx.M.constraints = {P({1, 0, 0, 1, 0, 0}) + P({0, 1, 0, 0, 1, 0}) +
                         P({0, 0, 1, 0, 0, 1}, cplx(t, 0))};

    ctx.reduced = {coordinate_weight_moment("f1", {{1, 0, -1}, {-1, 0, 1}}, 2.0),
                   coordinate_weight_moment("f2", {{1, -1, 0}, {-1, 1, 0}}, 2.0)};
    ctx.frame_fields = ctx.reduced;
    ctx.completion = coordinate_weight_moment("f3", {{0, 0, 1}, {0, 0, 1}}, 2.0);
    ctx.commuting_pairs = {{0, 1}, {0, 2}, {1, 2}};
    ctx.fiber_by_flows = true;

    ctx.psi.components = {P({1, 0, 0, 1, 0, 0}), P({0, 1, 0, 0, 1, 0}), P({0, 0, 1, 0, 0, 1})};
    ctx.psi.base_constraint = std::vector<cplx>{cplx(1, 0), cplx(1, 0), cplx(t, 0)};
    ctx.psi.span = {{cplx(1, 0), cplx(-1, 0), cplx(0, 0)},
                    {cplx(0, 0), cplx(-t, 0), cplx(1, 0)}};
    ctx.psi.singular_values = {{cplx(1, 0), cplx(-1, 0), cplx(0, 0)},
                               {cplx(-t, 0), cplx(0, 0), cplx(1, 0)},
                               {cplx(0, 0), cplx(-t, 0), cplx(1, 0)}};
    ctx.psi.base_set_description = "6 lines {x_i = x_j = y_k = 0} / {x_i = y_j = y_k = 0}";
    ctx.psi.name = "w_i = x_i y_i on {w0 + w1 + t w2 = 0}";

    const double rt = std::sqrt(t);
    PairPoly a = pp({1, 0, -1});
    PairPoly b = pp({I1, 0, I1});
    PairPoly c = pp({0, cplx(2.0 / rt, 0), 0});
    ctx.sigma.factor_dims = {2, 2};
    ctx.sigma.coord_polys = {a, b, c, a, b, c};
    ctx.sigma.covering_degree_d = 4;
    ctx.sigma.involutions = {
        {cplx(-1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0), "tau1: s -> -s"},
        {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0), "tau3: s -> 1/s"},
        {cplx(0, 0), cplx(-1, 0), cplx(1, 0), cplx(0, 0), "tau2: s -> -1/s"}};
    ctx.sigma.name = "conic Delta cap U";

    ctx.fiber_actions = {{{1, 0, -1, -1, 0, 1}, "c1"}, {{1, -1, 0, -1, 1, 0}, "c2"}};

    ctx.omega.kind = MeromorphicVolumeForm::Kind::HypersurfaceResidue;
    ctx.omega.charts = {0, 0};
    ctx.omega.pole_monomial = P({1, 0, 1, 1, 0, 1});  // x0 y0 x2 y2
    ctx.omega.constraint_index = 0;
    ctx.omega.solved_var = 3;  // dF/dy0 = x0
    ctx.omega.name = "residue form with poles on U cap {x0 y0 x2 y2 = 0}";

    // Diagonal-plane bookkeeping: boundary trace x0 x2, fiber trace x2^2.
    ctx.db_pullback = a * c;
    ctx.dplus_pullback = compose(P({0, 0, 1, 0, 0, 1}), ctx.sigma.coord_polys);
    // Limit line through p1+ = [1 : i : 0] in the diagonal plane: x2 -> s1.
    ctx.limit_line_dplus = pp({0, 1});
    ctx.middle_component_pullbacks = {a, c};
    ctx.middle_lambda = {-2, 2};

    ctx.meridian_dir = I1;
    ctx.center_candidates = {0.35, 0.45, 0.55, 0.65};
    ctx.piece_radius_cap = [](cplx cc) {
        return std::min(cc.imag(), 1.0 - std::abs(cc));
    };
    ctx.chekanov_target = 0.5;
    ctx.standard_center = cplx(0, 0);
    ctx.standard_target = 0.5;
    ctx.expected_branch_count = 6;
    ctx.maslov_by_index = spec.kind == TorusKind::Standard;

    ctx.warnings = {
        "section areas use the diagonal-plane normalization (product form halved); the "
        "unscaled product form doubles every area in this scenario"};

    ctx.expect_m = 2.0;
    ctx.expect_d = 4;
    if (spec.kind == TorusKind::ChekanovSearch) {
        ctx.expect_verdict = "no-BS-can-loop";
    } else {
        ctx.expect_periods = std::vector<double>{0.5, 0.0, 0.0};
        ctx.expect_level = 2;
        ctx.expect_degree = 1;
        ctx.expect_verdict = "monotone";
    }
    ctx.expect_margin = 0;
    return ctx;
}

}  // namespace

std::string to_string(TorusKind k) {
    switch (k) {
        case TorusKind::Chekanov: return "chekanov";
        case TorusKind::Standard: return "standard";
        case TorusKind::ChekanovSearch: return "chekanov_search";
    }
    return "?";
}

std::vector<MomentMap> ScenarioContext::all_moments() const {
    std::vector<MomentMap> out = reduced;
    out.push_back(completion);
    return out;
}

ScenarioContext build_context(const ScenarioSpec& spec) {
    if (spec.id == "cp2_chekanov") return make_cp2(spec);
    if (spec.id == "p1xp1_chekanov") return make_p1xp1(spec);
    if (spec.id == "p1_power_n") return make_p1_power(spec);
    if (spec.id == "quadric4" || spec.id == "quadric4_family") return make_quadric(spec);
    if (spec.id == "flag_f3" || spec.id == "flag_family") return make_flag(spec);
    throw InvalidInput("unknown scenario id: " + spec.id);
}

std::vector<std::string> registry_ids() {
    return {"cp2_chekanov", "p1xp1_chekanov", "p1_power_n",
            "quadric4",     "flag_f3",        "quadric4_family",
            "flag_family"};
}

std::string registry_summary() {
    std::ostringstream os;
    os << "cp2_chekanov      CP^2, k=3, Chekanov torus over the conic pencil\n"
       << "p1xp1_chekanov    CP^1 x CP^1, k=2, Chekanov torus over w_i = x_i y_i\n"
       << "p1_power_n        (CP^1)^n (--n 2..6), k=2, Chekanov torus over the diagonal\n"
       << "quadric4          4-dim quadric, k=4 (--torus-kind chekanov|standard --standard-k "
          "1|2|3 --center 1|2|3, --t in (0,1])\n"
       << "flag_f3           full flag F^3, k=2 (--torus-kind chekanov_search|standard, --t)\n"
       << "quadric4_family   quadric degeneration sweep (--t-grid)\n"
       << "flag_family       flag degeneration sweep (--t-grid)\n";
    return os.str();
}

namespace {

// ---------------------------------------------------------- run helpers ---

LoopSpec search_chekanov_loop(const ScenarioContext& ctx,
                              const std::vector<BranchPoint>& branches, LoopReport& report) {
    const double target = ctx.chekanov_target;
    std::string last_err;
    for (double c : ctx.center_candidates) {
        const cplx center = c * ctx.meridian_dir;
        LoopSearchConstraints cons;
        cons.max_radius = ctx.piece_radius_cap ? ctx.piece_radius_cap(center) - 1e-3 : 0.0;
        if (cons.max_radius <= 2e-3) continue;
        try {
            LoopSpec loop = loop_with_disc_area(ctx.M, ctx.sigma, branches, center, target,
                                                ctx.spec.tol.area, cons);
            report.found = true;
            report.center = center;
            report.radius = loop.radius;
            return loop;
        } catch (const Infeasible& e) {
            last_err = e.what();
        }
    }
    throw Infeasible("no admissible Chekanov loop at target area " + std::to_string(target) +
                     (last_err.empty() ? "" : " (" + last_err + ")"));
}

LoopSpec make_standard_loop(const ScenarioContext& ctx, const std::vector<BranchPoint>& branches,
                            LoopReport& report) {
    LoopSearchConstraints cons;
    cons.max_radius = ctx.standard_radius_cap > 0 ? ctx.standard_radius_cap : 0.0;
    LoopSpec loop = loop_with_disc_area(ctx.M, ctx.sigma, branches, ctx.standard_center,
                                        ctx.standard_target, ctx.spec.tol.area, cons);
    report.found = true;
    report.center = ctx.standard_center;
    report.radius = loop.radius;
    return loop;
}

std::vector<int> default_grid(const ScenarioContext& ctx) {
    if (!ctx.spec.grid.empty()) return ctx.spec.grid;
    const int rank = static_cast<int>(ctx.fiber_actions.size()) + 1;
    std::vector<int> shape(rank, 8);
    shape[0] = rank <= 2 ? 24 : 16;
    for (int a = 1; a < rank; ++a) shape[a] = rank <= 3 ? 10 : 8;
    return shape;
}

// First-return period of the Hamiltonian circle generated by f from `probe`,
// then orientation and agreement of the flow against the claimed phase
// action. Honors the flow-based construction for the flag fibers.
struct FlowCalibration {
    double period = 0;
    int direction = 1;
    double first_return = 0;
    double agreement = 0;
};

double point_distance(const ProductPoint& a, const ProductPoint& b) {
    double worst = 0;
    const ProductPoint na = normalize(a), nb = normalize(b);
    for (std::size_t f = 0; f < na.factors.size(); ++f) {
        double cross = 0, scale = na.factors[f].norm() * nb.factors[f].norm();
        for (std::size_t i = 0; i < na.factors[f].coords.size(); ++i)
            for (std::size_t j = i + 1; j < na.factors[f].coords.size(); ++j)
                cross = std::max(cross, std::abs(na.factors[f].coords[i] * nb.factors[f].coords[j] -
                                                 na.factors[f].coords[j] * nb.factors[f].coords[i]));
        worst = std::max(worst, cross / scale);
    }
    return worst;
}

FlowCalibration calibrate_fiber_flow(const AmbientSpace& M, const MomentMap& f,
                                     const ProductPoint& probe, const PhaseAction& action,
                                     const std::vector<int>& factor_dims) {
    FlowCalibration cal;
    // Coarse march with recorded distances to the start.
    const double dt = 0.02;
    ProductPoint cur = normalize(probe);
    double best_t = 0, best_d = 1e300;
    bool left = false;
    for (int k = 1; k <= 400; ++k) {
        cur = flow_fixed_steps(M, f, cur, dt, 2);
        const double d = point_distance(cur, probe);
        if (d > 0.2) left = true;
        if (left && d < best_d) {
            best_d = d;
            best_t = k * dt;
        }
        if (left && d < 0.05 && k * dt > 0.3) break;
    }
    if (best_t == 0) throw NonConvergent("fiber flow never returned near the start");
    // Golden-section refine of t -> distance(flow_t(probe), probe).
    auto dist_at = [&](double tt) {
        const int nsteps = std::max(64, static_cast<int>(384 * tt / kTwoPi));
        return point_distance(flow_fixed_steps(M, f, probe, tt, nsteps), probe);
    };
    double lo = best_t - 2 * dt, hi = best_t + 2 * dt;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = dist_at(x1), f2 = dist_at(x2);
    for (int it = 0; it < 32 && hi - lo > 1e-9; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = dist_at(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = dist_at(x2);
        }
    }
    cal.period = 0.5 * (lo + hi);
    // Newton touch-up against the accurate flow: project the return offset
    // onto the flow direction at the probe.
    const TangentVector vel = hamiltonian_field(M, f, probe);
    const std::vector<cplx> t_probe = chart_coords(normalize(probe), vel.charts);
    for (int it = 0; it < 4; ++it) {
        const ProductPoint back = flow(M, f, probe, cal.period, 512);
        cal.first_return = point_distance(back, probe);
        if (cal.first_return < 1e-7) break;
        const std::vector<cplx> t_back = chart_coords(normalize(back), vel.charts);
        double num = 0, den = 0;
        for (std::size_t i = 0; i < t_probe.size(); ++i) {
            const cplx delta = t_back[i] - t_probe[i];
            num += delta.real() * vel.comps[i].real() + delta.imag() * vel.comps[i].imag();
            den += std::norm(vel.comps[i]);
        }
        if (den < 1e-300) break;
        cal.period -= num / den;
    }
    if (cal.first_return > 1e-6)
        throw NonConvergent("fiber flow first-return distance " +
                            std::to_string(cal.first_return));
    // Orientation: compare quarter-period flow against the two phase senses.
    const ProductPoint quarter = flow_fixed_steps(M, f, probe, cal.period / 4, 128);
    const ProductPoint plus = apply_phases(probe, {action}, {0.25});
    const ProductPoint minus = apply_phases(probe, {action}, {-0.25});
    cal.direction = point_distance(quarter, plus) <= point_distance(quarter, minus) ? 1 : -1;
    const ProductPoint ref = cal.direction == 1 ? plus : minus;
    cal.agreement = point_distance(quarter, ref);
    (void)factor_dims;
    return cal;
}

}  // namespace

CertificationReport run_scenario(const ScenarioSpec& spec) {
    ScenarioContext ctx = build_context(spec);
    CertificationReport rep;
    rep.scenario = spec.id;
    rep.torus_kind = to_string(spec.kind);
    rep.n = spec.n;
    rep.t = spec.t;
    rep.standard_k = spec.standard_k;
    rep.center_index = spec.center_index;
    rep.k = ctx.M.monotonicity_k;
    rep.warnings = ctx.warnings;

    const auto t_start = Clock::now();
    auto stamp = [&](const char* key, Clock::time_point& mark) {
        rep.timings_ms[key] = ms_since(mark);
        mark = Clock::now();
    };
    Clock::time_point mark = Clock::now();

    // Section sanity and measured invariants.
    rep.section_residual = section_residuals(ctx.sigma, ctx.reduced);
    rep.section_area_m = section_area(ctx.M, ctx.sigma, spec.tol.area / 4);
    stamp("section", mark);

    {
        // Regular base point for the covering count.
        std::vector<cplx> q(ctx.psi.span[0].size());
        const cplx mu(0.37, 0.18);
        for (std::size_t i = 0; i < q.size(); ++i)
            q[i] = ctx.psi.span[0][i] + mu * ctx.psi.span[1][i];
        rep.covering_degree_d = covering_degree(ctx.M, ctx.sigma, ctx.psi, q);
    }
    rep.branches = branch_points(ctx.sigma, ctx.psi);
    stamp("covering", mark);

    // Pieces for the ramified scenarios (quadrants of the parameter sphere).
    if (ctx.expected_branch_count == 6) {
        auto quadrant = [&](bool inner, bool upper) {
            return ParametrizedChain::disc([sig = ctx.sigma, inner, upper](double u, double v) {
                const double ang = upper ? kPi * v : -kPi * v;
                const cplx z = std::polar(u, ang);
                return inner ? sig.eval_pair(cplx(1, 0), z) : sig.eval_pair(z, cplx(1, 0));
            });
        };
        for (int i = 0; i < 4; ++i)
            rep.piece_areas.push_back(std::abs(
                chain_area(ctx.M, quadrant(i < 2, i % 2 == 0), spec.tol.area / 4)));
        stamp("pieces", mark);
    }

    // Middle-case table from the registry relation.
    {
        std::vector<long long> rho;
        for (const PairPoly& q : ctx.middle_component_pullbacks)
            rho.push_back(intersection_index(q));
        MiddleCaseResult mc = middle_case_check(ctx.middle_lambda, rho);
        rep.middle.sum_rho = mc.sum_rho;
        rep.middle.sum_positive = mc.sum_positive;
        rep.middle.margin = mc.margin;
        rep.middle.middle = mc.middle;
        rep.index_db = intersection_index(ctx.db_pullback);
        rep.index_dplus = intersection_index(ctx.dplus_pullback);
        rep.middle.km = rep.index_db;
        rep.middle.d = rep.index_dplus;
    }
    stamp("indices", mark);

    // Loop construction.
    LoopSpec loop;
    bool have_loop = true;
    try {
        if (spec.kind == TorusKind::Standard)
            loop = make_standard_loop(ctx, rep.branches, rep.loop);
        else
            loop = search_chekanov_loop(ctx, rep.branches, rep.loop);
    } catch (const Infeasible& e) {
        have_loop = false;
        rep.loop.found = false;
        rep.loop.note = e.what();
    }
    if (have_loop) {
        rep.loop.disc_area = chain_area(ctx.M, disc_chain(ctx.sigma, loop), spec.tol.area / 4);
        DeckDisjointResult deck = deck_orbit_disjoint(loop, ctx.sigma, 1e-3);
        rep.loop.deck_disjoint = deck.disjoint;
        rep.loop.deck_min_distance = deck.min_distance;
        rep.loop.orientation = loop.orientation;
    }
    stamp("loop", mark);

    if (!have_loop) {
        rep.verdict = "no-BS-can-loop";
        if (spec.kind != TorusKind::ChekanovSearch) rep.verdict = "loop-infeasible";
    } else {
        // Fiber circle calibration (flow-built scenarios detect the circle
        // periods and orientations from the Hamiltonian flows).
        std::vector<PhaseAction> actions = ctx.fiber_actions;
        if (ctx.fiber_by_flows) {
            const ProductPoint probe = ctx.sigma.eval(loop.point(0.13));
            double agreement = 0;
            for (std::size_t a = 0; a < actions.size(); ++a) {
                FlowCalibration cal = calibrate_fiber_flow(ctx.M, ctx.reduced[a], probe,
                                                           actions[a], ctx.M.factor_dims);
                if (cal.direction < 0)
                    for (int& w : actions[a].weights) w = -w;
                agreement = std::max(agreement, cal.agreement);
                rep.fiber_flow_periods[actions[a].name] = cal.period;
            }
            if (agreement > 1e-6)
                rep.warnings.push_back("fiber flow vs phase action deviation " +
                                       std::to_string(agreement));
        }
        stamp("calibration", mark);

        TorusSample T =
            build_torus_from_phases(ctx.M, ctx.sigma, loop, actions, default_grid(ctx));
        T.scenario = spec.id;
        rep.lagrangian_residual = lagrangian_residual(ctx.M, T);
        rep.moment_constancy_residual = moment_constancy(T, ctx.reduced);
        rep.manifold_residual = max_manifold_residual(ctx.M, T);
        rep.pencil_image_resid = pencil_image_residual(ctx.psi, ctx.sigma, T);
        stamp("torus", mark);

        // Basis loops and periods: the section loop plus the fiber circles.
        std::vector<BasisLoop> loops;
        {
            BasisLoop bl;
            bl.name = "section_loop";
            bl.loop = [sig = ctx.sigma, loop](double tt) { return sig.eval(loop.point(tt)); };
            bl.chain = disc_chain(ctx.sigma, loop);
            loops.push_back(std::move(bl));
        }
        const ProductPoint p0 = ctx.sigma.eval(loop.point(0.0));
        for (const PhaseAction& a : actions) {
            BasisLoop bl;
            bl.name = a.name;
            bl.loop = [p0, a](double tt) { return apply_phases(p0, {a}, {tt}); };
            bl.chain = weighted_orbit_chain(p0, a, ctx.M.factor_dims);
            loops.push_back(std::move(bl));
        }
        rep.periods = period_vector(ctx.M, loops, spec.tol.area);
        rep.bs = bs_level(rep.periods, spec.k_max, spec.tol.bs);
        rep.bs_can = is_bs_at(rep.periods, ctx.M.monotonicity_k, spec.tol.bs);
        stamp("periods", mark);

        // Maslov certificate.
        rep.maslov.expected = ctx.M.monotonicity_k * rep.loop.disc_area;
        if (!rep.bs_can) {
            rep.maslov.verdict = "not-BS-can";
        } else if (ctx.maslov_by_index) {
            rep.maslov.method = MaslovMethod::DegenerateIndex;
            rep.maslov.degree = intersection_index(*ctx.limit_line_dplus);
            rep.maslov.winding_residual = 0;
        } else {
            rep.maslov.method = MaslovMethod::WindingFrame;
            auto frame_fn = [&](double tt) {
                const ProductPoint p = ctx.sigma.eval(loop.point(tt));
                std::vector<TangentVector> frame;
                for (const MomentMap& f : ctx.frame_fields)
                    frame.push_back(hamiltonian_field(ctx.M, f, p));
                TangentVector xn = hamiltonian_field(ctx.M, ctx.completion, p);
                TangentVector ixn = apply_complex_structure(ctx.M, xn);
                const double th = kTwoPi * tt;
                TangentVector nu = xn;
                for (std::size_t i = 0; i < nu.comps.size(); ++i)
                    nu.comps[i] = std::cos(th) * xn.comps[i] + std::sin(th) * ixn.comps[i];
                frame.push_back(std::move(nu));
                return frame;
            };
            auto section_loop = [&](double tt) { return ctx.sigma.eval(loop.point(tt)); };
            WindingResult w = maslov_degree(ctx.M, ctx.omega, section_loop, frame_fn);
            rep.maslov.degree = w.degree;
            rep.maslov.winding_residual = w.residual;
        }
        if (rep.maslov.verdict.empty()) {
            const double expect_round = std::round(rep.maslov.expected);
            const bool integral = std::abs(rep.maslov.expected - expect_round) < 0.01;
            rep.maslov.verdict =
                (integral && rep.maslov.degree == static_cast<int>(expect_round))
                    ? "monotone"
                    : "non-monotone";
        }
        rep.verdict = rep.maslov.verdict;
        stamp("maslov", mark);
    }

    // Residual suites (kept light inside a run; the acceptance suite uses
    // larger sample counts).
    {
        double worst = 0;
        auto rng = make_rng(0xB5EDULL);
        const auto moments = ctx.all_moments();
        for (auto [i, j] : ctx.commuting_pairs) {
            for (int s = 0; s < std::max(4, spec.sample_count / 4); ++s) {
                const ProductPoint p = random_manifold_point(ctx.M, rng);
                worst = std::max(worst,
                                 std::abs(poisson_bracket(ctx.M, moments[i], moments[j], p)));
            }
        }
        rep.poisson_residual = worst;
        double inv = 0;
        for (const MomentMap& f : ctx.reduced)
            inv = std::max(inv, check_invariance(ctx.M, ctx.psi, f, 6).max_residual);
        rep.invariance_residual = inv;
    }
    stamp("residuals", mark);
    rep.timings_ms["total"] = ms_since(t_start);

    // Expectation comparison (exit-code contract).
    auto fail = [&](const std::string& what) {
        rep.as_expected = false;
        rep.expectation_failures.push_back(what);
    };
    if (ctx.expect_m && std::abs(rep.section_area_m - *ctx.expect_m) > 1e-5)
        fail("section area m");
    if (ctx.expect_d && rep.covering_degree_d != *ctx.expect_d) fail("covering degree d");
    if (static_cast<int>(rep.branches.size()) != ctx.expected_branch_count)
        fail("branch point count");
    if (ctx.expect_periods) {
        if (rep.periods.values.size() != ctx.expect_periods->size()) {
            fail("period count");
        } else {
            for (std::size_t i = 0; i < ctx.expect_periods->size(); ++i) {
                double delta = dist_to_integer(rep.periods.values[i] - (*ctx.expect_periods)[i]);
                if (delta > 1e-4) fail("period " + std::to_string(i));
            }
        }
    }
    if (ctx.expect_level && (!rep.bs.bounded || rep.bs.level != *ctx.expect_level))
        fail("BS level");
    if (ctx.expect_degree && rep.maslov.degree != *ctx.expect_degree) fail("Maslov degree");
    if (ctx.expect_verdict && rep.verdict != *ctx.expect_verdict) fail("verdict");
    if (ctx.expect_margin && rep.middle.margin != *ctx.expect_margin) fail("middle-case margin");
    if (spec.kind != TorusKind::Standard && rep.loop.found && !rep.loop.deck_disjoint)
        fail("deck orbit disjointness");
    return rep;
}

FamilyReport run_family(const ScenarioSpec& spec) {
    FamilyReport fam;
    std::vector<double> grid = spec.t_grid;
    if (grid.empty()) grid = {0.1, 0.25, 0.5, 1.0};
    for (double t : grid) {
        if (t < 0.05 || t > 1.0)
            throw InvalidInput("family t values must lie in [0.05, 1]");
        ScenarioSpec one = spec;
        one.t = t;
        one.t_grid.clear();
        if (one.id == "quadric4_family") one.id = "quadric4";
        if (one.id == "flag_family") one.id = "flag_f3";
        fam.runs.push_back(run_scenario(one));
    }
    for (std::size_t i = 1; i < fam.runs.size(); ++i) {
        if (fam.runs[i].maslov.degree != fam.runs[0].maslov.degree) fam.degree_stable = false;
        if (fam.runs[i].bs.level != fam.runs[0].bs.level) fam.level_stable = false;
        if (fam.runs[i].periods.values.size() != fam.runs[0].periods.values.size()) {
            fam.periods_stable = false;
            continue;
        }
        for (std::size_t p = 0; p < fam.runs[i].periods.values.size(); ++p) {
            double drift = dist_to_integer(fam.runs[i].periods.values[p] -
                                           fam.runs[0].periods.values[p]);
            fam.max_period_drift = std::max(fam.max_period_drift, drift);
            if (drift > 1e-4) fam.periods_stable = false;
        }
    }
    fam.as_expected = fam.degree_stable && fam.level_stable && fam.periods_stable;
    for (const auto& r : fam.runs) fam.as_expected = fam.as_expected && r.as_expected;
    return fam;
}

}  // namespace ptoric

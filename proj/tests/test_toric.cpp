#include <doctest.h>

#include "oracles.hpp"
#include "ptoric/relations.hpp"
#include "ptoric/scenario.hpp"

using namespace ptoric;

namespace {

ScenarioContext ctx_of(const std::string& id, int n = 3) {
    ScenarioSpec spec;
    spec.id = id;
    spec.n = n;
    if (id == "flag_f3") spec.kind = TorusKind::Standard;
    return build_context(spec);
}

}  // namespace

TEST_CASE("split_relation: worked examples and degree balance") {
    {
        ScenarioContext ctx = ctx_of("cp2_chekanov");
        ToricRelation r{{1, 1, -2}};
        auto [plus, minus] = split_relation(r, *ctx.divisors);
        CHECK(plus.multidegree() == std::vector<int>{2});
        CHECK(minus.multidegree() == std::vector<int>{2});
        // D+ = z0 z1, D- = z2^2: compare against the pencil components.
        std::vector<cplx> z{cplx(2, 1), cplx(-0.5, 0.3), cplx(0.7, -0.2)};
        CHECK(std::abs(plus.eval(z) - z[0] * z[1]) < 1e-12);
        CHECK(std::abs(minus.eval(z) - z[2] * z[2]) < 1e-12);
    }
    {
        ScenarioContext ctx = ctx_of("p1xp1_chekanov");
        ToricRelation r{{1, 1, -1, -1}};
        auto [plus, minus] = split_relation(r, *ctx.divisors);
        std::vector<cplx> z{cplx(1, 1), cplx(0.5, -2), cplx(-0.3, 0.8), cplx(1.5, 0.1)};
        // components ordered (x0, y0, x1, y1); variables (x0 x1 | y0 y1)
        CHECK(std::abs(plus.eval(z) - z[0] * z[2]) < 1e-12);
        CHECK(std::abs(minus.eval(z) - z[1] * z[3]) < 1e-12);
    }
    {
        ScenarioContext ctx = ctx_of("p1_power_n", 3);
        ToricRelation r{{1, 1, 1, -1, -1, -1}};
        auto [plus, minus] = split_relation(r, *ctx.divisors);
        CHECK(plus.multidegree() == std::vector<int>{1, 1, 1});
        CHECK(minus.multidegree() == std::vector<int>{1, 1, 1});
    }
    // Invalid relation: class sum nonzero.
    {
        ScenarioContext ctx = ctx_of("cp2_chekanov");
        ToricRelation bad{{1, 1, -1}};
        CHECK_FALSE(relation_valid(bad, *ctx.divisors));
        CHECK_THROWS_AS(split_relation(bad, *ctx.divisors), InvalidInput);
    }
}

TEST_CASE("reduced moment combinations span the registry lattice") {
    {
        ScenarioContext ctx = ctx_of("cp2_chekanov");
        ToricRelation r{{1, 1, -2}};
        auto combos = reduced_moment_combinations(r, *ctx.divisors);
        // Registry reduced map f1 = ft1 - ft2 corresponds to (1, -1).
        CHECK(combos.size() == 1);
        CHECK(same_integer_span(combos, {{1, -1}}));
    }
    {
        ScenarioContext ctx = ctx_of("p1_power_n", 4);
        ToricRelation r{{1, 1, 1, 1, -1, -1, -1, -1}};
        auto combos = reduced_moment_combinations(r, *ctx.divisors);
        CHECK(combos.size() == 3);
        CHECK(same_integer_span(combos, {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}}));
    }
}

TEST_CASE("derived reduced maps commute and preserve the pencil") {
    ScenarioContext ctx = ctx_of("p1_power_n", 3);
    ToricRelation r{{1, 1, 1, -1, -1, -1}};
    auto combos = reduced_moment_combinations(r, *ctx.divisors);
    std::vector<MomentMap> derived;
    for (const auto& combo : combos) {
        MomentMap m;
        m.name = "derived";
        m.value_bound = 8;
        auto full = ctx.full_toric;
        auto cv = combo;
        m.f = [full, cv](const ProductPoint& p) {
            double acc = 0;
            for (std::size_t i = 0; i < cv.size(); ++i) acc += cv[i] * full[i](p);
            return acc;
        };
        derived.push_back(std::move(m));
    }
    auto rng = make_rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        ProductPoint p = random_manifold_point(ctx.M, rng);
        for (std::size_t i = 0; i < derived.size(); ++i)
            for (std::size_t j = i + 1; j < derived.size(); ++j)
                CHECK(std::abs(poisson_bracket(ctx.M, derived[i], derived[j], p)) < 1e-6);
    }
    for (const MomentMap& f : derived)
        CHECK(check_invariance(ctx.M, ctx.psi, f, 6).max_residual < 1e-6);
}

TEST_CASE("base set is the common zero locus of the split pair") {
    ScenarioContext ctx = ctx_of("cp2_chekanov");
    ToricRelation r{{1, 1, -2}};
    auto [plus, minus] = split_relation(r, *ctx.divisors);
    // The registry base points kill both sides...
    for (auto coords : {std::vector<cplx>{cplx(0, 0), cplx(1, 0), cplx(0, 0)},
                        std::vector<cplx>{cplx(1, 0), cplx(0, 0), cplx(0, 0)}}) {
        CHECK(std::abs(plus.eval(coords)) < 1e-14);
        CHECK(std::abs(minus.eval(coords)) < 1e-14);
    }
    // ...and random manifold points kill neither.
    auto rng = make_rng(73);
    for (int i = 0; i < 100; ++i) {
        ProductPoint p = random_manifold_point(ctx.M, rng);
        auto z = normalize(p).flat();
        CHECK((std::abs(plus.eval(z)) > 1e-12 || std::abs(minus.eval(z)) > 1e-12));
    }
}

TEST_CASE("screen_relations marks every scenario as the conclusions require") {
    {
        ScenarioContext ctx = ctx_of("cp2_chekanov");
        std::vector<ToricRelation> rels = {{{1, 1, -2}}, {{3, 0, -3}}, {{2, -1, -1}}};
        auto rows = screen_relations(*ctx.divisors, rels, ctx.sigma.coord_polys);
        CHECK(rows[0].middle);          // the pencil relation
        CHECK(rows[0].sum_rho == 3);
        CHECK(rows[0].sum_positive == 2);
        CHECK_FALSE(rows[1].middle);    // anticanonical-cube style: margin 0
        CHECK(rows[1].sum_positive == 3);
        CHECK(rows[2].middle);
    }
    {
        ScenarioContext ctx = ctx_of("p1xp1_chekanov");
        auto rows = screen_relations(*ctx.divisors, {{ctx.middle_lambda}},
                                     ctx.sigma.coord_polys);
        CHECK(rows[0].middle);
        CHECK(rows[0].sum_rho - rows[0].sum_positive == 2);
    }
    for (int n : {2, 3, 4}) {
        ScenarioContext ctx = ctx_of("p1_power_n", n);
        auto rows = screen_relations(*ctx.divisors, {{ctx.middle_lambda}},
                                     ctx.sigma.coord_polys);
        CHECK(rows[0].middle);
        CHECK(rows[0].sum_rho - rows[0].sum_positive == n);
    }
    // Quadric and flag margins via the registry pullbacks (km vs d).
    {
        ScenarioContext ctx = ctx_of("quadric4");
        std::vector<long long> rho;
        for (const auto& q : ctx.middle_component_pullbacks)
            rho.push_back(intersection_index(q));
        auto mc = middle_case_check(ctx.middle_lambda, rho);
        CHECK(mc.middle);
        CHECK(mc.margin == 4);
    }
    {
        ScenarioContext ctx = ctx_of("flag_f3");
        std::vector<long long> rho;
        for (const auto& q : ctx.middle_component_pullbacks)
            rho.push_back(intersection_index(q));
        auto mc = middle_case_check(ctx.middle_lambda, rho);
        CHECK_FALSE(mc.middle);
        CHECK(mc.margin == 0);
    }
}

TEST_CASE("integer kernel of a row") {
    auto k = integer_kernel_of_row({2, -3});
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * 2 - k[0][1] * 3 == 0);
    CHECK((std::abs(k[0][0]) == 3 && std::abs(k[0][1]) == 2));
    auto k2 = integer_kernel_of_row({1, 1, 1});
    CHECK(k2.size() == 2);
    for (const auto& v : k2) CHECK(v[0] + v[1] + v[2] == 0);
}

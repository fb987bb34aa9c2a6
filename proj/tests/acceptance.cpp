// Acceptance suite: runs every certification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ptoric/chain.hpp"
#include "ptoric/report.hpp"
#include "ptoric/scenario.hpp"

using namespace ptoric;

namespace {

int g_failures = 0;

void line(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
bool period_matches(double got, double want, double tol) {
    return dist_to_integer(got - want) <= tol;
}

CertificationReport run(const std::string& id, TorusKind kind = TorusKind::Chekanov, int n = 3,
                        double t = 1.0, int standard_k = 2) {
    ScenarioSpec spec;
    spec.id = id;
    spec.kind = kind;
    spec.n = n;
    spec.t = t;
    spec.standard_k = standard_k;
    return run_scenario(spec);
}

struct Collected {
    std::map<std::string, CertificationReport> reports;
};

void criterion_cp2(Collected& c) {
    CertificationReport r = run("cp2_chekanov");
    c.reports["cp2_chekanov"] = r;
    bool ok = near(r.section_area_m, 1.0, 1e-6) && r.covering_degree_d == 2 &&
              r.loop.deck_disjoint && r.periods.values.size() == 2 &&
              period_matches(r.periods.values[0], 1.0 / 3.0, 1e-5) &&
              period_matches(r.periods.values[1], 0.0, 1e-5) && r.bs.bounded &&
              r.bs.level == 3 && r.maslov.degree == 1 && r.verdict == "monotone";
    char buf[160];
    std::snprintf(buf, sizeof buf, "m=%.9f d=%d periods=(%.6f, %.6f) level=%d degree=%d %s",
                  r.section_area_m, r.covering_degree_d, r.periods.values[0],
                  r.periods.values[1], r.bs.level, r.maslov.degree, r.verdict.c_str());
    line("CP^2 Chekanov: m=1, d=2, tau-disjoint, periods (1/3, 0), BS 3, degree 1, monotone",
         ok, buf);
}

void criterion_p1xp1(Collected& c) {
    CertificationReport r = run("p1xp1_chekanov");
    c.reports["p1xp1_chekanov"] = r;
    bool ok = near(r.section_area_m, 2.0, 1e-6) &&
              period_matches(r.periods.values[0], 0.5, 1e-5) &&
              period_matches(r.periods.values[1], 0.0, 1e-5) && r.bs.level == 2 &&
              r.maslov.degree == 1 && r.verdict == "monotone";
    char buf[120];
    std::snprintf(buf, sizeof buf, "m=%.9f periods=(%.6f, %.6f) level=%d degree=%d",
                  r.section_area_m, r.periods.values[0], r.periods.values[1], r.bs.level,
                  r.maslov.degree);
    line("CP^1 x CP^1 Chekanov: m=2, periods (1/2, 0), BS 2, degree 1, monotone", ok, buf);
}

void criterion_p1_power(Collected& c) {
    for (int n : {2, 3, 4}) {
        CertificationReport r = run("p1_power_n", TorusKind::Chekanov, n);
        c.reports["p1_power_" + std::to_string(n)] = r;
        bool ok = near(r.section_area_m, n, 1e-6) && r.covering_degree_d == n &&
                  r.loop.found && r.loop.deck_disjoint &&
                  near(r.loop.disc_area, 0.5, 1e-6) &&
                  period_matches(r.periods.values[0], 0.5, 1e-5) && r.bs.level == 2 &&
                  r.maslov.degree == 1 && r.verdict == "monotone";
        bool fibers_zero = true;
        for (std::size_t i = 1; i < r.periods.values.size(); ++i)
            fibers_zero = fibers_zero && period_matches(r.periods.values[i], 0.0, 1e-5);
        ok = ok && fibers_zero;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "m=%.9f d=%d disc=%.8f period0=%.6f level=%d degree=%d center=(%.3f,%.3f)",
                      r.section_area_m, r.covering_degree_d, r.loop.disc_area,
                      r.periods.values[0], r.bs.level, r.maslov.degree, r.loop.center.real(),
                      r.loop.center.imag());
        line("(CP^1)^" + std::to_string(n) +
                 ": m=n, d=n, disjoint loop of disc 1/2, period 1/2, BS 2, degree 1, monotone",
             ok, buf);
    }
}

void criterion_quadric_chekanov(Collected& c) {
    CertificationReport r = run("quadric4");
    c.reports["quadric4_chekanov"] = r;
    bool pieces_ok = r.piece_areas.size() == 4;
    for (double a : r.piece_areas) pieces_ok = pieces_ok && near(a, 0.5, 1e-5);
    bool periods_ok = r.periods.values.size() == 4 &&
                      period_matches(r.periods.values[0], 0.25, 1e-5);
    for (std::size_t i = 1; i < 4; ++i)
        periods_ok = periods_ok && period_matches(r.periods.values[i], 0.0, 1e-5);
    bool ok = near(r.section_area_m, 2.0, 1e-6) && r.covering_degree_d == 4 &&
              r.branches.size() == 6 && pieces_ok && periods_ok && r.bs.bounded &&
              r.bs.level == 4;
    char buf[160];
    std::snprintf(buf, sizeof buf, "m=%.9f d=%d branches=%zu pieces=%.6f periods0=%.6f level=%d",
                  r.section_area_m, r.covering_degree_d, r.branches.size(),
                  r.piece_areas.empty() ? 0.0 : r.piece_areas[0], r.periods.values[0],
                  r.bs.level);
    line("Quadric Chekanov: m=2, d=4, 6 branch points, pieces 1/2, periods (1/4,0,0,0), BS 4",
         ok, buf);
}

void criterion_quadric_standard(Collected& c) {
    const int want_level[4] = {0, 4, 2, 4};
    for (int k = 1; k <= 3; ++k) {
        CertificationReport r = run("quadric4", TorusKind::Standard, 3, 1.0, k);
        c.reports["quadric4_standard_" + std::to_string(k)] = r;
        const bool want_monotone = k == 2;
        bool ok = near(r.loop.disc_area, k / 4.0, 1e-5) && r.bs_can &&
                  r.bs.level == want_level[k] && r.maslov.degree == 2 &&
                  ((r.verdict == "monotone") == want_monotone);
        char buf[160];
        std::snprintf(buf, sizeof buf, "disc=%.8f BS_can=%d level=%d index=%d verdict=%s",
                      r.loop.disc_area, r.bs_can ? 1 : 0, r.bs.level, r.maslov.degree,
                      r.verdict.c_str());
        line("Quadric standard k=" + std::to_string(k) +
                 ": disc k/4, BS_can at 4, limit-line index 2, monotone iff k=2",
             ok, buf);
    }
}

void criterion_flag(Collected& c) {
    CertificationReport search = run("flag_f3", TorusKind::ChekanovSearch);
    c.reports["flag_search"] = search;
    bool ok1 = near(search.section_area_m, 2.0, 1e-6) && search.covering_degree_d == 4 &&
               !search.loop.found && search.verdict == "no-BS-can-loop" &&
               search.middle.margin == 0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "m=%.9f d=%d found=%d margin=%lld", search.section_area_m,
                  search.covering_degree_d, search.loop.found ? 1 : 0,
                  static_cast<long long>(search.middle.margin));
    line("Flag F^3: m=2, d=4, Chekanov search infeasible, middle margin 0", ok1, buf);

    CertificationReport std_run = run("flag_f3", TorusKind::Standard);
    c.reports["flag_standard"] = std_run;
    bool periods_ok = std_run.periods.values.size() == 3 &&
                      period_matches(std_run.periods.values[0], 0.5, 1e-5) &&
                      period_matches(std_run.periods.values[1], 0.0, 1e-5) &&
                      period_matches(std_run.periods.values[2], 0.0, 1e-5);
    bool ok2 = periods_ok && std_run.bs.level == 2 && std_run.verdict == "monotone";
    std::snprintf(buf, sizeof buf, "periods=(%.6f, %.6f, %.6f) level=%d verdict=%s",
                  std_run.periods.values[0], std_run.periods.values[1],
                  std_run.periods.values[2], std_run.bs.level, std_run.verdict.c_str());
    line("Flag F^3 standard torus: periods (1/2, 0, 0), BS 2, monotone", ok2, buf);
}

void criterion_middle_case(const Collected& c) {
    struct Row {
        const char* key;
        bool constructible_expected;
    };
    const Row rows[] = {{"cp2_chekanov", true},     {"p1xp1_chekanov", true},
                        {"p1_power_3", true},       {"quadric4_chekanov", true},
                        {"flag_search", false}};
    bool ok = true;
    std::string detail;
    for (const Row& row : rows) {
        const CertificationReport& r = c.reports.at(row.key);
        const long long km_expected = std::llround(r.k * r.section_area_m);
        const bool idx_ok = r.index_db == km_expected &&
                            r.index_dplus == static_cast<long long>(r.covering_degree_d);
        const bool consistent = (r.middle.middle == r.loop.found) &&
                                (r.loop.found == row.constructible_expected);
        if (!(idx_ok && consistent)) {
            ok = false;
            detail += std::string(row.key) + " ";
        }
    }
    line("Middle case: ind(D_b) = round(k m), ind(D+) = d, inequality <=> loop constructible",
         ok, detail);
}

void criterion_families() {
    ScenarioSpec qspec;
    qspec.id = "quadric4_family";
    qspec.kind = TorusKind::Standard;
    qspec.standard_k = 2;
    qspec.t_grid = {0.1, 0.25, 0.5, 1.0};
    FamilyReport qf = run_family(qspec);
    bool ok = qf.runs.size() == 4;
    for (const auto& r : qf.runs)
        ok = ok && r.maslov.degree == 2 && r.verdict == "monotone";
    line("Family stability: quadric standard_2 degree constant 2, monotone at every t", ok,
         "drift=" + std::to_string(qf.max_period_drift));

    ScenarioSpec fspec;
    fspec.id = "flag_family";
    fspec.kind = TorusKind::Standard;
    fspec.t_grid = {0.1, 0.25, 0.5, 1.0};
    FamilyReport ff = run_family(fspec);
    bool ok2 = ff.runs.size() == 4 && ff.periods_stable && ff.max_period_drift <= 1e-4;
    for (const auto& r : ff.runs)
        ok2 = ok2 && period_matches(r.periods.values[0], 0.5, 1e-4) &&
              period_matches(r.periods.values[1], 0.0, 1e-4) &&
              period_matches(r.periods.values[2], 0.0, 1e-4);
    line("Family stability: flag standard periods constant (1/2, 0, 0) within 1e-4", ok2,
         "drift=" + std::to_string(ff.max_period_drift));
}

void criterion_poisson_and_invariance() {
    bool ok = true;
    double worst = 0;
    for (const char* id : {"cp2_chekanov", "p1xp1_chekanov", "p1_power_n", "quadric4",
                           "flag_f3"}) {
        ScenarioSpec spec;
        spec.id = id;
        if (spec.id == "flag_f3") spec.kind = TorusKind::Standard;
        ScenarioContext ctx = build_context(spec);
        auto moments = ctx.all_moments();
        auto rng = make_rng(0xACCE5501ULL);
        for (auto [i, j] : ctx.commuting_pairs)
            for (int s = 0; s < 50; ++s) {
                ProductPoint p = random_manifold_point(ctx.M, rng);
                worst = std::max(worst,
                                 std::abs(poisson_bracket(ctx.M, moments[i], moments[j], p)));
            }
    }
    ok = worst < 1e-6;
    line("Poisson commutation of every declared pair < 1e-6 at 50 random points", ok,
         "worst=" + std::to_string(worst));

    double worst_inv = 0;
    for (const char* id : {"cp2_chekanov", "p1xp1_chekanov", "quadric4", "flag_f3"}) {
        ScenarioSpec spec;
        spec.id = id;
        if (spec.id == "flag_f3") spec.kind = TorusKind::Standard;
        ScenarioContext ctx = build_context(spec);
        for (const MomentMap& f : ctx.reduced)
            worst_inv =
                std::max(worst_inv, check_invariance(ctx.M, ctx.psi, f, 10).max_residual);
    }
    line("Pencil invariance residual < 1e-6 for every reduced moment map", worst_inv < 1e-6,
         "worst=" + std::to_string(worst_inv));
}

void criterion_lagrangian(const Collected& c) {
    bool ok = true;
    double worst = 0;
    for (const auto& [key, r] : c.reports) {
        if (!r.loop.found) continue;
        worst = std::max(worst, r.lagrangian_residual);
        ok = ok && r.lagrangian_residual < 1e-6;
    }
    line("Lagrangian residual of every built torus < 1e-6", ok,
         "worst=" + std::to_string(worst));
}

void criterion_quadrature() {
    AmbientSpace M;
    M.factor_dims = {1};
    auto disc = ParametrizedChain::disc([](double u, double v) {
        const cplx s = cplx(1.3, 0.4) + 2.1 * u * std::polar(1.0, kTwoPi * v);
        return ProductPoint({HomogeneousPoint({cplx(1, 0), s})});
    });
    const double exact = oracles::cap_area(1.0, cplx(1.3, 0.4), 2.1);
    bool ok = true;
    int checked = 0;
    double prev = -1;
    for (int level = 0; level <= 3; ++level) {
        const double err = std::abs(chain_area_at_level(M, disc, level) - exact);
        if (prev > 1e-10) {
            ok = ok && err <= prev / 8.0;
            ++checked;
        }
        prev = err;
        if (err < 1e-10) break;
    }
    line("Quadrature convergence factor >= 8 per refinement on smooth chains",
         ok && checked >= 1, "ratios checked=" + std::to_string(checked));
}

void criterion_bs_oracle() {
    auto rng = make_rng(0x0DDBA11ULL);
    std::uniform_int_distribution<long long> den(1, 12);
    std::uniform_int_distribution<int> len(1, 4);
    bool ok = true;
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
        BSReport rep = bs_level(periods, 30000, 1e-6);
        ok = ok && rep.bounded && rep.level == oracles::bs_level_lcm(fracs);
    }
    line("bs_level equals the exact LCM oracle on 200 random rational vectors", ok);
}

void criterion_maslov_antisymmetry() {
    struct Probe {
        std::string id;
        TorusKind kind;
        int n;
    };
    const std::vector<Probe> probes = {{"cp2_chekanov", TorusKind::Chekanov, 3},
                                       {"p1xp1_chekanov", TorusKind::Chekanov, 3},
                                       {"p1_power_n", TorusKind::Chekanov, 2},
                                       {"p1_power_n", TorusKind::Chekanov, 3},
                                       {"p1_power_n", TorusKind::Chekanov, 4},
                                       {"quadric4", TorusKind::Chekanov, 3}};
    bool ok = true;
    std::string detail;
    for (const Probe& probe : probes) {
        ScenarioSpec spec;
        spec.id = probe.id;
        spec.kind = probe.kind;
        spec.n = probe.n;
        ScenarioContext ctx = build_context(spec);
        auto branches = branch_points(ctx.sigma, ctx.psi);
        // Reconstruct the registry loop.
        LoopSpec loop;
        bool found = false;
        for (double cc : ctx.center_candidates) {
            const cplx center = cc * ctx.meridian_dir;
            LoopSearchConstraints cons;
            cons.max_radius = ctx.piece_radius_cap(center) - 1e-3;
            if (cons.max_radius <= 2e-3) continue;
            try {
                loop = loop_with_disc_area(ctx.M, ctx.sigma, branches, center,
                                           ctx.chekanov_target, 1e-6, cons);
                found = true;
                break;
            } catch (const Infeasible&) {
            }
        }
        if (!found) {
            ok = false;
            detail += probe.id + " no-loop ";
            continue;
        }
        auto frame = [&](double t) {
            const ProductPoint p = ctx.sigma.eval(loop.point(t));
            std::vector<TangentVector> fr;
            for (const MomentMap& f : ctx.frame_fields)
                fr.push_back(hamiltonian_field(ctx.M, f, p));
            TangentVector xn = hamiltonian_field(ctx.M, ctx.completion, p);
            TangentVector ixn = apply_complex_structure(ctx.M, xn);
            TangentVector nu = xn;
            const double th = kTwoPi * t;
            for (std::size_t i = 0; i < nu.comps.size(); ++i)
                nu.comps[i] = std::cos(th) * xn.comps[i] + std::sin(th) * ixn.comps[i];
            fr.push_back(std::move(nu));
            return fr;
        };
        auto at = [&](double t) { return ctx.sigma.eval(loop.point(t)); };
        auto at_rev = [&](double t) { return at(1.0 - t); };
        auto frame_rev = [&](double t) { return frame(1.0 - t); };
        WindingResult fwd = maslov_degree(ctx.M, ctx.omega, at, frame);
        WindingResult rev = maslov_degree(ctx.M, ctx.omega, at_rev, frame_rev);
        if (fwd.degree != -rev.degree || fwd.residual > 1e-3) {
            ok = false;
            detail += probe.id + " ";
        }
    }
    line("maslov_degree orientation-reversal antisymmetry on registry loops", ok, detail);
}

}  // namespace

int main() {
    std::printf("acceptance suite: pseudotoric torus certification\n");
    Collected c;
    try {
        criterion_cp2(c);
        criterion_p1xp1(c);
        criterion_p1_power(c);
        criterion_quadric_chekanov(c);
        criterion_quadric_standard(c);
        criterion_flag(c);
        criterion_middle_case(c);
        criterion_families();
        criterion_poisson_and_invariance();
        criterion_lagrangian(c);
        criterion_quadrature();
        criterion_bs_oracle();
        criterion_maslov_antisymmetry();
    } catch (const std::exception& e) {
        std::printf("[FAIL] suite aborted by exception -- %s\n", e.what());
        ++g_failures;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

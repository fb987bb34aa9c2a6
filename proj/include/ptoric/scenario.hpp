#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptoric/certify.hpp"
#include "ptoric/relations.hpp"

namespace ptoric {

enum class TorusKind { Chekanov, Standard, ChekanovSearch };

std::string to_string(TorusKind k);

struct Tolerances {
    double area = 1e-6;
    double residual = 1e-6;
    double bs = 1e-4;
    double winding = 1e-3;
};

struct ScenarioSpec {
    std::string id;  // cp2_chekanov p1xp1_chekanov p1_power_n quadric4 flag_f3
                     // quadric4_family flag_family
    int n = 3;                // factor count for p1_power_n
    double t = 1.0;           // deformation parameter (quadric/flag)
    TorusKind kind = TorusKind::Chekanov;
    int standard_k = 2;       // quadric standard loop cuts k/8 of the section
    int center_index = 1;     // branch point used as the standard-loop center
    Tolerances tol;
    int k_max = 64;
    std::vector<int> grid;        // optional grid shape override
    std::vector<double> t_grid;   // family grid
    int sample_count = 20;        // random points for residual suites
};

// Everything run_scenario needs, fully built from the registry for one
// (id, params) choice.
struct ScenarioContext {
    ScenarioSpec spec;
    AmbientSpace M;
    std::vector<MomentMap> reduced;      // the scenario's reduced maps f_1..f_{n-1}
    std::vector<MomentMap> frame_fields; // independent span used in frames
    MomentMap completion;                // f_n, tangent to the section
    std::vector<MomentMap> full_toric;   // full commuting set (toric scenarios)
    std::vector<std::pair<int, int>> commuting_pairs;  // indices into all_moments()
    PencilMap psi;
    SectionCurve sigma;
    std::vector<PhaseAction> fiber_actions;
    MeromorphicVolumeForm omega;
    bool fiber_by_flows = false;  // flag scenario builds fibers from flows

    PairPoly db_pullback;
    PairPoly dplus_pullback;
    std::optional<PairPoly> limit_line_dplus;  // degenerate-limit line data
    std::vector<PairPoly> middle_component_pullbacks;
    std::vector<long long> middle_lambda;
    std::optional<DivisorSet> divisors;        // toric scenarios
    std::vector<ToricRelation> screen_extra;   // additional relations to screen

    // Chekanov loop search along a piece-bisector meridian.
    cplx meridian_dir{0, 1};
    std::vector<double> center_candidates;
    std::function<double(cplx)> piece_radius_cap;  // 0 = unbounded
    double chekanov_target = 0;   // 1/k
    cplx standard_center{0, 0};
    double standard_target = 0;   // disc area of the standard loop
    double standard_radius_cap = 0;

    int expected_branch_count = 2;
    bool maslov_by_index = false;  // standard certificates use the exact index

    std::vector<MomentMap> all_moments() const;

    // Declared expectations (drive the exit-code contract).
    std::optional<double> expect_m;
    std::optional<int> expect_d;
    std::optional<std::vector<double>> expect_periods;
    std::optional<int> expect_level;
    std::optional<int> expect_degree;
    std::optional<std::string> expect_verdict;
    std::optional<long long> expect_margin;
    std::vector<std::string> warnings;
};

ScenarioContext build_context(const ScenarioSpec& spec);

std::vector<std::string> registry_ids();
std::string registry_summary();

struct LoopReport {
    bool found = false;
    cplx center{0, 0};
    double radius = 0;
    int orientation = 1;
    double disc_area = 0;
    double deck_min_distance = 0;
    bool deck_disjoint = false;
    std::string note;
};

struct MiddleCaseReport {
    long long km = 0;
    long long d = 0;
    long long sum_rho = 0;
    long long sum_positive = 0;
    long long margin = 0;
    bool middle = false;
};

struct CertificationReport {
    std::string scenario;
    std::string torus_kind;
    int n = 0;
    double t = 1.0;
    int standard_k = 0;
    int center_index = 0;
    int k = 0;
    double section_area_m = 0;
    int covering_degree_d = 0;
    std::vector<BranchPoint> branches;
    std::vector<double> piece_areas;
    LoopReport loop;
    PeriodVector periods;
    BSReport bs;
    bool bs_can = false;
    MaslovReport maslov;
    std::string verdict;
    double lagrangian_residual = 0;
    double poisson_residual = 0;
    double invariance_residual = 0;
    double section_residual = 0;
    double moment_constancy_residual = 0;
    double manifold_residual = 0;
    double pencil_image_resid = 0;
    long long index_db = 0;
    long long index_dplus = 0;
    MiddleCaseReport middle;
    std::vector<std::string> warnings;
    std::map<std::string, double> fiber_flow_periods;  // flow-built scenarios
    bool as_expected = true;
    std::vector<std::string> expectation_failures;
    std::map<std::string, double> timings_ms;
};

CertificationReport run_scenario(const ScenarioSpec& spec);

struct FamilyReport {
    std::vector<CertificationReport> runs;
    bool degree_stable = true;
    bool level_stable = true;
    bool periods_stable = true;
    double max_period_drift = 0;
    bool as_expected = true;
};

FamilyReport run_family(const ScenarioSpec& spec);

}  // namespace ptoric

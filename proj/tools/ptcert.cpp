// Command-line front end: certify the registry scenarios and emit reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "ptoric/report.hpp"
#include "ptoric/scenario.hpp"

namespace {

using ptoric::ScenarioSpec;
using ptoric::TorusKind;

// Accepts "chekanov", "chekanov_search", "standard" and the short forms
// "standard_1".."standard_3" which also set the loop index.
TorusKind parse_kind(const std::string& s, int* standard_k) {
    if (s == "chekanov") return TorusKind::Chekanov;
    if (s == "standard") return TorusKind::Standard;
    if (s == "chekanov_search") return TorusKind::ChekanovSearch;
    if (s.rfind("standard_", 0) == 0 && s.size() == 10 && s[9] >= '1' && s[9] <= '3') {
        if (standard_k) *standard_k = s[9] - '0';
        return TorusKind::Standard;
    }
    throw ptoric::InvalidInput("unknown torus kind: " + s);
}

// Scenario-dependent defaults: the flag's Chekanov side is a search that is
// expected to fail; the quadric defaults to the Chekanov torus.
void apply_kind_defaults(ScenarioSpec& spec, bool kind_given) {
    if (kind_given) return;
    if (spec.id == "flag_f3") spec.kind = TorusKind::ChekanovSearch;
    if (spec.id == "flag_family") spec.kind = TorusKind::Standard;
    if (spec.id == "quadric4_family") spec.kind = TorusKind::Standard;
}

void load_config(ScenarioSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ptoric::InvalidInput("cannot read config " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("scenario")) spec.id = j["scenario"].get<std::string>();
    if (j.contains("params")) {
        const auto& p = j["params"];
        if (p.contains("n")) spec.n = p["n"].get<int>();
        if (p.contains("t")) spec.t = p["t"].get<double>();
        if (p.contains("torus_kind"))
            spec.kind = parse_kind(p["torus_kind"].get<std::string>(), &spec.standard_k);
        if (p.contains("standard_k")) spec.standard_k = p["standard_k"].get<int>();
        if (p.contains("center_index")) spec.center_index = p["center_index"].get<int>();
        if (p.contains("t_grid")) spec.t_grid = p["t_grid"].get<std::vector<double>>();
    }
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (t.contains("area")) spec.tol.area = t["area"].get<double>();
        if (t.contains("residual")) spec.tol.residual = t["residual"].get<double>();
        if (t.contains("bs")) spec.tol.bs = t["bs"].get<double>();
        if (t.contains("winding")) spec.tol.winding = t["winding"].get<double>();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudotoric Lagrangian torus certification"};
    app.require_subcommand(1);

    ScenarioSpec spec;
    std::string kind_str, report_path, figure_path, format = "json", config_path, tgrid_str;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", spec.id, "scenario id (see `list`)");
        cmd->add_option("--n", spec.n, "factor count for p1_power_n");
        cmd->add_option("--t", spec.t, "deformation parameter in (0,1]");
        cmd->add_option("--torus-kind", kind_str, "chekanov | standard | chekanov_search");
        cmd->add_option("--standard-k", spec.standard_k, "standard loop index 1|2|3");
        cmd->add_option("--center", spec.center_index, "branch center index 1|2|3");
        cmd->add_option("--tol", spec.tol.area, "area tolerance");
        cmd->add_option("--samples", spec.sample_count, "sample count for residual suites");
        cmd->add_option("--report", report_path, "report output path");
        cmd->add_option("--format", format, "json | text | csv");
        cmd->add_option("--figure", figure_path, "SVG figure output path");
        cmd->add_option("--config", config_path, "JSON config file");
    };

    CLI::App* run = app.add_subcommand("run", "run one scenario certification");
    add_common(run);
    CLI::App* list = app.add_subcommand("list", "print the scenario registry");
    CLI::App* family = app.add_subcommand("family", "sweep the deformation family");
    add_common(family);
    family->add_option("--t-grid", tgrid_str, "comma separated t values");
    CLI::App* screen = app.add_subcommand("screen", "print the middle-case table");
    add_common(screen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) load_config(spec, config_path);
        if (!kind_str.empty()) spec.kind = parse_kind(kind_str, &spec.standard_k);
        apply_kind_defaults(spec, !kind_str.empty() || !config_path.empty());

        if (list->parsed()) {
            std::cout << ptoric::registry_summary();
            return 0;
        }
        if (spec.id.empty()) {
            std::cerr << "error: --scenario is required\n";
            return 2;
        }

        if (run->parsed()) {
            ptoric::CertificationReport rep = ptoric::run_scenario(spec);
            if (!report_path.empty()) ptoric::emit_report(rep, format, report_path);
            if (!figure_path.empty()) ptoric::emit_figure(rep, figure_path);
            if (report_path.empty()) {
                if (format == "json")
                    std::cout << ptoric::report_to_json(rep);
                else if (format == "csv")
                    std::cout << ptoric::report_to_csv(rep);
                else
                    std::cout << ptoric::report_to_text(rep);
            }
            return rep.as_expected ? 0 : 1;
        }
        if (family->parsed()) {
            if (!tgrid_str.empty()) {
                spec.t_grid.clear();
                std::stringstream ss(tgrid_str);
                std::string tok;
                while (std::getline(ss, tok, ',')) spec.t_grid.push_back(std::stod(tok));
            }
            if (spec.id == "quadric4") spec.id = "quadric4_family";
            if (spec.id == "flag_f3") spec.id = "flag_family";
            apply_kind_defaults(spec, !kind_str.empty());
            ptoric::FamilyReport fam = ptoric::run_family(spec);
            if (!report_path.empty()) {
                if (format == "csv")
                    ptoric::write_file_atomic(report_path, ptoric::family_to_csv(fam));
                else
                    ptoric::write_file_atomic(report_path, ptoric::family_to_json(fam));
            } else {
                std::cout << (format == "csv" ? ptoric::family_to_csv(fam)
                                              : ptoric::family_to_json(fam));
            }
            return fam.as_expected ? 0 : 1;
        }
        if (screen->parsed()) {
            ptoric::ScenarioContext ctx = ptoric::build_context(spec);
            std::vector<long long> rho;
            for (const auto& q : ctx.middle_component_pullbacks)
                rho.push_back(ptoric::intersection_index(q));
            auto mc = ptoric::middle_case_check(ctx.middle_lambda, rho);
            std::cout << "scenario " << spec.id << "\n";
            std::cout << "  lambda   ";
            for (long long l : ctx.middle_lambda) std::cout << " " << l;
            std::cout << "\n  rho      ";
            for (long long r : rho) std::cout << " " << r;
            std::cout << "\n  sum rho  " << mc.sum_rho << "\n  sum pos  " << mc.sum_positive
                      << "\n  margin   " << mc.margin << "\n  middle   "
                      << (mc.middle ? "yes" : "no") << "\n";
            if (ctx.divisors) {
                std::vector<ptoric::ToricRelation> rels = {{ctx.middle_lambda}};
                for (const auto& extra : ctx.screen_extra) rels.push_back(extra);
                auto rows = ptoric::screen_relations(*ctx.divisors, rels, ctx.sigma.coord_polys);
                for (const auto& row : rows) {
                    std::cout << "  relation (";
                    for (long long l : row.relation.lambda) std::cout << " " << l;
                    std::cout << " ): sum_rho=" << row.sum_rho
                              << " sum_pos=" << row.sum_positive
                              << (row.middle ? "  middle" : "  not middle") << "\n";
                }
            }
            return 0;
        }
    } catch (const ptoric::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

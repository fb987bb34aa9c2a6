#include "ptoric/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ptoric {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json loop_json(const LoopReport& l) {
    ordered_json j;
    j["found"] = l.found;
    j["center_re"] = l.center.real();
    j["center_im"] = l.center.imag();
    j["radius"] = l.radius;
    j["orientation"] = l.orientation;
    j["disc_area"] = l.disc_area;
    j["deck_disjoint"] = l.deck_disjoint;
    j["deck_min_distance"] = l.deck_min_distance;
    if (!l.note.empty()) j["note"] = l.note;
    return j;
}

ordered_json report_json_impl(const CertificationReport& r, bool with_timings) {
    ordered_json j;
    j["schema"] = "ptoric.certification/1";
    j["scenario"] = r.scenario;
    j["torus_kind"] = r.torus_kind;
    j["params"] = {{"n", r.n}, {"t", r.t}, {"standard_k", r.standard_k},
                   {"center_index", r.center_index}};
    j["k"] = r.k;
    j["section_area_m"] = r.section_area_m;
    j["covering_degree_d"] = r.covering_degree_d;
    ordered_json branches = ordered_json::array();
    for (const BranchPoint& b : r.branches) {
        ordered_json e;
        e["param_re"] = b.param.real() > 1e100 ? 0.0 : b.param.real();
        e["param_im"] = b.param.imag();
        e["at_infinity"] = b.param.real() > 1e100;
        ordered_json base = ordered_json::array();
        for (const cplx& w : b.base) base.push_back({{"re", w.real()}, {"im", w.imag()}});
        e["base"] = base;
        branches.push_back(e);
    }
    j["branch_points"] = branches;
    j["piece_areas"] = r.piece_areas;
    j["loop"] = loop_json(r.loop);
    j["periods"] = r.periods.values;
    {
        ordered_json frac = ordered_json::array();
        for (double v : r.periods.values) frac.push_back(format_rational(v, 64, 1e-4));
        j["period_fractions"] = frac;
        j["period_raw_areas"] = r.periods.raw_areas;
        j["period_loop_names"] = r.periods.loop_names;
        j["period_verify_delta"] = r.periods.verify_delta;
    }
    j["bs"] = {{"bounded", r.bs.bounded},
               {"level", r.bs.level},
               {"k_max", r.bs.k_max},
               {"tol", r.bs.tol}};
    j["bs_can"] = r.bs_can;
    j["maslov"] = {{"degree", r.maslov.degree},
                   {"expected", r.maslov.expected},
                   {"winding_residual", r.maslov.winding_residual},
                   {"method", r.maslov.method == MaslovMethod::WindingFrame
                                  ? "winding-frame"
                                  : "degenerate-index"}};
    j["verdict"] = r.verdict;
    j["residuals"] = {{"lagrangian", r.lagrangian_residual},
                      {"poisson", r.poisson_residual},
                      {"invariance", r.invariance_residual},
                      {"section", r.section_residual},
                      {"moment_constancy", r.moment_constancy_residual},
                      {"manifold", r.manifold_residual},
                      {"pencil_image", r.pencil_image_resid}};
    j["intersection"] = {{"db", r.index_db}, {"dplus", r.index_dplus}};
    j["middle_case"] = {{"km", r.middle.km},
                        {"d", r.middle.d},
                        {"sum_rho", r.middle.sum_rho},
                        {"sum_positive", r.middle.sum_positive},
                        {"margin", r.middle.margin},
                        {"middle", r.middle.middle}};
    j["warnings"] = r.warnings;
    if (!r.fiber_flow_periods.empty()) j["fiber_flow_periods"] = r.fiber_flow_periods;
    j["as_expected"] = r.as_expected;
    j["expectation_failures"] = r.expectation_failures;
    if (with_timings) j["timings_ms"] = r.timings_ms;
    return j;
}

}  // namespace

std::string report_to_json(const CertificationReport& rep, bool with_timings) {
    return report_json_impl(rep, with_timings).dump(2) + "\n";
}

std::string family_to_json(const FamilyReport& fam, bool with_timings) {
    ordered_json j;
    j["schema"] = "ptoric.family/1";
    ordered_json runs = ordered_json::array();
    for (const auto& r : fam.runs) runs.push_back(report_json_impl(r, with_timings));
    j["runs"] = runs;
    j["degree_stable"] = fam.degree_stable;
    j["level_stable"] = fam.level_stable;
    j["periods_stable"] = fam.periods_stable;
    j["max_period_drift"] = fam.max_period_drift;
    j["as_expected"] = fam.as_expected;
    return j.dump(2) + "\n";
}

std::string report_to_text(const CertificationReport& r) {
    std::ostringstream os;
    os << "scenario " << r.scenario << " (" << r.torus_kind << ")  t=" << r.t;
    if (r.scenario == "p1_power_n") os << "  n=" << r.n;
    if (r.torus_kind == "standard") os << "  k_loop=" << r.standard_k;
    os << "\n";
    os << "  monotonicity k        " << r.k << "\n";
    os << "  section area m        " << r.section_area_m << "\n";
    os << "  covering degree d     " << r.covering_degree_d << "\n";
    os << "  branch points         " << r.branches.size() << "\n";
    if (!r.piece_areas.empty()) {
        os << "  piece areas          ";
        for (double a : r.piece_areas) os << " " << a;
        os << "\n";
    }
    if (r.loop.found) {
        os << "  loop center/radius    (" << r.loop.center.real() << ", "
           << r.loop.center.imag() << ") / " << r.loop.radius << "\n";
        os << "  loop disc area        " << r.loop.disc_area << "\n";
        os << "  deck min distance     " << r.loop.deck_min_distance << "\n";
        os << "  periods              ";
        for (std::size_t i = 0; i < r.periods.values.size(); ++i)
            os << " " << format_rational(r.periods.values[i], 64, 1e-4);
        os << "\n";
        os << "  BS level              "
           << (r.bs.bounded ? std::to_string(r.bs.level) : std::string("unbounded"))
           << (r.bs_can ? "  (BS_can)" : "") << "\n";
        os << "  maslov degree         " << r.maslov.degree << " (expected "
           << r.maslov.expected << ", "
           << (r.maslov.method == MaslovMethod::WindingFrame ? "winding" : "index") << ")\n";
    } else {
        os << "  loop                  not found: " << r.loop.note << "\n";
    }
    os << "  verdict               " << r.verdict << "\n";
    os << "  middle case           km=" << r.middle.km << " d=" << r.middle.d
       << " margin=" << r.middle.margin << (r.middle.middle ? " (middle)" : " (not middle)")
       << "\n";
    os << "  residuals             lagr=" << r.lagrangian_residual
       << " poisson=" << r.poisson_residual << " invariance=" << r.invariance_residual
       << " section=" << r.section_residual << "\n";
    for (const std::string& w : r.warnings) os << "  warning: " << w << "\n";
    os << "  as expected           " << (r.as_expected ? "yes" : "NO") << "\n";
    for (const std::string& f : r.expectation_failures) os << "    diverged: " << f << "\n";
    return os.str();
}

static std::string csv_row(const CertificationReport& r) {
    std::ostringstream os;
    os.precision(12);
    os << r.scenario << "," << r.torus_kind << "," << r.n << "," << r.t << "," << r.standard_k
       << "," << r.k << "," << r.section_area_m << "," << r.covering_degree_d << ","
       << r.branches.size() << "," << r.loop.disc_area << ",";
    for (std::size_t i = 0; i < 4; ++i)
        os << (i < r.periods.values.size() ? std::to_string(r.periods.values[i]) : "") << ",";
    os << (r.bs.bounded ? std::to_string(r.bs.level) : "inf") << "," << r.bs_can << ","
       << r.maslov.degree << "," << r.maslov.expected << "," << r.verdict << ","
       << r.middle.margin << "," << r.lagrangian_residual << "," << r.as_expected;
    return os.str();
}

static const char* kCsvHeader =
    "scenario,torus_kind,n,t,standard_k,k,section_area_m,covering_degree_d,branch_count,"
    "loop_disc_area,period_0,period_1,period_2,period_3,bs_level,bs_can,maslov_degree,"
    "maslov_expected,verdict,middle_margin,lagrangian_residual,as_expected";

std::string report_to_csv(const CertificationReport& rep) {
    return std::string(kCsvHeader) + "\n" + csv_row(rep) + "\n";
}

std::string family_to_csv(const FamilyReport& fam) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (const auto& r : fam.runs) os << csv_row(r) << "\n";
    return os.str();
}

std::string report_figure_svg(const CertificationReport& r) {
    // Parameter-domain picture: unit circle and real axis (covering-piece
    // boundaries), branch markers, loop, deck images of the loop.
    const double S = 160;   // scale: 1 unit -> S px
    const double C = 400;   // center px
    auto X = [&](double x) { return C + S * x; };
    auto Y = [&](double y) { return C - S * y; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
          "viewBox=\"0 0 800 800\">\n";
    os << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    os << "<g class=\"piece-boundaries\" stroke=\"#888\" fill=\"none\" stroke-width=\"1\">\n";
    os << "  <line x1=\"0\" y1=\"" << C << "\" x2=\"800\" y2=\"" << C << "\"/>\n";
    if (r.branches.size() >= 6)
        os << "  <circle cx=\"" << C << "\" cy=\"" << C << "\" r=\"" << S << "\"/>\n";
    os << "</g>\n";
    // Piece regions as labels (quadrants / half planes).
    os << "<g class=\"piece-regions\" font-size=\"18\" fill=\"#666\">\n";
    if (r.branches.size() >= 6) {
        const char* names[4] = {"B1", "B2", "B3", "B4"};
        double px[4] = {0.5, -0.5, 1.8, -1.8};
        double py[4] = {0.5, -0.5, 1.2, -1.2};
        for (int i = 0; i < 4; ++i)
            os << "  <text class=\"piece\" x=\"" << X(px[i]) << "\" y=\"" << Y(py[i]) << "\">"
               << names[i] << "</text>\n";
    } else {
        os << "  <text class=\"piece\" x=\"" << X(1.6) << "\" y=\"" << Y(1.6)
           << "\">B1</text>\n";
        os << "  <text class=\"piece\" x=\"" << X(1.6) << "\" y=\"" << Y(-1.6)
           << "\">B2</text>\n";
    }
    os << "</g>\n";
    os << "<g class=\"branch-points\" fill=\"#c0392b\">\n";
    for (const BranchPoint& b : r.branches) {
        double re = b.param.real(), im = b.param.imag();
        if (std::abs(b.param) > 1e100) {  // draw the infinity marker at the frame edge
            os << "  <rect class=\"branch\" x=\"760\" y=\"20\" width=\"12\" height=\"12\"/>\n";
            continue;
        }
        os << "  <circle class=\"branch\" cx=\"" << X(re) << "\" cy=\"" << Y(im)
           << "\" r=\"5\"/>\n";
    }
    os << "</g>\n";
    if (r.loop.found) {
        os << "<g class=\"loop\" fill=\"none\">\n";
        os << "  <circle class=\"chosen-loop\" stroke=\"#2471a3\" stroke-width=\"2.5\" cx=\""
           << X(r.loop.center.real()) << "\" cy=\"" << Y(r.loop.center.imag()) << "\" r=\""
           << S * r.loop.radius << "\"/>\n";
        // Deck images under s -> -s and (six-branch case) s -> 1/s, -1/s.
        auto image_circle = [&](cplx c0, double rad) {
            os << "  <circle class=\"deck-image\" stroke=\"#76448a\" stroke-dasharray=\"6 4\" "
                  "stroke-width=\"1.5\" cx=\""
               << X(c0.real()) << "\" cy=\"" << Y(c0.imag()) << "\" r=\"" << S * rad
               << "\"/>\n";
        };
        image_circle(-r.loop.center, r.loop.radius);
        if (r.branches.size() >= 6 && std::abs(r.loop.center) > 1e-9) {
            // Circles map to circles under inversion; image of |s - c| = r.
            const cplx c0 = r.loop.center;
            const double rad = r.loop.radius;
            const double denom = std::norm(c0) - rad * rad;
            if (std::abs(denom) > 1e-12) {
                const cplx ic = std::conj(c0) / denom;
                const double ir = rad / std::abs(denom);
                image_circle(ic, ir);
                image_circle(-ic, ir);
            }
        }
        os << "</g>\n";
    }
    os << "<text x=\"20\" y=\"30\" font-size=\"20\">" << r.scenario << " (" << r.torus_kind
       << ", t=" << r.t << ")</text>\n";
    os << "</svg>\n";
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw Error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("atomic rename failed: " + path);
}

void emit_report(const CertificationReport& rep, const std::string& format,
                 const std::string& path) {
    std::string body;
    if (format == "json")
        body = report_to_json(rep);
    else if (format == "text")
        body = report_to_text(rep);
    else if (format == "csv")
        body = report_to_csv(rep);
    else
        throw InvalidInput("unknown report format: " + format);
    write_file_atomic(path, body);
}

void emit_figure(const CertificationReport& rep, const std::string& path) {
    write_file_atomic(path, report_figure_svg(rep));
}

}  // namespace ptoric

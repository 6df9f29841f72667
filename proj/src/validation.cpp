#include "gdm/validation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gdm/scenarios.hpp"

namespace gdm::validation {

namespace {

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

MeasureSpec with_bins(const MeasureSpec& measure, int bins) {
    MeasureSpec spec = measure;
    if (spec.kind == MeasureKind::gfs) spec.bins = bins;
    return spec;
}

} // namespace

std::string RequirementVerdict::verdict_label() const {
    if (framework_a_pass && framework_b_pass) return "YES";
    if (!framework_a_pass && !framework_b_pass) return "NO^{A,B}";
    return framework_a_pass ? "NO^B" : "NO^A";
}

SweepCurve sweep_reduced(const MeasureSpec& measure, int resolution) {
    if (resolution < 3 || resolution % 2 == 0)
        throw std::invalid_argument("sweep resolution must be odd and >= 3");
    const MeasureSpec spec = with_bins(measure, 10);
    spec.validate();

    SweepCurve curve;
    curve.measure = spec;
    curve.x5_hat.resize(static_cast<std::size_t>(resolution));
    curve.d_p5.resize(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double t = static_cast<double>(i) / (resolution - 1);
        const auto [p5, p4] = scenarios::reduced_arrangement({t});
        curve.x5_hat[static_cast<std::size_t>(i)] = t;
        curve.d_p5[static_cast<std::size_t>(i)] = measures::evaluate(spec, p5);
        if (i == 0) curve.d_p4 = measures::evaluate(spec, p4);
    }
    return curve;
}

RequirementTriple check_framework_a(const SweepCurve& curve, double tol) {
    if (curve.x5_hat.size() < 3 || curve.x5_hat.size() != curve.d_p5.size())
        throw std::invalid_argument("sweep curve is incomplete");
    const std::size_t mid = curve.x5_hat.size() / 2;
    if (curve.x5_hat[mid] != 0.5)
        throw std::invalid_argument("sweep grid must contain 0.5 exactly");

    const double at_mid = curve.d_p5[mid];
    const double at_0 = curve.d_p5.front();
    const double at_1 = curve.d_p5.back();
    const double lo = *std::min_element(curve.d_p5.begin(), curve.d_p5.end());
    const double hi = *std::max_element(curve.d_p5.begin(), curve.d_p5.end());

    RequirementTriple out;
    out.pass[0] = at_mid >= curve.d_p4 - tol;
    out.pass[1] = at_0 <= lo + tol || at_1 <= lo + tol;
    out.pass[2] = at_mid >= hi - tol;
    out.evidence[0] = {{"a.d_p5_at_half", at_mid}, {"a.d_p4", curve.d_p4}};
    out.evidence[1] = {{"a.d_p5_min", lo}, {"a.d_p5_at_0", at_0}, {"a.d_p5_at_1", at_1}};
    out.evidence[2] = {{"a.d_p5_max", hi}, {"a.d_p5_at_half", at_mid}};
    return out;
}

RequirementTriple check_framework_b(const CaseValueGrid& grid, double tol) {
    RequirementTriple out;
    out.pass = {true, true, true};

    for (int optima : {2, 4}) {
        const std::string tag = "b" + std::to_string(optima) + ".";
        const double c1 = grid.value(1, optima);
        const double c2 = grid.value(2, optima);
        const double c3 = grid.value(3, optima);
        const double c4 = grid.value(4, optima);
        const double c5 = grid.value(5, optima);
        const double c6 = grid.value(6, optima);
        const double c7 = grid.value(7, optima);

        // Case groups in increasing diversity order.
        const std::array<std::pair<double, double>, 5> group = {{
            {c1, c1},
            {std::min(c2, c3), std::max(c2, c3)},
            {std::min(c4, c5), std::max(c4, c5)},
            {c6, c6},
            {c7, c7},
        }};

        bool ordered = true;
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                if (group[j].first < group[i].second - tol) ordered = false;
        // Strict growth where the number of distinct individuals grows.
        const bool strict_12 = group[1].first > group[0].second + tol;
        const bool strict_34 = group[3].first > group[2].second + tol;
        if (!(ordered && strict_12 && strict_34)) out.pass[0] = false;

        const bool twin = std::abs(c2 - c3) <= tol && std::abs(c4 - c5) <= tol;
        if (!twin) out.pass[1] = false;

        const bool spread = std::min(c4, c5) > std::max(c2, c3) + tol &&
                            c6 > std::max(c4, c5) + tol;
        if (!spread) out.pass[2] = false;

        const std::array<Evidence, 7> cases = {{{tag + "case1", c1},
                                                {tag + "case2", c2},
                                                {tag + "case3", c3},
                                                {tag + "case4", c4},
                                                {tag + "case5", c5},
                                                {tag + "case6", c6},
                                                {tag + "case7", c7}}};
        for (const auto& e : cases) {
            out.evidence[0].push_back(e);
            out.evidence[2].push_back(e);
        }
        out.evidence[1].insert(out.evidence[1].end(),
                               {cases[1], cases[2], cases[3], cases[4]});
    }
    return out;
}

CaseValueGrid build_case_grid(const MeasureSpec& measure) {
    const MeasureSpec spec = with_bins(measure, 100);
    spec.validate();

    CaseValueGrid grid;
    grid.measure = spec;
    const Landscape ls = Landscape::cube(-1.0, 1.0, 2);
    for (int optima : {2, 4}) {
        const std::size_t v = static_cast<std::size_t>(CaseValueGrid::variant_index(optima));
        for (int case_id = 1; case_id <= 7; ++case_id) {
            const auto pop = scenarios::frozen_case({case_id, optima, 100, ls});
            grid.values[v][static_cast<std::size_t>(case_id - 1)] =
                measures::evaluate(spec, pop);
        }
    }
    return grid;
}

ValidationReport validation_report(const std::vector<MeasureSpec>& measures, double tol,
                                   int resolution) {
    ValidationReport report;
    report.tolerance = tol;
    report.resolution = resolution;
    for (const auto& measure : measures) {
        MeasureValidation mv;
        mv.measure = measure;
        mv.sweep = sweep_reduced(measure, resolution);
        mv.grid = build_case_grid(measure);
        const RequirementTriple a = check_framework_a(mv.sweep, tol);
        const RequirementTriple b = check_framework_b(mv.grid, tol);
        for (int r = 0; r < 3; ++r) {
            auto& verdict = mv.verdicts[static_cast<std::size_t>(r)];
            verdict.requirement = r + 1;
            verdict.framework_a_pass = a.pass[static_cast<std::size_t>(r)];
            verdict.framework_b_pass = b.pass[static_cast<std::size_t>(r)];
            verdict.evidence = a.evidence[static_cast<std::size_t>(r)];
            verdict.evidence.insert(verdict.evidence.end(),
                                    b.evidence[static_cast<std::size_t>(r)].begin(),
                                    b.evidence[static_cast<std::size_t>(r)].end());
        }
        report.measures.push_back(std::move(mv));
    }
    return report;
}

namespace {

const char* requirement_name(int requirement) {
    switch (requirement) {
        case 1: return "monotonicity in individual varieties";
        case 2: return "twinning";
        case 3: return "monotonicity in distance";
    }
    return "?";
}

} // namespace

std::string report_text(const ValidationReport& report) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-8s %-40s %-12s %-12s %-10s\n", "measure", "requirement",
                  "framework_a", "framework_b", "overall");
    out << line;
    for (const auto& mv : report.measures)
        for (const auto& v : mv.verdicts) {
            std::snprintf(line, sizeof(line), "%-8s %d %-38s %-12s %-12s %-10s\n",
                          to_string(mv.measure.kind).c_str(), v.requirement,
                          requirement_name(v.requirement), v.framework_a_pass ? "pass" : "fail",
                          v.framework_b_pass ? "pass" : "fail", v.verdict_label().c_str());
            out << line;
        }
    return out.str();
}

std::string report_json(const ValidationReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& mv : report.measures)
        for (const auto& v : mv.verdicts) {
            nlohmann::json evidence = nlohmann::json::array();
            for (const auto& e : v.evidence)
                evidence.push_back({{"label", e.label}, {"value", e.value}});
            records.push_back({{"measure", to_string(mv.measure.kind)},
                               {"requirement", v.requirement},
                               {"framework_a", v.framework_a_pass},
                               {"framework_b", v.framework_b_pass},
                               {"overall", v.verdict_label()},
                               {"evidence", std::move(evidence)}});
        }
    return records.dump(2) + "\n";
}

std::string case_grid_csv(const std::vector<CaseValueGrid>& grids) {
    std::ostringstream out;
    out << "measure,landscape,case1,case2,case3,case4,case5,case6,case7\n";
    for (const auto& grid : grids) {
        for (int optima : {2, 4}) {
            const std::size_t v = static_cast<std::size_t>(CaseValueGrid::variant_index(optima));
            out << to_string(grid.measure.kind) << ',' << optima << " optima";
            for (int c = 1; c <= 7; ++c) {
                const bool shared = (c == 1 || c == 6 || c == 7);
                out << ',';
                if (optima == 4 && shared) continue; // blank, value shown on the 2-optima row
                out << format17(grid.values[v][static_cast<std::size_t>(c - 1)]);
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string sweep_csv(const SweepCurve& curve) {
    std::ostringstream out;
    out << "x5_hat,d_p5,d_p4\n";
    for (std::size_t i = 0; i < curve.x5_hat.size(); ++i)
        out << format17(curve.x5_hat[i]) << ',' << format17(curve.d_p5[i]) << ','
            << format17(curve.d_p4) << '\n';
    return out.str();
}

} // namespace gdm::validation

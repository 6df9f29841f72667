#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "gdm/validation.hpp"
#include "golden_values.hpp"

using namespace gdm;
using namespace gdm::validation;

namespace {

double round2(double v) { return std::round(v * 100.0) / 100.0; }

} // namespace

TEST_CASE("sweep_reduced landmarks") {
    SUBCASE("dl: centroid value equals the four-corner value, both 1") {
        const auto curve = sweep_reduced({MeasureKind::dl, 0}, 201);
        REQUIRE(curve.x5_hat.size() == 201);
        CHECK(curve.x5_hat[100] == 0.5);
        CHECK(curve.d_p5[100] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(curve.d_p4 == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("dpw: maximum at the duplicate endpoints") {
        const auto curve = sweep_reduced({MeasureKind::dpw, 0}, 201);
        const double hi = *std::max_element(curve.d_p5.begin(), curve.d_p5.end());
        CHECK(hi == doctest::Approx(std::max(curve.d_p5.front(), curve.d_p5.back()))
                        .epsilon(1e-12));
        CHECK(curve.d_p5[100] < hi);
        // P5 never reaches P4
        for (double v : curve.d_p5) CHECK(v < curve.d_p4);
    }
    SUBCASE("dmst: star at the centroid, below the four-corner path") {
        const auto curve = sweep_reduced({MeasureKind::dmst, 0}, 201);
        CHECK(curve.d_p5[100] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
        CHECK(curve.d_p4 == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(curve.d_p5[100] < curve.d_p4);
        // duplicates at the ends reproduce the four-corner tree
        CHECK(curve.d_p5.front() == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(curve.d_p5.back() == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("gfs with 10 bins: maximum plateau includes the centroid") {
        const auto curve = sweep_reduced({MeasureKind::gfs, 100}, 201);
        const double hi = *std::max_element(curve.d_p5.begin(), curve.d_p5.end());
        CHECK(curve.d_p5[100] == doctest::Approx(hi).epsilon(1e-12));
        // interior plateau; ends sit lower because x5 shares a corner bin
        CHECK(curve.d_p5.front() < hi);
        CHECK(curve.d_p5.back() < hi);
    }
    SUBCASE("resolution must be odd and at least 3") {
        CHECK_THROWS_AS(sweep_reduced({MeasureKind::dl, 0}, 200), std::invalid_argument);
        CHECK_THROWS_AS(sweep_reduced({MeasureKind::dl, 0}, 1), std::invalid_argument);
    }
}

TEST_CASE("case grid matches the golden table after 2-decimal rounding") {
    for (const auto& row : golden::case_grid) {
        const auto grid = build_case_grid({row.measure, 0});
        CHECK(round2(grid.value(1, 2)) == row.c1);
        CHECK(round2(grid.value(6, 2)) == row.c6);
        CHECK(round2(grid.value(7, 2)) == row.c7);
        for (int c = 2; c <= 5; ++c) {
            CHECK(round2(grid.value(c, 2)) == row.two_optima[static_cast<std::size_t>(c - 2)]);
            CHECK(round2(grid.value(c, 4)) == row.four_optima[static_cast<std::size_t>(c - 2)]);
        }
    }
}

TEST_CASE("framework checks reproduce the verdict matrix") {
    for (const auto& row : golden::verdicts) {
        const auto curve = sweep_reduced({row.measure, 0}, 201);
        const auto a = check_framework_a(curve, 1e-9);
        const auto grid = build_case_grid({row.measure, 0});
        const auto b = check_framework_b(grid, 1e-9);
        for (int r = 0; r < 3; ++r) {
            INFO("measure ", to_string(row.measure), " requirement ", r + 1);
            CHECK(a.pass[static_cast<std::size_t>(r)] ==
                  row.frameworks[static_cast<std::size_t>(r)].first);
            CHECK(b.pass[static_cast<std::size_t>(r)] ==
                  row.frameworks[static_cast<std::size_t>(r)].second);
            CHECK(!a.evidence[static_cast<std::size_t>(r)].empty());
            CHECK(!b.evidence[static_cast<std::size_t>(r)].empty());
        }
    }
}

TEST_CASE("validation report") {
    SUBCASE("full verdict matrix with framework attributions") {
        const std::vector<MeasureSpec> specs = {{MeasureKind::dpw, 0},
                                                {MeasureKind::gfs, 100},
                                                {MeasureKind::dl, 0},
                                                {MeasureKind::dmst, 0}};
        const auto report = validation_report(specs);
        REQUIRE(report.measures.size() == 4);
        for (std::size_t m = 0; m < 4; ++m)
            for (int r = 0; r < 3; ++r) {
                const auto& verdict = report.measures[m].verdicts[static_cast<std::size_t>(r)];
                INFO("measure ", to_string(specs[m].kind), " requirement ", r + 1);
                CHECK(verdict.verdict_label() ==
                      golden::verdicts[m].labels[static_cast<std::size_t>(r)]);
                CHECK(!verdict.evidence.empty());
            }
    }
    SUBCASE("single measure keeps its row") {
        const auto report = validation_report({{MeasureKind::dl, 0}});
        REQUIRE(report.measures.size() == 1);
        const auto& verdicts = report.measures[0].verdicts;
        CHECK(verdicts[0].verdict_label() == "YES");
        CHECK(verdicts[1].verdict_label() == "YES");
        CHECK(verdicts[2].verdict_label() == "NO^B");
        CHECK(verdicts[2].framework_a_pass);
        CHECK(!verdicts[2].framework_b_pass);
    }
    SUBCASE("empty measure list gives an empty report") {
        const auto report = validation_report({});
        CHECK(report.measures.empty());
    }
    SUBCASE("deterministic") {
        const auto a = validation_report({{MeasureKind::dmst, 0}});
        const auto b = validation_report({{MeasureKind::dmst, 0}});
        CHECK(report_json(a) == report_json(b));
    }
}

TEST_CASE("verdicts are reproducible from the recorded evidence") {
    // Rebuild the case grid from the evidence values alone and re-apply the
    // framework-B rules: the verdicts must come out identical.
    for (const auto kind :
         {MeasureKind::dpw, MeasureKind::gfs, MeasureKind::dl, MeasureKind::dmst}) {
        const auto grid = build_case_grid({kind, 0});
        const auto b = check_framework_b(grid, 1e-9);

        CaseValueGrid rebuilt;
        rebuilt.measure = grid.measure;
        // requirement 1 evidence carries every case value of both variants
        const auto& ev = b.evidence[0];
        for (int optima : {2, 4})
            for (int c = 1; c <= 7; ++c) {
                const std::string label =
                    "b" + std::to_string(optima) + ".case" + std::to_string(c);
                const auto it = std::find_if(ev.begin(), ev.end(),
                                             [&](const auto& e) { return e.label == label; });
                REQUIRE(it != ev.end());
                rebuilt.values[static_cast<std::size_t>(CaseValueGrid::variant_index(optima))]
                              [static_cast<std::size_t>(c - 1)] = it->value;
            }
        const auto replayed = check_framework_b(rebuilt, 1e-9);
        CHECK(replayed.pass == b.pass);
    }
}

TEST_CASE("rendered outputs") {
    const auto report = validation_report({{MeasureKind::dl, 0}});

    SUBCASE("text table includes the overall label") {
        const auto text = report_text(report);
        CHECK(text.find("NO^B") != std::string::npos);
        CHECK(text.find("twinning") != std::string::npos);
    }
    SUBCASE("json is parseable and carries the schema fields") {
        const auto json = report_json(report);
        CHECK(json.find("\"measure\"") != std::string::npos);
        CHECK(json.find("\"framework_a\"") != std::string::npos);
        CHECK(json.find("\"overall\"") != std::string::npos);
        CHECK(json.find("\"evidence\"") != std::string::npos);
    }
    SUBCASE("case grid csv mirrors the two-variant layout") {
        const auto csv = case_grid_csv({report.measures[0].grid});
        CHECK(csv.find("measure,landscape,case1,case2,case3,case4,case5,case6,case7") == 0);
        CHECK(csv.find("dl,2 optima,") != std::string::npos);
        CHECK(csv.find("dl,4 optima,,") != std::string::npos);
    }
    SUBCASE("sweep csv has one row per grid point") {
        const auto csv = sweep_csv(report.measures[0].sweep);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 202); // header + 201 points
        CHECK(csv.rfind("x5_hat,d_p5,d_p4\n", 0) == 0);
    }
}

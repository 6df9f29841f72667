#pragma once

#include <array>
#include <string>
#include <vector>

#include "gdm/measure_spec.hpp"

namespace gdm::validation {

/// One labeled value recorded while checking a requirement; verdicts can be
/// re-derived from the evidence alone.
struct Evidence {
    std::string label;
    double value = 0.0;
};

/// Diversity of the five-individual arrangement as its free individual moves
/// along the diagonal, next to the static four-corner value.
struct SweepCurve {
    MeasureSpec measure;
    std::vector<double> x5_hat; // strictly increasing grid over [0,1], contains 0, 0.5, 1
    std::vector<double> d_p5;   // diversity of P5 at each grid point
    double d_p4 = 0.0;          // diversity of the four-corner population
};

/// Measure values over the seven frozen cases, two- and four-optima variants
/// for cases 2-5 (cases 1, 6, 7 are variant-independent and stored in both
/// rows).
struct CaseValueGrid {
    MeasureSpec measure;
    std::array<std::array<double, 7>, 2> values{}; // [variant][case-1], variant 0 = 2 optima

    static int variant_index(int optima_count) { return optima_count == 4 ? 1 : 0; }
    double value(int case_id, int optima_count) const {
        return values[static_cast<std::size_t>(variant_index(optima_count))]
                     [static_cast<std::size_t>(case_id - 1)];
    }
};

/// Pass/fail of one diversity requirement under each framework, with the
/// values the comparison looked at.
struct RequirementVerdict {
    int requirement = 0; // 1 = monotonicity in individual varieties, 2 = twinning,
                         // 3 = monotonicity in distance
    bool framework_a_pass = false; // reduced arrangement
    bool framework_b_pass = false; // frozen cases
    std::vector<Evidence> evidence;

    bool overall_pass() const { return framework_a_pass && framework_b_pass; }
    /// "YES", "NO^A", "NO^B" or "NO^{A,B}".
    std::string verdict_label() const;
};

struct MeasureValidation {
    MeasureSpec measure;
    SweepCurve sweep;
    CaseValueGrid grid;
    std::array<RequirementVerdict, 3> verdicts;
};

struct ValidationReport {
    std::vector<MeasureValidation> measures;
    double tolerance = 1e-9;
    int resolution = 201;
};

/// Result of checking the three requirements under one framework.
struct RequirementTriple {
    std::array<bool, 3> pass{};
    std::array<std::vector<Evidence>, 3> evidence;
};

/// Evaluates the measure over the reduced arrangement on an evenly spaced
/// grid of `resolution` points over [0,1] (odd, >= 3, so 0.5 is on the grid).
/// gfs uses 10 bins here.
SweepCurve sweep_reduced(const MeasureSpec& measure, int resolution);

/// Framework A (reduced arrangement) checks:
///   req1: D(P5 | 0.5) >= D(P4);
///   req2: the curve's global minimum is attained at an endpoint;
///   req3: the global maximum is attained at 0.5.
/// Ties within tol count as attained, so a plateau containing the required
/// location passes.
RequirementTriple check_framework_a(const SweepCurve& curve, double tol);

/// Framework B (frozen cases) checks, with case groups
/// {1} <= {2,3} <= {4,5} <= {6} <= {7} evaluated per optima-variant:
///   req1: no later group falls below an earlier one, and the value strictly
///         rises where the number of distinct individuals grows (1->2, 3->4);
///   req2: case 2 = case 3 and case 4 = case 5;
///   req3: cases 4/5 strictly above cases 2/3, and case 6 strictly above 4/5.
RequirementTriple check_framework_b(const CaseValueGrid& grid, double tol);

/// Evaluates the measure over all frozen cases (N = 100, landscape [-1,1]^2,
/// both optima variants for cases 2-5). gfs uses 100 bins here.
CaseValueGrid build_case_grid(const MeasureSpec& measure);

/// Runs both frameworks for every measure. A requirement's overall verdict is
/// NO if either framework fails, annotated with which one(s).
ValidationReport validation_report(const std::vector<MeasureSpec>& measures, double tol = 1e-9,
                                   int resolution = 201);

/// Aligned text table of the verdict matrix.
std::string report_text(const ValidationReport& report);

/// JSON: one record per (measure, requirement) with fields measure,
/// requirement, framework_a, framework_b, overall and evidence[].
std::string report_json(const ValidationReport& report);

/// Case-value CSV mirroring the grid layout (one pair of variant rows per
/// measure; shared cells blank on the second row).
std::string case_grid_csv(const std::vector<CaseValueGrid>& grids);

/// CSV `x5_hat,d_p5,d_p4`.
std::string sweep_csv(const SweepCurve& curve);

} // namespace gdm::validation

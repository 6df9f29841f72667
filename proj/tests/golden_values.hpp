#pragma once

#include <array>

#include "gdm/measure_spec.hpp"

// Golden frozen-case values (2-decimal) and the expected verdict matrix.
namespace golden {

struct CaseRow {
    gdm::MeasureKind measure;
    // cases 1..7; cases 2-5 carry separate 2- and 4-optima entries
    double c1, c6, c7;
    std::array<double, 4> two_optima;  // cases 2,3,4,5
    std::array<double, 4> four_optima; // cases 2,3,4,5
};

inline constexpr std::array<CaseRow, 4> case_grid = {{
    {gdm::MeasureKind::dpw, 0.00, 0.96, 1.16, {0.71, 0.60, 1.43, 1.20}, {0.86, 0.55, 1.72, 1.10}},
    {gdm::MeasureKind::gfs, 0.00, 4.61, 2.30, {0.69, 0.61, 0.69, 0.61}, {0.69, 0.50, 0.69, 0.50}},
    {gdm::MeasureKind::dl, 0.04, 0.80, 4.00, {0.08, 0.08, 0.08, 0.08}, {0.16, 0.16, 0.16, 0.16}},
    {gdm::MeasureKind::dmst, 0.00, 2.83, 22.00, {1.41, 1.41, 2.83, 2.83},
     {3.00, 3.00, 6.00, 6.00}},
}};

struct VerdictRow {
    gdm::MeasureKind measure;
    // per requirement 1..3: {framework A pass, framework B pass}
    std::array<std::pair<bool, bool>, 3> frameworks;
    std::array<const char*, 3> labels;
};

inline const std::array<VerdictRow, 4> verdicts = {{
    {gdm::MeasureKind::dpw,
     {{{false, false}, {false, false}, {false, false}}},
     {"NO^{A,B}", "NO^{A,B}", "NO^{A,B}"}},
    {gdm::MeasureKind::gfs,
     {{{true, false}, {true, false}, {true, false}}},
     {"NO^B", "NO^B", "NO^B"}},
    {gdm::MeasureKind::dl,
     {{{true, true}, {true, true}, {true, false}}},
     {"YES", "YES", "NO^B"}},
    {gdm::MeasureKind::dmst,
     {{{false, false}, {false, true}, {false, false}}},
     {"NO^{A,B}", "NO^A", "NO^{A,B}"}},
}};

} // namespace golden

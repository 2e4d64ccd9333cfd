#pragma once

#include <string>
#include <vector>

#include "cdfbounds/config.hpp"

// Grid verification: every bound family swept over its validity-filtered
// parameter grid and compared against the oracle evaluators, with normalized
// margins, sharpness diagnostics at the limit points, and a zero-violations
// pass condition. Cells run serially in a fixed order so reports are
// bit-stable.

namespace cdfbounds {

struct SharpnessCheck {
    std::string limit_point;  // e.g. "mu=1 x=1 y=1e-4"
    double deviation;         // |bound/oracle - 1|
    double tolerance;         // pass threshold for this check
};

struct SweepReport {
    std::string family;
    std::string grid_spec;
    int cells_total = 0;
    int cells_valid = 0;    // cells where at least one bound claim applied
    int cells_skipped = 0;  // oracle/bound evaluation failed (not a violation)
    int violations = 0;     // bound strictly on the wrong side beyond the noise budget
    double min_margin = 0.0;
    std::string worst_cell;
    std::vector<SharpnessCheck> sharpness_checks;

    bool pass() const;  // violations == 0 and all sharpness checks in tolerance
};

// Relative noise budget for margin violations.
inline constexpr double kMarginNoiseBudget = 1e-10;

std::vector<SweepReport> run_gamma_suite(const EvalConfig& cfg = {}, bool dense = false);
std::vector<SweepReport> run_beta_suite(const EvalConfig& cfg = {}, bool dense = false);
std::vector<SweepReport> run_kummer_suite(const EvalConfig& cfg = {}, bool dense = false);
std::vector<SweepReport> run_quantile_suite(const EvalConfig& cfg = {}, bool dense = false);

// suite in {all, gamma, beta, kummer, quantile}; unknown -> std::domain_error.
std::vector<SweepReport> run_suite(const std::string& suite, const EvalConfig& cfg = {},
                                   bool dense = false);

// One JSON object per report (single line, sorted keys, fixed float format).
std::string to_json(const SweepReport& report);

}  // namespace cdfbounds

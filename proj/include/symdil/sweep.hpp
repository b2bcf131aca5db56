// ============================================================================
// sweep.hpp -- epsilon-sweep experiment harness: evaluates the closed-form
// mixed norms of the Gaussian witness pair over a geometric eps grid, fits
// the growth exponent of the norm ratio against log(eps^2 - 1), and checks
// the fit against the classifier's predicted exponent.
//
// Witness pair (base, dilated), chosen from the reduced special form:
//   bounded verdict          base = I,        dilated = S
//   unbounded, Q' == 0       base = I,        dilated = (tail swaps)^{-1}
//   unbounded, Q' != 0, p<q  base = V_{-Q'},  dilated = (tail swaps)^{-1}
//   unbounded, Q' != 0, p>q  base = (tail swaps)^{-1},  dilated = V_{-Q'}
// The ratio dilated/base then grows (or decays) with the predicted signed
// exponent: as eps -> inf for nonnegative predictions, and diverging as
// eps -> 1+ (negative slope in log(eps^2-1)) when every phase-space axis
// carries a chirp (k = d).  The fit window is the lower half of the
// log(eps^2-1) range for negative predictions and the upper half otherwise,
// scaled by the configured window fraction.
//
// All norm values are carried in log space; the CSV repeats them as plain
// values for convenience and is byte-deterministic for a fixed config.
// ============================================================================
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdil/classifier.hpp"
#include "symdil/gaussian.hpp"
#include "symdil/json_io.hpp"

namespace symdil {

struct SweepConfig {
    Mat matrix;                        // 2d x 2d symplectic
    ExponentPair e;
    std::optional<WeightSpec> weight;  // affects the verdict only
    double eps_min = 1.1;
    double eps_max = 100.0;
    int eps_count = 33;
    double fit_window = 0.5;           // fraction of rows in the fit
    std::string csv_out;               // empty: no CSV file
    std::string report_out;            // empty: no report file
    long seed = 0;                     // recorded in the report
};

SweepConfig sweep_config_from_json(const json& j);

struct SweepRow {
    double eps = 0.0;
    NormValue norm_base;
    NormValue norm_dilated;
    double log_ratio() const {
        return norm_dilated.log_value - norm_base.log_value;
    }
};

struct SweepReport {
    std::vector<SweepRow> rows;
    double fitted_exponent = 0.0;
    double predicted_exponent = 0.0;
    Verdict verdict;
    bool agreement = false;
    int window_begin = 0;  // fitted rows: [window_begin, window_end)
    int window_end = 0;
};

SweepReport run_sweep(const SweepConfig& cfg);

std::string sweep_csv(const SweepReport& rep);
json sweep_report_json(const SweepConfig& cfg, const SweepReport& rep);
// writes csv_out/report_out when configured
void write_sweep_outputs(const SweepConfig& cfg, const SweepReport& rep);

} // namespace symdil

#ifndef NETPERTURB_SIGNALS_HPP
#define NETPERTURB_SIGNALS_HPP

#include <span>
#include <vector>

#include "signature.hpp"

namespace netperturb {

// Response categories: mostly monotone increase (A), mostly monotone
// decrease (B), everything else -- constant or oscillating (C).
enum class group_label : int { a = 0, b, c };

char group_label_char(group_label l);
group_label group_label_from_char(char c);

// Baseline subtracted before dividing by the standard deviation: the curve
// minimum (default) or the value at the first grid point.
enum class baseline_mode { curve_min, initial_value };

// A measurement-change signature: baseline-subtracted, unit-variance version
// of a raw trajectory. sigma and mu are the population standard deviation
// and mean of the raw curve (mu is exported for reference only; it does not
// enter the transform).
struct change_curve {
    measurement_id measurement = measurement_id::degree;
    std::vector<double> grid;
    std::vector<double> values;
    double sigma = 0.0;
    double mu = 0.0;
    double baseline = 0.0;
    bool degenerate = false; // constant raw curve: values all zero
};

// Pointwise mean over realizations, skipping cells without a defined value;
// throws naming the grid point if some point has no usable cell at all.
std::vector<double> mean_trajectory(const signature_matrix& sig, measurement_id m);

// Count of cells skipped by mean_trajectory (valueless cells).
int undefined_cell_count(const signature_matrix& sig, measurement_id m);

change_curve normalize_curve(measurement_id m, const std::vector<double>& grid,
                             const std::vector<double>& raw,
                             baseline_mode mode = baseline_mode::curve_min);

// Dispersion index: every realization's trajectory is standardized with the
// mean curve's (baseline, sigma), then the across-realization standard
// deviations are averaged over the grid. NaN with *degenerate set when the
// mean curve is constant.
double psi_index(const signature_matrix& sig, measurement_id m,
                 baseline_mode mode = baseline_mode::curve_min, bool* degenerate = nullptr);

double pearson(std::span<const double> x, std::span<const double> y, bool* degenerate = nullptr);
double spearman(std::span<const double> x, std::span<const double> y, bool* degenerate = nullptr);

// Pearson correlation between the change curve and the free variable;
// 0 with *degenerate set for constant curves.
double pearson_vs_freevar(const change_curve& curve, bool* degenerate = nullptr);

// Mean absolute non-standardized change from the trajectory start.
double magnitude_index(const signature_matrix& sig, measurement_id m);

struct classify_thresholds {
    double tau_mono = 0.8;     // |spearman| needed for a monotone label
    double tau_mag_rel = 1e-3; // magnitude floor as a fraction of the raw range
    double tau_mag_floor = 1e-9;
    // Dispersion gate: when the across-realization spread psi exceeds this
    // (in standardized units, where the mean curve has spread 1), the curve
    // is fluctuation-dominated and cannot earn a monotone label. Averages of
    // stationary noise wander smoothly enough to pass a rank-correlation
    // test, so the monotone checks alone cannot reject them.
    double tau_disp = 4.0;
};

struct curve_stats {
    double psi = 0.0;
    bool psi_degenerate = false;
    double pearson = 0.0;
    bool pearson_degenerate = false;
    double magnitude = 0.0;
    double spearman = 0.0;
    bool spearman_degenerate = false;
    double raw_range = 0.0; // max - min of the raw mean trajectory
};

curve_stats compute_curve_stats(const signature_matrix& sig, measurement_id m,
                                const change_curve& curve,
                                baseline_mode mode = baseline_mode::curve_min);

group_label classify_abc(const change_curve& curve, const curve_stats& stats,
                         const classify_thresholds& thresholds = {});

} // namespace netperturb

#endif

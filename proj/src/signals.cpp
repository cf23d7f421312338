#include "signals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "errors.hpp"

namespace netperturb {

namespace {

bool usable(double v) { return std::isfinite(v); }

double population_std(std::span<const double> xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(xs.size()));
}

std::vector<double> ranks_with_ties(std::span<const double> xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

char group_label_char(group_label l) {
    switch (l) {
        case group_label::a: return 'A';
        case group_label::b: return 'B';
        case group_label::c: return 'C';
    }
    return '?';
}

group_label group_label_from_char(char c) {
    switch (c) {
        case 'A': return group_label::a;
        case 'B': return group_label::b;
        case 'C': return group_label::c;
    }
    throw argument_error(std::string("unknown group label '") + c + "'");
}

std::vector<double> mean_trajectory(const signature_matrix& sig, measurement_id m) {
    if (sig.realization_count < 1) throw argument_error("mean_trajectory: no realizations");
    std::vector<double> out(sig.grid.size(), 0.0);
    for (int g = 0; g < sig.grid_size(); ++g) {
        double sum = 0.0;
        int count = 0;
        for (int q = 0; q < sig.realization_count; ++q) {
            double v = sig.value(m, g, q);
            if (usable(v)) {
                sum += v;
                ++count;
            }
        }
        if (count == 0)
            throw numeric_error(std::string("mean_trajectory: measurement '") +
                                measurement_name(m) + "' has no defined value at grid point " +
                                std::to_string(g) + " (free variable " +
                                std::to_string(sig.grid[static_cast<std::size_t>(g)]) + ")");
        out[static_cast<std::size_t>(g)] = sum / static_cast<double>(count);
    }
    return out;
}

int undefined_cell_count(const signature_matrix& sig, measurement_id m) {
    int count = 0;
    for (int g = 0; g < sig.grid_size(); ++g)
        for (int q = 0; q < sig.realization_count; ++q)
            if (!usable(sig.value(m, g, q))) ++count;
    return count;
}

change_curve normalize_curve(measurement_id m, const std::vector<double>& grid,
                             const std::vector<double>& raw, baseline_mode mode) {
    if (raw.size() < 2) throw argument_error("normalize_curve: need at least 2 points");
    if (raw.size() != grid.size())
        throw argument_error("normalize_curve: grid/value length mismatch");

    change_curve curve;
    curve.measurement = m;
    curve.grid = grid;
    curve.sigma = population_std(raw);
    curve.mu = std::accumulate(raw.begin(), raw.end(), 0.0) / static_cast<double>(raw.size());
    curve.baseline =
        mode == baseline_mode::curve_min ? *std::min_element(raw.begin(), raw.end()) : raw.front();

    curve.values.assign(raw.size(), 0.0);
    if (curve.sigma == 0.0) {
        curve.degenerate = true;
        return curve;
    }
    for (std::size_t i = 0; i < raw.size(); ++i)
        curve.values[i] = (raw[i] - curve.baseline) / curve.sigma;
    return curve;
}

double psi_index(const signature_matrix& sig, measurement_id m, baseline_mode mode,
                 bool* degenerate) {
    if (degenerate) *degenerate = false;
    std::vector<double> mean = mean_trajectory(sig, m);
    // A one-point or constant mean curve has sigma_j = 0: the shared
    // transform is undefined and psi is reported degenerate.
    if (mean.size() < 2) {
        if (degenerate) *degenerate = true;
        return std::numeric_limits<double>::quiet_NaN();
    }
    change_curve shared = normalize_curve(m, sig.grid, mean, mode);
    if (shared.degenerate) {
        if (degenerate) *degenerate = true;
        return std::numeric_limits<double>::quiet_NaN();
    }

    double total = 0.0;
    std::vector<double> standardized;
    standardized.reserve(static_cast<std::size_t>(sig.realization_count));
    for (int g = 0; g < sig.grid_size(); ++g) {
        standardized.clear();
        for (int q = 0; q < sig.realization_count; ++q) {
            double v = sig.value(m, g, q);
            if (usable(v)) standardized.push_back((v - shared.baseline) / shared.sigma);
        }
        // mean_trajectory above guarantees at least one usable cell per point
        total += population_std(standardized);
    }
    return total / static_cast<double>(sig.grid_size());
}

double pearson(std::span<const double> x, std::span<const double> y, bool* degenerate) {
    if (degenerate) *degenerate = false;
    if (x.size() != y.size() || x.size() < 2)
        throw argument_error("pearson: need two equal-length series of length >= 2");

    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y, bool* degenerate) {
    std::vector<double> rx = ranks_with_ties(x);
    std::vector<double> ry = ranks_with_ties(y);
    return pearson(rx, ry, degenerate);
}

double pearson_vs_freevar(const change_curve& curve, bool* degenerate) {
    if (curve.values.size() < 2)
        throw argument_error("pearson_vs_freevar: curve shorter than 2 points");
    return pearson(curve.values, curve.grid, degenerate);
}

double magnitude_index(const signature_matrix& sig, measurement_id m) {
    std::vector<double> mean = mean_trajectory(sig, m);
    double total = 0.0;
    for (double v : mean) total += std::abs(v - mean.front());
    return total / static_cast<double>(mean.size());
}

curve_stats compute_curve_stats(const signature_matrix& sig, measurement_id m,
                                const change_curve& curve, baseline_mode mode) {
    curve_stats st;
    st.psi = psi_index(sig, m, mode, &st.psi_degenerate);
    st.pearson = pearson_vs_freevar(curve, &st.pearson_degenerate);
    st.magnitude = magnitude_index(sig, m);
    st.spearman = spearman(curve.values, curve.grid, &st.spearman_degenerate);
    std::vector<double> mean = mean_trajectory(sig, m);
    auto [lo, hi] = std::minmax_element(mean.begin(), mean.end());
    st.raw_range = *hi - *lo;
    return st;
}

group_label classify_abc(const change_curve& curve, const curve_stats& stats,
                         const classify_thresholds& thresholds) {
    if (curve.degenerate || stats.spearman_degenerate) return group_label::c;
    if (!stats.psi_degenerate && std::isfinite(stats.psi) && stats.psi > thresholds.tau_disp)
        return group_label::c;
    const double tau_mag =
        std::max(thresholds.tau_mag_rel * stats.raw_range, thresholds.tau_mag_floor);
    if (stats.magnitude < tau_mag) return group_label::c;
    if (stats.spearman >= thresholds.tau_mono) return group_label::a;
    if (stats.spearman <= -thresholds.tau_mono) return group_label::b;
    return group_label::c;
}

} // namespace netperturb

#include "doctest.h"

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"
#include "signals.hpp"

using namespace netperturb;

namespace {

// Builds a signature matrix for one measurement from explicit trajectories
// (realization-major input: trajectories[q][g]).
signature_matrix sig_from(const std::vector<std::vector<double>>& trajectories,
                          std::vector<double> grid = {}) {
    signature_matrix sig;
    const int q = static_cast<int>(trajectories.size());
    const int r = static_cast<int>(trajectories[0].size());
    if (grid.empty())
        for (int g = 0; g < r; ++g) grid.push_back(g);
    sig.grid = std::move(grid);
    sig.realization_count = q;
    sig.values.assign(static_cast<std::size_t>(k_measurement_count) * r * q,
                      std::numeric_limits<double>::quiet_NaN());
    sig.flags.assign(sig.values.size(), degeneracy::undefined);
    for (int g = 0; g < r; ++g)
        for (int qi = 0; qi < q; ++qi) {
            for (int m = 0; m < k_measurement_count; ++m) {
                sig.values[sig.cell(m, g, qi)] = trajectories[static_cast<std::size_t>(qi)]
                                                              [static_cast<std::size_t>(g)];
                sig.flags[sig.cell(m, g, qi)] = degeneracy::none;
            }
        }
    return sig;
}

constexpr measurement_id m0 = measurement_id::degree;

} // namespace

TEST_CASE("mean_trajectory basics") {
    auto one = sig_from({{1.0, 2.0, 3.0}});
    CHECK(mean_trajectory(one, m0) == std::vector<double>{1.0, 2.0, 3.0});

    auto two = sig_from({{1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}});
    CHECK(mean_trajectory(two, m0) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("mean_trajectory skips valueless cells and errors when none remain") {
    auto sig = sig_from({{1.0, 1.0}, {3.0, 5.0}});
    sig.values[sig.cell(0, 1, 0)] = std::numeric_limits<double>::quiet_NaN();
    sig.flags[sig.cell(0, 1, 0)] = degeneracy::undefined;
    auto mean = mean_trajectory(sig, m0);
    CHECK(mean[0] == 2.0);
    CHECK(mean[1] == 5.0); // only the unflagged value
    CHECK(undefined_cell_count(sig, m0) == 1);

    sig.values[sig.cell(0, 1, 1)] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(mean_trajectory(sig, m0),
                         doctest::Contains("grid point 1"), numeric_error);
}

TEST_CASE("normalize_curve: hand arithmetic") {
    change_curve c = normalize_curve(m0, {0, 1, 2}, {1.0, 2.0, 3.0});
    CHECK(c.sigma == doctest::Approx(0.816496580927726).epsilon(1e-12));
    CHECK(c.values[0] == doctest::Approx(0.0));
    CHECK(c.values[1] == doctest::Approx(1.2247448713915890).epsilon(1e-12));
    CHECK(c.values[2] == doctest::Approx(2.4494897427831781).epsilon(1e-12));
    CHECK(c.mu == doctest::Approx(2.0));
    CHECK_FALSE(c.degenerate);
}

TEST_CASE("normalize_curve: constant input is degenerate") {
    change_curve c = normalize_curve(m0, {0, 1, 2}, {5.0, 5.0, 5.0});
    CHECK(c.degenerate);
    CHECK(c.values == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("normalize_curve: min-zero and unit-std invariants on random curves") {
    rng r(13);
    for (int trial = 0; trial < 1000; ++trial) {
        int len = 2 + static_cast<int>(r.below(30));
        std::vector<double> raw(static_cast<std::size_t>(len)), grid;
        for (int i = 0; i < len; ++i) {
            raw[static_cast<std::size_t>(i)] = r.uniform(-50.0, 50.0);
            grid.push_back(i);
        }
        change_curve c = normalize_curve(m0, grid, raw);
        if (c.degenerate) continue;
        double min = *std::min_element(c.values.begin(), c.values.end());
        REQUIRE(min == 0.0);
        double mean = 0.0;
        for (double v : c.values) mean += v;
        mean /= len;
        double var = 0.0;
        for (double v : c.values) var += (v - mean) * (v - mean);
        REQUIRE(std::sqrt(var / len) == doctest::Approx(1.0).epsilon(1e-9));
        for (double v : c.values) REQUIRE(v >= 0.0);
    }
}

TEST_CASE("normalize_curve: initial-value baseline variant") {
    change_curve c =
        normalize_curve(m0, {0, 1, 2}, {2.0, 1.0, 3.0}, baseline_mode::initial_value);
    CHECK(c.values[0] == 0.0);
    CHECK(c.values[1] < 0.0); // dips below the start
}

TEST_CASE("normalize_curve rejects too-short input") {
    CHECK_THROWS_AS(normalize_curve(m0, {0}, {1.0}), argument_error);
}

TEST_CASE("psi: identical realizations give zero") {
    auto sig = sig_from({{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}});
    CHECK(psi_index(sig, m0) == 0.0);
}

TEST_CASE("psi: one grid point cannot carry the shared transform") {
    // R = 1: sigma_j of a single-point mean curve is 0, so psi is degenerate
    auto sig = sig_from({{1.0}, {3.0}}, {0.0});
    bool degenerate = false;
    double psi = psi_index(sig, m0, baseline_mode::curve_min, &degenerate);
    CHECK(degenerate);
    CHECK(std::isnan(psi));
}

TEST_CASE("psi: realizations at a constant standardized offset d give d/2") {
    auto offset = sig_from({{1.0, 2.0}, {3.0, 4.0}});
    bool degenerate = false;
    double psi = psi_index(offset, m0, baseline_mode::curve_min, &degenerate);
    CHECK_FALSE(degenerate);
    // standardized copies keep offset d = 2/sigma_mean; psi = d/2 at every point
    double sigma = 0.5; // mean curve {2,3} has population std 0.5
    CHECK(psi == doctest::Approx((2.0 / sigma) / 2.0).epsilon(1e-12));
}

TEST_CASE("psi is degenerate when the mean curve is constant") {
    auto sig = sig_from({{1.0, 3.0}, {3.0, 1.0}}); // mean = {2, 2}
    bool degenerate = false;
    double psi = psi_index(sig, m0, baseline_mode::curve_min, &degenerate);
    CHECK(degenerate);
    CHECK(std::isnan(psi));
}

TEST_CASE("psi is invariant under permutation of realizations") {
    rng r(21);
    std::vector<std::vector<double>> trajectories;
    for (int q = 0; q < 6; ++q) {
        std::vector<double> t;
        for (int g = 0; g < 9; ++g) t.push_back(r.uniform(0.0, 10.0));
        trajectories.push_back(t);
    }
    double base = psi_index(sig_from(trajectories), m0);
    std::reverse(trajectories.begin(), trajectories.end());
    std::swap(trajectories[1], trajectories[4]);
    CHECK(psi_index(sig_from(trajectories), m0) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("pearson_vs_freevar on affine and constant curves") {
    change_curve up = normalize_curve(m0, {0, 1, 2, 3}, {1.0, 2.0, 3.0, 4.0});
    bool degenerate = false;
    CHECK(pearson_vs_freevar(up, &degenerate) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(degenerate);

    change_curve down = normalize_curve(m0, {0, 1, 2, 3}, {9.0, 7.0, 5.0, 3.0});
    CHECK(pearson_vs_freevar(down, &degenerate) == doctest::Approx(-1.0).epsilon(1e-12));

    change_curve flat = normalize_curve(m0, {0, 1, 2}, {5.0, 5.0, 5.0});
    CHECK(pearson_vs_freevar(flat, &degenerate) == 0.0);
    CHECK(degenerate);
}

TEST_CASE("pearson of c vs grid equals pearson of raw vs grid (affine transform)") {
    rng r(77);
    for (int trial = 0; trial < 200; ++trial) {
        int len = 3 + static_cast<int>(r.below(20));
        std::vector<double> raw, grid;
        for (int i = 0; i < len; ++i) {
            raw.push_back(r.uniform(-5.0, 5.0));
            grid.push_back(i * 2.0);
        }
        change_curve c = normalize_curve(m0, grid, raw);
        if (c.degenerate) continue;
        double direct = pearson(raw, grid);
        REQUIRE(pearson_vs_freevar(c) == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("magnitude index") {
    auto flat = sig_from({{4.0, 4.0, 4.0}});
    CHECK(magnitude_index(flat, m0) == 0.0);

    auto ramp = sig_from({{10.0, 11.0, 12.0}});
    CHECK(magnitude_index(ramp, m0) == doctest::Approx(1.0).epsilon(1e-12));

    // invariant under the normalization parameters: uses raw values only
    auto scaled = sig_from({{10.0, 11.0, 12.0}});
    CHECK(magnitude_index(scaled, m0) == magnitude_index(ramp, m0));
}

TEST_CASE("classification of monotone, constant and noisy curves") {
    classify_thresholds thresholds;

    auto increasing = sig_from({{1.0, 2.0, 4.0, 8.0, 9.0}});
    change_curve c_up = normalize_curve(m0, increasing.grid, mean_trajectory(increasing, m0));
    curve_stats st_up = compute_curve_stats(increasing, m0, c_up);
    CHECK(classify_abc(c_up, st_up, thresholds) == group_label::a);

    auto decreasing = sig_from({{9.0, 7.0, 6.0, 2.0, 1.0}});
    change_curve c_down = normalize_curve(m0, decreasing.grid, mean_trajectory(decreasing, m0));
    curve_stats st_down = compute_curve_stats(decreasing, m0, c_down);
    CHECK(classify_abc(c_down, st_down, thresholds) == group_label::b);

    auto constant = sig_from({{5.7, 5.7, 5.7, 5.7, 5.7}});
    change_curve c_flat = normalize_curve(m0, constant.grid, mean_trajectory(constant, m0));
    curve_stats st_flat = compute_curve_stats(constant, m0, c_flat);
    CHECK(classify_abc(c_flat, st_flat, thresholds) == group_label::c);

    auto wiggle = sig_from({{1.0, 5.0, 2.0, 6.0, 1.5}});
    change_curve c_wiggle = normalize_curve(m0, wiggle.grid, mean_trajectory(wiggle, m0));
    curve_stats st_wiggle = compute_curve_stats(wiggle, m0, c_wiggle);
    CHECK(classify_abc(c_wiggle, st_wiggle, thresholds) == group_label::c);
}

TEST_CASE("classification is invariant under positive affine raw rescaling") {
    rng r(3141);
    classify_thresholds thresholds;
    for (int trial = 0; trial < 300; ++trial) {
        int len = 4 + static_cast<int>(r.below(15));
        std::vector<std::vector<double>> t(1);
        for (int i = 0; i < len; ++i) t[0].push_back(r.uniform(0.0, 10.0));

        auto sig = sig_from(t);
        change_curve c = normalize_curve(m0, sig.grid, mean_trajectory(sig, m0));
        group_label base = classify_abc(c, compute_curve_stats(sig, m0, c), thresholds);

        double a = r.uniform(0.1, 20.0);
        double b = r.uniform(-100.0, 100.0);
        std::vector<std::vector<double>> scaled(1);
        for (double v : t[0]) scaled[0].push_back(a * v + b);
        auto sig2 = sig_from(scaled);
        change_curve c2 = normalize_curve(m0, sig2.grid, mean_trajectory(sig2, m0));
        group_label transformed =
            classify_abc(c2, compute_curve_stats(sig2, m0, c2), thresholds);

        REQUIRE(base == transformed);
    }
}

TEST_CASE("spearman handles ties via average ranks") {
    bool degenerate = false;
    std::vector<double> x{1.0, 2.0, 2.0, 3.0};
    std::vector<double> y{0.0, 1.0, 2.0, 3.0};
    double rho = spearman(x, y, &degenerate);
    CHECK_FALSE(degenerate);
    CHECK(rho > 0.9);
    std::vector<double> all_same{2.0, 2.0, 2.0, 2.0};
    spearman(all_same, y, &degenerate);
    CHECK(degenerate);
}

#ifndef NETPERTURB_CONFIG_HPP
#define NETPERTURB_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "coincidence.hpp"
#include "experiments.hpp"
#include "hcluster.hpp"

namespace netperturb {

// Fully-resolved run configuration. Parsed from a flat "key = value" text
// file; every constraint violation is reported, not just the first.
struct pipeline_config {
    std::vector<model_kind> models = {model_kind::er, model_kind::ba, model_kind::geo};
    std::vector<experiment_kind> experiments = {experiment_kind::size, experiment_kind::removal,
                                                experiment_kind::rewiring};
    std::string profile = "paper"; // paper: Q=1000 for size, stride 1; desk: Q=50, stride 5
    std::vector<int> sizes = {16, 25, 36, 49, 64, 81, 100};
    int n = 100;
    double avg_degree = 5.7;
    int steps = 100;
    std::optional<int> q;      // overrides the per-experiment default
    std::optional<int> stride; // overrides the profile default
    std::uint64_t seed = 42;
    double epsilon = 0.001;
    coincidence_params similarity;
    linkage_kind linkage = linkage_kind::average;
    classify_thresholds thresholds;
    rewire_mode rewiring = rewire_mode::uniform_pair;
    bool rewiring_shared_initial = false;
    access_mode access = access_mode::full_walk;
    baseline_mode baseline = baseline_mode::curve_min;
    bool raw_node_weight = false;
    int workers = 0; // 0: NETPERTURB_WORKERS env var or hardware concurrency

    int resolved_q(experiment_kind e) const;
    int resolved_stride() const;
    experiment_config cell_config(model_kind m, experiment_kind e) const;
};

pipeline_config parse_pipeline_config(const std::string& text);
pipeline_config load_pipeline_config(const std::string& path);

// Deterministic "key = value" rendering of every resolved field; input to
// the config hash and echoed into meta.json.
std::string canonical_config(const pipeline_config& cfg);

// FNV-1a over the canonical rendering, as fixed-width hex.
std::string config_hash(const pipeline_config& cfg);

} // namespace netperturb

#endif

#ifndef NETPERTURB_COINCIDENCE_HPP
#define NETPERTURB_COINCIDENCE_HPP

#include <span>
#include <string>
#include <vector>

#include "signals.hpp"

namespace netperturb {

struct coincidence_params {
    double delta = 0.0;                // regularization near 0/0
    double jaccard_exponent = 5.0;     // strictness of the Jaccard factor
    double interiority_exponent = 1.0; // strictness of the interiority factor
};

// [(sum min + delta) / (sum max + delta)]^D over nonnegative vectors.
// Two all-zero vectors compare as 1 at delta = 0 (they are identical).
double multiset_jaccard(std::span<const double> x, std::span<const double> y,
                        const coincidence_params& params = {});

// [(sum min + delta) / (min(sum x, sum y) + delta)]^E.
double interiority(std::span<const double> x, std::span<const double> y,
                   const coincidence_params& params = {});

// Product of the two indices: symmetric, in [0, 1], strict for large
// exponents.
double coincidence(std::span<const double> x, std::span<const double> y,
                   const coincidence_params& params = {});

// One row of the rotating-vector comparison table: a fixed reference at 45
// degrees against a vector of the given magnitude at angle alpha.
struct similarity_demo_row {
    double angle = 0.0;
    double inner_product = 0.0;
    double cosine = 0.0;
    double coincidence = 0.0;
};

std::vector<similarity_demo_row> rotation_similarity_table(double magnitude,
                                                           const std::vector<double>& angles,
                                                           const coincidence_params& params = {});

// Complete weighted graph over the measurement change curves. Node weight is
// the total area of the curve (normalized values by default, raw changes
// from the start when use_raw_node_weight is set); edge weights are pairwise
// coincidence similarities.
struct similarity_network {
    std::vector<measurement_id> nodes;
    std::vector<double> node_weights;
    std::vector<group_label> labels;
    bool labels_attached = true; // false when built without classification data
    std::vector<std::vector<double>> weights; // symmetric, unit diagonal
    coincidence_params params;
};

similarity_network build_similarity_network(const std::vector<change_curve>& curves,
                                            const std::vector<group_label>& labels,
                                            const coincidence_params& params = {},
                                            const std::vector<double>* raw_node_weights = nullptr);

std::string similarity_network_to_json(const similarity_network& net, std::uint64_t master_seed,
                                       const std::string& config_hash);
std::string similarity_network_to_dot(const similarity_network& net);

} // namespace netperturb

#endif

#ifndef NETPERTURB_EXPERIMENTS_HPP
#define NETPERTURB_EXPERIMENTS_HPP

#include <array>
#include <map>
#include <optional>

#include "rng.hpp"
#include "signals.hpp"
#include "signature.hpp"

namespace netperturb {

// How the replacement edge is chosen when rewiring. uniform_pair removes a
// uniform edge and adds a uniform currently-absent pair (never re-adding the
// removed edge in the same step); degree_swap exchanges the endpoints of two
// disjoint edges, preserving every node degree.
enum class rewire_mode { uniform_pair, degree_swap };

void remove_random_edge(graph& g, rng& r);
void rewire_random_edge(graph& g, rng& r, rewire_mode mode = rewire_mode::uniform_pair);

struct experiment_config {
    experiment_kind experiment = experiment_kind::size;
    model_kind model = model_kind::er;
    std::vector<int> sizes = {16, 25, 36, 49, 64, 81, 100}; // size experiment grid
    int n = 100;                                            // removal / rewiring
    double avg_degree = 5.7;
    int steps = 100;
    int realizations = 50;
    int stride = 1;
    std::uint64_t master_seed = 0;
    double epsilon = 0.001;
    rewire_mode rewiring = rewire_mode::uniform_pair;
    // Removal realizations always perturb one common starting network;
    // rewiring draws a fresh starting network per realization unless this is
    // set (with a shared start, every mean curve relaxes from that one
    // network's values, which buries the fluctuation-only signal the
    // rewiring experiment looks for).
    bool rewiring_shared_initial = false;
    measure_options measure;
    int workers = 1;
};

// A fresh model instance: n nodes targeting the configured average degree
// (er draws the implied edge count, ba uses m = round(avg_degree / 2), geo
// requires n to be a perfect square).
graph generate_model(model_kind model, int n, double avg_degree, double epsilon,
                     std::uint64_t seed);

signature_matrix run_size_experiment(const experiment_config& cfg);
signature_matrix run_removal_experiment(const experiment_config& cfg);
signature_matrix run_rewiring_experiment(const experiment_config& cfg);
signature_matrix run_experiment(const experiment_config& cfg);

// Group labels of every measurement under every (model, experiment) cell,
// 14 rows by 9 columns (experiment-major column order).
struct membership_table {
    static constexpr int k_columns = 9;
    std::array<std::pair<model_kind, experiment_kind>, k_columns> columns;
    std::array<std::array<group_label, k_columns>, k_measurement_count> labels;
};

using cell_labels = std::map<std::pair<model_kind, experiment_kind>,
                             std::array<group_label, k_measurement_count>>;

// Throws listing every absent (model, experiment) combination.
membership_table build_membership_table(const cell_labels& cells);

std::string membership_table_to_csv(const membership_table& table);

} // namespace netperturb

#endif

#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "generators.hpp"
#include "parallel.hpp"

namespace netperturb {

void remove_random_edge(graph& g, rng& r) {
    if (g.edge_count() < 1) throw argument_error("remove_random_edge: graph has no edges");
    auto idx = static_cast<std::size_t>(r.below(static_cast<std::uint64_t>(g.edge_count())));
    auto [u, v] = g.edges()[idx];
    g.remove_edge(u, v);
}

namespace {

void rewire_uniform_pair(graph& g, rng& r) {
    const auto n = static_cast<std::uint64_t>(g.node_count());
    const std::uint64_t all_pairs = n * (n - 1) / 2;
    if (static_cast<std::uint64_t>(g.edge_count()) >= all_pairs)
        throw argument_error("rewire_random_edge: complete graph has no non-adjacent pair");

    auto idx = static_cast<std::size_t>(r.below(static_cast<std::uint64_t>(g.edge_count())));
    auto [u, v] = g.edges()[idx];
    g.remove_edge(u, v);

    // Uniform absent pair, excluding the edge just removed. Rejection is fast
    // while non-edges are plentiful; fall back to enumeration otherwise.
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto [a, b] = pair_from_flat_index(g.node_count(), r.below(all_pairs));
        if (a == u && b == v) continue;
        if (g.has_edge(a, b)) continue;
        g.add_edge(a, b);
        return;
    }
    std::vector<std::pair<node_id, node_id>> candidates;
    for (node_id a = 0; a < g.node_count(); ++a)
        for (node_id b = a + 1; b < g.node_count(); ++b)
            if (!(a == u && b == v) && !g.has_edge(a, b)) candidates.emplace_back(a, b);
    if (candidates.empty()) {
        g.add_edge(u, v); // restore; no legal move existed
        throw argument_error("rewire_random_edge: no non-adjacent pair available");
    }
    auto [a, b] = candidates[static_cast<std::size_t>(
        r.below(static_cast<std::uint64_t>(candidates.size())))];
    g.add_edge(a, b);
}

void rewire_degree_swap(graph& g, rng& r) {
    if (g.edge_count() < 2) throw argument_error("rewire_random_edge: need at least 2 edges to swap");
    for (int attempt = 0; attempt < 20000; ++attempt) {
        auto e1 = static_cast<std::size_t>(r.below(static_cast<std::uint64_t>(g.edge_count())));
        auto e2 = static_cast<std::size_t>(r.below(static_cast<std::uint64_t>(g.edge_count())));
        if (e1 == e2) continue;
        auto [a, b] = g.edges()[e1];
        auto [c, d] = g.edges()[e2];
        if (a == c || a == d || b == c || b == d) continue;
        if (r.below(2) == 1) std::swap(c, d);
        if (g.has_edge(a, c) || g.has_edge(b, d)) continue;
        g.remove_edge(a, b);
        g.remove_edge(c, d);
        g.add_edge(a, c);
        g.add_edge(b, d);
        return;
    }
    throw numeric_error("rewire_random_edge: no degree-preserving swap found");
}

} // namespace

void rewire_random_edge(graph& g, rng& r, rewire_mode mode) {
    if (g.edge_count() < 1) throw argument_error("rewire_random_edge: graph has no edges");
    if (mode == rewire_mode::uniform_pair)
        rewire_uniform_pair(g, r);
    else
        rewire_degree_swap(g, r);
}

graph generate_model(model_kind model, int n, double avg_degree, double epsilon,
                     std::uint64_t seed) {
    switch (model) {
        case model_kind::er: return gen_er(n, avg_degree, seed);
        case model_kind::ba: {
            int m = static_cast<int>(std::llround(avg_degree / 2.0));
            m = std::max(m, 1);
            if (m >= n)
                throw argument_error("generate_model: ba needs round(avg_degree/2) < n");
            return gen_ba(n, m, seed);
        }
        case model_kind::geo: {
            int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
            if (side * side != n)
                throw argument_error("generate_model: geo size " + std::to_string(n) +
                                     " is not a perfect square");
            return gen_geo(side, epsilon, seed);
        }
    }
    throw argument_error("generate_model: unknown model");
}

namespace {

// Seed stream tags; combined with the master seed through derive_seed so
// every task has an independent, schedule-free stream.
constexpr std::uint64_t k_stream_size_cell = 1;
constexpr std::uint64_t k_stream_initial_network = 2;
constexpr std::uint64_t k_stream_perturbation = 3;

void store_suite(signature_matrix& sig, int g, int q, const measurement_suite& suite) {
    for (int m = 0; m < k_measurement_count; ++m) {
        sig.values[sig.cell(m, g, q)] = suite.values[static_cast<std::size_t>(m)];
        sig.flags[sig.cell(m, g, q)] = suite.flags[static_cast<std::size_t>(m)];
    }
}

} // namespace

signature_matrix run_size_experiment(const experiment_config& cfg) {
    if (cfg.experiment != experiment_kind::size)
        throw argument_error("run_size_experiment: config is for a different experiment");
    if (cfg.sizes.empty()) throw argument_error("run_size_experiment: empty size grid");
    if (cfg.realizations < 1) throw argument_error("run_size_experiment: need Q >= 1");

    const int r = static_cast<int>(cfg.sizes.size());
    const int q_total = cfg.realizations;

    signature_matrix sig;
    sig.model = cfg.model;
    sig.experiment = experiment_kind::size;
    sig.grid.assign(static_cast<std::size_t>(r), 0.0);
    sig.realization_count = q_total;
    sig.values.assign(static_cast<std::size_t>(k_measurement_count) * r * q_total,
                      std::numeric_limits<double>::quiet_NaN());
    sig.flags.assign(sig.values.size(), degeneracy::undefined);
    sig.realized_seeds.assign(static_cast<std::size_t>(r) * q_total, 0);

    std::vector<std::int64_t> edge_counts(static_cast<std::size_t>(r) * q_total, 0);

    parallel_for(r * q_total, cfg.workers, [&](int task) {
        const int si = task / q_total;
        const int q = task % q_total;
        const std::uint64_t seed = derive_seed(cfg.master_seed, k_stream_size_cell,
                                               static_cast<std::uint64_t>(si),
                                               static_cast<std::uint64_t>(q));
        sig.realized_seeds[static_cast<std::size_t>(task)] = seed;
        graph g = generate_model(cfg.model, cfg.sizes[static_cast<std::size_t>(si)],
                                 cfg.avg_degree, cfg.epsilon, seed);
        edge_counts[static_cast<std::size_t>(task)] = g.edge_count();
        store_suite(sig, si, q, measure_all(g, cfg.measure));
    });

    // Free variable per grid point: mean realized edge count.
    for (int si = 0; si < r; ++si) {
        double sum = 0.0;
        for (int q = 0; q < q_total; ++q)
            sum += static_cast<double>(edge_counts[static_cast<std::size_t>(si) * q_total + q]);
        sig.grid[static_cast<std::size_t>(si)] = sum / static_cast<double>(q_total);
    }
    return sig;
}

namespace {

signature_matrix run_trajectory_experiment(const experiment_config& cfg) {
    if (cfg.realizations < 1) throw argument_error("run_experiment: need Q >= 1");
    if (cfg.steps < 0) throw argument_error("run_experiment: steps must be >= 0");
    if (cfg.stride < 1) throw argument_error("run_experiment: stride must be >= 1");

    const bool removal = cfg.experiment == experiment_kind::removal;
    const bool shared_initial = removal || cfg.rewiring_shared_initial;

    graph initial;
    std::uint64_t initial_seed = 0;
    std::int64_t e0 = 0; // grid anchor; only the removal grid tracks edge counts
    int steps = cfg.steps;
    int truncated_at = -1;
    if (shared_initial) {
        initial_seed = derive_seed(cfg.master_seed, k_stream_initial_network, 0, 0);
        initial = generate_model(cfg.model, cfg.n, cfg.avg_degree, cfg.epsilon, initial_seed);
        e0 = initial.edge_count();
        if (removal && steps > e0) {
            // Cannot remove more edges than exist; the trajectory (and grid)
            // truncates here for every realization.
            truncated_at = static_cast<int>(e0);
            steps = static_cast<int>(e0);
        }
    }

    const int r = steps / cfg.stride + 1; // measured at 0, stride, 2*stride, ...
    const int q_total = cfg.realizations;

    signature_matrix sig;
    sig.model = cfg.model;
    sig.experiment = cfg.experiment;
    sig.realization_count = q_total;
    sig.truncated_at_step = truncated_at;
    sig.grid.assign(static_cast<std::size_t>(r), 0.0);
    for (int k = 0; k < r; ++k) {
        const double t = static_cast<double>(k) * cfg.stride;
        sig.grid[static_cast<std::size_t>(k)] =
            removal ? static_cast<double>(e0) - t : t;
    }
    sig.values.assign(static_cast<std::size_t>(k_measurement_count) * r * q_total,
                      std::numeric_limits<double>::quiet_NaN());
    sig.flags.assign(sig.values.size(), degeneracy::undefined);

    sig.realized_seeds.assign(static_cast<std::size_t>(q_total) + 1, 0);
    sig.realized_seeds[0] = initial_seed;

    // With a shared start the step-0 suite is common to all realizations.
    measurement_suite initial_suite;
    if (shared_initial) initial_suite = measure_all(initial, cfg.measure);

    parallel_for(q_total, cfg.workers, [&](int q) {
        graph g;
        if (shared_initial) {
            g = initial;
        } else {
            g = generate_model(cfg.model, cfg.n, cfg.avg_degree, cfg.epsilon,
                               derive_seed(cfg.master_seed, k_stream_initial_network,
                                           static_cast<std::uint64_t>(q), 0));
        }
        const std::uint64_t perturb_seed = derive_seed(cfg.master_seed, k_stream_perturbation,
                                                       static_cast<std::uint64_t>(q), 0);
        rng stream(perturb_seed);
        sig.realized_seeds[static_cast<std::size_t>(q) + 1] = perturb_seed;

        store_suite(sig, 0, q, shared_initial ? initial_suite : measure_all(g, cfg.measure));
        for (int t = 1; t <= steps; ++t) {
            if (removal)
                remove_random_edge(g, stream);
            else
                rewire_random_edge(g, stream, cfg.rewiring);
            if (t % cfg.stride == 0) store_suite(sig, t / cfg.stride, q, measure_all(g, cfg.measure));
        }
    });
    return sig;
}

} // namespace

signature_matrix run_removal_experiment(const experiment_config& cfg) {
    if (cfg.experiment != experiment_kind::removal)
        throw argument_error("run_removal_experiment: config is for a different experiment");
    return run_trajectory_experiment(cfg);
}

signature_matrix run_rewiring_experiment(const experiment_config& cfg) {
    if (cfg.experiment != experiment_kind::rewiring)
        throw argument_error("run_rewiring_experiment: config is for a different experiment");
    return run_trajectory_experiment(cfg);
}

signature_matrix run_experiment(const experiment_config& cfg) {
    switch (cfg.experiment) {
        case experiment_kind::size: return run_size_experiment(cfg);
        case experiment_kind::removal: return run_removal_experiment(cfg);
        case experiment_kind::rewiring: return run_rewiring_experiment(cfg);
    }
    throw argument_error("run_experiment: unknown experiment");
}

membership_table build_membership_table(const cell_labels& cells) {
    membership_table table;
    int col = 0;
    std::vector<std::string> missing;
    for (experiment_kind e :
         {experiment_kind::size, experiment_kind::removal, experiment_kind::rewiring}) {
        for (model_kind m : {model_kind::er, model_kind::ba, model_kind::geo}) {
            table.columns[static_cast<std::size_t>(col)] = {m, e};
            auto it = cells.find({m, e});
            if (it == cells.end()) {
                missing.push_back(std::string(model_name(m)) + "/" + experiment_name(e));
            } else {
                for (int row = 0; row < k_measurement_count; ++row)
                    table.labels[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                        it->second[static_cast<std::size_t>(row)];
            }
            ++col;
        }
    }
    if (!missing.empty()) {
        std::string msg = "membership table: missing label cells:";
        for (const auto& m : missing) msg += " " + m;
        throw argument_error(msg);
    }
    return table;
}

std::string membership_table_to_csv(const membership_table& table) {
    std::string out = "measurement";
    for (const auto& [m, e] : table.columns) {
        out += ",";
        out += model_name(m);
        out += "_";
        out += experiment_name(e);
    }
    out += "\n";
    for (int row = 0; row < k_measurement_count; ++row) {
        out += measurement_name(static_cast<measurement_id>(row));
        for (int col = 0; col < membership_table::k_columns; ++col) {
            out += ",";
            out += group_label_char(
                table.labels[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
        }
        out += "\n";
    }
    return out;
}

} // namespace netperturb

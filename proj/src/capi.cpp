#include "netperturb.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph_io.hpp"
#include "json.hpp"
#include "pipeline.hpp"

using namespace netperturb;

struct np_graph {
    graph g;
};

struct np_rng {
    rng r;
};

namespace {

thread_local std::string t_last_error;

np_status fail(np_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

// Runs fn, translating exceptions into status codes + thread-local message.
template <typename Fn>
np_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return NP_OK;
    } catch (const argument_error& e) {
        return fail(NP_ERR_ARGUMENT, e.what());
    } catch (const config_error& e) {
        return fail(NP_ERR_CONFIG, e.what());
    } catch (const io_error& e) {
        return fail(NP_ERR_IO, e.what());
    } catch (const numeric_error& e) {
        return fail(NP_ERR_RUNTIME, e.what());
    } catch (const std::bad_alloc&) {
        return fail(NP_ERR_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(NP_ERR_RUNTIME, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

np_status require(bool ok, const char* message) {
    return ok ? NP_OK : fail(NP_ERR_ARGUMENT, message);
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw io_error("write to '" + path + "' failed");
}

nlohmann::ordered_json measure_json_object(const graph& g) {
    measurement_suite suite = measure_all(g);
    nlohmann::ordered_json doc;
    for (int i = 0; i < k_measurement_count; ++i)
        doc[measurement_name(static_cast<measurement_id>(i))] =
            suite.values[static_cast<std::size_t>(i)];
    auto flags = nlohmann::ordered_json::object();
    for (int i = 0; i < k_measurement_count; ++i)
        if (suite.flags[static_cast<std::size_t>(i)] != degeneracy::none)
            flags[measurement_name(static_cast<measurement_id>(i))] =
                degeneracy_name(suite.flags[static_cast<std::size_t>(i)]);
    doc["flags"] = std::move(flags);
    return doc;
}

} // namespace

extern "C" {

const char* np_version(void) { return "0.1.0"; }

const char* np_last_error(void) { return t_last_error.c_str(); }

np_status np_graph_create(int32_t node_count, const int32_t* endpoints, int64_t edge_count,
                          np_graph** out) {
    if (np_status s = require(out && (endpoints || edge_count == 0),
                              "np_graph_create: NULL argument"))
        return s;
    *out = nullptr;
    return guarded([&] {
        std::vector<std::pair<node_id, node_id>> edges;
        edges.reserve(static_cast<std::size_t>(edge_count));
        for (int64_t i = 0; i < edge_count; ++i)
            edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new np_graph{graph(node_count, std::move(edges))};
    });
}

np_status np_graph_load(const char* path, np_graph** out) {
    if (np_status s = require(path && out, "np_graph_load: NULL argument")) return s;
    *out = nullptr;
    return guarded([&] { *out = new np_graph{load_edge_list(path)}; });
}

np_status np_graph_save(const np_graph* g, const char* path) {
    if (np_status s = require(g && path, "np_graph_save: NULL argument")) return s;
    return guarded([&] { save_edge_list(path, g->g); });
}

int32_t np_graph_node_count(const np_graph* g) { return g ? g->g.node_count() : 0; }

int64_t np_graph_edge_count(const np_graph* g) { return g ? g->g.edge_count() : 0; }

int32_t np_graph_degree(const np_graph* g, int32_t node) {
    if (!g || node < 0 || node >= g->g.node_count()) return -1;
    return g->g.degree(node);
}

np_status np_graph_edges(const np_graph* g, int32_t* endpoints) {
    if (np_status s = require(g && endpoints, "np_graph_edges: NULL argument")) return s;
    return guarded([&] {
        std::size_t i = 0;
        for (const auto& [u, v] : g->g.edges()) {
            endpoints[i++] = u;
            endpoints[i++] = v;
        }
    });
}

void np_graph_free(np_graph* g) { delete g; }

np_status np_gen_er(int32_t n, double avg_degree, uint64_t seed, np_graph** out) {
    if (np_status s = require(out != nullptr, "np_gen_er: NULL output")) return s;
    *out = nullptr;
    return guarded([&] { *out = new np_graph{gen_er(n, avg_degree, seed)}; });
}

np_status np_gen_ba(int32_t n, int32_t m, uint64_t seed, np_graph** out) {
    if (np_status s = require(out != nullptr, "np_gen_ba: NULL output")) return s;
    *out = nullptr;
    return guarded([&] { *out = new np_graph{gen_ba(n, m, seed)}; });
}

np_status np_gen_geo(int32_t side, double epsilon, uint64_t seed, np_graph** out) {
    if (np_status s = require(out != nullptr, "np_gen_geo: NULL output")) return s;
    *out = nullptr;
    return guarded([&] { *out = new np_graph{gen_geo(side, epsilon, seed)}; });
}

np_status np_rng_create(uint64_t seed, np_rng** out) {
    if (np_status s = require(out != nullptr, "np_rng_create: NULL output")) return s;
    *out = nullptr;
    return guarded([&] { *out = new np_rng{rng(seed)}; });
}

void np_rng_free(np_rng* r) { delete r; }

np_status np_remove_random_edge(np_graph* g, np_rng* r) {
    if (np_status s = require(g && r, "np_remove_random_edge: NULL argument")) return s;
    return guarded([&] { remove_random_edge(g->g, r->r); });
}

np_status np_rewire_random_edge(np_graph* g, np_rng* r) {
    if (np_status s = require(g && r, "np_rewire_random_edge: NULL argument")) return s;
    return guarded([&] { rewire_random_edge(g->g, r->r); });
}

const char* np_measurement_name(int index) {
    if (index < 0 || index >= NP_MEASUREMENT_COUNT) return nullptr;
    return measurement_name(static_cast<measurement_id>(index));
}

np_status np_measure_all(const np_graph* g, double values[NP_MEASUREMENT_COUNT],
                         int flags[NP_MEASUREMENT_COUNT]) {
    if (np_status s = require(g && values, "np_measure_all: NULL argument")) return s;
    return guarded([&] {
        measurement_suite suite = measure_all(g->g);
        for (int i = 0; i < NP_MEASUREMENT_COUNT; ++i) {
            values[i] = suite.values[static_cast<std::size_t>(i)];
            if (flags) flags[i] = static_cast<int>(suite.flags[static_cast<std::size_t>(i)]);
        }
    });
}

np_status np_measure_json(const np_graph* g, char** out_json) {
    if (np_status s = require(g && out_json, "np_measure_json: NULL argument")) return s;
    *out_json = nullptr;
    return guarded([&] { *out_json = copy_string(measure_json_object(g->g).dump(2) + "\n"); });
}

void np_string_free(char* s) { delete[] s; }

np_status np_coincidence(const double* x, const double* y, size_t len, double delta,
                         double jaccard_exponent, double interiority_exponent, double* out) {
    if (np_status s = require(x && y && out, "np_coincidence: NULL argument")) return s;
    return guarded([&] {
        coincidence_params params{delta, jaccard_exponent, interiority_exponent};
        *out = coincidence({x, len}, {y, len}, params);
    });
}

np_status np_validate_config(const char* path, char** out_errors_json) {
    if (np_status s = require(path != nullptr, "np_validate_config: NULL path")) return s;
    if (out_errors_json) *out_errors_json = nullptr;
    try {
        (void)load_pipeline_config(path);
        t_last_error.clear();
        return NP_OK;
    } catch (const config_error& e) {
        if (out_errors_json) {
            nlohmann::json errors = nlohmann::json::array();
            for (const auto& issue : e.issues) errors.push_back(issue);
            *out_errors_json = copy_string(errors.dump(2) + "\n");
        }
        return fail(NP_ERR_CONFIG, e.what());
    } catch (const io_error& e) {
        return fail(NP_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(NP_ERR_RUNTIME, e.what());
    }
}

np_status np_run_pipeline(const char* config_path, const char* out_dir) {
    if (np_status s = require(config_path && out_dir, "np_run_pipeline: NULL argument")) return s;
    return guarded([&] {
        pipeline_config cfg = load_pipeline_config(config_path);
        run_pipeline(cfg, out_dir);
    });
}

np_status np_simnet_from_curves(const char* curves_csv, const char* model, const char* experiment,
                                const char* stats_csv, double delta, double jaccard_exponent,
                                double interiority_exponent, const char* out_json,
                                const char* out_dot) {
    if (np_status s = require(curves_csv && model && experiment,
                              "np_simnet_from_curves: NULL argument"))
        return s;
    return guarded([&] {
        auto cells = load_curves_csv(curves_csv);
        cell_key key{model_from_name(model), experiment_from_name(experiment)};
        auto it = cells.find(key);
        if (it == cells.end())
            throw argument_error(std::string("curves file has no cell ") + model + "/" +
                                 experiment);

        coincidence_params params{delta, jaccard_exponent, interiority_exponent};
        std::vector<group_label> labels(it->second.size(), group_label::c);
        bool attached = false;
        if (stats_csv) {
            cell_labels stats = load_stats_labels_csv(stats_csv);
            auto st = stats.find(key);
            if (st == stats.end())
                throw argument_error(std::string("stats file has no cell ") + model + "/" +
                                     experiment);
            labels.assign(st->second.begin(), st->second.end());
            attached = true;
        }
        similarity_network net = build_similarity_network(it->second, labels, params);
        net.labels_attached = attached;
        if (out_json) write_text(out_json, similarity_network_to_json(net, 0, ""));
        if (out_dot) write_text(out_dot, similarity_network_to_dot(net));
    });
}

np_status np_cluster_from_simnet(const char* simnet_json, const char* linkage,
                                 const char* out_newick, const char* out_json) {
    if (np_status s = require(simnet_json && linkage, "np_cluster_from_simnet: NULL argument"))
        return s;
    return guarded([&] {
        similarity_network net = load_simnet_json(simnet_json);
        dendrogram tree = agglomerate(net.weights, linkage_from_name(linkage));
        std::vector<std::string> names;
        for (measurement_id m : net.nodes) names.push_back(measurement_name(m));
        if (out_newick) write_text(out_newick, dendrogram_to_newick(tree, names) + "\n");
        if (out_json) write_text(out_json, dendrogram_to_json(tree, names, 0, ""));
    });
}

np_status np_membership_from_stats(const char* stats_csv, const char* out_csv) {
    if (np_status s = require(stats_csv && out_csv, "np_membership_from_stats: NULL argument"))
        return s;
    return guarded([&] {
        membership_table table = build_membership_table(load_stats_labels_csv(stats_csv));
        write_text(out_csv, membership_table_to_csv(table));
    });
}

} // extern "C"

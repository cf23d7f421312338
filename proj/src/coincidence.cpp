#include "coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "errors.hpp"
#include "json.hpp"

namespace netperturb {

namespace {

struct min_max_sums {
    double sum_min = 0.0;
    double sum_max = 0.0;
    double sum_x = 0.0;
    double sum_y = 0.0;
};

min_max_sums accumulate_sums(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw argument_error("coincidence: vector length mismatch");
    if (x.empty()) throw argument_error("coincidence: empty vectors");
    min_max_sums s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0 || y[i] < 0.0)
            throw argument_error("coincidence: vectors must be nonnegative");
        s.sum_min += std::min(x[i], y[i]);
        s.sum_max += std::max(x[i], y[i]);
        s.sum_x += x[i];
        s.sum_y += y[i];
    }
    return s;
}

} // namespace

double multiset_jaccard(std::span<const double> x, std::span<const double> y,
                        const coincidence_params& params) {
    min_max_sums s = accumulate_sums(x, y);
    double num = s.sum_min + params.delta;
    double den = s.sum_max + params.delta;
    if (den == 0.0) return 1.0; // both vectors all-zero: identical
    return std::pow(num / den, params.jaccard_exponent);
}

double interiority(std::span<const double> x, std::span<const double> y,
                   const coincidence_params& params) {
    min_max_sums s = accumulate_sums(x, y);
    double num = s.sum_min + params.delta;
    double den = std::min(s.sum_x, s.sum_y) + params.delta;
    if (den == 0.0) return 1.0; // the smaller multiset is empty: fully interior
    return std::pow(num / den, params.interiority_exponent);
}

double coincidence(std::span<const double> x, std::span<const double> y,
                   const coincidence_params& params) {
    return multiset_jaccard(x, y, params) * interiority(x, y, params);
}

std::vector<similarity_demo_row> rotation_similarity_table(double magnitude,
                                                           const std::vector<double>& angles,
                                                           const coincidence_params& params) {
    if (magnitude <= 0.0) throw argument_error("rotation_similarity_table: magnitude must be > 0");
    const double half_pi = std::acos(0.0);
    const double inv_sqrt2 = std::sqrt(0.5);
    const std::vector<double> reference{inv_sqrt2, inv_sqrt2};

    std::vector<similarity_demo_row> table;
    table.reserve(angles.size());
    for (double alpha : angles) {
        if (alpha < 0.0 || alpha > half_pi)
            throw argument_error("rotation_similarity_table: angle outside [0, pi/2]");
        std::vector<double> v{magnitude * std::cos(alpha), magnitude * std::sin(alpha)};
        // Tiny negative values from cos(pi/2) rounding would trip the
        // nonnegativity check.
        for (double& c : v) c = std::max(c, 0.0);
        similarity_demo_row row;
        row.angle = alpha;
        row.inner_product = reference[0] * v[0] + reference[1] * v[1];
        row.cosine = row.inner_product / magnitude; // |reference| = 1
        row.coincidence = coincidence(reference, v, params);
        table.push_back(row);
    }
    return table;
}

similarity_network build_similarity_network(const std::vector<change_curve>& curves,
                                            const std::vector<group_label>& labels,
                                            const coincidence_params& params,
                                            const std::vector<double>* raw_node_weights) {
    if (curves.empty()) throw argument_error("build_similarity_network: no curves");
    if (labels.size() != curves.size())
        throw argument_error("build_similarity_network: label count mismatch");
    if (raw_node_weights && raw_node_weights->size() != curves.size())
        throw argument_error("build_similarity_network: node weight count mismatch");
    for (const auto& c : curves)
        if (c.grid != curves.front().grid)
            throw argument_error(std::string("build_similarity_network: curve '") +
                                 measurement_name(c.measurement) +
                                 "' is on a different grid");

    const std::size_t n = curves.size();
    similarity_network net;
    net.params = params;
    net.labels = labels;
    net.nodes.reserve(n);
    net.node_weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        net.nodes.push_back(curves[i].measurement);
        if (raw_node_weights) {
            net.node_weights.push_back((*raw_node_weights)[i]);
        } else {
            double area = 0.0;
            for (double v : curves[i].values) area += std::abs(v);
            net.node_weights.push_back(area);
        }
    }

    net.weights.assign(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double w = coincidence(curves[i].values, curves[j].values, params);
            net.weights[i][j] = w;
            net.weights[j][i] = w;
        }
    return net;
}

std::string similarity_network_to_json(const similarity_network& net, std::uint64_t master_seed,
                                       const std::string& config_hash) {
    nlohmann::ordered_json doc;
    doc["config_hash"] = config_hash;
    doc["master_seed"] = master_seed;
    doc["params"] = {{"delta", net.params.delta},
                     {"jaccard_exponent", net.params.jaccard_exponent},
                     {"interiority_exponent", net.params.interiority_exponent}};
    auto nodes = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        nlohmann::ordered_json node = {{"id", i},
                                       {"measurement", measurement_name(net.nodes[i])},
                                       {"weight", net.node_weights[i]}};
        if (net.labels_attached) node["label"] = std::string(1, group_label_char(net.labels[i]));
        nodes.push_back(std::move(node));
    }
    doc["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < net.nodes.size(); ++j)
            edges.push_back({{"source", i}, {"target", j}, {"weight", net.weights[i][j]}});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string similarity_network_to_dot(const similarity_network& net) {
    double max_node = 0.0;
    for (double w : net.node_weights) max_node = std::max(max_node, w);
    if (max_node <= 0.0) max_node = 1.0;

    char buf[128];
    std::string out = "graph similarity {\n  layout=neato;\n  node [shape=circle, fixedsize=true];\n";
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        if (net.labels_attached)
            std::snprintf(buf, sizeof buf, "  \"%s\" [width=%.4f, label=\"%s\\n%c\"];\n",
                          measurement_name(net.nodes[i]),
                          0.3 + 1.2 * net.node_weights[i] / max_node,
                          measurement_name(net.nodes[i]), group_label_char(net.labels[i]));
        else
            std::snprintf(buf, sizeof buf, "  \"%s\" [width=%.4f];\n",
                          measurement_name(net.nodes[i]),
                          0.3 + 1.2 * net.node_weights[i] / max_node);
        out += buf;
    }
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < net.nodes.size(); ++j) {
            std::snprintf(buf, sizeof buf, "  \"%s\" -- \"%s\" [penwidth=%.4f];\n",
                          measurement_name(net.nodes[i]), measurement_name(net.nodes[j]),
                          0.05 + 6.0 * net.weights[i][j]);
            out += buf;
        }
    out += "}\n";
    return out;
}

} // namespace netperturb

#include "measurements.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "errors.hpp"

namespace netperturb {

namespace {

constexpr std::array<const char*, k_measurement_count> k_names = {
    "Degree",        "Clust.Coeff.", "Betw.Centr.", "Assortativity", "Avg.Short.Paths",
    "Hier.Deg_h2",   "Hier.Deg_h3",  "Hier.Deg_h4", "Hier.Deg_h5",   "Access_h2",
    "Access_h3",     "Access_h4",    "Access_h5",   "Gen.Access.",
};

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double entropy_exponential(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log(x);
    return std::exp(h);
}

// One uniform-walk propagation step: out[j] = sum over neighbors u of j of
// in[u] / deg(u). Accumulation order is fixed by node id.
void walk_step(const graph& g, const std::vector<double>& in, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (node_id u = 0; u < g.node_count(); ++u) {
        double mass = in[static_cast<std::size_t>(u)];
        if (mass == 0.0) continue;
        double share = mass / static_cast<double>(g.degree(u));
        for (node_id w : g.neighbors(u)) out[static_cast<std::size_t>(w)] += share;
    }
}

} // namespace

const char* measurement_name(measurement_id id) {
    return k_names[static_cast<std::size_t>(id)];
}

measurement_id measurement_from_name(const std::string& name) {
    for (int i = 0; i < k_measurement_count; ++i)
        if (name == k_names[static_cast<std::size_t>(i)]) return static_cast<measurement_id>(i);
    throw argument_error("unknown measurement name '" + name + "'");
}

const char* degeneracy_name(degeneracy d) {
    switch (d) {
        case degeneracy::none: return "";
        case degeneracy::zero_variance: return "zero_variance";
        case degeneracy::disconnected: return "disconnected";
        case degeneracy::isolated_nodes: return "isolated_nodes";
        case degeneracy::undefined: return "undefined";
    }
    return "";
}

double avg_degree(const graph& g) {
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

measurement_report clustering_coefficient(const graph& g) {
    measurement_report rep;
    rep.per_node.resize(static_cast<std::size_t>(g.node_count()), 0.0);
    for (node_id v = 0; v < g.node_count(); ++v) {
        auto nbrs = g.neighbors(v);
        int d = static_cast<int>(nbrs.size());
        if (d < 2) continue; // degree < 2 contributes 0
        // Edges among neighbors via sorted-list intersection.
        long links2 = 0; // twice the number of neighbor-neighbor edges
        for (node_id u : nbrs) {
            auto un = g.neighbors(u);
            auto it = nbrs.begin();
            auto jt = un.begin();
            while (it != nbrs.end() && jt != un.end()) {
                if (*it < *jt)
                    ++it;
                else if (*jt < *it)
                    ++jt;
                else {
                    ++links2;
                    ++it;
                    ++jt;
                }
            }
        }
        rep.per_node[static_cast<std::size_t>(v)] =
            static_cast<double>(links2) / (static_cast<double>(d) * (d - 1));
    }
    rep.network_value = mean_of(rep.per_node);
    return rep;
}

measurement_report betweenness_centrality(const graph& g) {
    const node_id n = g.node_count();
    measurement_report rep;
    rep.per_node.assign(static_cast<std::size_t>(n), 0.0);

    // Brandes accumulation; the final halving counts each unordered pair once.
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<node_id> order;
    order.reserve(static_cast<std::size_t>(n));

    for (node_id s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), k_unreachable);
        order.clear();

        sigma[static_cast<std::size_t>(s)] = 1.0;
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<node_id> queue{s};
        while (!queue.empty()) {
            node_id u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (node_id w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] == k_unreachable) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
                if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1)
                    sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(u)];
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            node_id w = *it;
            for (node_id u : g.neighbors(w)) {
                if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(w)] + 1)
                    delta[static_cast<std::size_t>(w)] +=
                        sigma[static_cast<std::size_t>(w)] / sigma[static_cast<std::size_t>(u)] *
                        (1.0 + delta[static_cast<std::size_t>(u)]);
            }
            if (w != s) rep.per_node[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }
    for (double& x : rep.per_node) x /= 2.0;
    rep.network_value = mean_of(rep.per_node);
    return rep;
}

measurement_report assortativity(const graph& g) {
    if (g.edge_count() < 1) throw numeric_error("assortativity: graph has no edges");

    // Pearson correlation of endpoint degrees, each edge in both orientations.
    double sx = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [u, v] : g.edges()) {
        auto du = static_cast<double>(g.degree(u));
        auto dv = static_cast<double>(g.degree(v));
        sx += du + dv;
        sxx += du * du + dv * dv;
        sxy += 2.0 * du * dv;
    }
    const double pairs = 2.0 * static_cast<double>(g.edge_count());
    const double mean = sx / pairs;
    const double var = sxx / pairs - mean * mean;
    const double cov = sxy / pairs - mean * mean;

    measurement_report rep;
    if (var <= 0.0) {
        rep.network_value = 0.0;
        rep.flag = degeneracy::zero_variance;
        return rep;
    }
    rep.network_value = std::clamp(cov / var, -1.0, 1.0);
    return rep;
}

measurement_report avg_shortest_path(const graph& g) {
    if (g.edge_count() < 1) throw numeric_error("avg_shortest_path: no connected pair");

    long double total = 0.0L;
    std::int64_t reachable_pairs = 0;
    for (node_id s = 0; s < g.node_count(); ++s) {
        std::vector<int> dist = bfs_distances(g, s);
        for (node_id v = s + 1; v < g.node_count(); ++v) {
            int d = dist[static_cast<std::size_t>(v)];
            if (d != k_unreachable) {
                total += d;
                ++reachable_pairs;
            }
        }
    }
    if (reachable_pairs == 0) throw numeric_error("avg_shortest_path: no connected pair");

    measurement_report rep;
    rep.network_value = static_cast<double>(total / static_cast<long double>(reachable_pairs));
    const std::int64_t all_pairs =
        static_cast<std::int64_t>(g.node_count()) * (g.node_count() - 1) / 2;
    if (reachable_pairs < all_pairs) rep.flag = degeneracy::disconnected;
    return rep;
}

measurement_report hierarchical_degree(const graph& g, int h) {
    if (h < 1) throw argument_error("hierarchical_degree: h must be >= 1");
    measurement_report rep;
    rep.per_node.assign(static_cast<std::size_t>(g.node_count()), 0.0);
    for (node_id v = 0; v < g.node_count(); ++v) {
        std::vector<int> dist = bfs_distances(g, v);
        long count = 0;
        for (const auto& [a, b] : g.edges()) {
            int da = dist[static_cast<std::size_t>(a)];
            int db = dist[static_cast<std::size_t>(b)];
            if (da == k_unreachable || db == k_unreachable) continue;
            if (std::min(da, db) == h - 1 && std::max(da, db) == h) ++count;
        }
        rep.per_node[static_cast<std::size_t>(v)] = static_cast<double>(count);
    }
    rep.network_value = mean_of(rep.per_node);
    return rep;
}

dense_matrix transition_matrix(const graph& g) {
    const node_id n = g.node_count();
    for (node_id v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw numeric_error("transition_matrix: node " + std::to_string(v) +
                                " is isolated (degree-0 row undefined)");
    dense_matrix t(n);
    for (node_id u = 0; u < n; ++u) {
        double share = 1.0 / static_cast<double>(g.degree(u));
        for (node_id w : g.neighbors(u)) t.at(u, w) = share;
    }
    return t;
}

measurement_report accessibility(const graph& g, int h, access_mode mode) {
    if (h < 1) throw argument_error("accessibility: h must be >= 1");
    const node_id n = g.node_count();

    bool any_isolated = false;
    int active = 0;
    for (node_id v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            any_isolated = true;
        else
            ++active;
    }
    if (active == 0) throw numeric_error("accessibility: every node is isolated");

    measurement_report rep;
    rep.per_node.assign(static_cast<std::size_t>(n), 0.0);
    std::vector<double> p(static_cast<std::size_t>(n));
    std::vector<double> next(static_cast<std::size_t>(n));

    double sum = 0.0;
    for (node_id v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        std::fill(p.begin(), p.end(), 0.0);
        p[static_cast<std::size_t>(v)] = 1.0;
        for (int step = 0; step < h; ++step) {
            walk_step(g, p, next);
            std::swap(p, next);
        }
        double alpha;
        if (mode == access_mode::full_walk) {
            alpha = entropy_exponential(p);
        } else {
            std::vector<int> dist = bfs_distances(g, v);
            double mass = 0.0;
            for (node_id w = 0; w < n; ++w)
                if (dist[static_cast<std::size_t>(w)] == h) mass += p[static_cast<std::size_t>(w)];
            if (mass <= 0.0) {
                alpha = 0.0; // nothing reachable at exactly this level
            } else {
                double hent = 0.0;
                for (node_id w = 0; w < n; ++w) {
                    if (dist[static_cast<std::size_t>(w)] != h) continue;
                    double q = p[static_cast<std::size_t>(w)] / mass;
                    if (q > 0.0) hent -= q * std::log(q);
                }
                alpha = std::exp(hent);
            }
        }
        rep.per_node[static_cast<std::size_t>(v)] = alpha;
        sum += alpha;
    }
    rep.network_value = sum / static_cast<double>(active);
    if (any_isolated) rep.flag = degeneracy::isolated_nodes;
    return rep;
}

measurement_report generalized_accessibility(const graph& g) {
    const node_id n = g.node_count();
    std::vector<node_id> active;
    for (node_id v = 0; v < n; ++v)
        if (g.degree(v) > 0) active.push_back(v);
    if (active.empty()) throw numeric_error("generalized_accessibility: every node is isolated");

    // Walks never leave a component, so the transition matrix restricted to
    // degree >= 1 nodes is still row-stochastic.
    const int k = static_cast<int>(active.size());
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < k; ++i) index[static_cast<std::size_t>(active[static_cast<std::size_t>(i)])] = i;

    dense_matrix t(k);
    for (int i = 0; i < k; ++i) {
        node_id u = active[static_cast<std::size_t>(i)];
        double share = 1.0 / static_cast<double>(g.degree(u));
        for (node_id w : g.neighbors(u)) t.at(i, index[static_cast<std::size_t>(w)]) = share;
    }

    dense_matrix p = matrix_exponential(t);
    const double inv_e = std::exp(-1.0);

    measurement_report rep;
    rep.per_node.assign(static_cast<std::size_t>(n), 0.0);
    double sum = 0.0;
    std::vector<double> row(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) row[static_cast<std::size_t>(j)] = p.at(i, j) * inv_e;
        double alpha = entropy_exponential(row);
        rep.per_node[static_cast<std::size_t>(active[static_cast<std::size_t>(i)])] = alpha;
        sum += alpha;
    }
    rep.network_value = sum / static_cast<double>(k);
    if (k < n) rep.flag = degeneracy::isolated_nodes;
    return rep;
}

measurement_suite measure_all(const graph& g, const measure_options& opts) {
    measurement_suite suite;
    suite.values.fill(std::numeric_limits<double>::quiet_NaN());
    suite.flags.fill(degeneracy::undefined);
    int produced = 0;

    auto put = [&](measurement_id id, double value, degeneracy flag) {
        suite.values[static_cast<std::size_t>(id)] = value;
        suite.flags[static_cast<std::size_t>(id)] = flag;
        ++produced;
    };
    auto attempt = [&](measurement_id id, auto&& fn) {
        try {
            measurement_report rep = fn();
            put(id, rep.network_value, rep.flag);
        } catch (const numeric_error&) {
            // leave as undefined/NaN
        }
    };

    put(measurement_id::degree, avg_degree(g), degeneracy::none);
    attempt(measurement_id::clustering, [&] { return clustering_coefficient(g); });
    attempt(measurement_id::betweenness, [&] { return betweenness_centrality(g); });
    attempt(measurement_id::assortativity, [&] { return assortativity(g); });
    attempt(measurement_id::avg_shortest_path, [&] { return avg_shortest_path(g); });
    for (int h = 2; h <= 5; ++h)
        attempt(static_cast<measurement_id>(static_cast<int>(measurement_id::hier_degree_h2) + h - 2),
                [&] { return hierarchical_degree(g, h); });
    for (int h = 2; h <= 5; ++h)
        attempt(static_cast<measurement_id>(static_cast<int>(measurement_id::accessibility_h2) + h - 2),
                [&] { return accessibility(g, h, opts.mode); });
    attempt(measurement_id::generalized_accessibility, [&] { return generalized_accessibility(g); });

    if (produced == 0) throw numeric_error("measure_all: no measurement could be computed");
    return suite;
}

} // namespace netperturb

#ifndef NETPERTURB_TEST_HELPERS_HPP
#define NETPERTURB_TEST_HELPERS_HPP

// Test-only oracles, kept independent of the library's implementation paths:
// distances via Floyd-Warshall, betweenness via explicit path enumeration,
// exp(T) via the plain unscaled Taylor series, walk distributions via dense
// matrix powers, and a small Newick parser.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "hcluster.hpp"
#include "matrix.hpp"
#include "rng.hpp"

namespace test_helpers {

using netperturb::graph;
using netperturb::node_id;

// Erdos-Renyi-style random graph with per-pair probability; for property
// tests only.
inline graph random_graph(netperturb::rng& r, int n, double edge_prob) {
    std::vector<std::pair<node_id, node_id>> edges;
    for (node_id u = 0; u < n; ++u)
        for (node_id v = u + 1; v < n; ++v)
            if (r.uniform01() < edge_prob) edges.emplace_back(u, v);
    return graph(n, std::move(edges));
}

// Uniform random tree from a Prufer sequence.
inline graph random_tree(netperturb::rng& r, int n) {
    if (n == 1) return graph(1, {});
    if (n == 2) return graph(2, {{0, 1}});
    std::vector<int> prufer(static_cast<std::size_t>(n) - 2);
    for (auto& p : prufer) p = static_cast<int>(r.below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int p : prufer) ++degree[static_cast<std::size_t>(p)];

    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);

    std::vector<std::pair<node_id, node_id>> edges;
    for (int p : prufer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
        if (--degree[static_cast<std::size_t>(p)] == 1) leaves.insert(p);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return graph(n, std::move(edges));
}

// Floyd-Warshall distances; -1 marks unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const graph& g) {
    const int n = g.node_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (const auto& [u, v] : g.edges()) {
        d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = -1;
    return d;
}

namespace detail {

inline void collect_shortest_paths(const graph& g, const std::vector<std::vector<int>>& dist,
                                   int s, int t, std::vector<int>& current,
                                   std::vector<std::vector<int>>& paths) {
    int u = current.back();
    if (u == t) {
        paths.push_back(current);
        return;
    }
    for (int w : g.neighbors(u)) {
        bool on_dag = dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] ==
                      dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)] + 1;
        bool toward_t = dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)] >= 0 &&
                        dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] +
                                dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(t)] ==
                            dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (on_dag && toward_t) {
            current.push_back(w);
            collect_shortest_paths(g, dist, s, t, current, paths);
            current.pop_back();
        }
    }
}

} // namespace detail

// Betweenness by enumerating every shortest path explicitly. Exponential in
// the worst case; fine for the tiny graphs it is used on.
inline std::vector<double> brute_force_betweenness(const graph& g) {
    const int n = g.node_count();
    std::vector<double> result(static_cast<std::size_t>(n), 0.0);
    auto dist = floyd_warshall(g);

    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] < 0) continue;
            std::vector<std::vector<int>> paths;
            std::vector<int> current{s};
            detail::collect_shortest_paths(g, dist, s, t, current, paths);
            for (const auto& path : paths)
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    result[static_cast<std::size_t>(path[i])] +=
                        1.0 / static_cast<double>(paths.size());
        }
    }
    return result;
}

// Plain truncated Taylor series for exp(M), no scaling-and-squaring; the
// independent route for validating the library's kernel.
inline netperturb::dense_matrix series_exponential(const netperturb::dense_matrix& m,
                                                   int terms = 60) {
    const int n = m.size();
    netperturb::dense_matrix result = netperturb::dense_matrix::identity(n);
    netperturb::dense_matrix term = netperturb::dense_matrix::identity(n);
    for (int k = 1; k <= terms; ++k) {
        term = term * m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                term.at(i, j) /= static_cast<double>(k);
                result.at(i, j) += term.at(i, j);
            }
    }
    return result;
}

// Dense h-step walk distribution from src (row of T^h), built from explicit
// matrix powers.
inline std::vector<double> dense_walk_row(const graph& g, int src, int h) {
    const int n = g.node_count();
    netperturb::dense_matrix t(n);
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) == 0) continue;
        double share = 1.0 / g.degree(u);
        for (int w : g.neighbors(u)) t.at(u, w) = share;
    }
    netperturb::dense_matrix power = netperturb::dense_matrix::identity(n);
    for (int step = 0; step < h; ++step) power = power * t;
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = power.at(src, j);
    return row;
}

// Convex hull vertex count by Andrew's monotone chain (strict turns), for
// Euler-formula checks on triangulations: E = 3N - 3 - hull_size.
inline int convex_hull_size(std::vector<std::array<double, 2>> pts) {
    const std::size_t n = pts.size();
    if (n < 3) return static_cast<int>(n);
    std::sort(pts.begin(), pts.end());
    auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& a,
                    const std::array<double, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::array<double, 2>> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    return static_cast<int>(k - 1);
}

// Minimal Newick reader for round-trip checks: returns the sets of leaf
// names under each internal node, order-independent.
struct parsed_newick {
    std::vector<std::string> leaves;
    std::vector<std::set<std::string>> clades;
};

inline parsed_newick parse_newick(const std::string& text) {
    parsed_newick out;
    std::vector<std::set<std::string>> stack;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) return;
        std::string name = token.substr(0, token.find(':'));
        token.clear();
        if (name.empty()) return;
        out.leaves.push_back(name);
        if (!stack.empty()) stack.back().insert(name);
    };
    for (char c : text) {
        if (c == '(') {
            stack.emplace_back();
        } else if (c == ',' ) {
            flush_token();
        } else if (c == ')') {
            flush_token();
            std::set<std::string> done = std::move(stack.back());
            stack.pop_back();
            out.clades.push_back(done);
            if (!stack.empty()) stack.back().insert(done.begin(), done.end());
        } else if (c == ';') {
            flush_token();
        } else if (c != ' ' && c != '\n') {
            token += c;
        }
    }
    return out;
}

} // namespace test_helpers

#endif

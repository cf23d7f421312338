#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "delaunay.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace netperturb {

namespace {

// Fenwick tree over per-node attachment weights (current degrees).
class prefix_sum_tree {
  public:
    explicit prefix_sum_tree(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

    void add(int i, std::int64_t delta) {
        for (int k = i + 1; k < static_cast<int>(tree_.size()); k += k & -k)
            tree_[static_cast<std::size_t>(k)] += delta;
    }

    std::int64_t total() const { return prefix(static_cast<int>(tree_.size()) - 1); }

    // Smallest i with prefix_sum(0..i) > r; requires 0 <= r < total().
    int find(std::int64_t r) const {
        int pos = 0;
        int log = 0;
        while ((2 << log) < static_cast<int>(tree_.size())) ++log;
        for (int step = 1 << log; step > 0; step >>= 1) {
            int next = pos + step;
            if (next < static_cast<int>(tree_.size()) &&
                tree_[static_cast<std::size_t>(next)] <= r) {
                pos = next;
                r -= tree_[static_cast<std::size_t>(next)];
            }
        }
        return pos; // 0-based element index
    }

  private:
    std::int64_t prefix(int k) const {
        std::int64_t s = 0;
        for (; k > 0; k -= k & -k) s += tree_[static_cast<std::size_t>(k)];
        return s;
    }

    std::vector<std::int64_t> tree_;
};

} // namespace

graph gen_er(node_id n, double avg_degree, std::uint64_t seed) {
    if (n < 1) throw argument_error("gen_er: n must be positive");
    if (avg_degree < 0) throw argument_error("gen_er: average degree must be nonnegative");
    const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const auto m = static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * avg_degree / 2.0));
    if (m > max_edges)
        throw argument_error("gen_er: requested " + std::to_string(m) + " edges exceeds maximum " +
                             std::to_string(max_edges));

    // Floyd's sampling: m distinct pair indices drawn uniformly.
    rng r(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::uint64_t j = max_edges - m; j < max_edges; ++j) {
        std::uint64_t t = r.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }

    std::vector<std::pair<node_id, node_id>> edges;
    edges.reserve(chosen.size());
    for (std::uint64_t k : chosen) edges.push_back(pair_from_flat_index(n, k));
    return graph(n, std::move(edges));
}

graph gen_ba(node_id n, int m, std::uint64_t seed) {
    if (n < 1) throw argument_error("gen_ba: n must be positive");
    if (m < 1 || m >= n)
        throw argument_error("gen_ba: need 1 <= m < n, got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));

    rng r(seed);
    std::vector<std::pair<node_id, node_id>> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2 +
                  static_cast<std::size_t>(m) * static_cast<std::size_t>(n - m));
    prefix_sum_tree tree(n);
    std::vector<std::int64_t> weight(static_cast<std::size_t>(n), 0); // degree, mirrored in tree

    auto bump = [&](node_id v, std::int64_t d) {
        tree.add(v, d);
        weight[static_cast<std::size_t>(v)] += d;
    };

    // Clique core on the first m nodes (single edgeless node when m = 1).
    for (node_id u = 0; u < m; ++u)
        for (node_id v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            bump(u, 1);
            bump(v, 1);
        }

    std::vector<int> targets(static_cast<std::size_t>(m));
    for (node_id w = m; w < n; ++w) {
        // Draw m distinct targets proportional to degree; each chosen node's
        // weight is held out of the tree until this node's draws are done.
        for (int j = 0; j < m; ++j) {
            std::int64_t total = tree.total();
            int t;
            if (total == 0) {
                // Only possible for the very first attachment when m = 1
                // (single-node core has degree 0): pick uniformly.
                t = static_cast<int>(r.below(static_cast<std::uint64_t>(w)));
            } else {
                t = tree.find(static_cast<std::int64_t>(r.below(static_cast<std::uint64_t>(total))));
            }
            targets[static_cast<std::size_t>(j)] = t;
            tree.add(t, -weight[static_cast<std::size_t>(t)]);
        }
        for (int j = 0; j < m; ++j) {
            int t = targets[static_cast<std::size_t>(j)];
            tree.add(t, weight[static_cast<std::size_t>(t)]); // restore
            edges.emplace_back(std::min<node_id>(t, w), std::max<node_id>(t, w));
            bump(t, 1);
        }
        bump(w, m);
    }

    return graph(n, std::move(edges));
}

graph gen_geo(int side, double epsilon, std::uint64_t seed) {
    if (side < 2) throw argument_error("gen_geo: lattice side must be >= 2");
    if (epsilon < 0) throw argument_error("gen_geo: epsilon must be nonnegative");

    const node_id n = static_cast<node_id>(side) * side;
    rng r(seed);
    std::vector<std::array<double, 2>> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            double dx = epsilon > 0 ? r.uniform(-epsilon, epsilon) : 0.0;
            double dy = epsilon > 0 ? r.uniform(-epsilon, epsilon) : 0.0;
            pts[static_cast<std::size_t>(i) * side + j] = {i + dx, j + dy};
        }

    std::vector<std::pair<node_id, node_id>> edges;
    if (epsilon == 0.0) {
        // Exact lattice: every unit square is cocircular, so the
        // triangulation is fixed by rule instead -- square sides plus the
        // lower-left-to-upper-right diagonal.
        auto id = [side](int i, int j) { return static_cast<node_id>(i) * side + j; };
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) {
                if (i + 1 < side) edges.emplace_back(id(i, j), id(i + 1, j));
                if (j + 1 < side) edges.emplace_back(id(i, j), id(i, j + 1));
                if (i + 1 < side && j + 1 < side) edges.emplace_back(id(i, j), id(i + 1, j + 1));
            }
    } else {
        delaunay_result tess = delaunay_triangulate(pts);
        edges.reserve(tess.edges.size());
        for (const auto& [u, v] : tess.edges)
            edges.emplace_back(static_cast<node_id>(u), static_cast<node_id>(v));
    }

    graph g(n, std::move(edges));
    g.set_coordinates(std::move(pts));
    return g;
}

} // namespace netperturb

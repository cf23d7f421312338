#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "errors.hpp"

namespace netperturb {

graph::graph(node_id node_count, std::vector<std::pair<node_id, node_id>> edge_list)
    : n_(node_count) {
    if (node_count <= 0) throw argument_error("graph: node count must be positive");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw argument_error("graph: self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw argument_error("graph: edge endpoint out of range: (" + std::to_string(u) +
                                 ", " + std::to_string(v) + ")");
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw argument_error("graph: duplicate edge in edge list");
    edges_ = std::move(edge_list);

    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void graph::check_node(node_id v) const {
    if (v < 0 || v >= n_)
        throw argument_error("graph: node id " + std::to_string(v) + " out of range [0, " +
                             std::to_string(n_) + ")");
}

std::span<const node_id> graph::neighbors(node_id v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
}

int graph::degree(node_id v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool graph::has_edge(node_id u, node_id v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void graph::remove_edge(node_id u, node_id v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v))
        throw argument_error("graph: cannot remove absent edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
    edges_.erase(it);
    auto drop = [](std::vector<node_id>& nbrs, node_id x) {
        nbrs.erase(std::lower_bound(nbrs.begin(), nbrs.end(), x));
    };
    drop(adj_[static_cast<std::size_t>(u)], v);
    drop(adj_[static_cast<std::size_t>(v)], u);
}

void graph::add_edge(node_id u, node_id v) {
    check_node(u);
    check_node(v);
    if (u == v) throw argument_error("graph: self-loop not allowed");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
        throw argument_error("graph: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") already present");
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v)),
                  std::make_pair(u, v));
    auto put = [](std::vector<node_id>& nbrs, node_id x) {
        nbrs.insert(std::lower_bound(nbrs.begin(), nbrs.end(), x), x);
    };
    put(adj_[static_cast<std::size_t>(u)], v);
    put(adj_[static_cast<std::size_t>(v)], u);
}

void graph::set_coordinates(std::vector<std::array<double, 2>> coords) {
    if (static_cast<node_id>(coords.size()) != n_)
        throw argument_error("graph: coordinate count does not match node count");
    coords_ = std::move(coords);
}

std::vector<int> bfs_distances(const graph& g, node_id src) {
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), k_unreachable);
    dist[static_cast<std::size_t>(src)] = 0;
    std::deque<node_id> queue{src};
    while (!queue.empty()) {
        node_id u = queue.front();
        queue.pop_front();
        int du = dist[static_cast<std::size_t>(u)];
        for (node_id w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] == k_unreachable) {
                dist[static_cast<std::size_t>(w)] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

ring_decomposition ring_decompose(const graph& g, node_id origin, int h_max) {
    if (origin < 0 || origin >= g.node_count())
        throw argument_error("ring_decompose: origin out of range");
    if (h_max < 0) throw argument_error("ring_decompose: h_max must be >= 0");

    ring_decomposition out;
    out.origin = origin;
    out.rings.assign(static_cast<std::size_t>(h_max) + 1, {});
    std::vector<int> dist = bfs_distances(g, origin);
    for (node_id v = 0; v < g.node_count(); ++v) {
        int d = dist[static_cast<std::size_t>(v)];
        if (d != k_unreachable && d <= h_max) out.rings[static_cast<std::size_t>(d)].push_back(v);
    }
    return out;
}

std::vector<std::vector<node_id>> connected_components(const graph& g) {
    std::vector<std::vector<node_id>> components;
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    for (node_id s = 0; s < g.node_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<node_id> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        std::deque<node_id> queue{s};
        while (!queue.empty()) {
            node_id u = queue.front();
            queue.pop_front();
            for (node_id w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::vector<std::vector<int>> all_pairs_distances(const graph& g) {
    std::vector<std::vector<int>> table;
    table.reserve(static_cast<std::size_t>(g.node_count()));
    for (node_id v = 0; v < g.node_count(); ++v) table.push_back(bfs_distances(g, v));
    return table;
}

std::pair<node_id, node_id> pair_from_flat_index(node_id n, std::uint64_t k) {
    // Pairs with first endpoint < u come first: u*n - u*(u+1)/2 of them.
    auto before = [n](std::uint64_t u) {
        return u * static_cast<std::uint64_t>(n) - u * (u + 1) / 2;
    };
    std::uint64_t lo = 0, hi = static_cast<std::uint64_t>(n) - 1;
    while (lo < hi) {
        std::uint64_t mid = (lo + hi + 1) / 2;
        if (before(mid) <= k)
            lo = mid;
        else
            hi = mid - 1;
    }
    auto u = static_cast<node_id>(lo);
    auto v = static_cast<node_id>(lo + 1 + (k - before(lo)));
    return {u, v};
}

} // namespace netperturb

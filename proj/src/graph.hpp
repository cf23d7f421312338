#ifndef NETPERTURB_GRAPH_HPP
#define NETPERTURB_GRAPH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netperturb {

using node_id = std::int32_t;

constexpr int k_unreachable = -1; // sentinel for infinite distance

// Undirected simple graph. Node ids are 0..node_count()-1, edges are stored
// as (u, v) with u < v in lexicographic order, and neighbor lists are kept
// sorted so that iteration order is deterministic. Instances are treated as
// immutable after construction except for the two explicit mutators used by
// the perturbation experiments.
class graph {
  public:
    graph() = default;
    graph(node_id node_count, std::vector<std::pair<node_id, node_id>> edge_list);

    node_id node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    const std::vector<std::pair<node_id, node_id>>& edges() const { return edges_; }
    std::span<const node_id> neighbors(node_id v) const;
    int degree(node_id v) const;
    bool has_edge(node_id u, node_id v) const;

    // Mutators used by the edge-removal and rewiring experiments. The edge
    // list and adjacency stay sorted so downstream iteration is stable.
    void remove_edge(node_id u, node_id v);
    void add_edge(node_id u, node_id v);

    bool has_coordinates() const { return !coords_.empty(); }
    const std::vector<std::array<double, 2>>& coordinates() const { return coords_; }
    void set_coordinates(std::vector<std::array<double, 2>> coords);

  private:
    void check_node(node_id v) const;

    node_id n_ = 0;
    std::vector<std::pair<node_id, node_id>> edges_;
    std::vector<std::vector<node_id>> adj_;
    std::vector<std::array<double, 2>> coords_;
};

// Nodes grouped by exact shortest-path distance from an origin.
// rings[0] = {origin}, rings[d] = nodes at distance d; always h_max+1 rings,
// empty beyond the origin's eccentricity.
struct ring_decomposition {
    node_id origin = 0;
    std::vector<std::vector<node_id>> rings;
};

ring_decomposition ring_decompose(const graph& g, node_id origin, int h_max);

// BFS distances from src; k_unreachable marks nodes in other components.
std::vector<int> bfs_distances(const graph& g, node_id src);

// Maximal connected node sets, ordered by smallest member id; members sorted.
std::vector<std::vector<node_id>> connected_components(const graph& g);

// Full distance table, d[u][v] = shortest-path length or k_unreachable.
std::vector<std::vector<int>> all_pairs_distances(const graph& g);

// Decode a flat index in [0, n*(n-1)/2) into the pair (u, v), u < v, in
// lexicographic order. Used for uniform pair sampling.
std::pair<node_id, node_id> pair_from_flat_index(node_id n, std::uint64_t k);

} // namespace netperturb

#endif

#ifndef NETPERTURB_GENERATORS_HPP
#define NETPERTURB_GENERATORS_HPP

#include <cstdint>

#include "graph.hpp"

namespace netperturb {

// Uniform random graph with exactly round(n * avg_degree / 2) edges sampled
// without replacement from all unordered pairs.
graph gen_er(node_id n, double avg_degree, std::uint64_t seed);

// Preferential-attachment growth. The initial core is a clique on m nodes
// (a single node for m = 1); every later node attaches to m distinct existing
// nodes drawn with probability proportional to current degree through a
// prefix-sum tree, so the result is simple by construction and has exactly
// m*(m-1)/2 + m*(n-m) edges.
graph gen_ba(node_id n, int m, std::uint64_t seed);

// Geographical network: side*side lattice points jittered by independent
// uniform [-epsilon, epsilon] offsets per coordinate, connected by their
// Delaunay triangulation. Node (i, j) has id i*side + j and position
// (i + dx, j + dy). epsilon = 0 is degenerate (cocircular lattice squares);
// the diagonal of every unit square is then fixed from the lower-left corner.
graph gen_geo(int side, double epsilon, std::uint64_t seed);

} // namespace netperturb

#endif

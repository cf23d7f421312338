#ifndef NETPERTURB_MEASUREMENTS_HPP
#define NETPERTURB_MEASUREMENTS_HPP

#include <array>
#include <string>
#include <vector>

#include "graph.hpp"
#include "matrix.hpp"

namespace netperturb {

// The measurement suite, in report order. Names follow the usual
// abbreviations (see measurement_name).
enum class measurement_id : int {
    degree = 0,
    clustering,
    betweenness,
    assortativity,
    avg_shortest_path,
    hier_degree_h2,
    hier_degree_h3,
    hier_degree_h4,
    hier_degree_h5,
    accessibility_h2,
    accessibility_h3,
    accessibility_h4,
    accessibility_h5,
    generalized_accessibility,
};

constexpr int k_measurement_count = 14;

const char* measurement_name(measurement_id id);
measurement_id measurement_from_name(const std::string& name);

// Cell diagnostics carried through experiment outputs.
enum class degeneracy : std::uint8_t {
    none = 0,
    zero_variance,  // assortativity on a regular graph: value 0 by convention
    disconnected,   // average path over reachable pairs only
    isolated_nodes, // walk measurements averaged over degree >= 1 nodes
    undefined,      // no value could be produced (stored as NaN)
};

const char* degeneracy_name(degeneracy d);

struct measurement_report {
    std::vector<double> per_node; // empty for intrinsically global scalars
    double network_value = 0.0;
    degeneracy flag = degeneracy::none;
};

double avg_degree(const graph& g);
measurement_report clustering_coefficient(const graph& g);
measurement_report betweenness_centrality(const graph& g);
measurement_report assortativity(const graph& g);
measurement_report avg_shortest_path(const graph& g);
measurement_report hierarchical_degree(const graph& g, int h);

// Row-stochastic uniform-walk matrix; throws if any node is isolated.
dense_matrix transition_matrix(const graph& g);

// Accessibility at level h is exp(entropy) of the h-step walk distribution
// from each node. full_walk uses the whole row of T^h; ring_restricted
// renormalizes the row over the nodes at distance exactly h (a node with an
// empty level-h ring scores 0 there).
enum class access_mode { full_walk, ring_restricted };

measurement_report accessibility(const graph& g, int h, access_mode mode = access_mode::full_walk);

// exp(entropy) of each row of exp(T)/e, the factorially-weighted all-length
// walk distribution.
measurement_report generalized_accessibility(const graph& g);

struct measure_options {
    access_mode mode = access_mode::full_walk;
};

struct measurement_suite {
    std::array<double, k_measurement_count> values{};
    std::array<degeneracy, k_measurement_count> flags{};

    double value(measurement_id id) const { return values[static_cast<std::size_t>(id)]; }
    degeneracy flag(measurement_id id) const { return flags[static_cast<std::size_t>(id)]; }
};

// All 14 network values. Degenerate cases are recorded per measurement, not
// fatal; throws only if no measurement at all can be computed.
measurement_suite measure_all(const graph& g, const measure_options& opts = {});

} // namespace netperturb

#endif

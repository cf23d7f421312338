#ifndef NETPERTURB_GRAPH_IO_HPP
#define NETPERTURB_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "graph.hpp"

namespace netperturb {

// Edge-list text format: first line "N E", then one "u v" pair per line
// (0-based, u < v, space-separated). Graphs with node coordinates carry them
// as extra columns on each edge line: "u v xu yu xv yv".
graph read_edge_list(std::istream& in);
graph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const graph& g);
void save_edge_list(const std::string& path, const graph& g);

} // namespace netperturb

#endif

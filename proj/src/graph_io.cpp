#include "graph_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace netperturb {

graph read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw io_error("edge list: empty input");
    std::istringstream header(line);
    long long n = 0, e = 0;
    if (!(header >> n >> e) || n <= 0 || e < 0)
        throw io_error("edge list: malformed header, expected 'N E'");

    std::vector<std::pair<node_id, node_id>> edges;
    edges.reserve(static_cast<std::size_t>(e));
    std::vector<std::array<double, 2>> coords;
    bool has_coords = false;

    for (long long i = 0; i < e; ++i) {
        if (!std::getline(in, line))
            throw io_error("edge list: expected " + std::to_string(e) + " edges, got " +
                           std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v))
            throw io_error("edge list: malformed edge line " + std::to_string(i + 2));
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw io_error("edge list: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") violates 0 <= u < v < N");
        edges.emplace_back(static_cast<node_id>(u), static_cast<node_id>(v));

        double xu, yu, xv, yv;
        if (row >> xu >> yu >> xv >> yv) {
            if (!has_coords) {
                has_coords = true;
                coords.assign(static_cast<std::size_t>(n), {0.0, 0.0});
            }
            coords[static_cast<std::size_t>(u)] = {xu, yu};
            coords[static_cast<std::size_t>(v)] = {xv, yv};
        }
    }

    graph g(static_cast<node_id>(n), std::move(edges));
    if (has_coords) g.set_coordinates(std::move(coords));
    return g;
}

graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    return read_edge_list(in);
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void write_edge_list(std::ostream& out, const graph& g) {
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    const bool coords = g.has_coordinates();
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v;
        if (coords) {
            const auto& cu = g.coordinates()[static_cast<std::size_t>(u)];
            const auto& cv = g.coordinates()[static_cast<std::size_t>(v)];
            out << ' ' << format_double(cu[0]) << ' ' << format_double(cu[1]) << ' '
                << format_double(cv[0]) << ' ' << format_double(cv[1]);
        }
        out << '\n';
    }
}

void save_edge_list(const std::string& path, const graph& g) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    write_edge_list(out, g);
    if (!out) throw io_error("write to '" + path + "' failed");
}

} // namespace netperturb

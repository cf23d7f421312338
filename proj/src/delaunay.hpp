#ifndef NETPERTURB_DELAUNAY_HPP
#define NETPERTURB_DELAUNAY_HPP

#include <array>
#include <utility>
#include <vector>

namespace netperturb {

struct delaunay_result {
    std::vector<std::array<int, 3>> triangles; // vertex indices, CCW
    std::vector<std::pair<int, int>> edges;    // unique, first < second, sorted
};

// Delaunay triangulation via incremental Bowyer-Watson insertion. Points
// exactly on a circumcircle count as outside it (strict in-circle test), so
// degenerate inputs such as an unperturbed lattice triangulate
// deterministically in insertion order.
delaunay_result delaunay_triangulate(const std::vector<std::array<double, 2>>& points);

} // namespace netperturb

#endif

#include "delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "errors.hpp"

namespace netperturb {

namespace {

using point = std::array<double, 2>;

double orient2d(const point& a, const point& b, const point& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// > 0 iff d lies strictly inside the circumcircle of CCW triangle (a, b, c).
// Coordinates are translated to d before forming the determinant, which keeps
// the arithmetic local and exact for lattice inputs.
double incircle(const point& a, const point& b, const point& c, const point& d) {
    double adx = a[0] - d[0], ady = a[1] - d[1];
    double bdx = b[0] - d[0], bdy = b[1] - d[1];
    double cdx = c[0] - d[0], cdy = c[1] - d[1];
    double ad = adx * adx + ady * ady;
    double bd = bdx * bdx + bdy * bdy;
    double cd = cdx * cdx + cdy * cdy;
    return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
           ad * (bdx * cdy - bdy * cdx);
}

// Bowyer-Watson with a ghost vertex: every hull edge (a, b), interior on the
// left, owns a ghost triangle (a, b, GHOST). A point conflicts with a ghost
// triangle when it lies strictly right of the directed hull edge, so hull
// slivers with arbitrarily large circumcircles are handled exactly --
// unlike a finite super-triangle, which silently drops them.
constexpr int k_ghost = -1;

struct tri {
    int a, b, c; // CCW; c may be k_ghost
    bool alive = true;
};

} // namespace

delaunay_result delaunay_triangulate(const std::vector<point>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw argument_error("delaunay: need at least 3 points");

    // Insertion order: ids as given, except that the third slot is the first
    // point not collinear with the first two (deterministic bootstrap).
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    int third = -1;
    for (int k = 2; k < n; ++k) {
        if (orient2d(points[static_cast<std::size_t>(order[0])],
                     points[static_cast<std::size_t>(order[1])],
                     points[static_cast<std::size_t>(order[k])]) != 0.0) {
            third = k;
            break;
        }
    }
    if (third < 0) throw numeric_error("delaunay: all points are collinear");
    std::rotate(order.begin() + 2, order.begin() + third, order.begin() + third + 1);

    std::vector<tri> tris;
    {
        int p0 = order[0], p1 = order[1], p2 = order[2];
        if (orient2d(points[static_cast<std::size_t>(p0)], points[static_cast<std::size_t>(p1)],
                     points[static_cast<std::size_t>(p2)]) < 0.0)
            std::swap(p1, p2);
        tris.push_back({p0, p1, p2, true});
        tris.push_back({p1, p0, k_ghost, true});
        tris.push_back({p2, p1, k_ghost, true});
        tris.push_back({p0, p2, k_ghost, true});
    }

    // Ghost triangles are stored as (a, b, ghost) where b -> a is a CCW hull
    // edge; their conflict region is the open exterior half-plane, the side
    // the ghost vertex lives on (strictly left of a -> b).
    auto conflicts = [&](const tri& t, const point& q) {
        if (t.c == k_ghost)
            return orient2d(points[static_cast<std::size_t>(t.a)],
                            points[static_cast<std::size_t>(t.b)], q) > 0.0;
        return incircle(points[static_cast<std::size_t>(t.a)],
                        points[static_cast<std::size_t>(t.b)],
                        points[static_cast<std::size_t>(t.c)], q) > 0.0;
    };

    for (int oi = 3; oi < n; ++oi) {
        const int p = order[static_cast<std::size_t>(oi)];
        const point& q = points[static_cast<std::size_t>(p)];

        std::vector<int> bad;
        for (int t = 0; t < static_cast<int>(tris.size()); ++t)
            if (tris[static_cast<std::size_t>(t)].alive &&
                conflicts(tris[static_cast<std::size_t>(t)], q))
                bad.push_back(t);
        if (bad.empty())
            throw numeric_error("delaunay: insertion point conflicts with no triangle "
                                "(degenerate input beyond tie handling)");

        // Directed cavity boundary: an edge survives if its reverse is not
        // also part of the cavity.
        std::map<std::pair<int, int>, int> directed;
        for (int t : bad) {
            const tri& tr = tris[static_cast<std::size_t>(t)];
            directed[{tr.a, tr.b}] += 1;
            directed[{tr.b, tr.c}] += 1;
            directed[{tr.c, tr.a}] += 1;
            tris[static_cast<std::size_t>(t)].alive = false;
        }
        for (const auto& [edge, count] : directed) {
            (void)count;
            if (directed.count({edge.second, edge.first}) > 0) continue; // interior
            int a = edge.first, b = edge.second, c = p;
            while (a == k_ghost || b == k_ghost) { // keep the ghost in slot c
                int t = a;
                a = b;
                b = c;
                c = t;
            }
            tris.push_back({a, b, c, true});
        }
    }

    delaunay_result out;
    std::vector<std::pair<int, int>> edges;
    for (const tri& tr : tris) {
        if (!tr.alive || tr.c == k_ghost) continue;
        out.triangles.push_back({tr.a, tr.b, tr.c});
        edges.push_back(std::minmax(tr.a, tr.b));
        edges.push_back(std::minmax(tr.b, tr.c));
        edges.push_back(std::minmax(tr.c, tr.a));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.edges = std::move(edges);
    return out;
}

} // namespace netperturb

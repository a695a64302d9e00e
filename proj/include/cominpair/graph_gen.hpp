#ifndef COMINPAIR_GRAPH_GEN_HPP
#define COMINPAIR_GRAPH_GEN_HPP

// Embedded-graph generators for tests and the self-test suite: grids,
// cycles, ladders, and random stacked triangulations. All rotations are
// constructed consistently so the Euler check passes by construction.

#include "cominpair/fkt.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace cominpair {

// rows x cols grid; vertex (r, c) is r*cols + c. Neighbor order is a fixed
// cyclic sweep (right, up, left, down), a planar rotation for the standard
// drawing.
inline EmbeddedGraph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(rows) * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            auto& out = rot[id(r, c)];
            if (c + 1 < cols) out.push_back(id(r, c + 1));
            if (r > 0) out.push_back(id(r - 1, c));
            if (c > 0) out.push_back(id(r, c - 1));
            if (r + 1 < rows) out.push_back(id(r + 1, c));
        }
    return EmbeddedGraph(rows * cols, std::move(rot));
}

inline EmbeddedGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
    return EmbeddedGraph(n, std::move(rot));
}

// Ladder with the given number of rungs: the 2 x rungs grid.
inline EmbeddedGraph ladder_graph(int rungs) {
    if (rungs < 2) throw std::invalid_argument("ladder needs at least 2 rungs");
    return grid_graph(2, rungs);
}

// Random planar triangulation by repeated vertex insertion: each step picks
// an internal triangular face (a, b, c) and joins a fresh vertex to its
// three corners. Rotation updates follow the successor rule so the new
// faces (a,b,d), (b,c,d), (c,a,d) trace exactly.
inline EmbeddedGraph stacked_triangulation(int vertices, std::mt19937_64& rng) {
    if (vertices < 3) throw std::invalid_argument("triangulation needs at least 3 vertices");
    std::vector<std::vector<int>> rot = {{1, 2}, {2, 0}, {0, 1}};
    struct Tri {
        int a, b, c;
    };
    std::vector<Tri> internal = {{0, 1, 2}};

    auto insert_after = [&rot](int vertex, int anchor, int fresh) {
        auto& r = rot[vertex];
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] == anchor) {
                r.insert(r.begin() + static_cast<long>(i) + 1, fresh);
                return;
            }
        throw std::logic_error("anchor neighbor missing from rotation");
    };

    for (int d = 3; d < vertices; ++d) {
        std::uniform_int_distribution<std::size_t> pick(0, internal.size() - 1);
        const std::size_t f = pick(rng);
        const auto [a, b, c] = internal[f];
        insert_after(a, c, d);
        insert_after(b, a, d);
        insert_after(c, b, d);
        rot.push_back({b, a, c});
        internal[f] = {a, b, d};
        internal.push_back({b, c, d});
        internal.push_back({c, a, d});
    }
    return EmbeddedGraph(vertices, std::move(rot));
}

} // namespace cominpair

#endif

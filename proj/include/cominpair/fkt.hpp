#ifndef COMINPAIR_FKT_HPP
#define COMINPAIR_FKT_HPP

// Weighted perfect-matching counts for planar graphs. The embedding is a
// rotation system; faces are traced by the successor rule and checked
// against the Euler formula, an orientation with odd co-traversal parity on
// every internal face is built by a spanning-tree sweep, and the matching
// sum is the absolute Pfaffian of the signed weighted adjacency matrix.
// For nonnegative weights the absolute value equals the matching sum
// exactly; with mixed-sign weights it is the matching sum up to one global
// sign.

#include "cominpair/linalg.hpp"
#include "cominpair/matrix.hpp"
#include "cominpair/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cominpair {

struct EmbeddedGraph {
    int V = 0;
    std::vector<std::vector<int>> rotation; // incident neighbors in cyclic order
    std::map<std::pair<int, int>, Rational> weights; // keyed by (min, max)

    EmbeddedGraph(int v, std::vector<std::vector<int>> rot)
        : V(v), rotation(std::move(rot)) {
        validate();
    }

    Rational weight(int u, int v) const {
        auto it = weights.find(std::minmax(u, v));
        return it == weights.end() ? Rational(1) : it->second;
    }
    void set_weight(int u, int v, const Rational& w) {
        Rational canon = w;
        canon.canonicalize(); // tolerate values built from raw num/den pairs
        weights[std::minmax(u, v)] = canon;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < V; ++u)
            for (int v : rotation[u])
                if (u < v) out.push_back({u, v});
        std::sort(out.begin(), out.end());
        return out;
    }
    int num_edges() const { return static_cast<int>(edge_list().size()); }

  private:
    void validate() const {
        if (V < 1 || static_cast<int>(rotation.size()) != V)
            throw std::invalid_argument("rotation system size must match vertex count");
        for (int u = 0; u < V; ++u) {
            for (std::size_t a = 0; a < rotation[u].size(); ++a) {
                int v = rotation[u][a];
                if (v < 0 || v >= V) throw std::invalid_argument("neighbor index out of range");
                if (v == u) throw std::invalid_argument("self loops are not allowed");
                for (std::size_t b = a + 1; b < rotation[u].size(); ++b)
                    if (rotation[u][b] == v)
                        throw std::invalid_argument("parallel edges are not allowed");
                if (std::count(rotation[v].begin(), rotation[v].end(), u) != 1)
                    throw std::invalid_argument("adjacency is not symmetric");
            }
        }
        std::vector<char> seen(V, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : rotation[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
        }
        if (reached != V) throw std::invalid_argument("graph must be connected");
    }
};

// One traced face: the directed edges of its boundary walk, in order.
struct Face {
    std::vector<std::pair<int, int>> arcs;
    int length() const { return static_cast<int>(arcs.size()); }
};

// Successor-rule face tracing: the arc after (u, v) leaves v toward the
// neighbor following u in v's rotation. Every directed edge lands in exactly
// one face; the Euler count V - E + F = 2 is what certifies planarity here.
inline std::vector<Face> trace_faces(const EmbeddedGraph& g) {
    std::map<std::pair<int, int>, char> used;
    for (int u = 0; u < g.V; ++u)
        for (int v : g.rotation[u]) used[{u, v}] = 0;
    const int E = static_cast<int>(used.size()) / 2;

    std::vector<Face> faces;
    for (auto& [start, done] : used) {
        if (done) continue;
        Face f;
        std::pair<int, int> arc = start;
        do {
            used[arc] = 1;
            f.arcs.push_back(arc);
            const auto& rot = g.rotation[arc.second];
            const auto pos = std::find(rot.begin(), rot.end(), arc.first) - rot.begin();
            const int w = rot[(pos + 1) % rot.size()];
            arc = {arc.second, w};
        } while (arc != start);
        faces.push_back(std::move(f));
    }

    const int F = static_cast<int>(faces.size());
    if (g.V - E + F != 2)
        throw std::invalid_argument("not a planar embedding: V - E + F = "
                                    + std::to_string(g.V - E + F) + ", expected 2");
    return faces;
}

// Deterministic outer-face pick: maximal length, ties broken by the
// smallest directed edge on the boundary. The count is outer-face
// independent; this only fixes the construction.
inline int outer_face_index(const std::vector<Face>& faces) {
    int best = 0;
    auto min_arc = [](const Face& f) {
        return *std::min_element(f.arcs.begin(), f.arcs.end());
    };
    for (int i = 1; i < static_cast<int>(faces.size()); ++i) {
        if (faces[i].length() > faces[best].length()
            || (faces[i].length() == faces[best].length()
                && min_arc(faces[i]) < min_arc(faces[best])))
            best = i;
    }
    return best;
}

struct Orientation {
    // edge (u, v) with u < v maps to true when directed u -> v
    std::map<std::pair<int, int>, bool> from_lo;

    bool directed_as(int u, int v) const {
        auto key = std::minmax(u, v);
        return from_lo.at(key) == (u == key.first);
    }
};

// Odd co-traversal parity on every internal face.
inline bool kasteleyn_valid(const EmbeddedGraph& g, const Orientation& o) {
    auto faces = trace_faces(g);
    const int outer = outer_face_index(faces);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (i == outer) continue;
        int co = 0;
        for (const auto& [u, v] : faces[i].arcs)
            if (o.directed_as(u, v)) ++co;
        if (co % 2 == 0) return false;
    }
    return true;
}

// Spanning-tree construction: tree edges keep a default direction, then
// internal faces are fixed one at a time, each via its last free edge. The
// faces and the non-tree edges form a tree, so a face with a single free
// edge always exists until every edge is oriented.
inline Orientation kasteleyn_orient(const EmbeddedGraph& g, int root = 0,
                                    bool flip_tree = false) {
    if (root < 0 || root >= g.V) throw std::invalid_argument("root vertex out of range");
    auto faces = trace_faces(g);
    const int outer = outer_face_index(faces);

    std::vector<char> in_tree_vertex(g.V, 0);
    std::map<std::pair<int, int>, char> tree_edge;
    in_tree_vertex[root] = 1;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.rotation[u])
            if (!in_tree_vertex[v]) {
                in_tree_vertex[v] = 1;
                tree_edge[std::minmax(u, v)] = 1;
                stack.push_back(v);
            }
    }

    Orientation o;
    std::map<std::pair<int, int>, char> decided;
    for (const auto& e : g.edge_list()) {
        if (tree_edge.count(e)) {
            o.from_lo[e] = !flip_tree;
            decided[e] = 1;
        } else {
            decided[e] = 0;
        }
    }

    // Pending free-edge counts per internal face, then peel.
    std::vector<int> free_count(faces.size(), 0);
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        for (const auto& [u, v] : faces[i].arcs) {
            auto key = std::minmax(u, v);
            edge_faces[key].push_back(i);
            if (i != outer && !decided[key]) ++free_count[i];
        }

    std::vector<int> ready;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != outer && free_count[i] == 1) ready.push_back(i);

    int remaining = 0;
    for (const auto& [e, d] : decided)
        if (!d) ++remaining;

    while (remaining > 0) {
        if (ready.empty())
            throw std::logic_error("face sweep stalled; embedding is not planar");
        const int f = ready.back();
        ready.pop_back();
        if (free_count[f] != 1) continue;

        int co = 0;
        std::pair<int, int> free_arc{-1, -1};
        for (const auto& [u, v] : faces[f].arcs) {
            auto key = std::minmax(u, v);
            if (!decided[key])
                free_arc = {u, v};
            else if (o.from_lo[key] == (u < v))
                ++co;
        }
        auto key = std::minmax(free_arc.first, free_arc.second);
        // Orient the free edge along the traversal exactly when that makes
        // the face's co-traversal count odd.
        const bool along = co % 2 == 0;
        o.from_lo[key] = along == (free_arc.first < free_arc.second);
        decided[key] = 1;
        --remaining;
        free_count[f] = 0;
        for (int other : edge_faces[key])
            if (other != f && other != outer && --free_count[other] == 1)
                ready.push_back(other);
    }
    return o;
}

// Signed weighted adjacency matrix of an oriented graph.
inline SkewMatrix<Rational> oriented_adjacency(const EmbeddedGraph& g, const Orientation& o) {
    SkewMatrix<Rational> m(g.V);
    for (const auto& [u, v] : g.edge_list())
        m.set(u, v, o.directed_as(u, v) ? g.weight(u, v) : Rational(-g.weight(u, v)));
    return m;
}

inline Rational fkt_count(const EmbeddedGraph& g) {
    auto o = kasteleyn_orient(g);
    Rational pf = pfaffian(oriented_adjacency(g, o));
    return pf < 0 ? Rational(-pf) : pf;
}

// Oracle: direct sum over perfect matchings of the edge-weight product.
inline Rational brute_force_matchings(const EmbeddedGraph& g) {
    if (g.V > 20) throw std::runtime_error("matching oracle capped at 20 vertices");
    if (g.V % 2 == 1) return Rational(0);
    std::vector<char> matched(g.V, 0);
    Rational total(0);
    auto rec = [&](auto&& self, int done) -> Rational {
        if (done == g.V) return Rational(1);
        int u = 0;
        while (matched[u]) ++u;
        matched[u] = 1;
        Rational sum(0);
        for (int v : g.rotation[u]) {
            if (matched[v]) continue;
            matched[v] = 1;
            sum += g.weight(u, v) * self(self, done + 2);
            matched[v] = 0;
        }
        matched[u] = 0;
        return sum;
    };
    total = rec(rec, 0);
    return total;
}

} // namespace cominpair

#endif

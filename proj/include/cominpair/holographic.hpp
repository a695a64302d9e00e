#ifndef COMINPAIR_HOLOGRAPHIC_HPP
#define COMINPAIR_HOLOGRAPHIC_HPP

// Not-all-equal counting as a tensor pairing. A formula becomes a bipartite
// incidence graph; every variable vertex carries the equality gadget, every
// clause vertex the not-all-equal gadget, and the number of satisfying
// assignments is the full contraction over all edge bit patterns. A
// Hadamard-type basis change (primal on variable tensors, its inverse
// transpose on clause tensors) leaves the contraction invariant and moves
// every local tensor into sub-Pfaffian form, which spinor_fit certifies
// coordinate by coordinate.

#include "cominpair/linalg.hpp"
#include "cominpair/matrix.hpp"
#include "cominpair/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cominpair {

struct NAEFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;

    NAEFormula(int n, std::vector<std::vector<int>> cls)
        : variables(n), clauses(std::move(cls)) {
        if (n < 0) throw std::invalid_argument("negative variable count");
        for (const auto& c : clauses) {
            if (c.size() < 2) throw std::invalid_argument("clause arity must be at least 2");
            for (std::size_t a = 0; a < c.size(); ++a) {
                if (c[a] < 1 || c[a] > n)
                    throw std::invalid_argument("clause variable index out of range");
                for (std::size_t b = a + 1; b < c.size(); ++b)
                    if (c[a] == c[b])
                        throw std::invalid_argument("clause repeats a variable");
            }
        }
    }
};

// One edge per occurrence of variable `var` in clause `clause`.
struct IncidenceEdge {
    int clause;
    int var;
};

struct IncidenceGraph {
    int variables = 0;
    int num_clauses = 0;
    std::vector<IncidenceEdge> edges; // sorted by (clause, var)

    std::vector<int> edges_of_variable(int i) const {
        std::vector<int> out;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].var == i) out.push_back(static_cast<int>(e));
        return out;
    }
    std::vector<int> edges_of_clause(int s) const {
        std::vector<int> out;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].clause == s) out.push_back(static_cast<int>(e));
        return out;
    }
    int degree_of_variable(int i) const {
        return static_cast<int>(edges_of_variable(i).size());
    }
};

inline IncidenceGraph build_incidence_graph(const NAEFormula& f) {
    IncidenceGraph g;
    g.variables = f.variables;
    g.num_clauses = static_cast<int>(f.clauses.size());
    for (int s = 0; s < g.num_clauses; ++s) {
        std::vector<int> vars = f.clauses[s];
        std::sort(vars.begin(), vars.end());
        for (int i : vars) g.edges.push_back({s, i});
    }
    return g;
}

// Dense tensor over an ordered edge list; coordinate index bit l is the bit
// of the edge at list position l.
struct LocalTensor {
    std::vector<int> edges;
    std::vector<Rational> coords;

    int arity() const { return static_cast<int>(edges.size()); }
};

namespace detail {

inline LocalTensor blank_tensor(std::vector<int> edges) {
    LocalTensor t;
    t.coords.assign(std::size_t(1) << edges.size(), Rational(0));
    t.edges = std::move(edges);
    return t;
}

inline std::vector<int> iota_edges(int d) {
    std::vector<int> e(d);
    std::iota(e.begin(), e.end(), 0);
    return e;
}

} // namespace detail

// Equality gadget: 1 when all incident edge bits agree, else 0.
inline LocalTensor variable_gadget(int degree, std::vector<int> edges = {}) {
    if (degree < 1) throw std::invalid_argument("variable gadget needs degree >= 1");
    if (edges.empty()) edges = detail::iota_edges(degree);
    if (static_cast<int>(edges.size()) != degree)
        throw std::invalid_argument("edge list does not match gadget degree");
    auto t = detail::blank_tensor(std::move(edges));
    t.coords.front() = 1;
    t.coords.back() = 1;
    return t;
}

// Not-all-equal gadget: 1 everywhere except the two constant patterns.
inline LocalTensor nae_gadget(int arity, std::vector<int> edges = {}) {
    if (arity < 2) throw std::invalid_argument("not-all-equal gadget needs arity >= 2");
    if (edges.empty()) edges = detail::iota_edges(arity);
    if (static_cast<int>(edges.size()) != arity)
        throw std::invalid_argument("edge list does not match gadget arity");
    auto t = detail::blank_tensor(std::move(edges));
    for (auto& c : t.coords) c = 1;
    t.coords.front() = 0;
    t.coords.back() = 0;
    return t;
}

inline LocalTensor scaled(LocalTensor t, const Rational& r) {
    for (auto& c : t.coords) c *= r;
    return t;
}

// Applies a 2x2 matrix on every edge factor (butterfly per axis).
inline LocalTensor basis_change(LocalTensor t, const Matrix<Rational>& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("edge basis change needs a 2x2 matrix");
    const int d = t.arity();
    for (int l = 0; l < d; ++l) {
        const std::size_t bit = std::size_t(1) << l;
        for (std::size_t idx = 0; idx < t.coords.size(); ++idx) {
            if (idx & bit) continue;
            const Rational a0 = t.coords[idx];
            const Rational a1 = t.coords[idx | bit];
            t.coords[idx] = m(0, 0) * a0 + m(0, 1) * a1;
            t.coords[idx | bit] = m(1, 0) * a0 + m(1, 1) * a1;
        }
    }
    return t;
}

enum class TransformSide { primal, dual };

inline Matrix<Rational> hadamard_matrix() {
    Matrix<Rational> t(2, 2);
    t(0, 0) = 1;
    t(0, 1) = 1;
    t(1, 0) = 1;
    t(1, 1) = -1;
    return t;
}

// Primal side applies T = [[1,1],[1,-1]] per edge; the dual side applies
// T/2, which is the inverse transpose of T, so paired contractions are
// unchanged.
inline LocalTensor hadamard_transform(const LocalTensor& t, TransformSide side) {
    auto m = hadamard_matrix();
    if (side == TransformSide::dual)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) /= 2;
    return basis_change(t, m);
}

// Dual transform scaled back to integers (by 2^arity), with the scale
// recorded so callers can undo it.
struct ScaledTensor {
    LocalTensor tensor;
    Rational scale;
};

inline ScaledTensor hadamard_dual_integral(const LocalTensor& t) {
    Rational scale(1);
    for (int l = 0; l < t.arity(); ++l) scale *= 2;
    return {scaled(hadamard_transform(t, TransformSide::dual), scale), scale};
}

// Certificate that a local tensor is lambda times a vector of sub-Pfaffians:
// lambda is the all-zeros coordinate, z is read off the weight-2 layer, and
// every coordinate is then checked against lambda * Pf_I(z) (0 for odd I).
struct SpinorFit {
    bool success = false;
    Rational lambda;
    SkewMatrix<Rational> z;
    std::string failure; // empty on success; else names the first bad pattern
};

namespace detail {

inline std::string pattern_name(std::uint32_t idx, int d) {
    std::string s(static_cast<std::size_t>(d), '0');
    for (int l = 0; l < d; ++l)
        if (idx & (std::uint32_t(1) << l)) s[l] = '1';
    return s;
}

} // namespace detail

inline SpinorFit spinor_fit(const LocalTensor& t) {
    SpinorFit fit;
    const int d = t.arity();
    fit.lambda = t.coords[0];
    if (fit.lambda == 0) {
        fit.failure = "leading coordinate is 0: tensor is outside the big cell";
        return fit;
    }
    fit.z = SkewMatrix<Rational>(d);
    for (int e = 0; e < d; ++e)
        for (int f = e + 1; f < d; ++f) {
            std::uint32_t idx = (std::uint32_t(1) << e) | (std::uint32_t(1) << f);
            fit.z.set(e, f, t.coords[idx] / fit.lambda);
        }
    for (std::uint32_t idx = 0; idx < t.coords.size(); ++idx) {
        const int weight = std::popcount(idx);
        Rational expect(0);
        if (weight % 2 == 0) {
            std::vector<int> I;
            for (int l = 0; l < d; ++l)
                if (idx & (std::uint32_t(1) << l)) I.push_back(l + 1);
            expect = fit.lambda * sub_pfaffian(fit.z, IndexSubset(I, d));
        }
        if (t.coords[idx] != expect) {
            fit.failure = "coordinate at pattern " + detail::pattern_name(idx, d) + " is "
                          + format_rational(t.coords[idx]) + ", sub-Pfaffian form needs "
                          + format_rational(expect);
            return fit;
        }
    }
    fit.success = true;
    return fit;
}

// Exhaustive search for an edge ordering under which the tensor fits; the
// fit is order-sensitive in general because reindexing flips sub-Pfaffian
// signs. Experimental helper, never called implicitly.
inline std::optional<std::pair<std::vector<int>, SpinorFit>>
spinor_fit_any_order(const LocalTensor& t, int max_arity = 8) {
    const int d = t.arity();
    if (d > max_arity)
        throw std::invalid_argument("edge-order search capped at arity "
                                    + std::to_string(max_arity));
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        LocalTensor p;
        p.edges = t.edges;
        p.coords.assign(t.coords.size(), Rational(0));
        for (std::uint32_t idx = 0; idx < t.coords.size(); ++idx) {
            std::uint32_t to = 0;
            for (int l = 0; l < d; ++l)
                if (idx & (std::uint32_t(1) << l)) to |= std::uint32_t(1) << perm[l];
            p.coords[to] = t.coords[idx];
        }
        auto fit = spinor_fit(p);
        if (fit.success) return std::make_pair(perm, fit);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

inline int contraction_edge_cap() {
    if (const char* env = std::getenv("COMINPAIR_MAX_EDGES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 62) return static_cast<int>(v);
        throw std::invalid_argument("COMINPAIR_MAX_EDGES must be an integer in 1..62");
    }
    return 24;
}

// Full contraction: sum over all edge bit assignments of the product of
// every tensor's coordinate at its induced sub-pattern. Plain enumeration
// with an early exit on zero factors; exactness makes the order irrelevant.
inline Rational contract(const std::vector<LocalTensor>& tensors, int num_edges) {
    Rational sum(0);
    const std::uint64_t patterns = std::uint64_t(1) << num_edges;
    for (std::uint64_t eps = 0; eps < patterns; ++eps) {
        Rational prod(1);
        bool dead = false;
        for (const auto& t : tensors) {
            std::uint32_t idx = 0;
            for (int l = 0; l < t.arity(); ++l)
                idx |= static_cast<std::uint32_t>((eps >> t.edges[l]) & 1) << l;
            const Rational& c = t.coords[idx];
            if (c == 0) {
                dead = true;
                break;
            }
            prod *= c;
        }
        if (!dead) sum += prod;
    }
    return sum;
}

namespace detail {

struct AssembledPairing {
    IncidenceGraph graph;
    std::vector<LocalTensor> tensors; // variable gadgets first, then clauses
    int isolated_variables = 0;
};

inline AssembledPairing assemble(const NAEFormula& f) {
    AssembledPairing out;
    out.graph = build_incidence_graph(f);
    const int num_edges = static_cast<int>(out.graph.edges.size());
    const int cap = contraction_edge_cap();
    if (num_edges > cap)
        throw std::runtime_error("formula has " + std::to_string(num_edges)
                                 + " edges, over the contraction cap " + std::to_string(cap)
                                 + " (set COMINPAIR_MAX_EDGES to raise it)");
    for (int i = 1; i <= f.variables; ++i) {
        auto incident = out.graph.edges_of_variable(i);
        const int deg = static_cast<int>(incident.size());
        if (deg == 0)
            ++out.isolated_variables;
        else
            out.tensors.push_back(variable_gadget(deg, std::move(incident)));
    }
    for (int s = 0; s < out.graph.num_clauses; ++s) {
        auto incident = out.graph.edges_of_clause(s);
        const int arity = static_cast<int>(incident.size());
        out.tensors.push_back(nae_gadget(arity, std::move(incident)));
    }
    return out;
}

inline std::int64_t count_from(const Rational& value, int isolated) {
    Rational total = value;
    for (int i = 0; i < isolated; ++i) total *= 2;
    if (!is_integer(total) || total < 0)
        throw std::logic_error("contraction did not produce a nonnegative integer");
    return to_int64(total);
}

} // namespace detail

// Number of satisfying assignments, as the raw gadget contraction. Isolated
// variables never meet an edge and contribute a free factor 2 each.
inline std::int64_t pairing_count(const NAEFormula& f) {
    auto asm_ = detail::assemble(f);
    Rational value = contract(asm_.tensors, static_cast<int>(asm_.graph.edges.size()));
    return detail::count_from(value, asm_.isolated_variables);
}

// Same count after the basis change on every tensor; equality with
// pairing_count witnesses the invariance of the pairing.
inline std::int64_t pairing_count_transformed(const NAEFormula& f) {
    auto asm_ = detail::assemble(f);
    const int vars_with_edges =
        static_cast<int>(asm_.tensors.size()) - asm_.graph.num_clauses;
    for (std::size_t t = 0; t < asm_.tensors.size(); ++t)
        asm_.tensors[t] = hadamard_transform(asm_.tensors[t],
                                             static_cast<int>(t) < vars_with_edges
                                                 ? TransformSide::primal
                                                 : TransformSide::dual);
    Rational value = contract(asm_.tensors, static_cast<int>(asm_.graph.edges.size()));
    return detail::count_from(value, asm_.isolated_variables);
}

// Contraction after an arbitrary invertible edge basis change: g on the
// variable side, the inverse transpose of g on the clause side.
inline std::int64_t pairing_count_with_basis(const NAEFormula& f, const Matrix<Rational>& g) {
    if (g.rows() != 2 || g.cols() != 2)
        throw std::invalid_argument("edge basis change needs a 2x2 matrix");
    Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    if (det == 0) throw std::invalid_argument("edge basis change must be invertible");
    Matrix<Rational> dual(2, 2); // (g^{-1})^T
    dual(0, 0) = g(1, 1) / det;
    dual(0, 1) = -g(1, 0) / det;
    dual(1, 0) = -g(0, 1) / det;
    dual(1, 1) = g(0, 0) / det;

    auto asm_ = detail::assemble(f);
    const int vars_with_edges =
        static_cast<int>(asm_.tensors.size()) - asm_.graph.num_clauses;
    for (std::size_t t = 0; t < asm_.tensors.size(); ++t)
        asm_.tensors[t] = basis_change(std::move(asm_.tensors[t]),
                                       static_cast<int>(t) < vars_with_edges ? g : dual);
    Rational value = contract(asm_.tensors, static_cast<int>(asm_.graph.edges.size()));
    return detail::count_from(value, asm_.isolated_variables);
}

// Ground-truth oracle: direct enumeration of variable assignments.
inline std::int64_t brute_force_count(const NAEFormula& f) {
    if (f.variables > 30)
        throw std::runtime_error("brute force capped at 30 variables");
    std::int64_t count = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << f.variables); ++a) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool all0 = true, all1 = true;
            for (int v : c) {
                if ((a >> (v - 1)) & 1)
                    all0 = false;
                else
                    all1 = false;
            }
            if (all0 || all1) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

} // namespace cominpair

#endif

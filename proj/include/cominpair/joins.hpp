#ifndef COMINPAIR_JOINS_HPP
#define COMINPAIR_JOINS_HPP

// Joins and multiplicative joins of spaces of linear forms, the
// normalization that turns an arithmetic tree circuit into such a variety
// expression, and generic dimension computation at random points.
//
// A Join collects sums [p_1 + ... + p_r], a MultJoin collects products
// [p_1 * ... * p_r]. Leaves are spaces of linear forms in v variables,
// either homogeneous (span of x_1..x_v) or affine (with a constant slot).
// Tangent spaces at a decomposed point follow the two classical rules: the
// tangent of a join is the sum of the tangents, the tangent of a
// multiplicative join is the sum of each factor's tangent multiplied by the
// other factors' values. Dimensions are reported for affine cones, i.e. as
// ranks of spanning sets; subtract 1 for the projective statement.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cominpair/linalg.hpp"
#include "cominpair/matrix.hpp"
#include "cominpair/poly.hpp"
#include "cominpair/rational.hpp"

namespace cominpair {

struct VarietyExpr {
    enum class Kind { leaf, mult_join, join };

    Kind kind = Kind::leaf;
    int variables = 0;
    bool affine = false;  // leaves only: the constant slot is part of the space
    std::vector<VarietyExpr> children;

    static VarietyExpr leaf(int variables, bool affine = false) {
        if (variables < 1) throw std::invalid_argument("a leaf needs at least one variable");
        VarietyExpr e;
        e.kind = Kind::leaf;
        e.variables = variables;
        e.affine = affine;
        return e;
    }

    static VarietyExpr mult_join(std::vector<VarietyExpr> children) {
        return internal(Kind::mult_join, std::move(children));
    }
    static VarietyExpr join(std::vector<VarietyExpr> children) {
        return internal(Kind::join, std::move(children));
    }

    bool is_leaf() const { return kind == Kind::leaf; }

    int leaf_count() const {
        if (is_leaf()) return 1;
        int total = 0;
        for (const VarietyExpr& c : children) total += c.leaf_count();
        return total;
    }

    // Degree of the polynomials the node's points live in: leaves hold
    // linear forms, products add degrees, sums keep the largest.
    int degree() const {
        if (is_leaf()) return 1;
        int d = 0;
        for (const VarietyExpr& c : children) {
            if (kind == Kind::mult_join)
                d += c.degree();
            else
                d = std::max(d, c.degree());
        }
        return d;
    }

    bool any_affine() const {
        if (is_leaf()) return affine;
        for (const VarietyExpr& c : children)
            if (c.any_affine()) return true;
        return false;
    }

    std::string to_string() const {
        if (is_leaf()) return affine ? "AV" : "PV";
        std::string out = kind == Kind::mult_join ? "MJ(" : "J(";
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i > 0) out += ",";
            out += children[i].to_string();
        }
        return out + ")";
    }

  private:
    static VarietyExpr internal(Kind kind, std::vector<VarietyExpr> children) {
        if (children.size() < 2)
            throw std::invalid_argument("joins need at least two children");
        for (const VarietyExpr& c : children)
            if (c.variables != children.front().variables)
                throw std::invalid_argument("join children disagree on the variable count");
        VarietyExpr e;
        e.kind = kind;
        e.variables = children.front().variables;
        e.children = std::move(children);
        return e;
    }
};

// Binary arithmetic circuits with variable and constant leaves.
struct CircuitNode {
    enum class Kind { plus, times, variable, constant };
    Kind kind = Kind::constant;
    int left = -1;
    int right = -1;
    int index = 0;  // 1-based variable index
    Rational value{0};
};

struct TreeCircuit {
    int variables = 0;
    std::vector<CircuitNode> nodes;
    int root = -1;
};

inline TreeCircuit circuit_variable(int variables, int index) {
    if (variables < 1) throw std::invalid_argument("circuit needs at least one variable");
    if (index < 1 || index > variables)
        throw std::invalid_argument("circuit variable index out of range");
    TreeCircuit c;
    c.variables = variables;
    CircuitNode n;
    n.kind = CircuitNode::Kind::variable;
    n.index = index;
    c.nodes.push_back(n);
    c.root = 0;
    return c;
}

inline TreeCircuit circuit_constant(int variables, const Rational& value) {
    if (variables < 1) throw std::invalid_argument("circuit needs at least one variable");
    TreeCircuit c;
    c.variables = variables;
    CircuitNode n;
    n.kind = CircuitNode::Kind::constant;
    n.value = value;
    c.nodes.push_back(n);
    c.root = 0;
    return c;
}

namespace detail {

inline TreeCircuit circuit_combine(CircuitNode::Kind op, TreeCircuit left,
                                   const TreeCircuit& right) {
    if (left.variables != right.variables)
        throw std::invalid_argument("circuit operands disagree on the variable count");
    const int shift = static_cast<int>(left.nodes.size());
    for (CircuitNode n : right.nodes) {
        if (n.left >= 0) n.left += shift;
        if (n.right >= 0) n.right += shift;
        left.nodes.push_back(n);
    }
    CircuitNode top;
    top.kind = op;
    top.left = left.root;
    top.right = right.root + shift;
    left.nodes.push_back(top);
    left.root = static_cast<int>(left.nodes.size()) - 1;
    return left;
}

}  // namespace detail

inline TreeCircuit circuit_plus(TreeCircuit left, const TreeCircuit& right) {
    return detail::circuit_combine(CircuitNode::Kind::plus, std::move(left), right);
}
inline TreeCircuit circuit_times(TreeCircuit left, const TreeCircuit& right) {
    return detail::circuit_combine(CircuitNode::Kind::times, std::move(left), right);
}

inline int internal_node_count(const TreeCircuit& c) {
    int total = 0;
    for (const CircuitNode& n : c.nodes)
        if (n.kind == CircuitNode::Kind::plus || n.kind == CircuitNode::Kind::times) ++total;
    return total;
}

namespace detail {

inline MultiPoly evaluate_circuit_node(const TreeCircuit& c, int node) {
    if (node < 0 || node >= static_cast<int>(c.nodes.size()))
        throw std::invalid_argument("circuit child index out of range");
    const CircuitNode& n = c.nodes[static_cast<std::size_t>(node)];
    const std::size_t vars = static_cast<std::size_t>(c.variables);
    switch (n.kind) {
        case CircuitNode::Kind::variable:
            return MultiPoly::variable(vars, static_cast<std::size_t>(n.index - 1));
        case CircuitNode::Kind::constant:
            return MultiPoly::constant(vars, n.value);
        case CircuitNode::Kind::plus:
            return evaluate_circuit_node(c, n.left) + evaluate_circuit_node(c, n.right);
        case CircuitNode::Kind::times:
            return evaluate_circuit_node(c, n.left) * evaluate_circuit_node(c, n.right);
    }
    throw std::logic_error("unreachable circuit node kind");
}

}  // namespace detail

inline MultiPoly evaluate_circuit(const TreeCircuit& c) {
    if (c.root < 0 || c.root >= static_cast<int>(c.nodes.size()))
        throw std::invalid_argument("circuit root out of range");
    return detail::evaluate_circuit_node(c, c.root);
}

// A point of the variety, decomposed: one linear form per leaf in
// depth-first order, plus the evaluated root polynomial.
struct PointDecomposition {
    VarietyExpr expr;
    std::vector<MultiPoly> leaf_forms;
    MultiPoly value;
};

inline MultiPoly linear_form(int variables, const std::vector<Rational>& coefficients,
                             const Rational& constant = Rational(0)) {
    if (static_cast<int>(coefficients.size()) != variables)
        throw std::invalid_argument("linear form needs one coefficient per variable");
    const std::size_t vars = static_cast<std::size_t>(variables);
    MultiPoly form = MultiPoly::constant(vars, constant);
    for (std::size_t i = 0; i < vars; ++i)
        form += MultiPoly::constant(vars, coefficients[i]) * MultiPoly::variable(vars, i);
    return form;
}

namespace detail {

inline MultiPoly decomposition_value(const VarietyExpr& e, const std::vector<MultiPoly>& forms,
                                     std::size_t& cursor) {
    if (e.is_leaf()) {
        if (cursor >= forms.size())
            throw std::invalid_argument("decomposition has too few leaf forms");
        return forms[cursor++];
    }
    MultiPoly total = decomposition_value(e.children.front(), forms, cursor);
    for (std::size_t i = 1; i < e.children.size(); ++i) {
        MultiPoly next = decomposition_value(e.children[i], forms, cursor);
        if (e.kind == VarietyExpr::Kind::mult_join)
            total = total * next;
        else
            total += next;
    }
    return total;
}

inline void check_leaf_form(const VarietyExpr& leaf, const MultiPoly& form) {
    if (form.variables() != static_cast<std::size_t>(leaf.variables))
        throw std::invalid_argument("leaf form has the wrong variable count");
    if (form.total_degree() > 1) throw std::invalid_argument("leaf form is not linear");
    if (!leaf.affine && form.terms().count(MultiPoly::Monomial(form.variables(), 0)))
        throw std::invalid_argument("homogeneous leaf form carries a constant term");
}

inline void check_decomposition_forms(const VarietyExpr& e, const std::vector<MultiPoly>& forms,
                                      std::size_t& cursor) {
    if (e.is_leaf()) {
        if (cursor >= forms.size())
            throw std::invalid_argument("decomposition has too few leaf forms");
        check_leaf_form(e, forms[cursor++]);
        return;
    }
    for (const VarietyExpr& c : e.children) check_decomposition_forms(c, forms, cursor);
}

}  // namespace detail

inline PointDecomposition make_decomposition(VarietyExpr expr, std::vector<MultiPoly> forms) {
    std::size_t cursor = 0;
    detail::check_decomposition_forms(expr, forms, cursor);
    if (cursor != forms.size())
        throw std::invalid_argument("decomposition has too many leaf forms");
    cursor = 0;
    MultiPoly value = detail::decomposition_value(expr, forms, cursor);
    return PointDecomposition{std::move(expr), std::move(forms), std::move(value)};
}

namespace detail {

inline void sample_forms(const VarietyExpr& e, std::mt19937_64& rng,
                         std::vector<MultiPoly>& forms) {
    if (!e.is_leaf()) {
        for (const VarietyExpr& c : e.children) sample_forms(c, rng, forms);
        return;
    }
    std::uniform_int_distribution<int> coeff(-9, 9);
    const int slots = e.variables + (e.affine ? 1 : 0);
    while (true) {
        std::vector<Rational> c(static_cast<std::size_t>(e.variables));
        Rational constant(0);
        bool nonzero = false;
        for (int s = 0; s < slots; ++s) {
            const int draw = coeff(rng);
            if (draw != 0) nonzero = true;
            if (s < e.variables)
                c[static_cast<std::size_t>(s)] = Rational(draw);
            else
                constant = Rational(draw);
        }
        if (!nonzero) continue;
        forms.push_back(linear_form(e.variables, c, constant));
        return;
    }
}

inline PointDecomposition sample_point_with(const VarietyExpr& e, std::mt19937_64& rng) {
    std::vector<MultiPoly> forms;
    forms.reserve(static_cast<std::size_t>(e.leaf_count()));
    sample_forms(e, rng, forms);
    return make_decomposition(e, std::move(forms));
}

}  // namespace detail

// Random nonzero integer linear forms on the leaves, coefficients in [-9, 9].
inline PointDecomposition sample_point(const VarietyExpr& e, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return detail::sample_point_with(e, rng);
}

namespace detail {

struct NodeTangent {
    MultiPoly value;
    std::vector<MultiPoly> span;
};

inline NodeTangent tangent_rec(const VarietyExpr& e, const std::vector<MultiPoly>& forms,
                               std::size_t& cursor) {
    const std::size_t vars = static_cast<std::size_t>(e.variables);
    if (e.is_leaf()) {
        NodeTangent t;
        t.value = forms[cursor++];
        if (e.affine) t.span.push_back(MultiPoly::constant(vars, Rational(1)));
        for (std::size_t i = 0; i < vars; ++i) t.span.push_back(MultiPoly::variable(vars, i));
        return t;
    }

    std::vector<NodeTangent> kids;
    kids.reserve(e.children.size());
    for (const VarietyExpr& c : e.children) kids.push_back(tangent_rec(c, forms, cursor));

    NodeTangent t;
    if (e.kind == VarietyExpr::Kind::join) {
        t.value = kids.front().value;
        for (std::size_t i = 1; i < kids.size(); ++i) t.value += kids[i].value;
        for (NodeTangent& k : kids)
            for (MultiPoly& s : k.span) t.span.push_back(std::move(s));
        return t;
    }

    // Product rule: each factor's tangent times the other factors' values.
    t.value = kids.front().value;
    for (std::size_t i = 1; i < kids.size(); ++i) t.value = t.value * kids[i].value;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        MultiPoly factor = MultiPoly::constant(vars, Rational(1));
        for (std::size_t j = 0; j < kids.size(); ++j)
            if (j != i) factor = factor * kids[j].value;
        for (const MultiPoly& s : kids[i].span) t.span.push_back(s * factor);
    }
    return t;
}

}  // namespace detail

// Spanning set of the affine tangent space at the decomposed point.
inline std::vector<MultiPoly> tangent_spanning_set(const PointDecomposition& p) {
    if (p.leaf_forms.size() != static_cast<std::size_t>(p.expr.leaf_count()))
        throw std::invalid_argument("decomposition does not match the expression");
    std::size_t cursor = 0;
    return detail::tangent_rec(p.expr, p.leaf_forms, cursor).span;
}

// Rank of the monomial-coefficient matrix of a list of polynomials.
inline int spanning_rank(const std::vector<MultiPoly>& span) {
    std::map<MultiPoly::Monomial, int> column;
    for (const MultiPoly& p : span)
        for (const auto& [m, c] : p.terms())
            column.emplace(m, static_cast<int>(column.size()));
    if (column.empty()) return 0;
    Matrix<Rational> m(static_cast<int>(span.size()), static_cast<int>(column.size()));
    for (std::size_t r = 0; r < span.size(); ++r)
        for (const auto& [mono, c] : span[r].terms())
            m(static_cast<int>(r), column.at(mono)) = c;
    return rank_exact(m);
}

// Generic affine-cone dimension, certified from below: the best tangent rank
// seen over random sample points. Deterministic under the seed.
inline int terracini_rank(const VarietyExpr& e, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("terracini_rank needs at least one trial");
    std::mt19937_64 rng(seed);
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        const PointDecomposition p = detail::sample_point_with(e, rng);
        best = std::max(best, spanning_rank(tangent_spanning_set(p)));
    }
    return best;
}

// Affine dimension of the polynomial space the node's points live in:
// degree-d forms, or degree-at-most-d polynomials when a constant slot is in
// play anywhere below.
inline long long ambient_dimension(const VarietyExpr& e) {
    const long long v = e.variables;
    const long long d = e.degree();
    const long long top = e.any_affine() ? v + d : v + d - 1;
    long long binom = 1;
    for (long long i = 1; i <= d; ++i) binom = binom * (top - d + i) / i;
    return binom;
}

// The classical expected-dimension recursion for affine cones: joins add
// dimensions, multiplicative joins add dimensions minus the scaling overlaps,
// both capped by the ambient space.
inline long long expected_dimension(const VarietyExpr& e) {
    if (e.is_leaf()) return e.variables + (e.affine ? 1 : 0);
    long long sum = 0;
    for (const VarietyExpr& c : e.children) sum += expected_dimension(c);
    if (e.kind == VarietyExpr::Kind::mult_join)
        sum -= static_cast<long long>(e.children.size()) - 1;
    return std::min(sum, ambient_dimension(e));
}

// Intermediate tree with same-operation chains flattened and the leaf forms
// the circuit itself dictates.
namespace detail {

struct RoseNode {
    enum class Kind { leaf, plus, times };
    Kind kind = Kind::leaf;
    MultiPoly form;  // leaves: the witness linear form
    std::vector<RoseNode> children;
};

inline RoseNode circuit_to_rose(const TreeCircuit& c, int node) {
    if (node < 0 || node >= static_cast<int>(c.nodes.size()))
        throw std::invalid_argument("circuit child index out of range");
    const CircuitNode& n = c.nodes[static_cast<std::size_t>(node)];
    const std::size_t vars = static_cast<std::size_t>(c.variables);
    RoseNode r;
    switch (n.kind) {
        case CircuitNode::Kind::variable:
            r.form = MultiPoly::variable(vars, static_cast<std::size_t>(n.index - 1));
            return r;
        case CircuitNode::Kind::constant:
            r.form = MultiPoly::constant(vars, n.value);
            return r;
        case CircuitNode::Kind::plus:
            r.kind = RoseNode::Kind::plus;
            break;
        case CircuitNode::Kind::times:
            r.kind = RoseNode::Kind::times;
            break;
    }
    for (int child : {n.left, n.right}) {
        RoseNode sub = circuit_to_rose(c, child);
        if (sub.kind == r.kind)
            for (RoseNode& grand : sub.children) r.children.push_back(std::move(grand));
        else
            r.children.push_back(std::move(sub));
    }
    return r;
}

// Sums of linear forms are linear forms: inside every plus node, merge all
// raw leaves into one. A node left with a single child collapses onto it.
inline RoseNode collapse_linear_sums(RoseNode n) {
    if (n.kind == RoseNode::Kind::leaf) return n;
    std::vector<RoseNode> kept;
    bool merged_any = false;
    MultiPoly merged;
    for (RoseNode& child : n.children) {
        RoseNode c = collapse_linear_sums(std::move(child));
        if (n.kind == RoseNode::Kind::plus && c.kind == RoseNode::Kind::leaf) {
            if (merged_any)
                merged += c.form;
            else
                merged = std::move(c.form);
            merged_any = true;
        } else {
            kept.push_back(std::move(c));
        }
    }
    if (merged_any) {
        RoseNode leaf;
        leaf.form = std::move(merged);
        kept.push_back(std::move(leaf));
    }
    if (kept.size() == 1) return std::move(kept.front());
    n.children = std::move(kept);
    return n;
}

inline VarietyExpr rose_to_expr(const RoseNode& n, int variables,
                                std::vector<MultiPoly>& forms) {
    if (n.kind == RoseNode::Kind::leaf) {
        forms.push_back(n.form);
        return VarietyExpr::leaf(variables, true);
    }
    std::vector<VarietyExpr> children;
    children.reserve(n.children.size());
    for (const RoseNode& c : n.children) children.push_back(rose_to_expr(c, variables, forms));
    return n.kind == RoseNode::Kind::times ? VarietyExpr::mult_join(std::move(children))
                                           : VarietyExpr::join(std::move(children));
}

}  // namespace detail

struct NormalizedCircuit {
    VarietyExpr expr;
    // Leaf assignment mirroring the circuit's own constants and variables;
    // its value is the circuit's polynomial, so that polynomial lies on the
    // variety by construction.
    PointDecomposition witness;
};

inline NormalizedCircuit normalize_circuit(const TreeCircuit& c) {
    if (c.root < 0 || c.root >= static_cast<int>(c.nodes.size()))
        throw std::invalid_argument("circuit root out of range");
    detail::RoseNode rose =
        detail::collapse_linear_sums(detail::circuit_to_rose(c, c.root));
    std::vector<MultiPoly> forms;
    VarietyExpr expr = detail::rose_to_expr(rose, c.variables, forms);
    PointDecomposition witness = make_decomposition(expr, std::move(forms));
    return NormalizedCircuit{std::move(expr), std::move(witness)};
}

inline bool vpe_bound_check(const VarietyExpr& e, int internal_nodes, int variables,
                            int trials = 2, std::uint64_t seed = 7111) {
    if (variables != e.variables)
        throw std::invalid_argument("bound variable count disagrees with the expression");
    if (internal_nodes < 0) throw std::invalid_argument("internal node count is negative");
    const long long bound =
        static_cast<long long>(variables + 1) * static_cast<long long>(internal_nodes + 1);
    return terracini_rank(e, trials, seed) <= bound;
}

// Uniform random binary circuit with exactly the requested number of
// internal nodes; leaves are mostly variables with an occasional nonzero
// constant.
inline TreeCircuit random_circuit(std::mt19937_64& rng, int variables, int internal_nodes) {
    if (internal_nodes < 0) throw std::invalid_argument("internal node count is negative");
    if (internal_nodes == 0) {
        std::uniform_int_distribution<int> pick(0, 9);
        if (pick(rng) < 8) {
            std::uniform_int_distribution<int> index(1, variables);
            return circuit_variable(variables, index(rng));
        }
        std::uniform_int_distribution<int> value(1, 9);
        std::uniform_int_distribution<int> sign(0, 1);
        const int c = value(rng) * (sign(rng) == 0 ? 1 : -1);
        return circuit_constant(variables, Rational(c));
    }
    std::uniform_int_distribution<int> split(0, internal_nodes - 1);
    std::uniform_int_distribution<int> op(0, 1);
    const int left = split(rng);
    TreeCircuit a = random_circuit(rng, variables, left);
    TreeCircuit b = random_circuit(rng, variables, internal_nodes - 1 - left);
    return op(rng) == 0 ? circuit_plus(std::move(a), b) : circuit_times(std::move(a), b);
}

}  // namespace cominpair

#endif

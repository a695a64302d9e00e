#ifndef COMINPAIR_IO_HPP
#define COMINPAIR_IO_HPP

// File formats for the command-line tools.
//
//   matrix text   first line "rows cols", then row-major entries as
//                 integers or "p/q" tokens, whitespace-separated
//   triple text   three matrix blocks back to back: a 1xm row, an mxm
//                 block, an mx1 column
//   formula JSON  {"variables": n, "clauses": [[1,2,3], ...]}, 1-based
//   graph JSON    {"vertices": V, "rotation": [[...], ...] 1-based cyclic
//                 neighbor lists, "weights": {"u-v": "p/q"}} (weights
//                 optional, keys 1-based with u < v)
//   circuit JSON  nested arrays ["+"|"*", left, right]; leaves are "x3"
//                 style variables, integers, or "p/q" strings
//
// Every parser throws std::invalid_argument with a message naming the
// input and the offending position.

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cominpair/detperm.hpp"
#include "cominpair/fkt.hpp"
#include "cominpair/holographic.hpp"
#include "cominpair/joins.hpp"
#include "cominpair/matrix.hpp"
#include "cominpair/rational.hpp"

namespace cominpair {

namespace detail {

inline Rational parse_rational_at(const std::string& token, const std::string& where) {
    try {
        return parse_rational(token);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
}

inline int require_int(std::istream& in, const std::string& where) {
    int value = 0;
    if (!(in >> value)) throw std::invalid_argument(where + ": expected an integer");
    return value;
}

}  // namespace detail

inline Matrix<Rational> read_matrix(std::istream& in, const std::string& name) {
    const int rows = detail::require_int(in, name + ": header");
    const int cols = detail::require_int(in, name + ": header");
    if (rows < 0 || cols < 0)
        throw std::invalid_argument(name + ": header: negative dimension");
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::string token;
            const std::string where =
                name + ": row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
            if (!(in >> token)) throw std::invalid_argument(where + ": missing entry");
            m(i, j) = detail::parse_rational_at(token, where);
        }
    return m;
}

namespace detail {

inline void expect_end(std::istream& in, const std::string& name) {
    std::string extra;
    if (in >> extra)
        throw std::invalid_argument(name + ": unexpected trailing content '" + extra + "'");
}

}  // namespace detail

inline Matrix<Rational> read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open file");
    Matrix<Rational> m = read_matrix(in, path);
    detail::expect_end(in, path);
    return m;
}

inline TangentTriple read_triple(std::istream& in, const std::string& name) {
    Matrix<Rational> x = read_matrix(in, name + " (row block)");
    Matrix<Rational> a = read_matrix(in, name + " (square block)");
    Matrix<Rational> y = read_matrix(in, name + " (column block)");
    try {
        return TangentTriple(std::move(x), std::move(a), std::move(y));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(name + ": " + e.what());
    }
}

inline TangentTriple read_triple_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open file");
    TangentTriple t = read_triple(in, path);
    detail::expect_end(in, path);
    return t;
}

namespace detail {

inline nlohmann::json parse_json(std::istream& in, const std::string& name) {
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(name + ": " + e.what());
    }
}

inline int json_int(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw std::invalid_argument(where + ": expected an integer, got " + j.dump());
    return j.get<int>();
}

}  // namespace detail

inline NAEFormula read_formula(std::istream& in, const std::string& name) {
    const nlohmann::json j = detail::parse_json(in, name);
    if (!j.is_object() || !j.contains("variables") || !j.contains("clauses"))
        throw std::invalid_argument(name + ": expected {\"variables\": n, \"clauses\": [...]}");
    const int variables = detail::json_int(j["variables"], name + ": variables");
    if (!j["clauses"].is_array())
        throw std::invalid_argument(name + ": clauses: expected an array of clauses");
    std::vector<std::vector<int>> clauses;
    for (std::size_t c = 0; c < j["clauses"].size(); ++c) {
        const nlohmann::json& jc = j["clauses"][c];
        const std::string where = name + ": clause " + std::to_string(c + 1);
        if (!jc.is_array()) throw std::invalid_argument(where + ": expected an array");
        std::vector<int> clause;
        for (std::size_t v = 0; v < jc.size(); ++v) {
            const std::string spot = where + ", literal " + std::to_string(v + 1);
            const int var = detail::json_int(jc[v], spot);
            if (var < 1 || var > variables)
                throw std::invalid_argument(spot + ": variable " + std::to_string(var) +
                                            " outside 1.." + std::to_string(variables));
            clause.push_back(var);
        }
        clauses.push_back(std::move(clause));
    }
    try {
        return NAEFormula(variables, std::move(clauses));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(name + ": " + e.what());
    }
}

inline NAEFormula read_formula_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open file");
    return read_formula(in, path);
}

inline EmbeddedGraph read_graph(std::istream& in, const std::string& name) {
    const nlohmann::json j = detail::parse_json(in, name);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("rotation"))
        throw std::invalid_argument(name +
                                    ": expected {\"vertices\": V, \"rotation\": [...]}");
    const int vertices = detail::json_int(j["vertices"], name + ": vertices");
    if (!j["rotation"].is_array() ||
        j["rotation"].size() != static_cast<std::size_t>(vertices < 0 ? 0 : vertices))
        throw std::invalid_argument(name + ": rotation: expected one neighbor list per vertex");
    std::vector<std::vector<int>> rotation;
    for (int v = 0; v < vertices; ++v) {
        const nlohmann::json& jr = j["rotation"][static_cast<std::size_t>(v)];
        const std::string where = name + ": rotation of vertex " + std::to_string(v + 1);
        if (!jr.is_array()) throw std::invalid_argument(where + ": expected an array");
        std::vector<int> list;
        for (std::size_t i = 0; i < jr.size(); ++i) {
            const int neighbor =
                detail::json_int(jr[i], where + ", entry " + std::to_string(i + 1));
            if (neighbor < 1 || neighbor > vertices)
                throw std::invalid_argument(where + ", entry " + std::to_string(i + 1) +
                                            ": vertex " + std::to_string(neighbor) +
                                            " out of range");
            list.push_back(neighbor - 1);
        }
        rotation.push_back(std::move(list));
    }

    EmbeddedGraph g = [&] {
        try {
            return EmbeddedGraph(vertices, std::move(rotation));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(name + ": " + e.what());
        }
    }();

    if (j.contains("weights")) {
        if (!j["weights"].is_object())
            throw std::invalid_argument(name + ": weights: expected an object");
        for (const auto& [key, value] : j["weights"].items()) {
            const std::string where = name + ": weight \"" + key + "\"";
            const auto dash = key.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument(where + ": key must look like \"u-v\"");
            int u = 0, v = 0;
            try {
                u = std::stoi(key.substr(0, dash));
                v = std::stoi(key.substr(dash + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument(where + ": key must look like \"u-v\"");
            }
            if (u < 1 || u > vertices || v < 1 || v > vertices)
                throw std::invalid_argument(where + ": vertex out of range");
            if (!value.is_string())
                throw std::invalid_argument(where + ": expected a \"p/q\" string");
            try {
                g.set_weight(u - 1, v - 1,
                             detail::parse_rational_at(value.get<std::string>(), where));
            } catch (const std::invalid_argument& e) {
                std::string msg = e.what();
                if (msg.rfind(where, 0) == 0) throw;
                throw std::invalid_argument(where + ": " + msg);
            }
        }
    }
    return g;
}

inline EmbeddedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open file");
    return read_graph(in, path);
}

namespace detail {

inline bool is_variable_leaf(const nlohmann::json& j) {
    if (!j.is_string()) return false;
    const std::string s = j.get<std::string>();
    if (s.size() < 2 || s[0] != 'x') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline int max_variable_index(const nlohmann::json& j, const std::string& where) {
    if (is_variable_leaf(j)) return std::stoi(j.get<std::string>().substr(1));
    if (!j.is_array()) return 0;
    if (j.size() != 3)
        throw std::invalid_argument(where + ": expected [op, left, right], got " + j.dump());
    return std::max(max_variable_index(j[1], where + "[1]"),
                    max_variable_index(j[2], where + "[2]"));
}

inline TreeCircuit circuit_from_json(const nlohmann::json& j, int variables,
                                     const std::string& where) {
    if (is_variable_leaf(j)) {
        const int index = std::stoi(j.get<std::string>().substr(1));
        if (index < 1)
            throw std::invalid_argument(where + ": variable index must be at least 1");
        return circuit_variable(variables, index);
    }
    if (j.is_string())
        return circuit_constant(variables,
                                parse_rational_at(j.get<std::string>(), where));
    if (j.is_number_integer())
        return circuit_constant(variables, Rational(j.get<long>()));
    if (j.is_array()) {
        if (j.size() != 3)
            throw std::invalid_argument(where + ": expected [op, left, right]");
        if (!j[0].is_string() ||
            (j[0].get<std::string>() != "+" && j[0].get<std::string>() != "*"))
            throw std::invalid_argument(where + ": operator must be \"+\" or \"*\"");
        TreeCircuit left = circuit_from_json(j[1], variables, where + "[1]");
        TreeCircuit right = circuit_from_json(j[2], variables, where + "[2]");
        return j[0].get<std::string>() == "+" ? circuit_plus(std::move(left), right)
                                              : circuit_times(std::move(left), right);
    }
    throw std::invalid_argument(where + ": expected an operator node, \"xK\", or a constant");
}

}  // namespace detail

inline TreeCircuit read_circuit(std::istream& in, const std::string& name) {
    const nlohmann::json j = detail::parse_json(in, name);
    const int variables = std::max(1, detail::max_variable_index(j, name));
    return detail::circuit_from_json(j, variables, name);
}

inline TreeCircuit read_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open file");
    return read_circuit(in, path);
}

}  // namespace cominpair

#endif

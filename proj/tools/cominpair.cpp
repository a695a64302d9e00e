// Batch front door. Every subcommand reads the text/JSON formats described
// in io.hpp and prints one line of JSON on stdout; anything meant for a
// human goes to stderr. Exit 0 on success, 2 on bad input, 3 when a
// --verify/--brute style comparison disagrees or the acceptance suite has a
// failing criterion.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cominpair/bigcell.hpp"
#include "cominpair/counting.hpp"
#include "cominpair/detperm.hpp"
#include "cominpair/fkt.hpp"
#include "cominpair/holographic.hpp"
#include "cominpair/io.hpp"
#include "cominpair/joins.hpp"
#include "cominpair/linalg.hpp"
#include "cominpair/rational.hpp"
#include "cominpair/selftest.hpp"

namespace {

using nlohmann::json;
using namespace cominpair;

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_mismatch = 3;

void emit(const json& j) { std::cout << j.dump() << '\n'; }

PairingFamily family_for(const std::string& name, const Matrix<Rational>& x, int degree) {
    if (name == "grassmannian")
        return PairingFamily::grassmannian(x.rows(), x.rows() + x.cols());
    if (name == "spinor") return PairingFamily::spinor(x.rows());
    if (name == "lagrangian") return PairingFamily::lagrangian(x.rows());
    if (name == "segre") return PairingFamily::segre(x.cols(), x.rows());
    if (name == "veronese") {
        if (degree < 1)
            throw std::invalid_argument("the veronese family needs --degree (a positive power)");
        return PairingFamily::veronese(degree, x.rows() == 1 ? x.cols() : x.rows());
    }
    throw std::invalid_argument(
        "unknown family '" + name +
        "' (choose grassmannian, spinor, lagrangian, segre, or veronese)");
}

json ops_json(const OpCounts& c) {
    return json{{"multiplications", c.multiplications},
                {"additions", c.additions},
                {"total", c.total()}};
}

int run_pair(const std::string& family, const std::string& xpath, const std::string& ypath,
             bool verify, bool count_ops, int degree) {
    const Matrix<Rational> xm = read_matrix_file(xpath);
    const Matrix<Rational> ym = read_matrix_file(ypath);
    const PairingFamily fam = family_for(family, xm, degree);
    const BigCellPoint x(fam, xm);
    const BigCellPoint y(fam, ym);

    json out{{"family", fam.name()}};
    int code = exit_ok;
    if (verify) {
        const Rational fast = fast_pair(x, y);
        const Rational naive = naive_pair(expand(x), expand_dual(y));
        out["fast"] = format_rational(fast);
        out["naive"] = format_rational(naive);
        out["agree"] = fast == naive;
        if (fast != naive) code = exit_mismatch;
    } else {
        out["value"] = format_rational(fast_pair(x, y));
    }
    if (count_ops) {
        out["ops"] = json{{"fast", ops_json(count_operations(x, y))},
                          {"naive", ops_json(count_operations_naive(x, y))}};
    }
    emit(out);
    return code;
}

int run_nae(const std::string& path, bool brute, bool transformed) {
    const NAEFormula f = read_formula_file(path);
    const std::int64_t count = transformed ? pairing_count_transformed(f) : pairing_count(f);
    json out{{"count", count}};
    if (transformed) out["transformed"] = true;
    int code = exit_ok;
    if (brute) {
        const std::int64_t reference = brute_force_count(f);
        out["agree"] = count == reference;
        if (count != reference) {
            out["brute"] = reference;
            code = exit_mismatch;
        }
    }
    emit(out);
    return code;
}

int run_fkt(const std::string& path, bool brute) {
    const EmbeddedGraph g = read_graph_file(path);
    const Rational fast = fkt_count(g);
    json out{{"matchings", format_rational(fast)}};
    int code = exit_ok;
    if (brute) {
        const Rational reference = brute_force_matchings(g);
        out["agree"] = fast == reference;
        if (fast != reference) {
            out["brute"] = format_rational(reference);
            code = exit_mismatch;
        }
    }
    emit(out);
    return code;
}

int run_det(const std::string& path) {
    emit(json{{"value", format_rational(det_exact(read_matrix_file(path)))}});
    return exit_ok;
}

int run_perm(const std::string& path) {
    emit(json{{"value", format_rational(permanent_ryser(read_matrix_file(path)))}});
    return exit_ok;
}

int run_taylor(const std::string& path, int kmax) {
    const TangentTriple t = read_triple_file(path);
    const TaylorCoefficients c = det_local_taylor(t, kmax);
    auto strings = [](const std::vector<Rational>& v) {
        json arr = json::array();
        for (const Rational& r : v) arr.push_back(format_rational(r));
        return arr;
    };
    emit(json{{"kmax", kmax},
              {"graph", strings(c.graph)},
              {"powers", strings(c.powers)},
              {"agree", c.agree}});
    return c.agree ? exit_ok : exit_mismatch;
}

int run_joindim(const std::string& path, int trials, std::uint64_t seed) {
    const TreeCircuit c = read_circuit_file(path);
    const NormalizedCircuit n = normalize_circuit(c);
    const int rank = terracini_rank(n.expr, trials, seed);
    const long long expected = expected_dimension(n.expr);
    const bool bound_ok =
        vpe_bound_check(n.expr, internal_node_count(c), c.variables, trials, seed);
    emit(json{{"expression", n.expr.to_string()},
              {"variables", c.variables},
              {"rank", rank},
              {"expected", expected},
              {"ambient", ambient_dimension(n.expr)},
              {"degenerate", rank < expected},
              {"bound_ok", bound_ok}});
    return bound_ok && rank <= expected ? exit_ok : exit_mismatch;
}

int run_selftest(int only) {
    std::vector<CriterionResult> results;
    if (only > 0)
        results.push_back(run_criterion(only));
    else
        results = run_all_criteria();

    json criteria = json::array();
    int failed = 0;
    for (const CriterionResult& r : results) {
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": "
                  << r.detail << '\n';
        criteria.push_back(
            json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!r.pass) ++failed;
    }
    emit(json{{"passed", static_cast<int>(results.size()) - failed},
              {"failed", failed},
              {"criteria", criteria}});
    return failed == 0 ? exit_ok : exit_mismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cominuscule pairings, planar matchings, and circuit geometry"};
    app.require_subcommand(1);

    std::string pair_family, pair_x, pair_y;
    bool pair_verify = false, pair_ops = false;
    int pair_degree = 0;
    auto* pair_cmd = app.add_subcommand("pair", "evaluate a minuscule pairing on two points");
    pair_cmd->add_option("family", pair_family,
                         "grassmannian | spinor | lagrangian | segre | veronese")
        ->required();
    pair_cmd->add_option("xfile", pair_x, "first point, matrix text format")->required();
    pair_cmd->add_option("yfile", pair_y, "second point, matrix text format")->required();
    pair_cmd->add_flag("--verify", pair_verify, "also run the naive expansion and compare");
    pair_cmd->add_flag("--count-ops", pair_ops, "report arithmetic operation counts");
    pair_cmd->add_option("--degree", pair_degree, "veronese power (required for that family)");

    std::string nae_path;
    bool nae_brute = false, nae_transformed = false;
    auto* nae_cmd = app.add_subcommand("nae", "count not-all-equal satisfying assignments");
    nae_cmd->add_option("formula", nae_path, "formula JSON file")->required();
    nae_cmd->add_flag("--brute", nae_brute, "compare against exhaustive enumeration");
    nae_cmd->add_flag("--transformed", nae_transformed, "contract in the transformed basis");

    std::string fkt_path;
    bool fkt_brute = false;
    auto* fkt_cmd = app.add_subcommand("fkt", "count weighted perfect matchings of a planar graph");
    fkt_cmd->add_option("graph", fkt_path, "graph JSON file with a rotation system")->required();
    fkt_cmd->add_flag("--brute", fkt_brute, "compare against exhaustive enumeration");

    std::string det_path;
    auto* det_cmd = app.add_subcommand("det", "exact determinant of a rational matrix");
    det_cmd->add_option("matrix", det_path, "matrix text file")->required();

    std::string perm_path;
    auto* perm_cmd = app.add_subcommand("perm", "exact permanent of a rational matrix");
    perm_cmd->add_option("matrix", perm_path, "matrix text file")->required();

    std::string taylor_path;
    int taylor_kmax = 0;
    auto* taylor_cmd =
        app.add_subcommand("taylor", "Taylor coefficients of the local determinant graph");
    taylor_cmd->add_option("triple", taylor_path, "tangent triple file (row, square, column)")
        ->required();
    taylor_cmd->add_option("--kmax", taylor_kmax, "highest coefficient order (at least 2)")
        ->required();

    std::string join_path;
    int join_trials = 2;
    std::uint64_t join_seed = 7111;
    auto* join_cmd =
        app.add_subcommand("joindim", "tangent dimension of a circuit's join variety");
    join_cmd->add_option("circuit", join_path, "circuit JSON file")->required();
    join_cmd->add_option("--trials", join_trials, "random smooth points to try (default 2)");
    join_cmd->add_option("--seed", join_seed, "random seed (default 7111)");

    int selftest_only = 0;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    selftest_cmd->add_option("--only", selftest_only, "run a single criterion 1..9");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (pair_cmd->parsed())
            return run_pair(pair_family, pair_x, pair_y, pair_verify, pair_ops, pair_degree);
        if (nae_cmd->parsed()) return run_nae(nae_path, nae_brute, nae_transformed);
        if (fkt_cmd->parsed()) return run_fkt(fkt_path, fkt_brute);
        if (det_cmd->parsed()) return run_det(det_path);
        if (perm_cmd->parsed()) return run_perm(perm_path);
        if (taylor_cmd->parsed()) return run_taylor(taylor_path, taylor_kmax);
        if (join_cmd->parsed()) return run_joindim(join_path, join_trials, join_seed);
        if (selftest_cmd->parsed()) return run_selftest(selftest_only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}

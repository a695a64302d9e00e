// Not-all-equal tensor pairing: incidence graphs, gadget tensors, the
// Hadamard basis change and its two pinned coordinate displays, sub-Pfaffian
// fits of the transformed gadgets, and count agreement between the raw
// contraction, the transformed contraction, and brute force.

#include "cominpair/holographic.hpp"

#include "random_gen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace cominpair;
using cominpair::testing::random_rational;

namespace {

std::string joined(const std::vector<Rational>& coords) {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += format_rational(coords[i]);
    }
    return s;
}

int nonzeros(const LocalTensor& t) {
    int k = 0;
    for (const auto& c : t.coords)
        if (c != 0) ++k;
    return k;
}

} // namespace

TEST_CASE("incidence graph construction") {
    SECTION("single clause") {
        auto g = build_incidence_graph(NAEFormula(3, {{1, 2, 3}}));
        REQUIRE(g.edges.size() == 3);
        CHECK(g.degree_of_variable(1) == 1);
        CHECK(g.degree_of_variable(2) == 1);
        CHECK(g.degree_of_variable(3) == 1);
    }
    SECTION("shared variables and (clause, variable) edge order") {
        auto g = build_incidence_graph(NAEFormula(4, {{3, 1, 2}, {1, 2, 4}}));
        REQUIRE(g.edges.size() == 6);
        CHECK(g.degree_of_variable(1) == 2);
        CHECK(g.degree_of_variable(2) == 2);
        CHECK(g.degree_of_variable(3) == 1);
        CHECK(g.degree_of_variable(4) == 1);
        std::vector<std::pair<int, int>> order;
        for (const auto& e : g.edges) order.push_back({e.clause, e.var});
        std::vector<std::pair<int, int>> expect =
            {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 4}};
        CHECK(order == expect);
    }
    SECTION("empty clause list leaves isolated variables") {
        auto g = build_incidence_graph(NAEFormula(5, {}));
        CHECK(g.edges.empty());
        CHECK(g.variables == 5);
    }
}

TEST_CASE("formula validation") {
    CHECK_THROWS_AS(NAEFormula(3, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(NAEFormula(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(NAEFormula(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(NAEFormula(3, {{0, 2}}), std::invalid_argument);
    CHECK_NOTHROW(NAEFormula(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("gadget tensors") {
    CHECK(joined(variable_gadget(1).coords) == "1,1");
    CHECK(joined(variable_gadget(2).coords) == "1,0,0,1");
    auto v3 = variable_gadget(3);
    CHECK(v3.coords[0] == 1);
    CHECK(v3.coords[7] == 1);
    CHECK(nonzeros(v3) == 2);

    CHECK(joined(nae_gadget(2).coords) == "0,1,1,0");
    CHECK(nonzeros(nae_gadget(3)) == 6);
    CHECK(nonzeros(nae_gadget(4)) == 14);

    CHECK_THROWS_AS(variable_gadget(0), std::invalid_argument);
    CHECK_THROWS_AS(nae_gadget(1), std::invalid_argument);
}

TEST_CASE("basis change coordinate displays") {
    // Equality gadget under the primal side: 2 on every even-parity pattern.
    auto v = hadamard_transform(variable_gadget(3), TransformSide::primal);
    CHECK(joined(v.coords) == "2,0,0,2,0,2,2,0");

    // Not-all-equal gadget under the dual side, cleared to integers: 6 at
    // the zero pattern, -2 on the other even-parity patterns.
    auto r = hadamard_dual_integral(nae_gadget(3));
    CHECK(r.scale == 8);
    CHECK(joined(r.tensor.coords) == "6,0,0,-2,0,-2,-2,0");

    // Without the clearing the same shape appears over denominator 8.
    auto rq = hadamard_transform(nae_gadget(3), TransformSide::dual);
    CHECK(joined(rq.coords) == "3/4,0,0,-1/4,0,-1/4,-1/4,0");
}

TEST_CASE("basis change algebra") {
    auto t = nae_gadget(3);

    // Primal twice multiplies by 2 per edge.
    auto twice = hadamard_transform(hadamard_transform(t, TransformSide::primal),
                                    TransformSide::primal);
    CHECK(joined(twice.coords) == joined(scaled(t, 8).coords));

    // Dual is the inverse transpose of primal, and for a symmetric matrix
    // that is a genuine inverse: primal then dual is the identity.
    auto back = hadamard_transform(hadamard_transform(t, TransformSide::primal),
                                   TransformSide::dual);
    CHECK(joined(back.coords) == joined(t.coords));

    CHECK_THROWS_AS(basis_change(t, Matrix<Rational>(2, 3)), std::invalid_argument);
}

TEST_CASE("sub-Pfaffian fit of transformed gadgets") {
    SECTION("equality gadget, arity 3") {
        auto fit = spinor_fit(hadamard_transform(variable_gadget(3), TransformSide::primal));
        REQUIRE(fit.success);
        CHECK(fit.lambda == 2);
        for (int e = 0; e < 3; ++e)
            for (int f = e + 1; f < 3; ++f) CHECK(fit.z.at(e, f) == 1);
    }

    SECTION("not-all-equal gadget, arity 3, integral scaling") {
        auto fit = spinor_fit(hadamard_dual_integral(nae_gadget(3)).tensor);
        REQUIRE(fit.success);
        CHECK(fit.lambda == 6);
        CHECK(fit.z.at(0, 1) == Rational(-1, 3));
        CHECK(fit.z.at(0, 2) == Rational(-1, 3));
        CHECK(fit.z.at(1, 2) == Rational(-1, 3));
    }

    SECTION("raw not-all-equal gadget is outside the big cell") {
        auto fit = spinor_fit(nae_gadget(3));
        CHECK_FALSE(fit.success);
        CHECK(fit.failure.find("big cell") != std::string::npos);
    }

    SECTION("equality gadget fits at every arity 2..6") {
        for (int d = 2; d <= 6; ++d) {
            auto fit = spinor_fit(hadamard_transform(variable_gadget(d), TransformSide::primal));
            INFO("arity " << d);
            CHECK(fit.success);
            CHECK(fit.lambda == 2);
        }
    }

    SECTION("not-all-equal gadget fits at arity 2 and 3 and at no higher arity") {
        for (int d = 2; d <= 3; ++d) {
            auto fit = spinor_fit(hadamard_dual_integral(nae_gadget(d)).tensor);
            INFO("arity " << d);
            CHECK(fit.success);
        }
        // From arity 4 on, the weight-2 layer forces z_ef = -2/(2^d - 2) for
        // every pair, so weight-4 coordinates come out as lambda*Pf(z) =
        // +4/(2^d - 2), never the tensor's -2: the transformed gadget is not
        // a sub-Pfaffian vector in this basis.
        for (int d = 4; d <= 6; ++d) {
            auto fit = spinor_fit(hadamard_dual_integral(nae_gadget(d)).tensor);
            INFO("arity " << d << " failure: " << fit.failure);
            CHECK_FALSE(fit.success);
            CHECK(fit.failure.find("pattern") != std::string::npos);
        }
    }

    SECTION("fit reports the first violated coordinate") {
        // At arity <= 3 the weight-0 and weight-2 layers define lambda and z,
        // so the earliest falsifiable coordinates are odd-weight ones; at
        // arity 4 the top coordinate must match lambda*Pf(z).
        auto odd = hadamard_transform(variable_gadget(3), TransformSide::primal);
        odd.coords[1] += 1;
        auto fit = spinor_fit(odd);
        REQUIRE_FALSE(fit.success);
        CHECK(fit.failure.find("100") != std::string::npos);

        auto top = hadamard_transform(variable_gadget(4), TransformSide::primal);
        top.coords[15] += 1;
        fit = spinor_fit(top);
        REQUIRE_FALSE(fit.success);
        CHECK(fit.failure.find("1111") != std::string::npos);
    }
}

TEST_CASE("edge-order search helper") {
    auto good = hadamard_dual_integral(nae_gadget(3)).tensor;
    auto found = spinor_fit_any_order(good);
    REQUIRE(found.has_value());
    CHECK(found->second.success);

    // The arity-4 obstruction is permutation-invariant (all weight-2
    // coordinates are equal), so no edge order rescues it.
    auto bad = hadamard_dual_integral(nae_gadget(4)).tensor;
    CHECK_FALSE(spinor_fit_any_order(bad).has_value());

    CHECK_THROWS_AS(spinor_fit_any_order(nae_gadget(4), 3), std::invalid_argument);
}

TEST_CASE("pairing count worked examples") {
    CHECK(pairing_count(NAEFormula(3, {{1, 2, 3}})) == 6);
    CHECK(pairing_count_transformed(NAEFormula(3, {{1, 2, 3}})) == 6);
    CHECK(brute_force_count(NAEFormula(3, {{1, 2, 3}})) == 6);

    // Repeating a clause does not change the solution set.
    CHECK(pairing_count(NAEFormula(3, {{1, 2, 3}, {1, 2, 3}})) == 6);

    CHECK(pairing_count(NAEFormula(2, {{1, 2}, {1, 2}, {1, 2}})) == 2);

    // Disjoint clauses multiply.
    CHECK(pairing_count(NAEFormula(6, {{1, 2, 3}, {4, 5, 6}})) == 36);

    // Isolated variables double the count; an empty formula counts all
    // assignments.
    CHECK(pairing_count(NAEFormula(5, {})) == 32);
    CHECK(pairing_count_transformed(NAEFormula(5, {})) == 32);
    CHECK(pairing_count(NAEFormula(4, {{1, 2}})) == 8);
}

TEST_CASE("raw, transformed, and brute-force counts agree on random formulas") {
    std::mt19937_64 rng(160815);
    std::uniform_int_distribution<int> nvars(2, 6), nclauses(1, 4);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = nvars(rng);
        std::uniform_int_distribution<int> arity(2, std::min(4, n));
        std::vector<std::vector<int>> clauses;
        const int k = nclauses(rng);
        for (int s = 0; s < k; ++s) {
            std::vector<int> pool(n);
            std::iota(pool.begin(), pool.end(), 1);
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(arity(rng));
            clauses.push_back(pool);
        }
        NAEFormula f(n, clauses);
        auto brute = brute_force_count(f);
        INFO("n=" << n << " clauses=" << k << " trial " << trial);
        CHECK(pairing_count(f) == brute);
        CHECK(pairing_count_transformed(f) == brute);
    }
}

TEST_CASE("contraction is invariant under any invertible edge basis change") {
    std::mt19937_64 rng(42);
    NAEFormula f(4, {{1, 2, 3}, {2, 3, 4}});
    const auto expect = pairing_count(f);
    int done = 0;
    while (done < 5) {
        Matrix<Rational> g(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) g(i, j) = random_rational(rng);
        if (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) == 0) continue;
        CHECK(pairing_count_with_basis(f, g) == expect);
        ++done;
    }
    Matrix<Rational> singular(2, 2);
    singular(0, 0) = 1;
    CHECK_THROWS_AS(pairing_count_with_basis(f, singular), std::invalid_argument);
}

TEST_CASE("contraction edge cap") {
    // Seven four-variable clauses give 28 edges, over the default cap of 24.
    std::vector<std::vector<int>> clauses(7, {1, 2, 3, 4});
    CHECK_THROWS_WITH(pairing_count(NAEFormula(8, clauses)),
                      Catch::Matchers::ContainsSubstring("cap 24"));

    setenv("COMINPAIR_MAX_EDGES", "4", 1);
    CHECK_THROWS_WITH(pairing_count(NAEFormula(3, {{1, 2, 3}, {1, 2, 3}})),
                      Catch::Matchers::ContainsSubstring("cap 4"));
    CHECK(pairing_count(NAEFormula(3, {{1, 2, 3}})) == 6);

    setenv("COMINPAIR_MAX_EDGES", "bogus", 1);
    CHECK_THROWS_AS(pairing_count(NAEFormula(3, {{1, 2, 3}})), std::invalid_argument);
    unsetenv("COMINPAIR_MAX_EDGES");
}

TEST_CASE("brute force variable cap") {
    CHECK_THROWS_AS(brute_force_count(NAEFormula(31, {{1, 2}})), std::runtime_error);
}

// Big-cell pairings: expansion contents, naive-vs-fast agreement on random
// rational points across all five families, the pinned spinor sign
// convention, the graded minor identity, and instrumented operation counts.

#include "cominpair/bigcell.hpp"
#include "cominpair/counting.hpp"
#include "cominpair/linalg.hpp"

#include "oracles.hpp"
#include "random_gen.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace cominpair;
using cominpair::testing::random_matrix;
using cominpair::testing::random_rational;
using cominpair::testing::random_skew;
using cominpair::testing::random_sym;

namespace {

Matrix<Rational> from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix<Rational> m(static_cast<int>(rows.size()),
                       rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

BigCellPoint random_point(const PairingFamily& fam, std::mt19937_64& rng) {
    switch (fam.kind) {
        case Family::grassmannian:
            return {fam, random_matrix(rng, fam.k, fam.n - fam.k)};
        case Family::spinor:
            return {fam, random_skew(rng, fam.n).to_full()};
        case Family::lagrangian:
            return {fam, random_sym(rng, fam.n).to_full()};
        case Family::segre:
            return {fam, random_matrix(rng, fam.p, fam.n)};
        case Family::veronese:
            return {fam, random_matrix(rng, fam.p, 1)};
    }
    throw std::logic_error("unreachable");
}

Rational key_coord(const SparseVector& v, std::vector<int> I, std::vector<int> S) {
    auto it = v.coords.find(IndexKey{std::move(I), std::move(S)});
    return it == v.coords.end() ? Rational(0) : it->second;
}

} // namespace

TEST_CASE("line-in-3-space expansion lists the raw entries") {
    auto fam = PairingFamily::grassmannian(1, 3);
    BigCellPoint pt(fam, from_rows({{Rational(5), Rational(7, 2)}}));
    auto v = expand(pt);
    REQUIRE(v.coords.size() == 3);
    CHECK(key_coord(v, {}, {}) == 1);
    CHECK(key_coord(v, {1}, {1}) == 5);
    CHECK(key_coord(v, {1}, {2}) == Rational(7, 2));
}

TEST_CASE("plane-in-4-space expansion of the identity point") {
    auto fam = PairingFamily::grassmannian(2, 4);
    BigCellPoint pt(fam, Matrix<Rational>::identity(2));
    auto v = expand(pt);
    // Dense coordinates in (|I|, I, S) order are (1, 1, 0, 0, 1, 1); the
    // sparse map keeps the four nonzero ones.
    REQUIRE(v.coords.size() == 4);
    CHECK(key_coord(v, {}, {}) == 1);
    CHECK(key_coord(v, {1}, {1}) == 1);
    CHECK(key_coord(v, {1}, {2}) == 0);
    CHECK(key_coord(v, {2}, {1}) == 0);
    CHECK(key_coord(v, {2}, {2}) == 1);
    CHECK(key_coord(v, {1, 2}, {1, 2}) == 1);
    CHECK(fam.expansion_dimension() == 6);
}

TEST_CASE("spinor expansion at the zero point is the vacuum vector") {
    auto fam = PairingFamily::spinor(4);
    BigCellPoint pt(fam, Matrix<Rational>(4, 4));
    auto v = expand(pt);
    REQUIRE(v.coords.size() == 1);
    CHECK(key_coord(v, {}, {}) == 1);
    CHECK(fam.expansion_dimension() == 8);
}

TEST_CASE("spinor expansion coordinates are the sub-Pfaffians") {
    std::mt19937_64 rng(411);
    auto fam = PairingFamily::spinor(6);
    auto z = random_skew(rng, 6);
    BigCellPoint pt(fam, z.to_full());
    auto v = expand(pt);
    for (const auto& I : even_subsets(6)) {
        Rational expect = sub_pfaffian(z, IndexSubset(I, 6));
        CHECK(key_coord(v, I, {}) == expect);
    }
}

TEST_CASE("expansion leading coordinate is 1 for every family") {
    std::mt19937_64 rng(77);
    std::vector<PairingFamily> fams = {
        PairingFamily::grassmannian(2, 5), PairingFamily::spinor(4),
        PairingFamily::lagrangian(3),      PairingFamily::segre(3, 2),
        PairingFamily::veronese(3, 2),
    };
    for (const auto& fam : fams) {
        auto v = expand(random_point(fam, rng));
        auto d = expand_dual(random_point(fam, rng));
        CHECK(key_coord(v, {}, {}) == 1);
        CHECK(key_coord(d, {}, {}) == 1);
    }
}

TEST_CASE("naive pairing worked examples") {
    auto g13 = PairingFamily::grassmannian(1, 3);
    BigCellPoint x(g13, from_rows({{Rational(1), Rational(2)}}));
    BigCellPoint y(g13, from_rows({{Rational(3), Rational(4)}}));
    CHECK(naive_pair(expand(x), expand_dual(y)) == 12); // 1 + 1*3 + 2*4

    auto g24 = PairingFamily::grassmannian(2, 4);
    BigCellPoint id(g24, Matrix<Rational>::identity(2));
    CHECK(naive_pair(expand(id), expand_dual(id)) == 4);
    CHECK(fast_pair(id, id) == 4);
}

TEST_CASE("pairing against the zero point sees only the leading term") {
    std::mt19937_64 rng(1009);
    std::vector<PairingFamily> fams = {
        PairingFamily::grassmannian(3, 7), PairingFamily::spinor(6),
        PairingFamily::lagrangian(4),      PairingFamily::segre(3, 3),
        PairingFamily::veronese(4, 3),
    };
    for (const auto& fam : fams) {
        auto x = random_point(fam, rng);
        Matrix<Rational> zero(x.coords.rows(), x.coords.cols());
        BigCellPoint z(fam, zero);
        CHECK(naive_pair(expand(x), expand_dual(z)) == 1);
        CHECK(fast_pair(x, z) == 1);
        CHECK(fast_pair(z, x) == 1);
    }
}

TEST_CASE("fast pairing equals naive pairing on random points") {
    std::mt19937_64 rng(20260815);
    auto check_family = [&rng](const PairingFamily& fam, int trials) {
        for (int t = 0; t < trials; ++t) {
            auto x = random_point(fam, rng);
            auto y = random_point(fam, rng);
            Rational naive = naive_pair(expand(x), expand_dual(y));
            Rational fast = fast_pair(x, y);
            INFO(fam.name() << " n=" << fam.n << " k=" << fam.k << " p=" << fam.p
                            << " trial " << t);
            REQUIRE(fast == naive);
        }
    };

    SECTION("grassmannian") {
        check_family(PairingFamily::grassmannian(1, 4), 5);
        check_family(PairingFamily::grassmannian(2, 5), 5);
        check_family(PairingFamily::grassmannian(3, 7), 5);
        check_family(PairingFamily::grassmannian(4, 9), 5);
    }
    SECTION("spinor") {
        check_family(PairingFamily::spinor(2), 5);
        check_family(PairingFamily::spinor(4), 5);
        check_family(PairingFamily::spinor(5), 5);
        check_family(PairingFamily::spinor(8), 5);
    }
    SECTION("lagrangian") {
        check_family(PairingFamily::lagrangian(2), 5);
        check_family(PairingFamily::lagrangian(4), 5);
        check_family(PairingFamily::lagrangian(6), 3);
    }
    SECTION("segre") {
        check_family(PairingFamily::segre(2, 2), 5);
        check_family(PairingFamily::segre(3, 3), 5);
        check_family(PairingFamily::segre(4, 3), 5);
    }
    SECTION("veronese") {
        check_family(PairingFamily::veronese(2, 3), 5);
        check_family(PairingFamily::veronese(5, 4), 5);
    }
}

TEST_CASE("spinor pairing convention pinned at small sizes") {
    std::mt19937_64 rng(5150);

    SECTION("n = 2 closed form") {
        for (int t = 0; t < 10; ++t) {
            auto z = random_skew(rng, 2), y = random_skew(rng, 2);
            BigCellPoint zp(PairingFamily::spinor(2), z.to_full());
            BigCellPoint yp(PairingFamily::spinor(2), y.to_full());
            Rational expect = 1 + z.at(0, 1) * y.at(0, 1);
            CHECK(fast_pair(zp, yp) == expect);
            CHECK(naive_pair(expand(zp), expand_dual(yp)) == expect);
        }
    }

    SECTION("n = 4 closed form with index signs written out") {
        for (int t = 0; t < 10; ++t) {
            auto z = random_skew(rng, 4), y = random_skew(rng, 4);
            BigCellPoint zp(PairingFamily::spinor(4), z.to_full());
            BigCellPoint yp(PairingFamily::spinor(4), y.to_full());
            Rational pfz = pfaffian(z), pfy = pfaffian(y);
            Rational expect = 1
                + z.at(0, 1) * y.at(0, 1) - z.at(0, 2) * y.at(0, 2)
                + z.at(0, 3) * y.at(0, 3) + z.at(1, 2) * y.at(1, 2)
                - z.at(1, 3) * y.at(1, 3) + z.at(2, 3) * y.at(2, 3)
                + pfz * pfy;
            CHECK(fast_pair(zp, yp) == expect);
            CHECK(naive_pair(expand(zp), expand_dual(yp)) == expect);
        }
    }

    SECTION("n = 6 and n = 8 against the weighted sub-Pfaffian sum") {
        for (int n : {6, 8}) {
            auto z = random_skew(rng, n), y = random_skew(rng, n);
            Rational sum(0);
            for (const auto& I : even_subsets(n)) {
                IndexSubset idx(I, n);
                sum += Rational(subset_sign(idx)) * sub_pfaffian(z, idx) * sub_pfaffian(y, idx);
            }
            BigCellPoint zp(PairingFamily::spinor(n), z.to_full());
            BigCellPoint yp(PairingFamily::spinor(n), y.to_full());
            CHECK(fast_pair(zp, yp) == sum);
        }
    }
}

TEST_CASE("grassmannian pairing refines to the graded minor identity") {
    // Grouping naive terms by minor size q gives coefficients c_q with
    // sum_q c_q t^q = fast_pair(x, t*y), because size-q minors scale by t^q.
    std::mt19937_64 rng(321);
    auto fam = PairingFamily::grassmannian(2, 5);
    auto xm = random_matrix(rng, 2, 3), ym = random_matrix(rng, 2, 3);
    BigCellPoint x(fam, xm), y(fam, ym);

    std::vector<Rational> c(3, Rational(0));
    auto vx = expand(x), vy = expand_dual(y);
    for (const auto& [key, val] : vx.coords) {
        auto it = vy.coords.find(key);
        if (it != vy.coords.end()) c[key.I.size()] += val * it->second;
    }

    for (Rational t : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
        Matrix<Rational> ty(2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) ty(i, j) = t * ym(i, j);
        Rational graded = c[0] + c[1] * t + c[2] * t * t;
        CHECK(fast_pair(x, BigCellPoint(fam, ty)) == graded);
    }
}

TEST_CASE("family and shape validation") {
    auto g = PairingFamily::grassmannian(2, 4);
    CHECK_THROWS_AS(PairingFamily::grassmannian(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(PairingFamily::grassmannian(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(PairingFamily::spinor(1), std::invalid_argument);
    CHECK_THROWS_AS(BigCellPoint(g, Matrix<Rational>(2, 3)), std::invalid_argument);

    Matrix<Rational> notskew(3, 3);
    notskew(0, 1) = 1;
    notskew(1, 0) = 1;
    CHECK_THROWS_AS(BigCellPoint(PairingFamily::spinor(3), notskew), std::invalid_argument);
    Matrix<Rational> notsym(3, 3);
    notsym(0, 1) = 1;
    CHECK_THROWS_AS(BigCellPoint(PairingFamily::lagrangian(3), notsym), std::invalid_argument);

    // A symmetric matrix is a valid lagrangian point, and a row or column
    // vector both work for veronese.
    std::mt19937_64 rng(2);
    CHECK_NOTHROW(BigCellPoint(PairingFamily::lagrangian(3), random_sym(rng, 3).to_full()));
    auto col = random_matrix(rng, 4, 1);
    CHECK_NOTHROW(BigCellPoint(PairingFamily::veronese(3, 4), col));
    CHECK_NOTHROW(BigCellPoint(PairingFamily::veronese(3, 4), col.transposed()));
    CHECK(fast_pair(BigCellPoint(PairingFamily::veronese(3, 4), col),
                    BigCellPoint(PairingFamily::veronese(3, 4), col))
          == fast_pair(BigCellPoint(PairingFamily::veronese(3, 4), col.transposed()),
                       BigCellPoint(PairingFamily::veronese(3, 4), col.transposed())));

    auto x = random_point(g, rng);
    auto s = random_point(PairingFamily::spinor(4), rng);
    CHECK_THROWS_AS(fast_pair(x, s), std::invalid_argument);
    CHECK_THROWS_AS(naive_pair(expand(x), expand(s)), std::invalid_argument);
}

TEST_CASE("veronese pairing is the binomial power closed form") {
    std::mt19937_64 rng(888);
    auto fam = PairingFamily::veronese(4, 3);
    auto xv = random_matrix(rng, 3, 1), yv = random_matrix(rng, 3, 1);
    Rational dot(0);
    for (int i = 0; i < 3; ++i) dot += xv(i, 0) * yv(i, 0);
    Rational expect = 1;
    for (int i = 0; i < 4; ++i) expect *= 1 + dot;
    CHECK(fast_pair(BigCellPoint(fam, xv), BigCellPoint(fam, yv)) == expect);
}

TEST_CASE("expansion dimensions per family") {
    CHECK(PairingFamily::grassmannian(2, 4).expansion_dimension() == 6);
    CHECK(PairingFamily::grassmannian(5, 10).expansion_dimension() == 252);
    CHECK(PairingFamily::spinor(5).expansion_dimension() == 16);
    CHECK(PairingFamily::lagrangian(3).expansion_dimension() == 20);
    CHECK(PairingFamily::segre(3, 2).expansion_dimension() == 27);
    CHECK(PairingFamily::veronese(4, 3).expansion_dimension() == 256);

    // A point with all entries nonzero realizes every segre coordinate.
    std::mt19937_64 rng(31);
    Matrix<Rational> m(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = random_rational(rng) + 20;
    auto v = expand(BigCellPoint(PairingFamily::segre(3, 2), m));
    CHECK(v.coords.size() == 27);
}

TEST_CASE("operation counts are deterministic and input-honest") {
    std::mt19937_64 rng(640);
    auto fam = PairingFamily::spinor(6);
    auto x = random_point(fam, rng);
    auto y = random_point(fam, rng);

    auto c1 = count_operations(x, y);
    auto c2 = count_operations(x, y);
    CHECK(c1.multiplications == c2.multiplications);
    CHECK(c1.additions == c2.additions);
    CHECK(c1.total() > 0);
    CHECK(fast_pair(x, y) == fast_pair(x, y));

    // Pairing two vacuum points only ever meets unit pivots and zero
    // couplings, so the skip rules leave nothing to tally.
    BigCellPoint z(fam, Matrix<Rational>(6, 6));
    auto zero_ops = count_operations(z, z);
    CHECK(zero_ops.total() == 0);
}

TEST_CASE("fast pairing beats the instrumented naive pipeline at scale") {
    std::mt19937_64 rng(7117);

    auto fam = PairingFamily::spinor(8);
    auto x = random_point(fam, rng);
    auto y = random_point(fam, rng);
    auto fast = count_operations(x, y);
    auto naive = count_operations_naive(x, y);
    INFO("spinor(8) fast " << fast.total() << " naive " << naive.total());
    CHECK(fast.total() < naive.total());

    auto g = PairingFamily::grassmannian(4, 8);
    auto gx = random_point(g, rng);
    auto gy = random_point(g, rng);
    auto gfast = count_operations(gx, gy);
    auto gnaive = count_operations_naive(gx, gy);
    INFO("grassmannian(4,8) fast " << gfast.total() << " naive " << gnaive.total());
    CHECK(gfast.total() < gnaive.total());
}

TEST_CASE("half-dimensional grassmannian multiplication count stays under ambient") {
    std::mt19937_64 rng(2525);
    auto fam = PairingFamily::grassmannian(5, 10);
    auto x = random_point(fam, rng);
    auto y = random_point(fam, rng);
    auto ops = count_operations(x, y);
    INFO("multiplications " << ops.multiplications << " additions " << ops.additions);
    CHECK(ops.multiplications < 252);
}

TEST_CASE("spinor fast operation counts grow polynomially") {
    std::mt19937_64 rng(99);
    std::uint64_t prev = 0;
    for (int n = 4; n <= 12; n += 2) {
        auto fam = PairingFamily::spinor(n);
        auto x = random_point(fam, rng);
        auto y = random_point(fam, rng);
        auto ops = count_operations(x, y);
        INFO("n=" << n << " total " << ops.total());
        CHECK(ops.total() > prev);
        // Elimination on a 2n x 2n matrix: comfortably inside n^4 here.
        CHECK(ops.total() < std::uint64_t(n) * n * n * n);
        prev = ops.total();
    }
}

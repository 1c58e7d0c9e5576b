#include <doctest.h>

#include "golden.hpp"
#include "lsu/matrix.hpp"
#include "lsu/oracle.hpp"
#include "lsu/poly.hpp"
#include "lsu/randmat.hpp"

using namespace lsu;
using golden::zmat;

TEST_CASE("split4 of the 4x4 example") {
    const auto a = golden::example_a();
    const auto b = split4(a);
    CHECK(b.a11 == zmat({{0, 0}, {2, 0}}));
    CHECK(b.a12 == zmat({{3, 0}, {1, 0}}));
    CHECK(b.a21 == zmat({{0, 0}, {1, 4}}));
    CHECK(b.a22 == zmat({{0, 0}, {0, 1}}));
    CHECK(join4(b.a11, b.a12, b.a21, b.a22) == a);
}

TEST_CASE("split4 trivia and errors") {
    const auto i2 = DMatrix<Zint>::identity(2);
    const auto b = split4(i2);
    CHECK(b.a11 == zmat({{1}}));
    CHECK(b.a12 == zmat({{0}}));
    CHECK(b.a21 == zmat({{0}}));
    CHECK(b.a22 == zmat({{1}}));

    const auto z = DMatrix<Zint>(4, 4);
    const auto zb = split4(z);
    CHECK(zb.a11.is_zero());
    CHECK(zb.a22.is_zero());

    CHECK_THROWS_AS(split4(DMatrix<Zint>(3, 3)), OddDimension);
    CHECK_THROWS_AS(split4(DMatrix<Zint>(2, 4)), NonSquare);
}

TEST_CASE("join4 inverts split4 on random even matrices") {
    Rng rng(11);
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        const auto a = random_matrix<Zint>(n, n, rng);
        const auto b = split4(a);
        CHECK(join4(b.a11, b.a12, b.a21, b.a22) == a);
    }
}

TEST_CASE("mat_mul basics") {
    Rng rng(12);
    const auto a = random_matrix<Zint>(4, 4, rng);
    CHECK(mat_mul(a, DMatrix<Zint>::identity(4)) == a);

    const auto x = zmat({{0, 0}, {2, 0}});
    const auto y = zmat({{0, 2}, {2, 0}});
    CHECK(mat_mul(x, y) == zmat({{0, 0}, {0, 4}}));

    CHECK_THROWS_AS(mat_mul(DMatrix<Zint>(2, 3), DMatrix<Zint>(2, 3)), DimensionMismatch);
}

template <Domain R>
static void strassen_matches_schoolbook(std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        const auto a = random_matrix<R>(n, n, rng);
        const auto b = random_matrix<R>(n, n, rng);
        const auto s1 = mat_mul(a, b, {MulStrategy::schoolbook, nullptr});
        const auto s2 = mat_mul(a, b, {MulStrategy::strassen, nullptr});
        CHECK(s1 == s2);
    }
}

TEST_CASE("strassen equals schoolbook over all three rings") {
    strassen_matches_schoolbook<Zint>(21);
    strassen_matches_schoolbook<Rat>(22);
    strassen_matches_schoolbook<PolyQ>(23);
}

TEST_CASE("strassen equals schoolbook on 100 random 8x8 integer matrices") {
    Rng rng(24);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_matrix<Zint>(8, 8, rng);
        const auto b = random_matrix<Zint>(8, 8, rng);
        CHECK(mat_mul(a, b, {MulStrategy::schoolbook, nullptr}) ==
              mat_mul(a, b, {MulStrategy::strassen, nullptr}));
    }
}

TEST_CASE("strassen handles rectangular shapes by padding") {
    Rng rng(25);
    const auto a = random_matrix<Zint>(3, 5, rng);
    const auto b = random_matrix<Zint>(5, 7, rng);
    CHECK(mat_mul(a, b, {MulStrategy::strassen, nullptr}) ==
          mat_mul(a, b, {MulStrategy::schoolbook, nullptr}));
}

TEST_CASE("pad_to_pow2") {
    Rng rng(31);
    const auto a3 = random_matrix<Zint>(3, 3, rng);
    const auto [p4, d3] = pad_to_pow2(a3);
    CHECK(p4.rows() == 4);
    CHECK(p4.cols() == 4);
    CHECK(d3.rows == 3);
    for (std::size_t j = 0; j < 4; ++j) CHECK(p4(3, j).is_zero());
    for (std::size_t i = 0; i < 4; ++i) CHECK(p4(i, 3).is_zero());

    const auto a4 = random_matrix<Zint>(4, 4, rng);
    CHECK(pad_to_pow2(a4).first == a4);

    const auto a1 = zmat({{7}});
    CHECK(pad_to_pow2(a1).first == a1);
}

TEST_CASE("pad_to_pow2 preserves brute-force rank") {
    Rng rng(32);
    for (int t = 0; t < 20; ++t) {
        const std::size_t r = 1 + rng.index(6), c = 1 + rng.index(6);
        auto a = random_matrix<Zint>(r, c, rng);
        if (t % 3 == 0 && r >= 2) make_deficient(a, rng);
        const auto padded = pad_to_pow2(a).first;
        CHECK(oracle::rank_bruteforce(a) == oracle::rank_bruteforce(padded));
    }
}

TEST_CASE("scalar_mul, mat_add, mat_sub, transpose") {
    Rng rng(41);
    const auto a = random_matrix<Zint>(4, 4, rng);
    CHECK(scalar_mul(Zint(1), a) == a);
    CHECK(mat_sub(a, a).is_zero());
    CHECK(mat_add(a, DMatrix<Zint>(4, 4)) == a);
    CHECK(transpose(transpose(a)) == a);
    CHECK_THROWS_AS(mat_add(a, DMatrix<Zint>(3, 4)), DimensionMismatch);
}

TEST_CASE("operation counters") {
    OpCounter c;
    MulCtx ctx{MulStrategy::schoolbook, &c};
    Rng rng(51);
    const auto a = random_matrix<Zint>(4, 4, rng);
    const auto b = random_matrix<Zint>(4, 4, rng);
    (void)mat_mul(a, b, ctx);
    CHECK(c.mul_count == 64);   // 4*4*4
    CHECK(c.add_count == 48);   // 4*4*3
    const auto before = c;
    (void)mat_add(a, b, ctx);
    CHECK(c.add_count == before.add_count + 16);
    CHECK(c.mul_count == before.mul_count);

    OpCounter other;
    other.mul_count = 5;
    c.merge(other);
    CHECK(c.mul_count == before.mul_count + 5);

    // zero operand short-circuits without counting
    OpCounter z;
    MulCtx zctx{MulStrategy::schoolbook, &z};
    (void)mat_mul(a, DMatrix<Zint>(4, 4), zctx);
    CHECK(z.mul_count == 0);
}

TEST_CASE("mat_div_exact") {
    const auto a = zmat({{2, 4}, {6, 8}});
    CHECK(mat_div_exact(a, Zint(2)) == zmat({{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(mat_div_exact(a, Zint(3)), InexactDivision);
}

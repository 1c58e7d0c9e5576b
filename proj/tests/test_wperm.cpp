#include <doctest.h>

#include "golden.hpp"
#include "lsu/randmat.hpp"
#include "lsu/wperm.hpp"

using namespace lsu;
using golden::q;

namespace {

using WP = WPerm<Zint>;
using F = Fraction<Zint>;

DMatrix<F> dense_mul(const WP& a, const WP& b) { return mat_mul(a.dense(), b.dense()); }

} // namespace

TEST_CASE("weighted permutation invariants are enforced") {
    CHECK_THROWS(WP(2, {{0, 0, q(1)}, {0, 1, q(1)}}));   // shared row
    CHECK_THROWS(WP(2, {{0, 0, q(1)}, {1, 0, q(1)}}));   // shared column
    CHECK_THROWS(WP(2, {{0, 3, q(1)}}));                 // out of range
    CHECK_THROWS(WP(2, {{0, 0, q(0)}}));                 // zero value
}

TEST_CASE("unit_map") {
    const WP s(2, {{1, 0, q(1, 2)}});
    const WP e = unit_map(s);
    CHECK(e == WP(2, {{1, 0, q(1)}}));
    CHECK(unit_map(WP(3)).is_zero());
    const WP p = WP::identity(3);
    CHECK(unit_map(p) == p);
}

TEST_CASE("extended_map pairs zero rows with zero columns ascending") {
    // 3x3 with single pivot at (3,1) one-based -> adds (1,2) and (2,3)
    const WP s(3, {{2, 0, q(1)}});
    const WP ext = extended_map(s);
    CHECK(ext == WP(3, {{2, 0, q(1)}, {0, 1, q(1)}, {1, 2, q(1)}}));
    CHECK(ext.is_full_rank());

    CHECK(extended_map(WP(3)) == WP::identity(3));
    const WP full = WP::identity(4);
    CHECK(extended_map(full) == full);
}

TEST_CASE("complement_map") {
    const WP s(3, {{2, 0, q(1)}});
    CHECK(complement_map(s) == WP(3, {{0, 1, q(1)}, {1, 2, q(1)}}));

    // paper first-step block: S11 = [[0,0],[1/2,0]] -> S̄ = [[0,1],[0,0]]
    const WP s11(2, {{1, 0, q(1, 2)}});
    CHECK(complement_map(s11) == WP(2, {{0, 1, q(1)}}));
}

TEST_CASE("complement involution") {
    // The involution S̄̄ = S cannot hold on all of S_p under any pairing
    // convention: complement is not injective there (the antidiagonal
    // {(0,2),(2,0)} and the diagonal {(0,0),(2,2)} share the complement
    // {(1,1)}, and P̄̄ = I for every full permutation P). It does hold on
    // complement images, i.e. monotone patterns, which covers the paper's
    // worked example.
    const WP paper_example(3, {{2, 0, q(1)}});
    CHECK(complement_map(complement_map(paper_example)) == paper_example);

    Rng rng(61);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.index(8);
        const WP s = unit_map(random_wperm<Zint>(n, rng.index(n + 1), rng));

        // triple complement always collapses to single complement
        const WP bar = complement_map(s);
        CHECK(complement_map(complement_map(bar)) == bar);

        // monotone patterns (rows and cols both ascending) are involutive
        std::vector<std::size_t> rows, cols;
        for (const auto& p : s.pivots()) rows.push_back(p.row);
        for (const auto& p : s.pivots()) cols.push_back(p.col);
        std::sort(cols.begin(), cols.end());
        std::vector<WP::Pivot> mono;
        for (std::size_t i = 0; i < rows.size(); ++i) mono.push_back({rows[i], cols[i], q(1)});
        const WP m(n, std::move(mono));
        CHECK(complement_map(complement_map(m)) == m);

        // Property 2: S + S̄ is a full permutation
        const WP ext = extended_map(s);
        CHECK(ext.is_full_rank());
        CHECK(ext.is_permutation());
    }

    // the non-injectivity witness
    const WP anti(3, {{0, 2, q(1)}, {2, 0, q(1)}});
    const WP diag(3, {{0, 0, q(1)}, {2, 2, q(1)}});
    CHECK(complement_map(anti) == complement_map(diag));
    CHECK(complement_map(complement_map(anti)) == diag);
}

TEST_CASE("mp_inverse") {
    const WP s(2, {{1, 0, q(1, 2)}});
    CHECK(mp_inverse(s) == WP(2, {{0, 1, q(2)}}));
    CHECK(mp_inverse(WP(3)).is_zero());
    CHECK(mp_inverse(WP::identity(3)) == WP::identity(3));
}

TEST_CASE("Moore-Penrose identities on random weighted permutations") {
    Rng rng(62);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.index(7);
        const WP s = random_wperm<Zint>(n, rng.index(n + 1), rng);
        const WP sp = mp_inverse(s);
        // dense-multiplication oracle
        const auto sd = s.dense();
        const auto spd = sp.dense();
        CHECK(mat_mul(mat_mul(sd, spd), sd) == sd);
        CHECK(mat_mul(mat_mul(spd, sd), spd) == spd);
        CHECK(transpose(mat_mul(sd, spd)) == mat_mul(sd, spd));
        CHECK(transpose(mat_mul(spd, sd)) == mat_mul(spd, sd));
        // sparse product agrees with the dense oracle
        CHECK(wp_mul(s, sp).dense() == mat_mul(sd, spd));
    }
}

TEST_CASE("row and column idempotents") {
    const WP s11(2, {{1, 0, q(1, 2)}});
    const auto i11 = row_idem(s11);
    const auto j11 = col_idem(s11);
    CHECK(i11.active() == std::vector<std::size_t>{1});
    CHECK(j11.active() == std::vector<std::size_t>{0});

    CHECK(row_idem(WP(3)).active().empty());
    CHECK(col_idem(WP(3)).active().empty());
    CHECK(row_idem(WP::identity(3)).active().size() == 3);
}

TEST_CASE("I S J = S, Ibar S = 0, S Jbar = 0") {
    Rng rng(63);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng.index(7);
        const WP s = random_wperm<Zint>(n, rng.index(n + 1), rng);
        const auto sd = s.dense();
        const auto id = row_idem(s).dense<F>();
        const auto jd = col_idem(s).dense<F>();
        const auto ibar = row_idem(s).complement().dense<F>();
        const auto jbar = col_idem(s).complement().dense<F>();
        CHECK(mat_mul(mat_mul(id, sd), jd) == sd);
        CHECK(mat_mul(ibar, sd).is_zero());
        CHECK(mat_mul(sd, jbar).is_zero());
        // D*D = D and D + D̄ = I
        CHECK(mat_mul(id, id) == id);
        CHECK(mat_add(id, ibar) == DMatrix<F>::identity(n));
    }
}

TEST_CASE("unit map is a homomorphism: (S T)->1 = S->1 T->1") {
    Rng rng(64);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.index(7);
        const WP s = random_wperm<Zint>(n, rng.index(n + 1), rng);
        const WP w = random_wperm<Zint>(n, rng.index(n + 1), rng);
        CHECK(unit_map(wp_mul(s, w)) == wp_mul(unit_map(s), unit_map(w)));
    }
}

TEST_CASE("wp_mul matches the dense oracle and E E^T is a diagonal idempotent") {
    Rng rng(65);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng.index(7);
        const WP s = random_wperm<Zint>(n, rng.index(n + 1), rng);
        const WP w = random_wperm<Zint>(n, rng.index(n + 1), rng);
        CHECK(wp_mul(s, w).dense() == dense_mul(s, w));
        const WP e = unit_map(s);
        const WP eet = wp_mul(e, wp_transpose(e));
        CHECK(eet.is_diagonal());
        CHECK(eet.dense() == row_idem(s).dense<F>());
    }
}

TEST_CASE("idem_blend") {
    const DiagIdem d(2, {0});
    const auto b = idem_blend<Zint>(d, q(4));
    CHECK(b(0, 0) == q(4));
    CHECK(b(1, 1) == q(1));
    CHECK(b(0, 1).is_zero());

    CHECK(idem_blend<Zint>(d, q(1)) == DMatrix<F>::identity(2));
    CHECK(idem_blend<Zint>(DiagIdem(3, {}), q(7)) == DMatrix<F>::identity(3));
    CHECK_THROWS_AS(idem_blend<Zint>(d, q(0)), ZeroScale);

    // blend(D, mu) * blend(D, 1/mu) = identity
    Rng rng(66);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng.index(6);
        std::vector<std::size_t> act;
        for (std::size_t i = 0; i < n; ++i)
            if (rng.coin()) act.push_back(i);
        const DiagIdem di(n, std::move(act));
        const F mu = q(rng.uniform(1, 9), rng.uniform(1, 9));
        CHECK(mat_mul(idem_blend<Zint>(di, mu), idem_blend<Zint>(di, mu.inverse())) ==
              DMatrix<F>::identity(n));
    }
}

TEST_CASE("shat_of golden values") {
    // final 4x4 example
    const auto s = golden::example_s();
    CHECK(shat_of(s, Zint(1), Zint(24)) == golden::example_shat());

    // S = 0 forces Shat = alpha^{-1} I
    CHECK(shat_of(WP(3), Zint(5), Zint(5)) == WP::scaled_identity(3, q(1, 5)));

    // 1x1 step (2): S = [(alpha a)^{-1}], alpha_r = a -> Shat = [a^{-2}]
    const WP s1(1, {{0, 0, q(1, 6)}});   // alpha=2, a=3
    CHECK(shat_of(s1, Zint(2), Zint(3)) == WP(1, {{0, 0, q(1, 9)}}));

    CHECK_THROWS_AS(shat_of(s, Zint(0), Zint(24)), ZeroDeterminant);
    CHECK_THROWS_AS(shat_of(s, Zint(1), Zint(0)), ZeroDeterminant);
}

TEST_CASE("shat_inverse inverts shat_of") {
    // golden example
    const auto s = golden::example_s();
    const auto sh = shat_of(s, Zint(1), Zint(24));
    const auto shi = shat_inverse(s, Zint(1), Zint(24));
    CHECK(wp_mul(sh, shi) == WP::identity(4));

    // S = 0 case: alpha * identity
    CHECK(shat_inverse(WP(2), Zint(3), Zint(3)) == WP::scaled_identity(2, q(3)));

    // 1x1 [a^{-2}] -> [a^2]
    const WP s1(1, {{0, 0, q(1, 6)}});
    CHECK(shat_inverse(s1, Zint(2), Zint(3)) == WP(1, {{0, 0, q(9)}}));

    Rng rng(67);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng.index(6);
        const WP sr = random_wperm<Zint>(n, rng.index(n + 1), rng);
        const Zint alpha(rng.coin() ? 2 : -3);
        const Zint ar(rng.uniform(1, 9));
        CHECK(wp_mul(shat_of(sr, alpha, ar), shat_inverse(sr, alpha, ar)) == WP::identity(n));
    }
}

TEST_CASE("sparse-dense products agree with dense-dense") {
    Rng rng(68);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng.index(6);
        const WP s = random_wperm<Zint>(n, rng.index(n + 1), rng);
        auto a = DMatrix<F>(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = q(rng.uniform(-9, 9), rng.uniform(1, 9));
        CHECK(wp_dense_mul(s, a) == mat_mul(s.dense(), a));
        CHECK(wp_dense_mul(a, s) == mat_mul(a, s.dense()));
    }
}

TEST_CASE("exact ring-side application") {
    // S11 = [(2,1,1/2)]; rows of an integer matrix scaled by 1/2 exactly
    const WP s(2, {{1, 0, q(1, 2)}});
    const auto a = golden::zmat({{2, 4}, {5, 7}});
    const auto r = wp_ring_mul_exact(s, a);
    CHECK(r == golden::zmat({{0, 0}, {1, 2}}));
    const auto bad = golden::zmat({{3, 4}, {5, 7}});
    CHECK_THROWS_AS(wp_ring_mul_exact(s, bad), InexactDivision);
}

TEST_CASE("membership predicates") {
    CHECK(WP::identity(3).is_permutation());
    CHECK(WP::identity(3).is_diagonal());
    CHECK(WP::identity(3).is_full_rank());
    const WP s(2, {{1, 0, q(1, 2)}});
    CHECK_FALSE(s.is_permutation());
    CHECK_FALSE(s.is_diagonal());
    CHECK_FALSE(s.is_full_rank());
    CHECK(unit_map(s).is_permutation());
}

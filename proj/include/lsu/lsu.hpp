#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lsu/matrix.hpp"
#include "lsu/ring.hpp"
#include "lsu/wperm.hpp"

namespace lsu {

/// The factorization bundle: alpha*L*S*U = A, L*Shat*M = I, W*Shat*U = I,
/// with L, U, M, W over R, S and Shat weighted permutations over F.
template <Domain R>
struct LsuFactors {
    std::size_t n = 0;
    DMatrix<R> L, U, M, W;
    WPerm<R> S, Shat;
    R alpha_in = R::one();
    R alpha_r = R::one();   // det_r: the last nested minor
    std::size_t rank = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivot_order;   // nested-minor order
};

/// Scalars of one recursion level. lambda = alpha_l / alpha_k lives in F;
/// alpha_s = lambda * alpha_m is guaranteed (and checked) to lie in R.
template <Domain R>
struct RecursionScalars {
    R alpha_k, alpha_l, alpha_m, alpha_s;
    Fraction<R> lambda;
};

template <Domain R>
RecursionScalars<R> make_recursion_scalars(const R& alpha_k, const R& alpha_l, const R& alpha_m) {
    RecursionScalars<R> sc{alpha_k, alpha_l, alpha_m, R::zero(), Fraction<R>(alpha_l, alpha_k)};
    sc.alpha_s = (sc.lambda * Fraction<R>(alpha_m)).to_domain();
    return sc;
}

// ---------------------------------------------------------------------------
// Field <-> ring matrix conversions
// ---------------------------------------------------------------------------

template <Domain R>
DMatrix<Fraction<R>> to_field(const DMatrix<R>& a) {
    DMatrix<Fraction<R>> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = Fraction<R>(a(i, j));
    return c;
}

/// Checked projection into R (InexactDivision when an entry is not in R).
template <Domain R>
DMatrix<R> to_ring_exact(const DMatrix<Fraction<R>>& a) {
    DMatrix<R> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).to_domain();
    return c;
}

namespace detail {

/// (1/d) * A projected into R; one counted division per entry.
template <Domain R>
DMatrix<R> ring_project(const DMatrix<Fraction<R>>& a, const R& d, const MulCtx& ctx) {
    DMatrix<R> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& v = a(i, j);
            if (!v.is_zero()) c(i, j) = exact_div(v.num(), v.den() * d);
        }
    ctx.div(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return c;
}

/// (1/d) * A over F; one counted division per entry.
template <Domain R>
DMatrix<Fraction<R>> frac_div(const DMatrix<Fraction<R>>& a, const R& d, const MulCtx& ctx) {
    const Fraction<R> f(R::one(), d);
    DMatrix<Fraction<R>> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * f;
    ctx.div(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return c;
}

template <Domain R>
DMatrix<Fraction<R>> mat_neg(const DMatrix<Fraction<R>>& a) {
    DMatrix<Fraction<R>> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
    return c;
}

/// Internal recursion bundle. M and W are carried over F: they need not lie
/// in R at inner nodes (only the top-level call projects them back).
template <Domain R>
struct FxFactors {
    DMatrix<R> L, U;
    DMatrix<Fraction<R>> M, W;
    WPerm<R> S, Shat;
    R alpha_r = R::one();
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

template <Domain R>
FxFactors<R> factor_rec(const DMatrix<R>& A, const R& alpha, const MulCtx& ctx) {
    using F = Fraction<R>;
    const std::size_t n = A.rows();

    // step (1): zero block
    if (A.is_zero()) {
        FxFactors<R> f;
        f.L = DMatrix<R>::identity(n);
        f.U = f.L;
        f.M = DMatrix<F>::scaled_identity(n, F(alpha));
        f.W = f.M;
        f.S = WPerm<R>(n);
        f.Shat = WPerm<R>::scaled_identity(n, F(R::one(), alpha));   // alpha^{-1} I
        f.alpha_r = alpha;
        return f;
    }

    // step (2): 1x1 pivot
    if (n == 1) {
        const R a = A(0, 0);
        FxFactors<R> f;
        f.L = A;
        f.U = A;
        f.M = DMatrix<F>(1, 1, {F(a)});
        f.W = f.M;
        f.S = WPerm<R>(1, {{0, 0, F(R::one(), alpha * a)}});
        f.Shat = WPerm<R>(1, {{0, 0, F(R::one(), a * a)}});
        f.alpha_r = a;
        f.pivots = {{0, 0}};
        return f;
    }

    // step (3): recurse on the four blocks
    const std::size_t h = n / 2;
    auto blocks = split4(A);

    // (3.1)
    auto f11 = factor_rec(blocks.a11, alpha, ctx);
    const R ak = f11.alpha_r;
    const auto Sb11 = complement_map(f11.S);

    const auto A12_0 = mat_mul(f11.M, to_field(blocks.a12), ctx);
    const auto A21_0 = mat_mul(to_field(blocks.a21), f11.W, ctx);
    // surrounding-minor matrices w.r.t. alpha_k; exact in R
    const auto A12_2 = ring_project(wp_dense_mul(Sb11, A12_0, ctx), alpha, ctx);
    const auto A21_2 = ring_project(wp_dense_mul(A21_0, Sb11, ctx), alpha, ctx);

    // (3.2), (3.3)  -- mutually independent
    auto f21 = factor_rec(A21_2, ak, ctx);
    auto f12 = factor_rec(A12_2, ak, ctx);
    const auto sc = make_recursion_scalars(ak, f21.alpha_r, f12.alpha_r);

    // Schur block. A'_21 S+_11 A'_12 = alpha^2 * A21_0 * S11 * A12_0 (uses
    // Shat S+ = (alpha/alpha_k) I, S+ Shat = (alpha/alpha_k) J, S̄ S+ = S+ S̄ = 0).
    const auto A22_0 =
        scalar_mul(F(alpha * alpha), mat_mul(A21_0, wp_dense_mul(f11.S, A12_0, ctx), ctx), ctx);
    const auto A22_1 = ring_project(
        mat_sub(scalar_mul(F(alpha * ak * ak), to_field(blocks.a22), ctx), A22_0, ctx),
        alpha * ak, ctx);

    const auto X = mat_mul(f21.M, to_field(A22_1), ctx);   // M21 * A22^1
    const auto Y = mat_mul(X, f12.W, ctx);                 // M21 * A22^1 * W12
    const auto Sb21 = complement_map(f21.S);
    const auto Sb12 = complement_map(f12.S);
    const auto A22_3 = ring_project(wp_dense_mul(wp_dense_mul(Sb21, Y, ctx), Sb12, ctx),
                                    ak * ak * alpha, ctx);

    // (3.4)
    auto f22 = factor_rec(A22_3, sc.alpha_s, ctx);
    const R ar = f22.alpha_r;

    const auto I11 = row_idem(f11.S);
    const auto J11 = col_idem(f11.S);
    const auto I12 = row_idem(f12.S);
    const auto J12 = col_idem(f12.S);
    const auto J21 = col_idem(f21.S);

    // U2 = J11 M11 A12 / ak + J21 M21 A22^1 / (al alpha)
    const auto U2 = to_ring_exact(
        mat_add(frac_div(select_rows_of(J11, A12_0), ak, ctx),
                frac_div(select_rows_of(J21, X), sc.alpha_l * alpha, ctx), ctx));
    // L3 = A21 W11 I11 / ak + S̄21 M21 A22^1 W12 I12 / (am ak alpha)
    const auto L3 = to_ring_exact(
        mat_add(frac_div(select_cols_of(I11, A21_0), ak, ctx),
                frac_div(select_cols_of(I12, wp_dense_mul(Sb21, Y, ctx)),
                         sc.alpha_m * ak * alpha, ctx),
                ctx));

    // L~12 = L12 I^lambda, U~12 = J^lambda U12: lambda-scaled minors, exact in R
    const auto Lt12 = blend_scale_cols_exact(f12.L, I12, sc.lambda, ctx);
    const auto Ut12 = blend_scale_rows_exact(J12, sc.lambda, f12.U, ctx);

    const auto L1 = mat_mul(f11.L, Lt12, ctx);
    const auto L4 = mat_mul(f21.L, f22.L, ctx);
    const auto U1 = mat_mul(f21.U, f11.U, ctx);
    const auto U4 = mat_mul(f22.U, Ut12, ctx);

    FxFactors<R> f;
    f.L = join4(L1, DMatrix<R>(h, h), L3, L4);
    f.U = join4(U1, U2, DMatrix<R>(h, h), U4);

    // S = [[S11, lambda^{-2} S12],[S21, S22]]
    const F lam_m2 = (sc.lambda * sc.lambda).inverse();
    std::vector<typename WPerm<R>::Pivot> sp;
    sp.reserve(f11.S.rank() + f12.S.rank() + f21.S.rank() + f22.S.rank());
    for (const auto& p : f11.S.pivots()) sp.push_back(p);
    for (const auto& p : f12.S.pivots()) sp.push_back({p.row, p.col + h, lam_m2 * p.value});
    for (const auto& p : f21.S.pivots()) sp.push_back({p.row + h, p.col, p.value});
    for (const auto& p : f22.S.pivots()) sp.push_back({p.row + h, p.col + h, p.value});
    f.S = WPerm<R>(n, std::move(sp));

    f.pivots.reserve(f.S.rank());
    for (const auto& p : f11.pivots) f.pivots.push_back(p);
    for (const auto& p : f21.pivots) f.pivots.emplace_back(p.first + h, p.second);
    for (const auto& p : f12.pivots) f.pivots.emplace_back(p.first, p.second + h);
    for (const auto& p : f22.pivots) f.pivots.emplace_back(p.first + h, p.second + h);

    f.Shat = shat_of(f.S, alpha, ar);
    f.alpha_r = ar;

    // M, W from the block-inverse identities (eqs 23-25):
    //   D1 = L1^{-1} = I^{lambda^{-1}} (Shat12 M12)(Shat11 M11),  D2 = L4^{-1},
    //   M  = Shat^{-1} [[D1, 0], [-D2 L3', D2]],   L3' = L3 D1,
    //   U1^{-1} = (W11 Shat11)(W21 Shat21), U4^{-1} = (W12 Shat12) J^{lambda^{-1}} (W22 Shat22),
    //   W  = [[U1^{-1}, -U2' U4^{-1}], [0, U4^{-1}]] Shat^{-1},   U2' = U1^{-1} U2.
    const F lam_inv = sc.lambda.inverse();
    const auto D1 = blend_scale_rows(
        I12, lam_inv,
        mat_mul(wp_dense_mul(f12.Shat, f12.M, ctx), wp_dense_mul(f11.Shat, f11.M, ctx), ctx), ctx);
    const auto D2 =
        mat_mul(wp_dense_mul(f22.Shat, f22.M, ctx), wp_dense_mul(f21.Shat, f21.M, ctx), ctx);
    const auto L3p = mat_mul(to_field(L3), D1, ctx);
    const auto Shinv = shat_inverse(f.S, alpha, ar);
    const auto Mblk = join4(D1, DMatrix<F>(h, h), mat_neg(mat_mul(D2, L3p, ctx)), D2);
    f.M = wp_dense_mul(Shinv, Mblk, ctx);

    const auto U1inv =
        mat_mul(wp_dense_mul(f11.W, f11.Shat, ctx), wp_dense_mul(f21.W, f21.Shat, ctx), ctx);
    const auto U4inv = mat_mul(
        blend_scale_cols(wp_dense_mul(f12.W, f12.Shat, ctx), J12, lam_inv, ctx),
        wp_dense_mul(f22.W, f22.Shat, ctx), ctx);
    const auto U2p = mat_mul(U1inv, to_field(U2), ctx);
    const auto Wblk = join4(U1inv, mat_neg(mat_mul(U2p, U4inv, ctx)), DMatrix<F>(h, h), U4inv);
    f.W = wp_dense_mul(Wblk, Shinv, ctx);

    return f;
}

} // namespace detail

/// (L, S, U, M, W, Shat, alpha_r) = LSU(A, alpha).
/// A must be square of power-of-two size (callers use pad_to_pow2); alpha = 1
/// at top level. Recursive-style calls must pass a matrix of surrounding
/// minors w.r.t. alpha; the recursion maintains this internally.
template <Domain R>
LsuFactors<R> lsu_factor(const DMatrix<R>& a, const R& alpha, const MulCtx& ctx = {}) {
    if (!a.square()) throw NonSquare("lsu_factor needs a square matrix");
    if (a.rows() != next_pow2(a.rows()))
        throw DimensionMismatch("lsu_factor needs a power-of-two size");
    if (alpha.is_zero()) throw ZeroAlpha("lsu_factor with alpha = 0");

    auto fx = detail::factor_rec(a, alpha, ctx);
    LsuFactors<R> f;
    f.n = a.rows();
    f.L = std::move(fx.L);
    f.U = std::move(fx.U);
    f.M = to_ring_exact(fx.M);
    f.W = to_ring_exact(fx.W);
    f.S = std::move(fx.S);
    f.Shat = std::move(fx.Shat);
    f.alpha_in = alpha;
    f.alpha_r = fx.alpha_r;
    f.rank = f.S.rank();
    f.pivot_order = std::move(fx.pivots);
    return f;
}

template <Domain R>
struct PaddedFactors {
    LsuFactors<R> factors;
    OriginalDims dims;
};

/// Pads any matrix to a power-of-two square and factors it with alpha = 1.
template <Domain R>
PaddedFactors<R> lsu_factor_any(const DMatrix<R>& a, const MulCtx& ctx = {}) {
    if (a.rows() == 0 || a.cols() == 0) {
        PaddedFactors<R> out;
        out.dims = {a.rows(), a.cols()};
        out.factors.n = 0;
        out.factors.S = WPerm<R>(0);
        out.factors.Shat = WPerm<R>(0);
        return out;
    }
    auto [padded, dims] = pad_to_pow2(a);
    return {lsu_factor(padded, R::one(), ctx), dims};
}

/// Walks the pivot order, recovering det_1 .. det_r from S with
/// det_i = 1 / (det_{i-1} * S[pivot_i]) and det_0 = alpha. Every value lies
/// in R (checked); the final one equals alpha_r.
template <Domain R>
std::vector<R> recover_minors(const LsuFactors<R>& f) {
    std::vector<R> out;
    out.reserve(f.pivot_order.size());
    R det_prev = f.alpha_in;
    for (const auto& [r, c] : f.pivot_order) {
        const Fraction<R> s = f.S.at(r, c);
        if (s.is_zero()) throw Error("pivot_order entry has no pivot in S");
        const R det = (Fraction<R>(det_prev) * s).inverse().to_domain();
        out.push_back(det);
        det_prev = det;
    }
    return out;
}

} // namespace lsu

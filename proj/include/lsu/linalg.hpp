#pragma once

#include <optional>

#include "lsu/lsu.hpp"

namespace lsu {

/// P = (1/alpha_r^2) W S M. Satisfies A P A = A and P A P = P; when A has
/// full rank, P is the two-sided inverse. The Moore-Penrose symmetry
/// conditions do not hold in general.
template <Domain R>
struct PseudoInverse {
    DMatrix<Fraction<R>> P;
};

template <Domain R>
PseudoInverse<R> pseudo_inverse(const LsuFactors<R>& f, const MulCtx& ctx = {}) {
    using F = Fraction<R>;
    const auto WS = wp_dense_mul(to_field(f.W), f.S, ctx);
    auto P = mat_mul(WS, to_field(f.M), ctx);
    P = scalar_mul(F(R::one(), f.alpha_r * f.alpha_r), P, ctx);
    return {std::move(P)};
}

template <Domain R>
std::size_t rank_of(const LsuFactors<R>& f) {
    return f.S.rank();
}

/// alpha_r = det_r. For full-rank integer matrices |det_of| equals |det(A)|;
/// the sign can differ from det(A) (nested-minor ordering freedom).
template <Domain R>
R det_of(const LsuFactors<R>& f) {
    if (f.rank != f.n) throw NotFullRank("det_of on a rank-deficient matrix");
    return f.alpha_r;
}

/// L^{-1} = Shat M.
template <Domain R>
DMatrix<Fraction<R>> l_inverse(const LsuFactors<R>& f, const MulCtx& ctx = {}) {
    return wp_dense_mul(f.Shat, to_field(f.M), ctx);
}

/// U^{-1} = W Shat.
template <Domain R>
DMatrix<Fraction<R>> u_inverse(const LsuFactors<R>& f, const MulCtx& ctx = {}) {
    return wp_dense_mul(to_field(f.W), f.Shat, ctx);
}

template <Domain R>
DMatrix<Fraction<R>> inverse(const LsuFactors<R>& f, const MulCtx& ctx = {}) {
    if (f.rank != f.n) throw NotFullRank("inverse of a rank-deficient matrix");
    return pseudo_inverse(f, ctx).P;
}

/// Reconstructs A x = alpha * L (S (U x)) without materializing A.
template <Domain R>
DMatrix<Fraction<R>> apply_factored(const LsuFactors<R>& f, const DMatrix<Fraction<R>>& x,
                                    const MulCtx& ctx = {}) {
    auto y = mat_mul(to_field(f.U), x, ctx);
    y = wp_dense_mul(f.S, y, ctx);
    y = mat_mul(to_field(f.L), y, ctx);
    return scalar_mul(Fraction<R>(f.alpha_in), y, ctx);
}

/// x = P b when the system is consistent (checked by exact substitution);
/// std::nullopt otherwise. b may carry several right-hand sides as columns.
template <Domain R>
std::optional<DMatrix<Fraction<R>>> solve(const LsuFactors<R>& f, const DMatrix<Fraction<R>>& b,
                                          const MulCtx& ctx = {}) {
    if (b.rows() != f.n) throw DimensionMismatch("solve: b has wrong row count");
    const auto P = pseudo_inverse(f, ctx).P;
    auto x = mat_mul(P, b, ctx);
    if (apply_factored(f, x, ctx) != b) return std::nullopt;
    return x;
}

} // namespace lsu

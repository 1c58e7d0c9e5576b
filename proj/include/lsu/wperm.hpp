#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "lsu/matrix.hpp"
#include "lsu/ring.hpp"

namespace lsu {

/// Diagonal 0/1 idempotent: D*D = D. Stored as the sorted set of active
/// (one-valued) diagonal positions.
class DiagIdem {
public:
    DiagIdem() : n_(0) {}
    DiagIdem(std::size_t n, std::vector<std::size_t> active)
        : n_(n), active_(std::move(active)) {
        std::sort(active_.begin(), active_.end());
    }

    std::size_t size() const { return n_; }
    const std::vector<std::size_t>& active() const { return active_; }
    bool is_active(std::size_t i) const {
        return std::binary_search(active_.begin(), active_.end(), i);
    }

    /// The complement: D + complement(D) = identity.
    DiagIdem complement() const {
        std::vector<std::size_t> rest;
        rest.reserve(n_ - active_.size());
        for (std::size_t i = 0; i < n_; ++i)
            if (!is_active(i)) rest.push_back(i);
        return DiagIdem(n_, std::move(rest));
    }

    template <RingElem T>
    DMatrix<T> dense() const {
        DMatrix<T> d(n_, n_);
        for (std::size_t i : active_) d(i, i) = T::one();
        return d;
    }

    bool operator==(const DiagIdem& o) const { return n_ == o.n_ && active_ == o.active_; }

private:
    std::size_t n_;
    std::vector<std::size_t> active_;
};

/// Weighted permutation matrix over F: at most one nonzero per row and per
/// column. Stored sparsely as the pivot set, sorted by row.
template <Domain R>
class WPerm {
public:
    using F = Fraction<R>;

    struct Pivot {
        std::size_t row, col;
        F value;
    };

    explicit WPerm(std::size_t n = 0) : n_(n) {}
    WPerm(std::size_t n, std::vector<Pivot> pivots) : n_(n), piv_(std::move(pivots)) {
        std::sort(piv_.begin(), piv_.end(),
                  [](const Pivot& a, const Pivot& b) { return a.row < b.row; });
        validate();
    }

    static WPerm identity(std::size_t n) {
        std::vector<Pivot> p;
        p.reserve(n);
        for (std::size_t i = 0; i < n; ++i) p.push_back({i, i, F::one()});
        return WPerm(n, std::move(p));
    }
    static WPerm scaled_identity(std::size_t n, const F& v) {
        std::vector<Pivot> p;
        if (!v.is_zero()) {
            p.reserve(n);
            for (std::size_t i = 0; i < n; ++i) p.push_back({i, i, v});
        }
        return WPerm(n, std::move(p));
    }

    std::size_t size() const { return n_; }
    const std::vector<Pivot>& pivots() const { return piv_; }
    std::size_t rank() const { return piv_.size(); }
    bool is_zero() const { return piv_.empty(); }

    const Pivot* pivot_in_row(std::size_t r) const {
        auto it = std::lower_bound(piv_.begin(), piv_.end(), r,
                                   [](const Pivot& p, std::size_t row) { return p.row < row; });
        return (it != piv_.end() && it->row == r) ? &*it : nullptr;
    }
    const Pivot* pivot_in_col(std::size_t c) const {
        for (const auto& p : piv_)
            if (p.col == c) return &p;
        return nullptr;
    }
    F at(std::size_t r, std::size_t c) const {
        const Pivot* p = pivot_in_row(r);
        return (p && p->col == c) ? p->value : F::zero();
    }

    // Membership predicates (the semigroup diagram realized as tests).
    bool is_permutation() const {   // values all 1  (S_p)
        for (const auto& p : piv_)
            if (!(p.value == F::one())) return false;
        return true;
    }
    bool is_full_rank() const { return piv_.size() == n_; }
    bool is_diagonal() const {
        for (const auto& p : piv_)
            if (p.row != p.col) return false;
        return true;
    }

    bool operator==(const WPerm& o) const {
        if (n_ != o.n_ || piv_.size() != o.piv_.size()) return false;
        for (std::size_t i = 0; i < piv_.size(); ++i)
            if (piv_[i].row != o.piv_[i].row || piv_[i].col != o.piv_[i].col ||
                !(piv_[i].value == o.piv_[i].value))
                return false;
        return true;
    }
    bool operator!=(const WPerm& o) const { return !(*this == o); }

    DMatrix<F> dense() const {
        DMatrix<F> d(n_, n_);
        for (const auto& p : piv_) d(p.row, p.col) = p.value;
        return d;
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < piv_.size(); ++i) {
            if (piv_[i].row >= n_ || piv_[i].col >= n_)
                throw DimensionMismatch("pivot out of range");
            if (piv_[i].value.is_zero())
                throw Error("zero-valued pivot in weighted permutation");
            if (i > 0 && piv_[i].row == piv_[i - 1].row)
                throw Error("two pivots share a row");
            for (std::size_t j = 0; j < i; ++j)
                if (piv_[j].col == piv_[i].col) throw Error("two pivots share a column");
        }
    }

    std::size_t n_;
    std::vector<Pivot> piv_;
};

// ---------------------------------------------------------------------------
// The semigroup mappings
// ---------------------------------------------------------------------------

/// S -> S^{->1}: every nonzero value replaced by 1.
template <Domain R>
WPerm<R> unit_map(const WPerm<R>& s) {
    std::vector<typename WPerm<R>::Pivot> p;
    p.reserve(s.pivots().size());
    for (const auto& q : s.pivots()) p.push_back({q.row, q.col, Fraction<R>::one()});
    return WPerm<R>(s.size(), std::move(p));
}

/// S̄ = S^Ext - S: the identity pattern on zero rows x zero columns, the k-th
/// zero row (ascending) paired with the k-th zero column (ascending).
template <Domain R>
WPerm<R> complement_map(const WPerm<R>& s) {
    const std::size_t n = s.size();
    std::vector<bool> row_used(n, false), col_used(n, false);
    for (const auto& p : s.pivots()) {
        row_used[p.row] = true;
        col_used[p.col] = true;
    }
    std::vector<std::size_t> zr, zc;
    for (std::size_t i = 0; i < n; ++i) {
        if (!row_used[i]) zr.push_back(i);
        if (!col_used[i]) zc.push_back(i);
    }
    std::vector<typename WPerm<R>::Pivot> p;
    p.reserve(zr.size());
    for (std::size_t k = 0; k < zr.size(); ++k) p.push_back({zr[k], zc[k], Fraction<R>::one()});
    return WPerm<R>(n, std::move(p));
}

/// S^Ext = S + S̄: full rank completion.
template <Domain R>
WPerm<R> extended_map(const WPerm<R>& s) {
    auto bar = complement_map(s);
    std::vector<typename WPerm<R>::Pivot> p = s.pivots();
    for (const auto& q : bar.pivots()) p.push_back(q);
    return WPerm<R>(s.size(), std::move(p));
}

/// Moore-Penrose inverse: transpose with inverted values.
/// Satisfies S S+ S = S and S+ S S+ = S+.
template <Domain R>
WPerm<R> mp_inverse(const WPerm<R>& s) {
    std::vector<typename WPerm<R>::Pivot> p;
    p.reserve(s.pivots().size());
    for (const auto& q : s.pivots()) p.push_back({q.col, q.row, q.value.inverse()});
    return WPerm<R>(s.size(), std::move(p));
}

template <Domain R>
WPerm<R> wp_transpose(const WPerm<R>& s) {
    std::vector<typename WPerm<R>::Pivot> p;
    p.reserve(s.pivots().size());
    for (const auto& q : s.pivots()) p.push_back({q.col, q.row, q.value});
    return WPerm<R>(s.size(), std::move(p));
}

/// I = E E^T: ones exactly at pivot rows.
template <Domain R>
DiagIdem row_idem(const WPerm<R>& s) {
    std::vector<std::size_t> act;
    act.reserve(s.pivots().size());
    for (const auto& p : s.pivots()) act.push_back(p.row);
    return DiagIdem(s.size(), std::move(act));
}

/// J = E^T E: ones exactly at pivot columns.
template <Domain R>
DiagIdem col_idem(const WPerm<R>& s) {
    std::vector<std::size_t> act;
    act.reserve(s.pivots().size());
    for (const auto& p : s.pivots()) act.push_back(p.col);
    return DiagIdem(s.size(), std::move(act));
}

// ---------------------------------------------------------------------------
// Products and scalings
// ---------------------------------------------------------------------------

template <Domain R>
WPerm<R> wp_mul(const WPerm<R>& a, const WPerm<R>& b, const MulCtx& ctx = {}) {
    if (a.size() != b.size()) throw DimensionMismatch("wp_mul sizes differ");
    std::vector<typename WPerm<R>::Pivot> p;
    for (const auto& q : a.pivots()) {
        const auto* t = b.pivot_in_row(q.col);
        if (t) {
            p.push_back({q.row, t->col, q.value * t->value});
            ctx.mul(1);
        }
    }
    return WPerm<R>(a.size(), std::move(p));
}

/// S * A for dense A over F: row r of the result is value * row c of A.
template <Domain R>
DMatrix<Fraction<R>> wp_dense_mul(const WPerm<R>& s, const DMatrix<Fraction<R>>& a,
                                  const MulCtx& ctx = {}) {
    if (s.size() != a.rows()) throw DimensionMismatch("wp_dense_mul sizes differ");
    DMatrix<Fraction<R>> c(a.rows(), a.cols());
    for (const auto& p : s.pivots()) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(p.row, j) = p.value * a(p.col, j);
        ctx.mul(a.cols());
    }
    return c;
}

/// A * S for dense A over F: column c of the result is value * column r of A.
template <Domain R>
DMatrix<Fraction<R>> wp_dense_mul(const DMatrix<Fraction<R>>& a, const WPerm<R>& s,
                                  const MulCtx& ctx = {}) {
    if (s.size() != a.cols()) throw DimensionMismatch("wp_dense_mul sizes differ");
    DMatrix<Fraction<R>> c(a.rows(), a.cols());
    for (const auto& p : s.pivots()) {
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, p.col) = a(i, p.row) * p.value;
        ctx.mul(a.rows());
    }
    return c;
}

/// S * A with A over R, result exact in R (throws InexactDivision otherwise).
template <Domain R>
DMatrix<R> wp_ring_mul_exact(const WPerm<R>& s, const DMatrix<R>& a, const MulCtx& ctx = {}) {
    if (s.size() != a.rows()) throw DimensionMismatch("wp_ring_mul_exact sizes differ");
    DMatrix<R> c(a.rows(), a.cols());
    for (const auto& p : s.pivots()) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(p.row, j) = exact_div(p.value.num() * a(p.col, j), p.value.den());
        ctx.mul(a.cols());
        ctx.div(a.cols());
    }
    return c;
}

template <Domain R>
DMatrix<R> wp_ring_mul_exact(const DMatrix<R>& a, const WPerm<R>& s, const MulCtx& ctx = {}) {
    if (s.size() != a.cols()) throw DimensionMismatch("wp_ring_mul_exact sizes differ");
    DMatrix<R> c(a.rows(), a.cols());
    for (const auto& p : s.pivots()) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            c(i, p.col) = exact_div(a(i, p.row) * p.value.num(), p.value.den());
        ctx.mul(a.rows());
        ctx.div(a.rows());
    }
    return c;
}

// Row/column selections by a diagonal idempotent (projection, no ring ops).
template <typename T>
DMatrix<T> select_rows_of(const DiagIdem& d, const DMatrix<T>& a) {
    DMatrix<T> c(a.rows(), a.cols());
    for (std::size_t i : d.active())
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    return c;
}

template <typename T>
DMatrix<T> select_cols_of(const DiagIdem& d, const DMatrix<T>& a) {
    DMatrix<T> c(a.rows(), a.cols());
    for (std::size_t j : d.active())
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    return c;
}

// ---------------------------------------------------------------------------
// Scaled idempotent blends: mu at active positions, 1 elsewhere
// ---------------------------------------------------------------------------

/// Dense rendering of the blend (invertible diagonal over F).
template <Domain R>
DMatrix<Fraction<R>> idem_blend(const DiagIdem& d, const Fraction<R>& mu) {
    if (mu.is_zero()) throw ZeroScale("idem_blend with zero scale");
    auto m = DMatrix<Fraction<R>>::identity(d.size());
    for (std::size_t i : d.active()) m(i, i) = mu;
    return m;
}

/// Rows of A at active positions scaled by mu (left-multiplication by the blend).
template <Domain R>
DMatrix<Fraction<R>> blend_scale_rows(const DiagIdem& d, const Fraction<R>& mu,
                                      const DMatrix<Fraction<R>>& a, const MulCtx& ctx = {}) {
    if (mu.is_zero()) throw ZeroScale("blend with zero scale");
    DMatrix<Fraction<R>> c = a;
    for (std::size_t i : d.active()) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = mu * a(i, j);
        ctx.mul(a.cols());
    }
    return c;
}

/// Columns of A at active positions scaled by mu (right-multiplication).
template <Domain R>
DMatrix<Fraction<R>> blend_scale_cols(const DMatrix<Fraction<R>>& a, const DiagIdem& d,
                                      const Fraction<R>& mu, const MulCtx& ctx = {}) {
    if (mu.is_zero()) throw ZeroScale("blend with zero scale");
    DMatrix<Fraction<R>> c = a;
    for (std::size_t j : d.active()) {
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j) * mu;
        ctx.mul(a.rows());
    }
    return c;
}

/// Exact-in-R variants used when the theory guarantees the scaled entries stay
/// in the domain (e.g. L~12 = L12 * I^lambda).
template <Domain R>
DMatrix<R> blend_scale_cols_exact(const DMatrix<R>& a, const DiagIdem& d, const Fraction<R>& mu,
                                  const MulCtx& ctx = {}) {
    if (mu.is_zero()) throw ZeroScale("blend with zero scale");
    DMatrix<R> c = a;
    for (std::size_t j : d.active()) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            c(i, j) = exact_div(a(i, j) * mu.num(), mu.den());
        ctx.mul(a.rows());
        ctx.div(a.rows());
    }
    return c;
}

template <Domain R>
DMatrix<R> blend_scale_rows_exact(const DiagIdem& d, const Fraction<R>& mu, const DMatrix<R>& a,
                                  const MulCtx& ctx = {}) {
    if (mu.is_zero()) throw ZeroScale("blend with zero scale");
    DMatrix<R> c = a;
    for (std::size_t i : d.active()) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = exact_div(a(i, j) * mu.num(), mu.den());
        ctx.mul(a.cols());
        ctx.div(a.cols());
    }
    return c;
}

// ---------------------------------------------------------------------------
// The hatted completion and its inverse
// ---------------------------------------------------------------------------

/// Ŝ = (alpha*S + S̄) / alpha_r: a full-rank weighted permutation.
template <Domain R>
WPerm<R> shat_of(const WPerm<R>& s, const R& alpha, const R& alpha_r) {
    if (alpha.is_zero()) throw ZeroDeterminant("shat_of with zero alpha");
    if (alpha_r.is_zero()) throw ZeroDeterminant("shat_of with zero alpha_r");
    const Fraction<R> inv_ar = Fraction<R>(R::one(), alpha_r);
    const Fraction<R> a{alpha};
    const auto bar = complement_map(s);
    std::vector<typename WPerm<R>::Pivot> p;
    p.reserve(s.size());
    for (const auto& q : s.pivots()) p.push_back({q.row, q.col, a * q.value * inv_ar});
    for (const auto& q : bar.pivots()) p.push_back({q.row, q.col, inv_ar});
    return WPerm<R>(s.size(), std::move(p));
}

/// Ŝ^{-1} = (alpha_r / alpha) (S+ + alpha * S̄^T); satisfies Ŝ Ŝ^{-1} = I.
template <Domain R>
WPerm<R> shat_inverse(const WPerm<R>& s, const R& alpha, const R& alpha_r) {
    if (alpha.is_zero()) throw ZeroDeterminant("shat_inverse with zero alpha");
    if (alpha_r.is_zero()) throw ZeroDeterminant("shat_inverse with zero alpha_r");
    const Fraction<R> ar{alpha_r};
    const Fraction<R> a{alpha};
    const auto bar = complement_map(s);
    std::vector<typename WPerm<R>::Pivot> p;
    p.reserve(s.size());
    for (const auto& q : s.pivots()) p.push_back({q.col, q.row, ar / (a * q.value)});
    for (const auto& q : bar.pivots()) p.push_back({q.col, q.row, ar});
    return WPerm<R>(s.size(), std::move(p));
}

} // namespace lsu

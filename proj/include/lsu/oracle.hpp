#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsu/linalg.hpp"
#include "lsu/lsu.hpp"

namespace lsu {
namespace oracle {

/// Row/column index sets of a square submatrix (ascending, in bounds).
struct MinorSpec {
    std::vector<std::size_t> row_indices;
    std::vector<std::size_t> col_indices;
};

namespace detail {

template <RingElem T>
T det_on(const DMatrix<T>& a, const std::vector<std::size_t>& rows,
         const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 0) return T::one();
    if (k == 1) return a(rows[0], cols[0]);
    // cofactor expansion along the first column of the selection
    T acc = T::zero();
    bool neg = false;
    for (std::size_t i = 0; i < k; ++i) {
        const T& piv = a(rows[i], cols[0]);
        if (!piv.is_zero()) {
            std::vector<std::size_t> sub;
            sub.reserve(k - 1);
            for (std::size_t t = 0; t < k; ++t)
                if (t != i) sub.push_back(rows[t]);
            std::vector<std::size_t> subc(cols.begin() + 1, cols.end());
            const T term = piv * det_on(a, sub, subc);
            acc = neg ? acc - term : acc + term;
        }
        neg = !neg;
    }
    return acc;
}

inline std::vector<std::size_t> iota_vec(std::size_t k) {
    std::vector<std::size_t> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = i;
    return v;
}

// next k-combination of {0..n-1} in lexicographic order
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Cofactor-expansion determinant. Exists to be obviously correct, not fast.
template <RingElem T>
T det_bruteforce(const DMatrix<T>& a) {
    if (!a.square()) throw NonSquare("det_bruteforce needs a square matrix");
    return detail::det_on(a, detail::iota_vec(a.rows()), detail::iota_vec(a.rows()));
}

/// Determinant of the submatrix picked by row/col index sequences (order
/// matters for the sign; duplicate indices give zero, as a determinant must).
template <RingElem T>
T minor_det(const DMatrix<T>& a, const std::vector<std::size_t>& rows,
            const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw DimensionMismatch("minor needs equal index counts");
    return detail::det_on(a, rows, cols);
}

/// Canonical (ascending) minor selected by a MinorSpec.
template <RingElem T>
T minor_det(const DMatrix<T>& a, const MinorSpec& spec) {
    if (spec.row_indices.size() != spec.col_indices.size())
        throw DimensionMismatch("minor needs equal index counts");
    auto ascending_in = [](const std::vector<std::size_t>& v, std::size_t bound) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] >= bound) return false;
            if (i > 0 && v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!ascending_in(spec.row_indices, a.rows()) || !ascending_in(spec.col_indices, a.cols()))
        throw DimensionMismatch("minor indices must be strictly ascending and in bounds");
    return detail::det_on(a, spec.row_indices, spec.col_indices);
}

/// Largest k such that some k x k minor is nonzero, by exhaustive scan.
template <RingElem T>
std::size_t rank_bruteforce(const DMatrix<T>& a) {
    const std::size_t kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = kmax; k >= 1; --k) {
        auto rows = detail::iota_vec(k);
        do {
            auto cols = detail::iota_vec(k);
            do {
                if (!detail::det_on(a, rows, cols).is_zero()) return k;
            } while (detail::next_combination(cols, a.cols()));
        } while (detail::next_combination(rows, a.rows()));
    }
    return 0;
}

/// Adjugate by cofactors: A * adj(A) = det(A) * I.
template <RingElem T>
DMatrix<T> adjugate_bruteforce(const DMatrix<T>& a) {
    if (!a.square()) throw NonSquare("adjugate needs a square matrix");
    const std::size_t n = a.rows();
    DMatrix<T> adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t t = 0; t < n; ++t) {
                if (t != i) rows.push_back(t);
                if (t != j) cols.push_back(t);
            }
            T c = detail::det_on(a, rows, cols);
            if ((i + j) % 2 == 1) c = -c;
            adj(j, i) = std::move(c);   // transpose of the cofactor matrix
        }
    return adj;
}

/// det of the (k+1)x(k+1) submatrix surrounding the leading k x k block with
/// row r and column c appended. Evaluated two ways -- direct expansion and
/// det(A_k) * omega - r_vec * adj(A_k) * c_vec (Theorem 1) -- with agreement
/// asserted. k = 0 returns the entry itself.
template <RingElem T>
T surrounding_minor(const DMatrix<T>& m, std::size_t k, std::size_t r, std::size_t c) {
    if (r < k || c < k || r >= m.rows() || c >= m.cols())
        throw DimensionMismatch("surrounding_minor indices out of range");
    if (k == 0) return m(r, c);

    std::vector<std::size_t> lead = detail::iota_vec(k);
    const T det_k = detail::det_on(m, lead, lead);
    if (det_k.is_zero()) throw SingularLeadingBlock("leading block is singular");

    // path 1: direct expansion
    std::vector<std::size_t> rows = lead, cols = lead;
    rows.push_back(r);
    cols.push_back(c);
    const T direct = detail::det_on(m, rows, cols);

    // path 2: det(A_k) * omega - r_vec * adj(A_k) * c_vec
    DMatrix<T> lead_block(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead_block(i, j) = m(i, j);
    const auto adj = adjugate_bruteforce(lead_block);
    T dot = T::zero();
    for (std::size_t i = 0; i < k; ++i) {
        T row_adj = T::zero();
        for (std::size_t t = 0; t < k; ++t) row_adj = row_adj + m(r, t) * adj(t, i);
        dot = dot + row_adj * m(i, c);
    }
    const T via_adjugate = det_k * m(r, c) - dot;

    if (!(direct == via_adjugate))
        throw Error("surrounding_minor: Theorem 1 evaluation paths disagree");
    return direct;
}

/// Theorem 2 route: the full matrix (det_k) D - C adj(A_k) B of surrounding
/// minors for the leading k x k block.
template <RingElem T>
DMatrix<T> surrounding_minor_matrix(const DMatrix<T>& m, std::size_t k) {
    if (k >= m.rows() || k >= m.cols())
        throw DimensionMismatch("surrounding_minor_matrix: block too large");
    std::vector<std::size_t> lead = detail::iota_vec(k);
    const T det_k = detail::det_on(m, lead, lead);
    if (det_k.is_zero()) throw SingularLeadingBlock("leading block is singular");

    const std::size_t dr = m.rows() - k, dc = m.cols() - k;
    DMatrix<T> lead_block(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead_block(i, j) = m(i, j);
    const auto adj = adjugate_bruteforce(lead_block);

    DMatrix<T> out(dr, dc);
    for (std::size_t i = 0; i < dr; ++i)
        for (std::size_t j = 0; j < dc; ++j) {
            T dot = T::zero();
            for (std::size_t s = 0; s < k; ++s) {
                T row_adj = T::zero();
                for (std::size_t t = 0; t < k; ++t) row_adj = row_adj + m(k + i, t) * adj(t, s);
                dot = dot + row_adj * m(s, k + j);
            }
            out(i, j) = det_k * m(k + i, k + j) - dot;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Bundle verification
// ---------------------------------------------------------------------------

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

/// |x| is some |minor| of a, the empty minor included. L and U entries are
/// minors in nested pivot order, whose sign may flip against the ascending
/// row/column convention used for enumeration.
template <Domain R>
bool matches_some_minor(const R& x, const DMatrix<R>& a) {
    const R neg = -x;
    if (x == R::one() || neg == R::one()) return true;   // empty minor
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= n; ++k) {
        auto rows = detail::iota_vec(k);
        do {
            auto cols = detail::iota_vec(k);
            do {
                const R d = detail::det_on(a, rows, cols);
                if (d == x || d == neg) return true;
            } while (detail::next_combination(cols, a.cols()));
        } while (detail::next_combination(rows, a.rows()));
    }
    return false;
}

/// Checks every contract of the factor bundle against A. Oracle-backed checks
/// (rank, minor membership) run only at sizes where exhaustive scans are cheap.
template <Domain R>
VerifyReport verify_bundle(const DMatrix<R>& a, const LsuFactors<R>& f) {
    using F = Fraction<R>;
    VerifyReport rep;
    const std::size_t n = f.n;
    if (a.rows() != n || a.cols() != n) {
        rep.add("dimensions_agree", false, "A is not n x n");
        return rep;
    }
    const MulCtx ctx{};

    // alpha L S U = A
    {
        const auto lsu_prod = scalar_mul(
            F(f.alpha_in),
            mat_mul(to_field(f.L), wp_dense_mul(f.S, to_field(f.U), ctx), ctx), ctx);
        rep.add("alpha_LSU_equals_A", lsu_prod == to_field(a));
    }
    // L Shat M = I,  W Shat U = I
    {
        const auto i_n = DMatrix<F>::identity(n);
        const auto lhs = mat_mul(wp_dense_mul(to_field(f.L), f.Shat, ctx), to_field(f.M), ctx);
        rep.add("L_Shat_M_is_identity", lhs == i_n);
        const auto rhs = mat_mul(wp_dense_mul(to_field(f.W), f.Shat, ctx), to_field(f.U), ctx);
        rep.add("W_Shat_U_is_identity", rhs == i_n);
    }
    // triangular, nonzero diagonals
    {
        bool lower = true, upper = true, diag = true;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j)
                if (!f.L(i, j).is_zero()) lower = false;
            for (std::size_t j = 0; j < i; ++j)
                if (!f.U(i, j).is_zero()) upper = false;
            if (f.L(i, i).is_zero() || f.U(i, i).is_zero()) diag = false;
        }
        rep.add("L_lower_triangular", lower);
        rep.add("U_upper_triangular", upper);
        rep.add("LU_diagonals_nonzero", diag);
    }
    // eq (3): L Ibar = Ibar and Jbar U = Jbar
    {
        const auto ibar = row_idem(f.S).complement().template dense<R>();
        const auto jbar = col_idem(f.S).complement().template dense<R>();
        rep.add("L_Ibar_equals_Ibar", mat_mul(f.L, ibar, ctx) == ibar);
        rep.add("Jbar_U_equals_Jbar", mat_mul(jbar, f.U, ctx) == jbar);
    }
    // Shat = (alpha S + S̄) / alpha_r
    rep.add("Shat_formula", f.Shat == shat_of(f.S, f.alpha_in, f.alpha_r));
    // rank bookkeeping
    rep.add("rank_equals_pivot_count",
            f.rank == f.S.rank() && f.rank == f.pivot_order.size());
    if (n <= 8) {
        const std::size_t bf = rank_bruteforce(a);
        rep.add("rank_matches_bruteforce", f.rank == bf,
                "factored " + std::to_string(f.rank) + ", oracle " + std::to_string(bf));
    }
    if (n <= 4) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (!f.L(i, j).is_zero() && !matches_some_minor(f.L(i, j), a)) ok = false;
                if (!f.U(i, j).is_zero() && !matches_some_minor(f.U(i, j), a)) ok = false;
            }
        rep.add("LU_entries_are_minors", ok);
    }
    return rep;
}

} // namespace oracle
} // namespace lsu

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lsu/errors.hpp"

namespace lsu {

/// Ring-level operation tallies (multiplications / additions / divisions).
/// One quotient-field operation counts as one operation, matching the
/// arithmetic-operation complexity model; bignum word ops are not counted.
struct OpCounter {
    std::uint64_t mul_count = 0;
    std::uint64_t add_count = 0;
    std::uint64_t div_count = 0;

    void merge(const OpCounter& o) {
        mul_count += o.mul_count;
        add_count += o.add_count;
        div_count += o.div_count;
    }
};

enum class MulStrategy { schoolbook, strassen };

/// Threading context for dense products: strategy plus an optional counter.
struct MulCtx {
    MulStrategy strategy = MulStrategy::schoolbook;
    OpCounter* counter = nullptr;

    void mul(std::uint64_t k) const { if (counter) counter->mul_count += k; }
    void add(std::uint64_t k) const { if (counter) counter->add_count += k; }
    void div(std::uint64_t k) const { if (counter) counter->div_count += k; }
};

template <typename T>
concept RingElem = requires(const T a, const T b) {
    { T::zero() } -> std::same_as<T>;
    { T::one() } -> std::same_as<T>;
    { a + b } -> std::same_as<T>;
    { a - b } -> std::same_as<T>;
    { a * b } -> std::same_as<T>;
    { -a } -> std::same_as<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

/// Dense row-major matrix over an exact ring or field element type.
template <RingElem T>
class DMatrix {
public:
    DMatrix() : rows_(0), cols_(0) {}
    DMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, T::zero()) {}
    DMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match dimensions");
    }

    static DMatrix identity(std::size_t n) {
        DMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T::one();
        return m;
    }
    static DMatrix scaled_identity(std::size_t n, const T& v) {
        DMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = v;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (const T& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool operator==(const DMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (!(e_[i] == o.e_[i])) return false;
        return true;
    }
    bool operator!=(const DMatrix& o) const { return !(*this == o); }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

// ---------------------------------------------------------------------------
// Block split / join / padding
// ---------------------------------------------------------------------------

template <RingElem T>
struct Blocks4 {
    DMatrix<T> a11, a12, a21, a22;
};

template <RingElem T>
Blocks4<T> split4(const DMatrix<T>& a) {
    if (!a.square()) throw NonSquare("split4 needs a square matrix");
    if (a.rows() % 2 != 0) throw OddDimension("split4 needs an even dimension");
    const std::size_t h = a.rows() / 2;
    Blocks4<T> b{DMatrix<T>(h, h), DMatrix<T>(h, h), DMatrix<T>(h, h), DMatrix<T>(h, h)};
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            b.a11(i, j) = a(i, j);
            b.a12(i, j) = a(i, j + h);
            b.a21(i, j) = a(i + h, j);
            b.a22(i, j) = a(i + h, j + h);
        }
    return b;
}

template <RingElem T>
DMatrix<T> join4(const DMatrix<T>& a11, const DMatrix<T>& a12,
                 const DMatrix<T>& a21, const DMatrix<T>& a22) {
    const std::size_t h = a11.rows();
    if (a11.cols() != h || a12.rows() != h || a12.cols() != h || a21.rows() != h ||
        a21.cols() != h || a22.rows() != h || a22.cols() != h)
        throw DimensionMismatch("join4 blocks must be equal and square");
    DMatrix<T> a(2 * h, 2 * h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) {
            a(i, j) = a11(i, j);
            a(i, j + h) = a12(i, j);
            a(i + h, j) = a21(i, j);
            a(i + h, j + h) = a22(i, j);
        }
    return a;
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m *= 2;
    return m;
}

struct OriginalDims {
    std::size_t rows = 0;
    std::size_t cols = 0;
};

/// Zero-pad bottom/right to the smallest power-of-two square. Rank is
/// unchanged: the algorithm's zero-block base case absorbs the padding.
template <RingElem T>
std::pair<DMatrix<T>, OriginalDims> pad_to_pow2(const DMatrix<T>& a) {
    const OriginalDims dims{a.rows(), a.cols()};
    const std::size_t m = next_pow2(std::max(a.rows(), a.cols()));
    if (m == a.rows() && m == a.cols()) return {a, dims};
    DMatrix<T> p(m, m);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = a(i, j);
    return {p, dims};
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

template <RingElem T>
DMatrix<T> mat_add(const DMatrix<T>& a, const DMatrix<T>& b, const MulCtx& ctx = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("mat_add shapes differ");
    DMatrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    ctx.add(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return c;
}

template <RingElem T>
DMatrix<T> mat_sub(const DMatrix<T>& a, const DMatrix<T>& b, const MulCtx& ctx = {}) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("mat_sub shapes differ");
    DMatrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    ctx.add(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return c;
}

template <RingElem T>
DMatrix<T> scalar_mul(const T& c, const DMatrix<T>& a, const MulCtx& ctx = {}) {
    DMatrix<T> r(a.rows(), a.cols());
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    ctx.mul(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return r;
}

template <RingElem T>
DMatrix<T> transpose(const DMatrix<T>& a) {
    DMatrix<T> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

namespace detail {

template <RingElem T>
DMatrix<T> mul_schoolbook(const DMatrix<T>& a, const DMatrix<T>& b, const MulCtx& ctx) {
    DMatrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc = a(i, 0) * b(0, j);
            for (std::size_t t = 1; t < a.cols(); ++t) acc = acc + a(i, t) * b(t, j);
            c(i, j) = std::move(acc);
        }
    const std::uint64_t nm = static_cast<std::uint64_t>(a.rows()) * b.cols();
    ctx.mul(nm * a.cols());
    ctx.add(nm * (a.cols() - 1));
    return c;
}

inline constexpr std::size_t kStrassenCutoff = 8;

template <RingElem T>
DMatrix<T> mul_strassen_sq(const DMatrix<T>& a, const DMatrix<T>& b, const MulCtx& ctx) {
    const std::size_t n = a.rows();
    if (n < kStrassenCutoff) return mul_schoolbook(a, b, ctx);
    auto A = split4(a);
    auto B = split4(b);
    auto P1 = mul_strassen_sq(mat_add(A.a11, A.a22, ctx), mat_add(B.a11, B.a22, ctx), ctx);
    auto P2 = mul_strassen_sq(mat_add(A.a21, A.a22, ctx), B.a11, ctx);
    auto P3 = mul_strassen_sq(A.a11, mat_sub(B.a12, B.a22, ctx), ctx);
    auto P4 = mul_strassen_sq(A.a22, mat_sub(B.a21, B.a11, ctx), ctx);
    auto P5 = mul_strassen_sq(mat_add(A.a11, A.a12, ctx), B.a22, ctx);
    auto P6 = mul_strassen_sq(mat_sub(A.a21, A.a11, ctx), mat_add(B.a11, B.a12, ctx), ctx);
    auto P7 = mul_strassen_sq(mat_sub(A.a12, A.a22, ctx), mat_add(B.a21, B.a22, ctx), ctx);
    auto C11 = mat_add(mat_sub(mat_add(P1, P4, ctx), P5, ctx), P7, ctx);
    auto C12 = mat_add(P3, P5, ctx);
    auto C21 = mat_add(P2, P4, ctx);
    auto C22 = mat_add(mat_add(mat_sub(P1, P2, ctx), P3, ctx), P6, ctx);
    return join4(C11, C12, C21, C22);
}

} // namespace detail

/// Exact product; Strassen recursion switches to schoolbook below size 8.
/// A zero operand short-circuits (no ring operations performed).
template <RingElem T>
DMatrix<T> mat_mul(const DMatrix<T>& a, const DMatrix<T>& b, const MulCtx& ctx = {}) {
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul inner dimensions differ");
    if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return DMatrix<T>(a.rows(), b.cols());
    if (a.is_zero() || b.is_zero()) return DMatrix<T>(a.rows(), b.cols());
    if (ctx.strategy == MulStrategy::schoolbook) return detail::mul_schoolbook(a, b, ctx);
    const std::size_t n = std::max({a.rows(), a.cols(), b.cols()});
    const std::size_t m = next_pow2(n);
    if (a.rows() == m && a.cols() == m && b.cols() == m)
        return detail::mul_strassen_sq(a, b, ctx);
    // pad rectangular input to a power-of-two square, multiply, crop
    DMatrix<T> pa(m, m), pb(m, m);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) pa(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) pb(i, j) = b(i, j);
    DMatrix<T> pc = detail::mul_strassen_sq(pa, pb, ctx);
    DMatrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = pc(i, j);
    return c;
}

/// Entrywise checked exact division by a ring scalar.
template <typename T>
DMatrix<T> mat_div_exact(const DMatrix<T>& a, const T& d, const MulCtx& ctx = {}) {
    DMatrix<T> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = exact_div(a(i, j), d);
    ctx.div(static_cast<std::uint64_t>(a.rows()) * a.cols());
    return r;
}

} // namespace lsu

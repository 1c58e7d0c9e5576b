#pragma once

#include <cstdint>
#include <random>

#include "lsu/matrix.hpp"
#include "lsu/poly.hpp"
#include "lsu/ring.hpp"
#include "lsu/wperm.hpp"

namespace lsu {

/// Seeded generator with platform-stable draws (mt19937_64 output reduced by
/// modulo, never through distribution objects).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    long uniform(long lo, long hi) {   // inclusive range
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    bool coin() { return (next() & 1u) != 0; }

private:
    std::mt19937_64 g_;
};

template <Domain R>
struct RandomEntry;

template <>
struct RandomEntry<Zint> {
    static Zint draw(Rng& rng) { return Zint(rng.uniform(-9, 9)); }
};

template <>
struct RandomEntry<Rat> {
    static Rat draw(Rng& rng) { return Rat(rng.uniform(-9, 9), rng.uniform(1, 9)); }
};

template <>
struct RandomEntry<PolyQ> {
    static PolyQ draw(Rng& rng) {
        const long deg = rng.uniform(0, 2);
        std::vector<Rat> c;
        c.reserve(static_cast<std::size_t>(deg) + 1);
        for (long k = 0; k <= deg; ++k) c.push_back(Rat(rng.uniform(-4, 4), rng.uniform(1, 3)));
        return PolyQ(std::move(c));
    }
};

template <Domain R>
DMatrix<R> random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    DMatrix<R> a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = RandomEntry<R>::draw(rng);
    return a;
}

/// Forces a rank deficiency: duplicates a row when possible, zeroes one
/// otherwise (1x1 case).
template <Domain R>
void make_deficient(DMatrix<R>& a, Rng& rng) {
    const std::size_t n = a.rows();
    if (n >= 2) {
        std::size_t src = rng.index(n);
        std::size_t dst = rng.index(n);
        if (src == dst) dst = (dst + 1) % n;
        for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) = a(src, j);
    } else {
        for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = R::zero();
    }
}

template <Domain R>
void zero_random_row(DMatrix<R>& a, Rng& rng) {
    const std::size_t i = rng.index(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = R::zero();
}

// small constant-embedding helper shared by the generators
template <Domain R>
R from_long(long v);

template <>
inline Zint from_long<Zint>(long v) { return Zint(v); }
template <>
inline Rat from_long<Rat>(long v) { return Rat(v); }
template <>
inline PolyQ from_long<PolyQ>(long v) { return PolyQ(v); }

/// Random weighted permutation with the given number of pivots.
template <Domain R>
WPerm<R> random_wperm(std::size_t n, std::size_t r, Rng& rng) {
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
    // partial Fisher-Yates for the first r slots
    for (std::size_t i = 0; i < r; ++i) {
        std::swap(rows[i], rows[i + rng.index(n - i)]);
        std::swap(cols[i], cols[i + rng.index(n - i)]);
    }
    std::vector<typename WPerm<R>::Pivot> p;
    p.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        long num = rng.uniform(1, 9);
        if (rng.coin()) num = -num;
        p.push_back({rows[i], cols[i],
                     Fraction<R>(from_long<R>(num), from_long<R>(rng.uniform(1, 9)))});
    }
    return WPerm<R>(n, std::move(p));
}

} // namespace lsu

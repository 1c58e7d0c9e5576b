#pragma once

// The 4x4 worked example used as golden data across the test suites.

#include "lsu/matrix.hpp"
#include "lsu/ring.hpp"
#include "lsu/wperm.hpp"

namespace golden {

using lsu::DMatrix;
using lsu::Fraction;
using lsu::WPerm;
using lsu::Zint;

inline DMatrix<Zint> zmat(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DMatrix<Zint> m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Zint(v);
        ++i;
    }
    return m;
}

inline Fraction<Zint> q(long num, long den = 1) {
    return Fraction<Zint>(Zint(num), Zint(den));
}

inline DMatrix<Zint> example_a() {
    return zmat({{0, 0, 3, 0}, {2, 0, 1, 0}, {0, 0, 0, 0}, {1, 4, 0, 1}});
}

inline DMatrix<Zint> example_l() {
    return zmat({{24, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 8}});
}

inline DMatrix<Zint> example_u() {
    return zmat({{2, 0, 1, 0}, {0, 8, -1, 2}, {0, 0, 24, 0}, {0, 0, 0, 1}});
}

inline DMatrix<Zint> example_m() {
    return zmat({{0, 24, 0, 0}, {0, -24, 0, 48}, {192, 0, 0, 0}, {0, 0, 24, 0}});
}

inline DMatrix<Zint> example_w() {
    return zmat({{-96, 24, 0, 0}, {24, 0, -6, 48}, {192, 0, 0, 0}, {0, 0, 24, 0}});
}

// S with the corrected (4,2) value 1/16 (0-based (3,1)); the printed 1/6
// fails alpha*L*S*U = A and contradicts Shat(4,2) = 1/384.
inline WPerm<Zint> example_s() {
    return WPerm<Zint>(4, {{0, 2, q(1, 192)}, {1, 0, q(1, 2)}, {3, 1, q(1, 16)}});
}

inline WPerm<Zint> example_shat() {
    return WPerm<Zint>(4, {{0, 2, q(1, 4608)}, {1, 0, q(1, 48)}, {2, 3, q(1, 24)}, {3, 1, q(1, 384)}});
}

} // namespace golden

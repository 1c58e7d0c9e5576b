#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lsu/ring.hpp"

namespace lsu {

/// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
/// The zero polynomial is the empty coefficient list.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(Rat c) { coef_.push_back(std::move(c)); trim(); }
    explicit PolyQ(long c) : PolyQ(Rat(c)) {}
    explicit PolyQ(std::vector<Rat> coef) : coef_(std::move(coef)) { trim(); }

    static PolyQ zero() { return PolyQ(); }
    static PolyQ one() { return PolyQ(Rat(1)); }
    /// x^k with rational coefficient c.
    static PolyQ monomial(Rat c, std::size_t k) {
        if (c.is_zero()) return PolyQ();
        std::vector<Rat> v(k + 1, Rat::zero());
        v[k] = std::move(c);
        return PolyQ(std::move(v));
    }

    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }
    /// degree of zero is -1 by convention here
    long degree() const { return static_cast<long>(coef_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return coef_; }
    Rat leading() const { return coef_.empty() ? Rat::zero() : coef_.back(); }
    Rat coefficient(std::size_t k) const { return k < coef_.size() ? coef_[k] : Rat::zero(); }

    PolyQ operator+(const PolyQ& o) const {
        std::vector<Rat> r(std::max(coef_.size(), o.coef_.size()), Rat::zero());
        for (std::size_t i = 0; i < coef_.size(); ++i) r[i] = coef_[i];
        for (std::size_t i = 0; i < o.coef_.size(); ++i) r[i] = r[i] + o.coef_[i];
        return PolyQ(std::move(r));
    }
    PolyQ operator-(const PolyQ& o) const { return *this + (-o); }
    PolyQ operator-() const {
        std::vector<Rat> r;
        r.reserve(coef_.size());
        for (const auto& c : coef_) r.push_back(-c);
        PolyQ p;
        p.coef_ = std::move(r);
        return p;
    }
    PolyQ operator*(const PolyQ& o) const {
        if (is_zero() || o.is_zero()) return PolyQ();
        std::vector<Rat> r(coef_.size() + o.coef_.size() - 1, Rat::zero());
        for (std::size_t i = 0; i < coef_.size(); ++i)
            for (std::size_t j = 0; j < o.coef_.size(); ++j)
                r[i + j] = r[i + j] + coef_[i] * o.coef_[j];
        return PolyQ(std::move(r));
    }
    bool operator==(const PolyQ& o) const { return coef_ == o.coef_; }
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    /// Division with remainder; exact over Q coefficients.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        PolyQ q, r = *this;
        const Rat lc = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            const Rat c = exact_div(r.leading(), lc);
            PolyQ t = monomial(c, shift);
            q = q + t;
            r = r - t * d;
        }
        return {q, r};
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
    }

    std::vector<Rat> coef_;
};

inline PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div by zero polynomial");
    auto [q, r] = a.divmod(b);
    if (!r.is_zero())
        throw InexactDivision("polynomial division leaves remainder");
    return q;
}

/// Monic Euclidean gcd.
inline PolyQ gcd_of(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a, y = b;
    while (!y.is_zero()) {
        PolyQ r = x.divmod(y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return exact_div(x, PolyQ(x.leading()));   // normalize monic
}

/// Units of Q[x] are the nonzero constants; canonical form is monic.
inline PolyQ canonical_unit(const PolyQ& a) {
    return a.is_zero() ? PolyQ::one() : PolyQ(a.leading());
}

inline std::string to_text(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const Rat c = p.coefficient(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        if (!first) s += " + ";
        first = false;
        if (k == 0 || !c.is_one()) s += to_text(c);
        if (k > 0) {
            if (!c.is_one()) s += "*";
            s += "x";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace lsu

#pragma once

#include <concepts>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lsu/errors.hpp"

namespace lsu {

/// A commutative domain with checked exact division. No ordering, no norms:
/// the factorization never needs magnitude comparisons, only exact arithmetic.
template <typename R>
concept Domain = requires(const R a, const R b) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { exact_div(a, b) } -> std::same_as<R>;   // throws InexactDivision / DivisionByZero
    { canonical_unit(a) } -> std::same_as<R>; // unit u with a/u in canonical form
    { to_text(a) } -> std::same_as<std::string>;
};

/// Optional capability: instances that expose a gcd get reduced fractions.
template <typename R>
concept HasGcd = requires(const R a, const R b) {
    { gcd_of(a, b) } -> std::same_as<R>;
};

// ---------------------------------------------------------------------------
// Zint: arbitrary-precision integers (GMP-backed).
// ---------------------------------------------------------------------------

class Zint {
public:
    Zint() : v_(0) {}
    explicit Zint(long v) : v_(v) {}
    explicit Zint(const mpz_class& v) : v_(v) {}
    explicit Zint(const std::string& s) {
        if (mpz_set_str(v_.get_mpz_t(), s.c_str(), 10) != 0)
            throw ParseError("not a decimal integer: '" + s + "'");
    }

    static Zint zero() { return Zint(0); }
    static Zint one() { return Zint(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    const mpz_class& raw() const { return v_; }

    Zint operator+(const Zint& o) const { return Zint(mpz_class(v_ + o.v_)); }
    Zint operator-(const Zint& o) const { return Zint(mpz_class(v_ - o.v_)); }
    Zint operator*(const Zint& o) const { return Zint(mpz_class(v_ * o.v_)); }
    Zint operator-() const { return Zint(mpz_class(-v_)); }
    bool operator==(const Zint& o) const { return v_ == o.v_; }
    bool operator!=(const Zint& o) const { return v_ != o.v_; }

private:
    mpz_class v_;
};

inline Zint exact_div(const Zint& a, const Zint& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div by zero integer");
    if (!mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()))
        throw InexactDivision("integer division " + a.raw().get_str() + " / " +
                              b.raw().get_str() + " is not exact");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Zint(q);
}

inline Zint gcd_of(const Zint& a, const Zint& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Zint(g);
}

inline Zint canonical_unit(const Zint& a) {
    return sgn(a.raw()) < 0 ? Zint(-1) : Zint(1);
}

inline std::string to_text(const Zint& a) { return a.raw().get_str(); }

// ---------------------------------------------------------------------------
// Rat: rationals (GMP-backed), a field viewed as a domain.
// ---------------------------------------------------------------------------

class Rat {
public:
    Rat() : v_(0) {}
    explicit Rat(long v) : v_(v) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rat(const std::string& s) {
        // "p/q" or "p"
        if (mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("not a rational: '" + s + "'");
        if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0)
            throw ParseError("rational with zero denominator: '" + s + "'");
        v_.canonicalize();
    }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& raw() const { return v_; }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

private:
    mpq_class v_;
};

inline Rat exact_div(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div by zero rational");
    return Rat(mpq_class(a.raw() / b.raw()));
}

// In a field every nonzero element divides every other; taking gcd(a,b) = b
// (for b != 0) makes the generic fraction reduction collapse denominators to 1.
inline Rat gcd_of(const Rat& a, const Rat& b) { return b.is_zero() ? a : b; }

inline Rat canonical_unit(const Rat& a) { return a.is_zero() ? Rat(1) : a; }

inline std::string to_text(const Rat& a) { return a.raw().get_str(); }

// ---------------------------------------------------------------------------
// Fraction<R>: the field of quotients of R.
// ---------------------------------------------------------------------------

template <Domain R>
class Fraction {
public:
    Fraction() : num_(R::zero()), den_(R::one()) {}
    explicit Fraction(R value) : num_(std::move(value)), den_(R::one()) {}
    Fraction(R num, R den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
        normalize();
    }

    static Fraction zero() { return Fraction(R::zero()); }
    static Fraction one() { return Fraction(R::one()); }

    const R& num() const { return num_; }
    const R& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// True when the value lies in R with denominator already 1.
    bool den_is_one() const { return den_ == R::one(); }

    Fraction operator+(const Fraction& o) const {
        if (den_is_one() && o.den_is_one()) return Fraction(num_ + o.num_);
        return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Fraction operator-(const Fraction& o) const {
        if (den_is_one() && o.den_is_one()) return Fraction(num_ - o.num_);
        return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Fraction operator*(const Fraction& o) const {
        if (den_is_one() && o.den_is_one()) return Fraction(num_ * o.num_);
        return Fraction(num_ * o.num_, den_ * o.den_);
    }
    Fraction operator/(const Fraction& o) const {
        if (o.is_zero()) throw DivisionByZero("fraction division by zero");
        return Fraction(num_ * o.den_, den_ * o.num_);
    }
    Fraction operator-() const {
        Fraction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    /// Cross-multiplication equality: independent of representation.
    bool operator==(const Fraction& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    Fraction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero fraction");
        return Fraction(den_, num_);
    }

    /// Checked projection back into R.
    R to_domain() const { return exact_div(num_, den_); }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = R::one();
            return;
        }
        if constexpr (HasGcd<R>) {
            R g = gcd_of(num_, den_);
            if (!g.is_zero()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        R u = canonical_unit(den_);
        num_ = exact_div(num_, u);
        den_ = exact_div(den_, u);
    }

    R num_, den_;
};

// Fraction<R> is itself a domain (a field), so matrices over F reuse the
// same generic machinery.
template <Domain R>
Fraction<R> exact_div(const Fraction<R>& a, const Fraction<R>& b) {
    return a / b;
}

template <Domain R>
Fraction<R> gcd_of(const Fraction<R>& a, const Fraction<R>& b) {
    return b.is_zero() ? a : b;
}

template <Domain R>
Fraction<R> canonical_unit(const Fraction<R>& a) {
    return a.is_zero() ? Fraction<R>::one() : a;
}

template <Domain R>
Fraction<R> frac_of(const R& a) {
    return Fraction<R>(a);
}

template <Domain R>
Fraction<R> frac_inv(const Fraction<R>& a) {
    return a.inverse();
}

template <Domain R>
std::string to_text(const Fraction<R>& f) {
    if (f.den_is_one()) return to_text(f.num());
    return to_text(f.num()) + "/" + to_text(f.den());
}

} // namespace lsu

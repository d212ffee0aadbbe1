// Exact rational scalars (arbitrary precision) and Gaussian rationals.
// Backed by GMP's mpq layer; values are always canonical: reduced fraction,
// positive denominator, so equality is structural.

#ifndef RATINT_RATIONAL_HPP
#define RATINT_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratint {

class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long n, long d);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses "p/q", integers, and decimal forms like "-3.25e-2"; all exact.
    static Rational fromString(std::string_view text);
    /// 2^e for any integer e (negative allowed).
    static Rational pow2(long e);
    /// m * 2^e with big mantissa given in decimal.
    static Rational scaled(const Rational& m, long e) { return m * pow2(e); }

    bool isZero() const { return mpq_sgn(q_) == 0; }
    bool isOne() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool isInteger() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.isZero()) throw std::domain_error("division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }
    Rational inv() const;
    Rational pow(long e) const;

    /// Exact floor(log2(|x|)); requires x != 0.
    long exponent() const;
    /// Numerator / denominator as standalone rationals.
    Rational numerator() const;
    Rational denominator() const;
    /// gcd of |a| and |b| interpreted over the rationals (both integers in use).
    static Rational intGcd(const Rational& a, const Rational& b);

    double toDouble() const { return mpq_get_d(q_); }
    /// Canonical "p/q" (or "p" when q = 1).
    std::string toString() const;
    /// Decimal approximation with the given number of significant digits.
    std::string toDecimalString(int digits) const;

    size_t bitSize() const {
        return mpz_sizeinbase(mpq_numref(q_), 2) + mpz_sizeinbase(mpq_denref(q_), 2);
    }

    const mpq_t& raw() const { return q_; }
    mpq_t& raw() { return q_; }

private:
    mpq_t q_;
};

/// normalize(n, d) from integer pair; errors on d = 0.
Rational normalizeRational(long n, long d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool isZero() const { return re.isZero() && im.isZero(); }
    bool isReal() const { return im.isZero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational normSq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string toString() const;
};

GaussianRational gaussianDiv(const GaussianRational& a, const GaussianRational& b);

}  // namespace ratint

#endif

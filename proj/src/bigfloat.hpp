// Arbitrary-precision binary floats with per-value precision, plus a small
// complex companion type used by the numeric evaluators and the root finder.
// Every stored value is a dyadic rational, so conversion back to Rational is
// exact; MPFR supplies faithfully rounded arithmetic at each stated precision.

#ifndef RATINT_BIGFLOAT_HPP
#define RATINT_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "rational.hpp"

namespace ratint {

class BigFloat {
public:
    BigFloat() : BigFloat(64) {}
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(f_, prec); mpfr_set_zero(f_, 1); }
    BigFloat(double d, mpfr_prec_t prec) {
        mpfr_init2(f_, prec);
        mpfr_set_d(f_, d, MPFR_RNDN);
    }
    BigFloat(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        mpfr_init2(f_, prec);
        mpfr_set_q(f_, q.raw(), rnd);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_swap(f_, o.f_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(f_, mpfr_get_prec(o.f_));
            mpfr_set(f_, o.f_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(f_, o.f_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(f_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(f_); }
    bool isZero() const { return mpfr_zero_p(f_) != 0; }
    bool isFinite() const { return mpfr_number_p(f_) != 0; }
    int sign() const { return mpfr_sgn(f_); }

    /// Exact conversion; every BigFloat is a dyadic rational.
    Rational toRationalExact() const;

    double toDouble() const { return mpfr_get_d(f_, MPFR_RNDN); }
    std::string toString(int digits = 17) const;

    // Arithmetic at the max precision of the operands, round to nearest.
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(a, b, mpfr_div); }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.f_, f_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.f_, b.f_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.f_, f_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.f_, f_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {  // log of |x|
        BigFloat r(prec());
        mpfr_abs(r.f_, f_, MPFR_RNDN);
        mpfr_log(r.f_, r.f_, MPFR_RNDN);
        return r;
    }
    static BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.f_, y.f_, x.f_, MPFR_RNDN);
        return r;
    }

    /// Upper bound on sqrt(q) at the given precision (q >= 0).
    static BigFloat sqrtUp(const Rational& q, mpfr_prec_t prec);
    /// Directed conversions.
    static BigFloat fromRationalUp(const Rational& q, mpfr_prec_t prec) {
        return BigFloat(q, prec, MPFR_RNDU);
    }

    /// Round to an integer multiple of 2^e (ties to even); exact result.
    BigFloat roundToGrid(long e) const;
    /// floor(log2 |x|); requires a nonzero finite value.
    long exponent() const { return static_cast<long>(mpfr_get_exp(f_)) - 1; }

    int cmpRational(const Rational& q) const { return mpfr_cmp_q(f_, q.raw()); }

    const mpfr_t& raw() const { return f_; }
    mpfr_t& raw() { return f_; }

private:
    using mpfr_fun = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat binop(const BigFloat& a, const BigFloat& b, mpfr_fun f) {
        BigFloat r(std::max(a.prec(), b.prec()));
        f(r.f_, a.f_, b.f_, MPFR_RNDN);
        return r;
    }
    mpfr_t f_;
};

/// Complex value over BigFloat; arithmetic at a fixed working precision.
struct Cplx {
    BigFloat re, im;

    Cplx() = default;
    explicit Cplx(mpfr_prec_t prec) : re(prec), im(prec) {}
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    bool isZero() const { return re.isZero() && im.isZero(); }
    Cplx conj() const { return {re, -im}; }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b);
    Cplx operator-() const { return {-re, -im}; }

    BigFloat normSq() const { return re * re + im * im; }
    BigFloat abs() const { return normSq().sqrt(); }
};

}  // namespace ratint

#endif

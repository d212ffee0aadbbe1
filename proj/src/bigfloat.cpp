#include "bigfloat.hpp"

#include <vector>

namespace ratint {

Rational BigFloat::toRationalExact() const {
    if (isZero()) return Rational(0);
    if (!isFinite()) throw std::domain_error("non-finite value has no rational image");
    mpz_t m;
    mpz_init(m);
    mpfr_exp_t e = mpfr_get_z_2exp(m, f_);
    Rational r;
    mpq_set_z(r.raw(), m);
    mpz_clear(m);
    return r * Rational::pow2(static_cast<long>(e));
}

std::string BigFloat::toString(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, f_) < 0) return "nan";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat BigFloat::sqrtUp(const Rational& q, mpfr_prec_t prec) {
    BigFloat v(q, prec, MPFR_RNDU);
    BigFloat r(prec);
    mpfr_sqrt(r.f_, v.f_, MPFR_RNDU);
    return r;
}

BigFloat BigFloat::roundToGrid(long e) const {
    if (isZero()) return *this;
    // shift so the grid is the integers, round, shift back; both shifts exact
    BigFloat shifted(std::max<mpfr_prec_t>(prec() + 4, 64));
    mpfr_mul_2si(shifted.f_, f_, -e, MPFR_RNDN);
    mpfr_rint(shifted.f_, shifted.f_, MPFR_RNDN);
    mpfr_mul_2si(shifted.f_, shifted.f_, e, MPFR_RNDN);
    return shifted;
}

Cplx operator/(const Cplx& a, const Cplx& b) {
    BigFloat n = b.normSq();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

}  // namespace ratint

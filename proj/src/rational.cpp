#include "rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace ratint {

Rational::Rational(long n, long d) {
    mpq_init(q_);
    if (d == 0) throw std::domain_error("division by zero");
    mpq_set_si(q_, n, 1);
    mpq_t den;
    mpq_init(den);
    mpq_set_si(den, d, 1);
    mpq_div(q_, q_, den);
    mpq_clear(den);
}

Rational normalizeRational(long n, long d) { return Rational(n, d); }

Rational Rational::fromString(std::string_view text) {
    // strip whitespace
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = fromString(s.substr(0, slash));
        Rational den = fromString(s.substr(slash + 1));
        if (den.isZero()) throw std::domain_error("division by zero");
        return num / den;
    }

    bool neg = false;
    size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;  // integer + fraction digits
    long fracDigits = 0;
    long expo = 0;
    bool seenDot = false, seenDigit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seenDigit = true;
            if (seenDot) ++fracDigits;
        } else if (c == '.' && !seenDot) {
            seenDot = true;
        } else if ((c == 'e' || c == 'E') && seenDigit) {
            expo = std::stol(std::string(s.substr(pos + 1)));
            pos = s.size() - 1;
            break;
        } else {
            throw std::invalid_argument("bad rational literal: " + s);
        }
    }
    if (!seenDigit) throw std::invalid_argument("bad rational literal: " + s);

    Rational r;
    mpz_set_str(mpq_numref(r.q_), digits.c_str(), 10);
    mpq_canonicalize(r.q_);
    long tens = expo - fracDigits;
    if (tens != 0) {
        Rational p10(10);
        p10 = p10.pow(tens < 0 ? -tens : tens);
        if (tens < 0)
            r /= p10;
        else
            r *= p10;
    }
    if (neg) r = -r;
    return r;
}

Rational Rational::pow2(long e) {
    Rational r(1);
    if (e >= 0)
        mpz_mul_2exp(mpq_numref(r.q_), mpq_numref(r.q_), static_cast<unsigned long>(e));
    else
        mpz_mul_2exp(mpq_denref(r.q_), mpq_denref(r.q_), static_cast<unsigned long>(-e));
    return r;
}

Rational Rational::inv() const {
    if (isZero()) throw std::domain_error("division by zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inv() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
    return r;
}

long Rational::exponent() const {
    if (isZero()) throw std::domain_error("exponent of zero");
    // floor(log2(num/den)) computed from bit sizes with a correction step.
    long bn = static_cast<long>(mpz_sizeinbase(mpq_numref(q_), 2));
    long bd = static_cast<long>(mpz_sizeinbase(mpq_denref(q_), 2));
    long e = bn - bd;
    // |x| in [2^(e-1), 2^(e+1)); nail down by comparison with 2^e.
    Rational p = pow2(e);
    if (abs() >= p) return e;
    return e - 1;
}

Rational Rational::numerator() const {
    Rational r;
    mpq_set_z(r.q_, mpq_numref(q_));
    return r;
}

Rational Rational::denominator() const {
    Rational r;
    mpq_set_z(r.q_, mpq_denref(q_));
    return r;
}

Rational Rational::intGcd(const Rational& a, const Rational& b) {
    Rational r;
    mpz_gcd(mpq_numref(r.q_), mpq_numref(a.q_), mpq_numref(b.q_));
    return r;
}

std::string Rational::toString() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

std::string Rational::toDecimalString(int digits) const {
    if (isZero()) return "0";
    // Scale |num/den| to an integer with `digits` significant decimal digits.
    mpz_t num, den, scaled, rem;
    mpz_init_set(num, mpq_numref(q_));
    mpz_init_set(den, mpq_denref(q_));
    bool neg = mpz_sgn(num) < 0;
    mpz_abs(num, num);

    // decimal exponent estimate
    long e10 = 0;
    mpz_t tmp;
    mpz_init_set(tmp, num);
    while (mpz_cmp(tmp, den) >= 0) {
        mpz_tdiv_q_ui(tmp, tmp, 10);
        ++e10;
    }
    mpz_set(tmp, num);
    while (mpz_cmp(tmp, den) < 0) {
        mpz_mul_ui(tmp, tmp, 10);
        --e10;
    }
    // now 10^e10 <= |x| < 10^(e10+1)
    mpz_init(scaled);
    mpz_init(rem);
    long shift = digits - 1 - e10;
    mpz_set(scaled, num);
    if (shift >= 0) {
        mpz_t p;
        mpz_init(p);
        mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(shift));
        mpz_mul(scaled, scaled, p);
        mpz_clear(p);
        mpz_fdiv_qr(scaled, rem, scaled, den);
    } else {
        mpz_t p;
        mpz_init(p);
        mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(-shift));
        mpz_mul(p, p, den);
        mpz_fdiv_qr(scaled, rem, scaled, p);
        mpz_clear(p);
    }
    std::string mant = [&] {
        char* s = mpz_get_str(nullptr, 10, scaled);
        std::string out(s);
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, out.size() + 1);
        return out;
    }();
    mpz_clears(num, den, scaled, rem, tmp, nullptr);

    std::ostringstream os;
    if (neg) os << '-';
    if (e10 >= 0 && e10 < digits) {
        os << mant.substr(0, e10 + 1);
        std::string frac = mant.substr(e10 + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) os << '.' << frac;
    } else {
        os << mant.substr(0, 1);
        std::string frac = mant.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) os << '.' << frac;
        os << 'e' << e10;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toString(); }

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.isZero()) throw std::domain_error("division by zero");
    Rational n = b.normSq();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

GaussianRational gaussianDiv(const GaussianRational& a, const GaussianRational& b) { return a / b; }

std::string GaussianRational::toString() const {
    std::string s = re.toString();
    if (!im.isZero()) {
        s += im.sign() > 0 ? " + " : " - ";
        s += im.abs().toString() + "i";
    }
    return s;
}

}  // namespace ratint

#include "polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ratint {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::monomial(Rational coeff, int k) {
    if (coeff.isZero()) return {};
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
}

const Rational& Polynomial::leadingCoeff() const {
    if (isZero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].isZero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].isZero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    if (s.isZero()) return {};
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(int e) const {
    Polynomial r = Polynomial::constant(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divRem(const Polynomial& b) const {
    if (b.isZero()) throw std::domain_error("division by zero polynomial");
    Polynomial r = *this;
    if (r.degree() < b.degree()) return {Polynomial(), r};
    std::vector<Rational> q(static_cast<size_t>(r.degree() - b.degree()) + 1);
    Rational lcInv = b.leadingCoeff().inv();
    while (!r.isZero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.leadingCoeff() * lcInv;
        q[static_cast<size_t>(k)] = f;
        // r -= f * x^k * b
        for (int i = 0; i <= b.degree(); ++i) {
            r.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
        }
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::divExact(const Polynomial& b) const {
    auto [q, r] = divRem(b);
    if (!r.isZero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::antiderivative() const {
    if (isZero()) return {};
    std::vector<Rational> c(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational v;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

GaussianRational Polynomial::eval(const GaussianRational& x) const {
    GaussianRational v;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + GaussianRational(c_[i]);
    return v;
}

BigFloat Polynomial::eval(const BigFloat& x) const {
    BigFloat v(x.prec());
    for (size_t i = c_.size(); i-- > 0;) v = v * x + BigFloat(c_[i], x.prec());
    return v;
}

Cplx Polynomial::eval(const Cplx& x) const {
    mpfr_prec_t p = x.re.prec();
    Cplx v(p);
    for (size_t i = c_.size(); i-- > 0;) {
        v = v * x;
        v.re = v.re + BigFloat(c_[i], p);
    }
    return v;
}

Polynomial Polynomial::monic() const {
    if (isZero()) return {};
    return scaled(leadingCoeff().inv());
}

Rational Polynomial::content() const {
    if (isZero()) return Rational(0);
    // gcd of numerators over lcm of denominators, signed by the top coefficient
    Rational gnum(0), dlcm(1);
    for (const auto& c : c_) {
        if (c.isZero()) continue;
        gnum = Rational::intGcd(gnum, c.numerator());
        Rational d = c.denominator();
        dlcm = dlcm * d / Rational::intGcd(dlcm, d);
    }
    Rational content = gnum / dlcm;
    if (leadingCoeff().sign() < 0) content = -content;
    return content;
}

std::string Polynomial::toString(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = coeff(k);
        if (a.isZero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        bool unitCoeff = mag.isOne() && k > 0;
        if (!unitCoeff) {
            bool needParen = !mag.isInteger() && k > 0;
            if (needParen) os << "(" << mag.toString() << ")";
            else os << mag.toString();
            if (k > 0) os << "*";
        }
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

size_t Polynomial::maxCoeffBits() const {
    size_t m = 0;
    for (const auto& c : c_) m = std::max(m, c.bitSize());
    return m;
}

// ---------------------------------------------------------------------------
// gcd via primitive pseudo-remainder sequence

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod b, computed without
// rational division so integer inputs stay integer.
Polynomial pseudoRem(Polynomial a, const Polynomial& b) {
    int db = b.degree();
    const Rational& lb = b.leadingCoeff();
    int steps = a.degree() - db + 1;
    int done = 0;
    while (!a.isZero() && a.degree() >= db) {
        int k = a.degree() - db;
        Rational la = a.leadingCoeff();
        a = a.scaled(lb) - (b * Polynomial::monomial(la, k));
        ++done;
    }
    // normalize to the full power so the definition is independent of the
    // number of reduction steps actually taken
    if (done < steps) a = a.scaled(lb.pow(steps - done));
    return a;
}

}  // namespace

Polynomial polyGcd(Polynomial a, Polynomial b) {
    if (a.isZero() && b.isZero()) throw std::domain_error("gcd(0, 0)");
    if (a.isZero()) return b.monic();
    if (b.isZero()) return a.monic();
    a = a.primitivePart();
    b = b.primitivePart();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.isZero()) {
        Polynomial r = pseudoRem(a, b);
        a = std::move(b);
        b = r.isZero() ? Polynomial() : r.primitivePart();
    }
    return a.monic();
}

ExtendedGcd extendedGcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Rational(1)), s1;
    Polynomial t0, t1 = Polynomial::constant(Rational(1));
    while (!r1.isZero()) {
        auto [q, r] = r0.divRem(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.isZero()) throw std::domain_error("gcd(0, 0)");
    Rational u = r0.leadingCoeff().inv();
    return {r0.scaled(u), s0.scaled(u), t0.scaled(u)};
}

std::pair<Polynomial, Polynomial> halfExtendedGcd(const Polynomial& a, const Polynomial& b,
                                                  const Polynomial& rhs) {
    ExtendedGcd e = extendedGcd(a, b);
    auto [m, rem] = rhs.divRem(e.g);
    if (!rem.isZero()) throw std::logic_error("unsolvable diophantine equation");
    if (b.isConstant()) return {Polynomial(), rhs.scaled(b.coeff(0).inv())};
    Polynomial c = e.s * m;
    {
        auto [q, r] = c.divRem(b);
        c = std::move(r);
        (void)q;
    }
    // d = (rhs - c*a) / b exactly
    Polynomial d = (rhs - c * a).divExact(b);
    return {std::move(c), std::move(d)};
}

Polynomial SquarefreeFactorization::reconstruct() const {
    Polynomial p = Polynomial::constant(unit);
    for (const auto& [f, m] : factors) p = p * f.pow(m);
    return p;
}

SquarefreeFactorization squarefreeFactor(const Polynomial& p) {
    if (p.isZero()) throw std::domain_error("squarefree factorization of zero");
    SquarefreeFactorization out;
    if (p.isConstant()) {
        out.unit = p.coeff(0);
        return out;
    }
    Polynomial w = p.monic();
    // Yun's algorithm on the monic part.
    Polynomial g = polyGcd(w, w.derivative());
    Polynomial c = w.divExact(g);           // product of distinct factors
    Polynomial y = w.derivative().divExact(g);
    int i = 1;
    while (!c.isConstant()) {
        Polynomial z = y - c.derivative();
        Polynomial f = z.isZero() ? Polynomial::constant(Rational(1)) : polyGcd(c, z);
        if (f.degree() > 0) out.factors.emplace_back(f, i);
        c = c.divExact(f);
        if (z.isZero()) break;
        y = z.divExact(f);
        ++i;
    }
    // unit = p / prod f^i, must be the original leading coefficient
    out.unit = p.leadingCoeff();
    return out;
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

std::vector<Polynomial> sturmChain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p.primitivePart());
    chain.push_back(p.derivative().primitivePart());
    while (!chain.back().isZero()) {
        const Polynomial& a = chain[chain.size() - 2];
        const Polynomial& b = chain.back();
        Polynomial r = pseudoRem(a, b);
        if (r.isZero()) break;
        // pseudoRem equals lc(b)^(da-db+1) * rem(a,b); the chain needs a
        // positive multiple of -rem, so undo a negative scale before
        // stripping the (unsigned) content.
        Rational scale = b.leadingCoeff().pow(a.degree() - b.degree() + 1);
        if (scale.sign() > 0) r = -r;
        r = r.scaled(r.content().abs().inv());
        chain.push_back(std::move(r));
    }
    return chain;
}

int signAtInf(const Polynomial& p, int dir) {
    if (p.isZero()) return 0;
    int s = p.leadingCoeff().sign();
    if (dir < 0 && (p.degree() % 2 == 1)) s = -s;
    return s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int countRealRoots(const Polynomial& p) {
    if (p.isConstant()) return 0;
    Polynomial sf = p.divExact(polyGcd(p, p.derivative()));
    auto chain = sturmChain(sf);
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        lo.push_back(signAtInf(q, -1));
        hi.push_back(signAtInf(q, +1));
    }
    return variations(lo) - variations(hi);
}

int countRealRootsIn(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.isConstant()) return 0;
    Polynomial sf = p.divExact(polyGcd(p, p.derivative()));
    auto chain = sturmChain(sf);
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        lo.push_back(q.eval(a).sign());
        hi.push_back(q.eval(b).sign());
    }
    return variations(lo) - variations(hi);
}

}  // namespace ratint

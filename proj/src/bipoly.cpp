#include "bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ratint {

namespace {
const Polynomial kZeroPoly;
}

BiPoly BiPoly::fromX(const Polynomial& p) {
    std::vector<Polynomial> xc;
    xc.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) xc.push_back(Polynomial::constant(p.coeff(k)));
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::fromC(const Polynomial& p) {
    if (p.isZero()) return {};
    return BiPoly({p});
}

BiPoly BiPoly::c() { return BiPoly({Polynomial::variable()}); }

int BiPoly::degC() const {
    int d = -1;
    for (const auto& p : xc_) d = std::max(d, p.degree());
    return d;
}

const Polynomial& BiPoly::xCoeff(int k) const {
    if (k < 0 || k >= static_cast<int>(xc_.size())) return kZeroPoly;
    return xc_[static_cast<size_t>(k)];
}

const Polynomial& BiPoly::leadingX() const {
    if (isZero()) throw std::logic_error("leading coefficient of zero polynomial");
    return xc_.back();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<Polynomial> xc(std::max(a.xc_.size(), b.xc_.size()));
    for (size_t i = 0; i < xc.size(); ++i) {
        if (i < a.xc_.size()) xc[i] = xc[i] + a.xc_[i];
        if (i < b.xc_.size()) xc[i] = xc[i] + b.xc_[i];
    }
    return BiPoly(std::move(xc));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    std::vector<Polynomial> xc(std::max(a.xc_.size(), b.xc_.size()));
    for (size_t i = 0; i < xc.size(); ++i) {
        if (i < a.xc_.size()) xc[i] = xc[i] + a.xc_[i];
        if (i < b.xc_.size()) xc[i] = xc[i] - b.xc_[i];
    }
    return BiPoly(std::move(xc));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Polynomial> xc(a.xc_.size() + b.xc_.size() - 1);
    for (size_t i = 0; i < a.xc_.size(); ++i) {
        if (a.xc_[i].isZero()) continue;
        for (size_t j = 0; j < b.xc_.size(); ++j) {
            if (b.xc_[j].isZero()) continue;
            xc[i + j] = xc[i + j] + a.xc_[i] * b.xc_[j];
        }
    }
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::operator-() const {
    std::vector<Polynomial> xc(xc_.size());
    for (size_t i = 0; i < xc_.size(); ++i) xc[i] = -xc_[i];
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::scaledC(const Polynomial& s) const {
    if (s.isZero()) return {};
    std::vector<Polynomial> xc(xc_.size());
    for (size_t i = 0; i < xc_.size(); ++i) xc[i] = xc_[i] * s;
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::scaled(const Rational& s) const {
    if (s.isZero()) return {};
    std::vector<Polynomial> xc(xc_.size());
    for (size_t i = 0; i < xc_.size(); ++i) xc[i] = xc_[i].scaled(s);
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::shiftedX(int k) const {
    if (isZero() || k == 0) return *this;
    std::vector<Polynomial> xc(xc_.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < xc_.size(); ++i) xc[i + static_cast<size_t>(k)] = xc_[i];
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::divExactC(const Polynomial& s) const {
    std::vector<Polynomial> xc(xc_.size());
    for (size_t i = 0; i < xc_.size(); ++i)
        xc[i] = xc_[i].isZero() ? Polynomial() : xc_[i].divExact(s);
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::derivativeX() const {
    if (xc_.size() <= 1) return {};
    std::vector<Polynomial> xc(xc_.size() - 1);
    for (size_t i = 1; i < xc_.size(); ++i)
        xc[i - 1] = xc_[i].scaled(Rational(static_cast<long>(i)));
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::derivativeC() const {
    std::vector<Polynomial> xc(xc_.size());
    for (size_t i = 0; i < xc_.size(); ++i) xc[i] = xc_[i].derivative();
    return BiPoly(std::move(xc));
}

std::pair<Polynomial, Polynomial> BiPoly::evalC(const GaussianRational& value) const {
    std::vector<Rational> re(xc_.size()), im(xc_.size());
    for (size_t i = 0; i < xc_.size(); ++i) {
        GaussianRational v = xc_[i].eval(value);
        re[i] = std::move(v.re);
        im[i] = std::move(v.im);
    }
    return {Polynomial(std::move(re)), Polynomial(std::move(im))};
}

Polynomial BiPoly::evalC(const Rational& value) const {
    std::vector<Rational> out(xc_.size());
    for (size_t i = 0; i < xc_.size(); ++i) out[i] = xc_[i].eval(value);
    return Polynomial(std::move(out));
}

Polynomial BiPoly::contentX() const {
    if (isZero()) return {};
    Polynomial g;
    for (const auto& p : xc_) {
        if (p.isZero()) continue;
        g = g.isZero() ? p : polyGcd(g, p);
        if (g.isConstant()) break;
    }
    g = g.monic();
    // rational part of the content so the primitive part is integer-primitive
    Rational num(0), den(1);
    for (const auto& p : xc_) {
        for (const auto& coeff : p.divExact(g).coeffs()) {
            if (coeff.isZero()) continue;
            num = Rational::intGcd(num, coeff.numerator());
            Rational d = coeff.denominator();
            den = den * d / Rational::intGcd(den, d);
        }
    }
    Rational r = num / den;
    if (leadingX().divExact(g).leadingCoeff().sign() < 0) r = -r;
    return g.scaled(r);
}

BiPoly BiPoly::primitivePartX() const {
    if (isZero()) return {};
    return divExactC(contentX());
}

std::string BiPoly::toString() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degX(); k >= 0; --k) {
        if (xCoeff(k).isZero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << xCoeff(k).toString("c") << ")";
        if (k > 0) {
            os << "*x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Subresultant chain

namespace {

// lc(b)^(degX a - degX b + 1) * a  mod b, all in Q[c][x].
BiPoly premX(const BiPoly& a, const BiPoly& b) {
    int e = b.degX();
    const Polynomial& lb = b.leadingX();
    int steps = a.degX() - e + 1;
    int done = 0;
    BiPoly r = a;
    while (!r.isZero() && r.degX() >= e) {
        int k = r.degX() - e;
        Polynomial lr = r.leadingX();
        r = r.scaledC(lb) - b.scaledC(lr).shiftedX(k);
        ++done;
    }
    if (done < steps && !r.isZero()) {
        Polynomial f = Polynomial::constant(Rational(1));
        for (int i = done; i < steps; ++i) f = f * lb;
        r = r.scaledC(f);
    }
    return r;
}

Polynomial polyPow(const Polynomial& p, int e) {
    Polynomial r = Polynomial::constant(Rational(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// Full rational content of a bipoly (unsigned).
Rational fullContent(const BiPoly& p) {
    Rational num(0), den(1);
    for (const auto& q : p.xCoeffs()) {
        for (const auto& coeff : q.coeffs()) {
            if (coeff.isZero()) continue;
            num = Rational::intGcd(num, coeff.numerator());
            Rational d = coeff.denominator();
            den = den * d / Rational::intGcd(den, d);
        }
    }
    return num / den;
}

}  // namespace

SubresultantChain::SubresultantChain(const BiPoly& fIn, const BiPoly& gIn) {
    if (fIn.isZero() || gIn.isZero()) throw std::invalid_argument("subresultant chain of zero");

    bool swapped = false;
    BiPoly F = fIn, G = gIn;
    if (F.degX() < G.degX()) {
        std::swap(F, G);
        swapped = true;
    }
    int p = F.degX(), q = G.degX();
    if (p == 0) throw std::invalid_argument("subresultant chain needs positive x-degree");
    if (p == q) throw std::logic_error("equal x-degrees not supported");

    // Work on integer-primitive images; subresultants scale back by known units.
    Rational cf = fullContent(F), cg = fullContent(G);
    F = F.scaled(cf.inv());
    G = G.scaled(cg.inv());
    auto unitFor = [&](int j) {
        // S_j(cf*F, cg*G) = cf^(q-j) * cg^(p-j) * S_j(F, G)
        return cf.pow(q - j) * cg.pow(p - j);
    };

    std::vector<std::pair<int, BiPoly>> rev;  // descending index
    if (q == 0) {
        Polynomial r0 = polyPow(G.xCoeff(0), p);
        rev.emplace_back(0, BiPoly::fromC(r0));
    } else {
        // S_q by convention
        rev.emplace_back(q, p - q == 1 ? G : G.scaledC(polyPow(G.leadingX(), p - q - 1)));
        Polynomial s = polyPow(G.leadingX(), p - q);
        BiPoly A = G;
        int deltaInit = p - q + 1;
        BiPoly B = premX(F, G);
        if (deltaInit % 2 == 0) B = -B;  // prem(F, -G) = (-1)^(p-q+1) prem(F, G)
        while (true) {
            if (B.isZero()) break;
            int d = A.degX(), e = B.degX();
            rev.emplace_back(d - 1, B);
            int delta = d - e;
            BiPoly C;
            if (delta > 1) {
                // Lazard's lift of the defective subresultant: S_e
                C = B.scaledC(polyPow(B.leadingX(), delta - 1)).divExactC(polyPow(s, delta - 1));
                rev.emplace_back(e, C);
            } else {
                C = B;
            }
            if (e == 0) break;
            BiPoly R = premX(A, B);
            if ((d - e + 1) % 2 == 0) R = -R;  // prem(A, -B) sign
            B = R.isZero() ? BiPoly() : R.divExactC(polyPow(s, delta) * A.leadingX());
            A = C;
            s = A.leadingX();
        }
    }

    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        int j = it->first;
        chain_.emplace_back(j, it->second.scaled(unitFor(j)));
    }

    if (!chain_.empty() && chain_.front().first == 0) {
        Polynomial r0 = chain_.front().second.xCoeff(0);
        if (swapped && (p % 2 == 1) && (q % 2 == 1)) r0 = -r0;
        resultant_ = r0;
    } else {
        resultant_ = Polynomial();  // inputs share a factor in x
    }
}

const BiPoly* SubresultantChain::byIndex(int j) const {
    for (const auto& [idx, s] : chain_)
        if (idx == j) return &s;
    return nullptr;
}

const BiPoly* SubresultantChain::byDegreeX(int d) const {
    for (const auto& [idx, s] : chain_)
        if (s.degX() == d) return &s;
    return nullptr;
}

Polynomial SubresultantChain::principalCoeff(int j) const {
    const BiPoly* s = byIndex(j);
    if (!s) return {};
    return s->xCoeff(j);
}

}  // namespace ratint

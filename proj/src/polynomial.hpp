// Dense univariate polynomials over the exact rationals.
//
// Coefficients are stored by ascending degree; the zero polynomial is the
// empty vector and every nonzero polynomial has a nonzero top coefficient.

#ifndef RATINT_POLYNOMIAL_HPP
#define RATINT_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "rational.hpp"

namespace ratint {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
    static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }
    /// c * x^k
    static Polynomial monomial(Rational coeff, int k);

    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leadingCoeff() const;
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& s) const;
    Polynomial pow(int e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact division with remainder: *this = q*b + r, deg r < deg b.
    std::pair<Polynomial, Polynomial> divRem(const Polynomial& b) const;
    /// Exact quotient; throws if the division leaves a remainder.
    Polynomial divExact(const Polynomial& b) const;

    Polynomial derivative() const;
    /// Term-by-term antiderivative with zero constant.
    Polynomial antiderivative() const;

    Rational eval(const Rational& x) const;
    GaussianRational eval(const GaussianRational& x) const;
    BigFloat eval(const BigFloat& x) const;
    Cplx eval(const Cplx& x) const;

    Polynomial monic() const;
    /// Rational content (gcd of coefficient numerators / lcm of denominators),
    /// carrying the sign of the leading coefficient.
    Rational content() const;
    /// Integer-primitive image with positive leading coefficient.
    Polynomial primitivePart() const { return scaled(content().inv()); }

    std::string toString(const std::string& var = "x") const;

    size_t maxCoeffBits() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().isZero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd; primitive PRS underneath to control coefficient growth.
Polynomial polyGcd(Polynomial a, Polynomial b);

/// Solves C*a + D*b = rhs with deg C < deg b, given gcd(a,b) | rhs.
/// Throws std::logic_error when the diophantine equation is unsolvable.
std::pair<Polynomial, Polynomial> halfExtendedGcd(const Polynomial& a, const Polynomial& b,
                                                  const Polynomial& rhs);

/// Full extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd extendedGcd(const Polynomial& a, const Polynomial& b);

/// unit * prod(factors[i].first ^ factors[i].second) reconstructs the input;
/// factors are squarefree, pairwise coprime, monic, listed with strictly
/// increasing multiplicity.
struct SquarefreeFactorization {
    Rational unit{1};
    std::vector<std::pair<Polynomial, int>> factors;

    Polynomial reconstruct() const;
};
SquarefreeFactorization squarefreeFactor(const Polynomial& p);

/// Number of distinct real roots (Sturm). Exact.
int countRealRoots(const Polynomial& p);
/// Number of distinct real roots in (a, b].
int countRealRootsIn(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace ratint

#endif

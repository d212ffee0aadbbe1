// Bivariate polynomials in (c, x), stored as polynomials in x whose
// coefficients live in Q[c], plus the subresultant chain with respect to x.

#ifndef RATINT_BIPOLY_HPP
#define RATINT_BIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace ratint {

class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Polynomial> xCoeffs) : xc_(std::move(xCoeffs)) { trim(); }
    /// Embeds a polynomial in x (no c dependence).
    static BiPoly fromX(const Polynomial& p);
    /// Embeds a polynomial in c (degree 0 in x).
    static BiPoly fromC(const Polynomial& p);
    /// The monomial c (degree 1 in c, 0 in x).
    static BiPoly c();

    bool isZero() const { return xc_.empty(); }
    int degX() const { return static_cast<int>(xc_.size()) - 1; }
    int degC() const;
    const Polynomial& xCoeff(int k) const;
    const Polynomial& leadingX() const;
    const std::vector<Polynomial>& xCoeffs() const { return xc_; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    /// Multiplication by a scalar from Q[c].
    BiPoly scaledC(const Polynomial& s) const;
    BiPoly scaled(const Rational& s) const;
    /// Multiplication by x^k.
    BiPoly shiftedX(int k) const;
    /// Exact coefficient-wise division by a scalar from Q[c].
    BiPoly divExactC(const Polynomial& s) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.xc_ == b.xc_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly derivativeX() const;
    BiPoly derivativeC() const;

    /// Exact substitution c := value; returns (real part, imaginary part)
    /// as polynomials in x.
    std::pair<Polynomial, Polynomial> evalC(const GaussianRational& value) const;
    Polynomial evalC(const Rational& value) const;

    /// Content with respect to x: the gcd in Q[c] of the x-coefficients,
    /// scaled so the primitive part is integer-primitive.
    Polynomial contentX() const;
    /// Primitive part with respect to x; coefficients integer-primitive and
    /// the leading (x) coefficient has positive leading (c) coefficient.
    BiPoly primitivePartX() const;

    std::string toString() const;

private:
    void trim() {
        while (!xc_.empty() && xc_.back().isZero()) xc_.pop_back();
    }
    std::vector<Polynomial> xc_;  // xc_[k] = coefficient of x^k, in Q[c]
};

/// Subresultant chain of two bivariate polynomials with respect to x.
/// chain() lists the nonzero subresultants S_j by decreasing index; the
/// resultant is S_0 (a polynomial in c alone) rescaled to match the original
/// (unscaled) inputs exactly.
class SubresultantChain {
public:
    SubresultantChain(const BiPoly& f, const BiPoly& g);

    /// Resultant of the original inputs with respect to x (exact).
    const Polynomial& resultant() const { return resultant_; }
    /// Subresultant of the given index if present (indices run 0..degX(g)).
    const BiPoly* byIndex(int j) const;
    /// First (lowest-index) chain element of the given degree in x;
    /// null when none exists.
    const BiPoly* byDegreeX(int d) const;
    /// Principal subresultant coefficient of index j (coefficient of x^j).
    Polynomial principalCoeff(int j) const;

    const std::vector<std::pair<int, BiPoly>>& chain() const { return chain_; }

private:
    std::vector<std::pair<int, BiPoly>> chain_;  // (index, subresultant), ascending index
    Polynomial resultant_;
};

}  // namespace ratint

#endif

#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "catspec/rational.hpp"

namespace catspec {

// Dense univariate polynomial over Q. Coefficients are stored ascending by
// power and the representation is normalized: the leading coefficient is
// nonzero, the zero polynomial is the empty vector (degree -1).
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> ascending_coeffs);
    RationalPoly(std::initializer_list<Rat> ascending_coeffs);

    static RationalPoly constant(const Rat& c);
    static RationalPoly variable();  // z

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    // Coefficient of z^i; zero outside the stored range.
    Rat coeff(int i) const;
    Rat leading() const;  // 0 for the zero polynomial

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    RationalPoly operator-() const;
    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rat& s) const;

    // Multiply by z^k (k >= 0).
    RationalPoly shifted(int k) const;

    RationalPoly derivative() const;
    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    // Sign of the value at x without building the full rational: the
    // coefficients are cleared to a common integer scale and evaluated with
    // integer Horner steps. Used heavily by the Sturm chain.
    int sign_at(const Rat& x) const;

    RationalPoly monic() const;  // zero stays zero

    // p(-z); parity checks compare this against +/-p(z).
    RationalPoly reflected() const;

    // Largest k with z^k dividing p; 0 for the zero polynomial.
    int z_valuation() const;

    // Positive rational c with p = c * q, q having coprime integer
    // coefficients. Sign stays with the polynomial part. content(0) = 1.
    Rat content() const;

    // p / content(p), i.e. primitive integer coefficients, sign preserved.
    RationalPoly primitive_part() const;

private:
    void normalize();
    std::vector<Rat> c_;
};

// Quotient and remainder with deg r < deg b. Throws DivisionByZeroPoly.
std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& a, const RationalPoly& b);

// Monic gcd; gcd(0, 0) = 0.
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

// Yun decomposition: list of (square-free factor, multiplicity) with
// pairwise-coprime factors, product of factor^multiplicity = monic(p).
// Constant factors are dropped.
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p);

}  // namespace catspec

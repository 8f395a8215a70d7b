#pragma once

#include "catspec/poly.hpp"

namespace catspec {

// Reduced fraction of two RationalPoly in a canonical representation:
//   - gcd(num, den) is constant,
//   - den has coprime integer coefficients and positive leading coefficient.
// Two RationalFunction compare equal iff they are equal as elements of Q(z),
// so fixtures can be checked coefficient-for-coefficient.
class RationalFunction {
public:
    RationalFunction();  // 0/1
    RationalFunction(RationalPoly num, RationalPoly den);  // throws DivisionByZeroPoly

    const RationalPoly& num() const { return num_; }
    const RationalPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction reciprocal() const;  // throws DivisionByZeroPoly on 0

    static RationalFunction from_poly(RationalPoly p);
    static RationalFunction variable();  // z / 1

private:
    RationalPoly num_, den_;
};

// Verb-shaped alias for the canonicalizing constructor.
inline RationalFunction reduce_fraction(RationalPoly num, RationalPoly den) {
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace catspec

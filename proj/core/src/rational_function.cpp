#include "catspec/rational_function.hpp"

#include "catspec/errors.hpp"

namespace catspec {

RationalFunction::RationalFunction() : num_(), den_(RationalPoly::constant(Rat(1))) {}

RationalFunction::RationalFunction(RationalPoly num, RationalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroPoly("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = RationalPoly::constant(Rat(1));
        return;
    }
    RationalPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    // Joint scale: den becomes primitive integer with positive lead. This
    // pins a unique representative of the fraction's scalar class.
    Rat scale = Rat(1) / den_.content();
    if (den_.leading() < 0) scale = -scale;
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::reciprocal() const {
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::from_poly(RationalPoly p) {
    return RationalFunction(std::move(p), RationalPoly::constant(Rat(1)));
}

RationalFunction RationalFunction::variable() {
    return from_poly(RationalPoly::variable());
}

}  // namespace catspec

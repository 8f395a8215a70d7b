#include "catspec/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "catspec/errors.hpp"

namespace catspec {

Rat rat_from_double(double x) { return Rat(x); }

Int round_nearest(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r == 0) return q;
    // divide_qr truncates toward zero; push to the nearest integer.
    Int twice = 2 * boost::multiprecision::abs(r);
    if (twice >= den) q += (x < 0 ? -1 : 1);
    return q;
}

std::string rat_to_string(const Rat& x) { return x.str(); }

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto parse_int = [&](std::string part) -> Int {
        if (!part.empty() && part[0] == '+') part.erase(0, 1);
        if (part.empty()) throw Error("malformed rational literal: " + s);
        size_t i = part[0] == '-' ? 1 : 0;
        if (i == part.size()) throw Error("malformed rational literal: " + s);
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw Error("malformed rational literal: " + s);
        return Int(part);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d == 0) throw Error("zero denominator in rational literal: " + s);
    return Rat(n, d);
}

RationalPoly::RationalPoly(std::vector<Rat> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

RationalPoly::RationalPoly(std::initializer_list<Rat> ascending_coeffs) : c_(ascending_coeffs) {
    normalize();
}

void RationalPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::constant(const Rat& c) { return RationalPoly(std::vector<Rat>{c}); }

RationalPoly RationalPoly::variable() { return RationalPoly({Rat(0), Rat(1)}); }

Rat RationalPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(i)];
}

Rat RationalPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

RationalPoly RationalPoly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const Rat& s) const {
    if (s == 0) return RationalPoly();
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::shifted(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : RationalPoly();
    std::vector<Rat> r(c_.size() + static_cast<size_t>(k), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RationalPoly(std::move(r));
}

Rat RationalPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double RationalPoly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
    return acc;
}

int RationalPoly::sign_at(const Rat& x) const {
    if (c_.empty()) return 0;
    // Common integer scale: multiply through by lcm of denominators, then
    // evaluate sum c_i * num^i * den^(deg - i) with integers only.
    Int den_lcm = 1;
    for (const auto& c : c_) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    Int xn = numerator(x), xd = denominator(x);
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        Int ci = numerator(c_[i]) * (den_lcm / denominator(c_[i]));
        acc = acc * xn + ci * boost::multiprecision::pow(xd, static_cast<unsigned>(c_.size() - 1 - i));
    }
    return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rat(Rat(1) / c_.back());
}

RationalPoly RationalPoly::reflected() const {
    std::vector<Rat> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return RationalPoly(std::move(r));
}

int RationalPoly::z_valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

Rat RationalPoly::content() const {
    if (is_zero()) return Rat(1);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : c_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    return Rat(boost::multiprecision::abs(num_gcd), den_lcm);
}

RationalPoly RationalPoly::primitive_part() const {
    if (is_zero()) return *this;
    return *this * Rat(Rat(1) / content());
}

std::pair<RationalPoly, RationalPoly> divrem(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalPoly(), a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat lead_inv = Rat(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat q = rem[static_cast<size_t>(k + b.degree())] * lead_inv;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * b.coeff(i);
    }
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
    // Euclid over Q with primitive-part normalization between steps to keep
    // coefficient growth in check.
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.monic();
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p) {
    std::vector<std::pair<RationalPoly, int>> out;
    if (p.degree() < 1) return out;
    RationalPoly f = p.monic();
    RationalPoly a = poly_gcd(f, f.derivative());
    RationalPoly b = divrem(f, a).first;
    RationalPoly c = divrem(f.derivative(), a).first;
    RationalPoly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        RationalPoly g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, mult);
        b = divrem(b, g).first;
        c = divrem(d, g).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

}  // namespace catspec

#include "catspec/cfrac.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "catspec/errors.hpp"

namespace catspec {

namespace {

RationalPoly step_poly(long m) {
    // m z - (m - 2)/z over the common denominator z: numerator m z^2 - (m - 2).
    return RationalPoly{Rat(-(m - 2)), Rat(0), Rat(m)};
}

// m_{i+1} pins 1/t_{i+1} into (0, 1], so the staircase digits must satisfy
// m_i - 2 < m_i - 2 + 1/m_{i+1} <= m_i - 1. Subsumed by m >= 2 but kept as a
// guard on the pair actually extracted.
void check_digit_pair(long prev_m, long m) {
    Rat mid = Rat(prev_m - 2) + Rat(1, m);
    if (!(Rat(prev_m - 2) < mid && mid <= Rat(prev_m - 1)))
        throw NotCaterpillarForm("stage values violate the staircase digit bounds");
}

Rat inf_norm(const RationalPoly& p) {
    Rat best(0);
    for (const Rat& c : p.coeffs()) best = std::max(best, rat_abs(c));
    return best;
}

// p / z^v. The dropped coefficients must already be exact zeros.
RationalPoly shift_down(const RationalPoly& p, int v) {
    const auto& c = p.coeffs();
    return RationalPoly(std::vector<Rat>(c.begin() + v, c.end()));
}

// Degrees are ints; anything near this is garbage input, not a caterpillar.
const Rat max_digit(1 << 30);

}  // namespace

RationalFunction cf_build(const CaterpillarShape& shape) {
    RationalFunction t = RationalFunction::variable();  // terminal t_r = z
    const auto& m = shape.interior_degrees();
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        t = RationalFunction(step_poly(*it), RationalPoly::variable()) - t.reciprocal();
    return t.reciprocal() - RationalFunction::variable();
}

std::pair<CaterpillarShape, ExpansionTrace> cf_expand_exact(const RationalFunction& ratio) {
    const RationalPoly& num = ratio.num();
    const RationalPoly& den = ratio.den();
    if (num.is_zero() || den.degree() < 0)
        throw NotCaterpillarForm("zero numerator");
    if (num.degree() != den.degree() + 1)
        throw NotCaterpillarForm("numerator degree must exceed denominator degree by one");
    if (num.leading() / den.leading() != Rat(-1))
        throw NotCaterpillarForm("leading coefficient ratio must be -1");

    const RationalFunction z = RationalFunction::variable();
    RationalFunction f = (ratio + z);  // den / (num + z den) after reciprocal
    if (f.is_zero()) throw NotCaterpillarForm("ratio equals -z");
    f = f.reciprocal();

    std::vector<int> degrees;
    ExpansionTrace trace;
    int prev_sum = num.degree() + den.degree() + 1;
    const int guard = prev_sum + 2;
    for (int stage = 1; stage <= guard; ++stage) {
        if (f == z) return {CaterpillarShape(degrees), trace};

        int sum = f.num().degree() + f.den().degree();
        if (sum >= prev_sum)
            throw NotCaterpillarForm("stage failed to reduce degrees");
        prev_sum = sum;
        if (f.num().degree() != f.den().degree() + 1)
            throw NotCaterpillarForm("stage numerator degree must exceed denominator degree by one");

        Rat q = f.num().leading() / f.den().leading();
        if (!is_integer(q) || q < 2)
            throw NotCaterpillarForm("leading coefficient ratio is not an integer >= 2");
        if (q > max_digit) throw NotCaterpillarForm("stage value out of range");
        int m = static_cast<int>(numerator(q));
        if (!degrees.empty()) check_digit_pair(degrees.back(), m);

        RationalFunction g = f - RationalFunction(step_poly(m), RationalPoly::variable());
        if (g.is_zero())
            throw NotCaterpillarForm("stage residual vanished");
        f = (-g).reciprocal();

        degrees.push_back(m);
        trace.stages.push_back({stage, m, 0.0, 0.0, f});
    }
    throw NotCaterpillarForm("expansion failed to terminate");
}

namespace {

RationalPoly rationalize(const std::vector<double>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (double x : coeffs) {
        if (!std::isfinite(x)) throw Error("non-finite coefficient");
        c.push_back(rat_from_double(x));
    }
    return RationalPoly(std::move(c));
}

// Zeroes every coefficient of p above max_degree, provided each stays within
// bound; larger ones mean the input is not within tolerance of any valid
// staircase. Returns the largest coefficient snapped.
Rat snap_top(std::vector<Rat>& c, int max_degree, const Rat& bound) {
    Rat worst(0);
    while (static_cast<int>(c.size()) > max_degree + 1) {
        Rat mag = rat_abs(c.back());
        if (mag > bound) throw ToleranceExceeded("coefficient survives where exact arithmetic forces zero");
        worst = std::max(worst, mag);
        c.pop_back();
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return worst;
}

// Zeroes small trailing coefficients below index stop (exclusive), stopping at
// the first one above bound. Low-order snaps are not hard failures on their
// own: a genuinely nonzero low coefficient just ends the cancellation run.
Rat snap_trailing(std::vector<Rat>& c, int stop, const Rat& bound) {
    Rat worst(0);
    for (int i = 0; i < stop && i < static_cast<int>(c.size()); ++i) {
        if (c[i] == 0) continue;
        Rat mag = rat_abs(c[i]);
        if (mag > bound) break;
        worst = std::max(worst, mag);
        c[i] = 0;
    }
    return worst;
}

// --- Input decoding -------------------------------------------------------
// Each stage divides by a residual that exact arithmetic makes tiny, so any
// coefficient noise is amplified by orders of magnitude per stage; measured
// data never survives the staircase directly. Rounding the input onto the
// nearest exact chain first sidesteps the amplification, and the per-stage
// loop below remains the fallback for inputs with no such chain in reach.

struct DecodedChain {
    std::vector<int> digits;
    double dist = 0.0;  // worst |input - snapped| after lead normalization
    RationalFunction ratio;
};

const long kDecodeDenomCap = 1 << 20;
const size_t kDecodeMaxLen = 64;  // coefficient slots; larger inputs skip decoding

// Staircase on a snapped integer candidate in plain doubles. Every value stays
// an integer far below 2^53 (the content reduction keeps growth down), so the
// comparisons are exact; this filters the denominator sweep cheaply, and the
// survivors are re-verified in exact arithmetic. Fixed buffers: the sweep
// calls this hot.
bool simulate_digits(const double* num, size_t num_len, const double* den, size_t den_len,
                     std::vector<int>& digits) {
    digits.clear();
    double nb[kDecodeMaxLen + 4], db[kDecodeMaxLen + 4];
    size_t nl = den_len, dl = std::max(num_len, den_len + 1);
    if (dl + 2 > kDecodeMaxLen) return false;
    std::copy(den, den + den_len, nb);
    std::fill(db, db + dl, 0.0);
    std::copy(num, num + num_len, db);  // d = num + z den
    for (size_t t = 0; t < den_len; ++t) db[t + 1] += den[t];
    while (dl > 0 && db[dl - 1] == 0.0) --dl;
    while (nl > 0 && nb[nl - 1] == 0.0) --nl;

    const int guard = static_cast<int>(num_len + den_len) + 2;
    for (int stage = 0; stage <= guard; ++stage) {
        if (dl == 0 || nl == 0 || dl + 2 > kDecodeMaxLen + 2 || nl > kDecodeMaxLen) return false;
        double mag = 0.0;
        for (size_t t = 0; t < nl; ++t) mag = std::max(mag, std::fabs(nb[t]));
        for (size_t t = 0; t < dl; ++t) mag = std::max(mag, std::fabs(db[t]));
        if (mag > 9e15) return false;  // beyond exact-integer doubles
        if (mag > 1e12) {              // content reduction, deferred until growth matters
            long long g = 0;
            for (size_t t = 0; t < nl; ++t) g = std::gcd(g, static_cast<long long>(std::fabs(nb[t])));
            for (size_t t = 0; t < dl; ++t) g = std::gcd(g, static_cast<long long>(std::fabs(db[t])));
            if (g > 1) {
                for (size_t t = 0; t < nl; ++t) nb[t] /= static_cast<double>(g);
                for (size_t t = 0; t < dl; ++t) db[t] /= static_cast<double>(g);
                mag /= static_cast<double>(g);
            }
            if (mag > 1e14) return false;
        }

        // f == z up to a common polynomial factor: n == z d.
        if (nl == dl + 1) {
            bool is_z = nb[0] == 0.0;
            for (size_t t = 0; is_z && t < dl; ++t) is_z = nb[t + 1] == db[t];
            if (is_z) return true;
        } else {
            return false;
        }
        double q = nb[nl - 1] / db[dl - 1];
        double m = std::round(q);
        if (!(m >= 2.0) || m > 1e9 || nb[nl - 1] != m * db[dl - 1]) return false;
        digits.push_back(static_cast<int>(m));

        // r = z n - m z^2 d + (m - 2) d; next f = -z d / r after z^v cancels.
        double rb[kDecodeMaxLen + 4];
        size_t rl = dl + 2;
        std::fill(rb, rb + rl, 0.0);
        for (size_t t = 0; t < nl; ++t) rb[t + 1] += nb[t];
        for (size_t t = 0; t < dl; ++t) {
            rb[t + 2] -= m * db[t];
            rb[t] += (m - 2.0) * db[t];
        }
        while (rl > 0 && rb[rl - 1] == 0.0) --rl;
        if (rl == 0) return false;
        size_t vr = 0, vd = 0;
        while (vr < rl && rb[vr] == 0.0) ++vr;
        while (vd < dl && db[vd] == 0.0) ++vd;
        size_t v = std::min(vr, vd + 1);
        if (v == 0) return false;
        // next n = -z d / z^v (in place: shift d down by v-1 and negate)
        size_t new_nl = dl + 1 - v;
        for (size_t t = 0; t < new_nl; ++t) nb[t] = -db[t + v - 1];
        nl = new_nl;
        dl = rl - v;
        std::copy(rb + v, rb + rl, db);
    }
    return false;
}

// Sweeps common denominators K ascending; a candidate chain is accepted when
// every coefficient of K * input rounds to an integer within
// min(0.45, K * tol * scale) -- so small-K chains face a tight absolute bound
// and large-K ones never round across half a grid step -- and the snapped pair
// is exactly the chain its own staircase digits generate. Two distinct chains
// fitting at once means the data cannot distinguish them.
std::optional<DecodedChain> try_decode(const std::vector<double>& num,
                                       const std::vector<double>& den, double tol) {
    if (num.size() > kDecodeMaxLen || den.size() > kDecodeMaxLen) return std::nullopt;
    double lead = den.back();
    if (lead == 0.0) return std::nullopt;
    std::vector<double> c;
    c.reserve(num.size() + den.size());
    for (double x : num) c.push_back(x / lead);
    for (double x : den) c.push_back(x / lead);
    double scale = 0.0;
    for (double x : c) scale = std::max(scale, std::fabs(x));
    const double snap_tol = tol * std::max(1.0, scale);
    std::vector<double> nonzero;
    for (double x : c)
        if (x != 0.0) nonzero.push_back(x);

    std::map<std::vector<int>, DecodedChain> hits;
    std::vector<int> digits;
    std::vector<double> sn(num.size()), sd(den.size());
    for (long K = 1; K <= kDecodeDenomCap; ++K) {
        double bound = std::min(0.45, K * snap_tol);
        double rho = 0.0;
        for (double x : nonzero) {
            double kx = K * x;
            rho = std::max(rho, std::fabs(kx - std::nearbyint(kx)));
            if (rho > bound) break;
        }
        if (rho > bound) continue;
        for (size_t t = 0; t < num.size(); ++t) sn[t] = std::nearbyint(K * c[t]);
        for (size_t t = 0; t < den.size(); ++t) sd[t] = std::nearbyint(K * c[num.size() + t]);
        if (sn.back() == 0.0 || sd.back() == 0.0) continue;
        if (!simulate_digits(sn.data(), sn.size(), sd.data(), sd.size(), digits)) continue;
        if (hits.count(digits)) continue;
        std::vector<Rat> rn(sn.size()), rd(sd.size());
        for (size_t t = 0; t < sn.size(); ++t) rn[t] = Rat(static_cast<long long>(sn[t]));
        for (size_t t = 0; t < sd.size(); ++t) rd[t] = Rat(static_cast<long long>(sd[t]));
        RationalFunction cand(RationalPoly(std::move(rn)), RationalPoly(std::move(rd)));
        if (!(cf_build(CaterpillarShape(digits)) == cand)) continue;
        hits.emplace(digits, DecodedChain{digits, rho / static_cast<double>(K), cand});
    }
    if (hits.empty()) return std::nullopt;
    const DecodedChain* best = nullptr;
    for (const auto& [k, v] : hits)
        if (!best || v.dist < best->dist) best = &v;
    // A competing chain must fit at least four times worse than the accepted
    // one, or the data cannot tell them apart.
    for (const auto& [k, v] : hits)
        if (&v != best && v.dist <= 4.0 * best->dist)
            throw ToleranceExceeded("multiple caterpillar chains fit the coefficients within tolerance");
    return *best;
}

}  // namespace

std::pair<CaterpillarShape, ExpansionTrace> cf_expand_rounded(const RealRationalFunction& ratio,
                                                              double tol) {
    if (!(tol > 0) || !std::isfinite(tol)) throw Error("tolerance must be positive");
    const Rat rtol = rat_from_double(tol);

    RationalPoly n = rationalize(ratio.num);
    RationalPoly d = rationalize(ratio.den);
    if (n.is_zero() || d.is_zero()) throw NotCaterpillarForm("zero numerator or denominator");
    if (n.degree() != d.degree() + 1)
        throw NotCaterpillarForm("numerator degree must exceed denominator degree by one");
    {
        Rat lead = n.leading() / d.leading();
        if (rat_abs(lead + 1) > rtol)
            throw ToleranceExceeded("leading coefficient ratio is not -1 within tolerance");
    }

    if (auto decoded = try_decode(ratio.num, ratio.den, tol)) {
        auto result = cf_expand_exact(decoded->ratio);
        // The decode is the rounding; later stages run exactly.
        if (!result.second.stages.empty())
            result.second.stages.front().rounding_error = decoded->dist;
        return result;
    }

    // f_1 = den / (num + z den). The top two coefficients of num + z den
    // cancel in exact arithmetic; here they merely have to be small.
    Rat scale = std::max(inf_norm(n), inf_norm(d));
    std::vector<Rat> tc = (n + d.shifted(1)).coeffs();
    Rat top_trunc = snap_top(tc, d.degree() - 1, rtol * scale);
    RationalPoly t(std::move(tc));
    if (t.is_zero()) throw NotCaterpillarForm("ratio equals -z");

    RationalPoly cn = d;
    RationalPoly cd = t;

    std::vector<int> degrees;
    ExpansionTrace trace;
    double pending_trunc = to_double(top_trunc / scale);

    const int guard = n.degree() + d.degree() + 2;
    for (int stage = 1; stage <= guard; ++stage) {
        // Joint rescale keeps the coefficient scale near 1 so the tolerance
        // comparisons below stay meaningful across stages.
        Rat s = inf_norm(cd);
        if (s == 0) throw NotCaterpillarForm("stage denominator vanished");
        cn = cn * (Rat(1) / s);
        cd = cd * (Rat(1) / s);

        if (cn.degree() == 1 && cd.degree() == 0) {
            // Terminal residual z: num - z den must be small.
            RationalPoly diff = cn - cd.shifted(1);
            if (inf_norm(diff) <= rtol * std::max(Rat(1), inf_norm(cn)))
                return {CaterpillarShape(degrees), trace};
        }
        if (cn.degree() != cd.degree() + 1)
            throw NotCaterpillarForm("stage numerator degree must exceed denominator degree by one");

        Rat q = cn.leading() / cd.leading();
        if (rat_abs(q) > max_digit) throw NotCaterpillarForm("stage value out of range");
        Int mi = round_nearest(q);
        Rat dist = rat_abs(q - Rat(mi));
        if (dist > rtol * std::max(Rat(1), rat_abs(q)))
            throw ToleranceExceeded("leading coefficient ratio too far from an integer");
        if (mi < 2) throw NotCaterpillarForm("stage value below 2");
        int m = static_cast<int>(mi);
        if (!degrees.empty()) check_digit_pair(degrees.back(), m);

        // Residual numerator of f - (m z - (m-2)/z), over denominator z cd:
        // r = z cn - m z^2 cd + (m - 2) cd. Exact arithmetic gives either
        // r = -cd (termination) or f' = -z cd / r with z | r.
        RationalPoly r = cn.shifted(1) - cd.shifted(2) * Rat(m) + cd * Rat(m - 2);
        Rat stage_scale = std::max(inf_norm(cn), inf_norm(cd) * Rat(m));

        // Termination compares r against -cd at cd's own scale; the looser
        // stage scale would let a genuine residual pass as terminal.
        if (inf_norm(r + cd) <= rtol * inf_norm(cd)) {
            double trunc = std::max(pending_trunc, to_double(inf_norm(r + cd) / inf_norm(cd)));
            trace.stages.push_back({stage, m, to_double(dist), trunc, RationalFunction::variable()});
            degrees.push_back(m);
            return {CaterpillarShape(degrees), trace};
        }

        std::vector<Rat> rc = r.coeffs();
        Rat worst = snap_top(rc, cd.degree(), rtol * stage_scale);
        worst = std::max(worst, snap_trailing(rc, 1 + cd.z_valuation(), rtol * stage_scale));
        r = RationalPoly(std::move(rc));
        if (r.is_zero()) throw NotCaterpillarForm("stage residual vanished");

        int v = std::min(r.z_valuation(), 1 + cd.z_valuation());
        if (v == 0) throw NotCaterpillarForm("stage failed to reduce degrees");
        RationalPoly next_n = -shift_down(cd.shifted(1), v);
        RationalPoly next_d = shift_down(r, v);
        cn = next_n;
        cd = next_d;

        double trunc = std::max(pending_trunc, to_double(worst / stage_scale));
        pending_trunc = 0.0;
        trace.stages.push_back({stage, m, to_double(dist), trunc, RationalFunction(cn, cd)});
        degrees.push_back(m);
    }
    throw NotCaterpillarForm("expansion failed to terminate");
}

}  // namespace catspec

#include "catspec/roots.hpp"

#include <algorithm>

#include "catspec/errors.hpp"

namespace catspec {

namespace {

// Sturm chain of a square-free polynomial, each element scaled to primitive
// integer form. Positive scaling only, so sign patterns are untouched.
std::vector<RationalPoly> sturm_chain(const RationalPoly& f) {
    std::vector<RationalPoly> chain;
    chain.push_back(f.primitive_part());
    RationalPoly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        const RationalPoly& a = chain[chain.size() - 2];
        const RationalPoly& b = chain.back();
        RationalPoly r = divrem(a, b).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

int sign_changes(const std::vector<RationalPoly>& chain, const Rat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

struct Isolator {
    const std::vector<RationalPoly>& chain;
    const RationalPoly& f;
    Rat tol;
    std::vector<Rat> found;

    // Roots of f in the half-open interval (a, b], of which there are
    // `count` (count = V(a) - V(b), precomputed by the caller).
    void isolate(const Rat& a, const Rat& b, int count, int va, int vb) {
        if (count == 0) return;
        if (count == 1) {
            if (f.sign_at(b) == 0) {
                found.push_back(b);
                return;
            }
            if (b - a <= tol) {
                found.push_back((a + b) / 2);
                return;
            }
        }
        Rat m = (a + b) / 2;
        if (f.sign_at(m) == 0) {
            found.push_back(m);
            int vm = sign_changes(chain, m);
            int left_closed = va - vm;  // roots in (a, m], includes m itself
            int right = vm - vb;
            if (left_closed > 1) {
                // Shrink below m until m is the only root of (c, m]; the
                // rest then live in (a, c].
                Rat eps = (m - a) / 2;
                Rat c = m - eps;
                int vc = sign_changes(chain, c);
                while (vc - vm != 1) {
                    eps /= 2;
                    c = m - eps;
                    vc = sign_changes(chain, c);
                }
                isolate(a, c, left_closed - 1, va, vc);
            }
            if (right > 0) isolate(m, b, right, vm, vb);
            return;
        }
        int vm = sign_changes(chain, m);
        int left = va - vm;
        int right = vm - vb;
        if (left > 0) isolate(a, m, left, va, vm);
        if (right > 0) isolate(m, b, right, vm, vb);
    }
};

// Distinct roots of square-free f in [lo, hi], exact rational brackets.
std::vector<Rat> isolate_squarefree(const RationalPoly& f, const Rat& lo, const Rat& hi, const Rat& tol) {
    std::vector<Rat> roots;
    if (f.degree() < 1) return roots;
    auto chain = sturm_chain(f);
    if (f.sign_at(lo) == 0) roots.push_back(lo);
    int va = sign_changes(chain, lo);
    int vb = sign_changes(chain, hi);
    Isolator iso{chain, f, tol, {}};
    iso.isolate(lo, hi, va - vb, va, vb);
    roots.insert(roots.end(), iso.found.begin(), iso.found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

RootSet isolate_roots(const RationalPoly& p, const Rat& lo, const Rat& hi, double tol) {
    if (p.is_zero()) throw Error("isolate_roots: zero polynomial");
    if (lo > hi) throw Error("isolate_roots: empty interval");
    RootSet out;
    Rat rtol = rat_from_double(tol);
    if (rtol <= 0) throw Error("isolate_roots: tol must be positive");
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (const auto& r : isolate_squarefree(factor, lo, hi, rtol))
            out.entries.push_back({to_double(r), mult});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const RootSet::Entry& a, const RootSet::Entry& b) { return a.value < b.value; });
    return out;
}

int count_distinct_roots(const RationalPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw Error("count_distinct_roots: zero polynomial");
    if (lo > hi) throw Error("count_distinct_roots: empty interval");
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        (void)mult;
        if (factor.degree() < 1) continue;
        auto chain = sturm_chain(factor);
        total += (factor.sign_at(lo) == 0 ? 1 : 0) + sign_changes(chain, lo) - sign_changes(chain, hi);
    }
    return total;
}

Rat cauchy_root_bound(const RationalPoly& p) {
    if (p.is_zero()) throw Error("cauchy_root_bound: zero polynomial");
    Rat lead = rat_abs(p.leading());
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(rat_abs(p.coeff(i)) / lead));
    return m + 1;
}

}  // namespace catspec

#pragma once

#include <vector>

#include "catspec/poly.hpp"

namespace catspec {

// Real roots found in a closed interval, ascending by value. Multiplicities
// come from the square-free decomposition, so the sum of multiplicities never
// exceeds the degree.
struct RootSet {
    struct Entry {
        double value;
        int multiplicity;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    int total_multiplicity() const {
        int n = 0;
        for (const auto& e : entries) n += e.multiplicity;
        return n;
    }
    std::vector<double> values_with_multiplicity() const {
        std::vector<double> v;
        for (const auto& e : entries) v.insert(v.end(), static_cast<size_t>(e.multiplicity), e.value);
        return v;
    }
};

// All real roots of p in [lo, hi], each bracketed to width <= tol before the
// midpoint is reported (roots hit exactly at a rational bisection point are
// reported exactly). Throws Error for the zero polynomial or lo > hi.
RootSet isolate_roots(const RationalPoly& p, const Rat& lo, const Rat& hi, double tol = 1e-12);

// Number of distinct real roots of p in [lo, hi] by Sturm count, exact.
int count_distinct_roots(const RationalPoly& p, const Rat& lo, const Rat& hi);

// 1 + max |c_i / c_n|: every real root lies inside [-bound, bound].
Rat cauchy_root_bound(const RationalPoly& p);

}  // namespace catspec

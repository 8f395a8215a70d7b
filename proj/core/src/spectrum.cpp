#include "catspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "catspec/errors.hpp"
#include "catspec/roots.hpp"
#include "catspec/spectral_polynomials.hpp"

namespace catspec {

std::string branch_kind_name(BranchKind k) {
    switch (k) {
        case BranchKind::NeumannLine: return "N-line";
        case BranchKind::NeumannUp: return "N-up";
        case BranchKind::NeumannDown: return "N-down";
        case BranchKind::DirichletUp: return "D-up";
        case BranchKind::DirichletDown: return "D-down";
    }
    throw Error("unknown branch kind");
}

BranchKind branch_kind_from_name(const std::string& name) {
    if (name == "N-line") return BranchKind::NeumannLine;
    if (name == "N-up") return BranchKind::NeumannUp;
    if (name == "N-down") return BranchKind::NeumannDown;
    if (name == "D-up") return BranchKind::DirichletUp;
    if (name == "D-down") return BranchKind::DirichletDown;
    throw Error("unknown branch kind: " + name);
}

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRootTol = 1e-13;

void sort_entries(std::vector<SpectrumEntry>& v) {
    auto key = [](const SpectrumEntry& e) {
        int kind = e.label ? static_cast<int>(e.label->kind) : -1;
        int bi = e.label ? e.label->branch_index : 0;
        int w = e.label ? e.label->window : 0;
        return std::make_tuple(e.lambda, kind, bi, w);
    };
    std::sort(v.begin(), v.end(),
              [&](const SpectrumEntry& a, const SpectrumEntry& b) { return key(a) < key(b); });
}

void push_value(std::vector<SpectrumEntry>& v, double sq, BranchKind kind, int i, int k) {
    v.push_back({sq * sq, sq, BranchLabel{kind, i, k}});
}

RootSet interval_roots(const RationalPoly& p) {
    RootSet rs = isolate_roots(p, Rat(-1), Rat(1), kRootTol);
    if (rs.total_multiplicity() != p.degree())
        throw Error("polynomial has roots outside [-1, 1]");
    return rs;
}

void check_args(double l, int windows) {
    if (!(l > 0)) throw Error("edge length must be positive");
    if (windows < 1) throw Error("windows must be >= 1");
}

}  // namespace

Spectrum neumann_spectrum(const Tree& t, double l, int windows) {
    check_args(l, windows);
    PencilPair pp = build_pencil(t);
    RootSet interior = interval_roots(pp.omega);

    Spectrum s;
    s.l = l;
    for (int k = 1; k <= 2 * windows; ++k)
        push_value(s.entries, kPi * (k - 1) / l, BranchKind::NeumannLine, 1, k);
    int i = 2;  // the line branch is index 1 and owns the ±1 roots
    for (const auto& e : interior.entries) {
        double a = std::acos(e.value);
        for (int rep = 0; rep < e.multiplicity; ++rep, ++i) {
            for (int k = 1; k <= windows; ++k) {
                push_value(s.entries, (2 * kPi * (k - 1) + a) / l, BranchKind::NeumannUp, i, k);
                push_value(s.entries, (2 * kPi * k - a) / l, BranchKind::NeumannDown, i, k);
            }
        }
    }
    sort_entries(s.entries);
    return s;
}

Spectrum dirichlet_spectrum(const Tree& t, double l, int windows) {
    check_args(l, windows);
    PencilPair pp = build_pencil(t);
    RootSet roots = interval_roots(pp.theta);

    Spectrum s;
    s.l = l;
    int i = 1;
    for (const auto& e : roots.entries) {
        double a = std::acos(e.value);
        for (int rep = 0; rep < e.multiplicity; ++rep, ++i) {
            for (int k = 1; k <= windows; ++k) {
                push_value(s.entries, (2 * kPi * (k - 1) + a) / l, BranchKind::DirichletUp, i, k);
                push_value(s.entries, (2 * kPi * k - a) / l, BranchKind::DirichletDown, i, k);
            }
        }
    }
    sort_entries(s.entries);
    return s;
}

Spectrum perturb(const Spectrum& s, const NoiseModel& noise) {
    if (noise.amplitude < 0) throw Error("noise amplitude must be >= 0");
    std::mt19937_64 rng(noise.seed);
    // Implementation-independent uniform in [-1, 1): top 53 bits of the
    // generator output, so the same seed gives the same spectrum everywhere.
    auto deviate = [&rng]() { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };

    Spectrum out;
    out.l = s.l;
    out.entries.reserve(s.entries.size());
    for (const auto& e : s.entries) {
        int window = 1;
        if (e.label) {
            window = e.label->window;
        } else {
            window = static_cast<int>(std::floor(e.sqrt_lambda * s.l / (2 * kPi))) + 1;
        }
        double bound = noise.amplitude;
        if (noise.decay == NoiseModel::Decay::OneOverK) bound /= std::max(window, 1);
        double sq = e.sqrt_lambda + bound * deviate();
        out.entries.push_back({sq * sq, std::fabs(sq), std::nullopt});
    }
    sort_entries(out.entries);
    return out;
}

}  // namespace catspec

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catspec/tree.hpp"

namespace catspec {

enum class BranchKind { NeumannLine, NeumannUp, NeumannDown, DirichletUp, DirichletDown };

// Short names used in CSV and JSON: N-line, N-up, N-down, D-up, D-down.
std::string branch_kind_name(BranchKind k);
BranchKind branch_kind_from_name(const std::string& name);

struct BranchLabel {
    BranchKind kind;
    // 1 for the line branch; interior roots numbered ascending by value,
    // from 2 for Neumann (the line carries index 1) and from 1 for Dirichlet.
    int branch_index;
    int window;  // k in the branch formula; the line branch counts half-windows

    bool operator==(const BranchLabel&) const = default;
};

struct SpectrumEntry {
    double lambda;
    double sqrt_lambda;
    std::optional<BranchLabel> label;
};

struct Spectrum {
    double l = 1.0;  // common edge length
    std::vector<SpectrumEntry> entries;  // ascending by lambda
};

// Eigenvalues of the zero-potential equilateral tree under standard
// conditions, characterized by sin(sqrt(λ)l) · ω(cos(sqrt(λ)l)) = 0. The
// line branch sqrt(λ) = π(k-1)/l, k = 1..2·windows, carries the ±1 root
// contributions including λ = 0; each interior root α of ω adds
// (2π(k-1) + arccos α)/l and (2πk - arccos α)/l for k = 1..windows. Every
// 2π window of sqrt(λ)·l holds exactly 2p-2 eigenvalues with multiplicity.
Spectrum neumann_spectrum(const Tree& t, double l, int windows);

// Same tree with the root clamped: θ(cos(sqrt(ν)l)) = 0. No line branch;
// the p-1 roots β of θ lie strictly inside (-1, 1). Again 2p-2 per window.
Spectrum dirichlet_spectrum(const Tree& t, double l, int windows);

struct NoiseModel {
    enum class Decay { Constant, OneOverK };
    double amplitude = 0.0;
    Decay decay = Decay::Constant;
    std::uint64_t seed = 0;
};

// Shifts every sqrt(λ) by a seeded uniform deviate in [-b, b] where b is the
// amplitude, divided by the entry's window index in OneOverK mode. λ = 0 can
// only move upward. Output is re-sorted and unlabeled: a measured spectrum
// does not say which branch a value came from.
Spectrum perturb(const Spectrum& s, const NoiseModel& noise);

}  // namespace catspec

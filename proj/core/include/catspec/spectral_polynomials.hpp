#pragma once

#include "catspec/det_pencil.hpp"
#include "catspec/rational_function.hpp"
#include "catspec/tree.hpp"

namespace catspec {

// psi  = det(-z*D + A) over all p vertices,
// theta = same determinant with row/column 0 removed, original degrees kept,
// omega = psi / (1 - z^2), exact.
struct PencilPair {
    RationalPoly psi;
    RationalPoly theta;
    RationalPoly omega;
};

// Throws RootDegreeNotOne unless vertex 0 is pendant; NotDivisible if the
// omega division leaves a remainder (cannot happen for a connected tree,
// kept as a guard on the determinant plumbing).
PencilPair build_pencil(const Tree& t);

// reduce_fraction(psi, theta), scalar-normalized so that the leading
// coefficients have ratio exactly -1. The normalization touches the
// numerator only; for a pendant-rooted tree the canonical reduced form
// already satisfies it.
RationalFunction psi_theta_ratio(const Tree& t);

}  // namespace catspec

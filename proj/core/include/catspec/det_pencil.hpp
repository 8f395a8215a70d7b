#pragma once

#include <vector>

#include "catspec/poly.hpp"

namespace catspec {

// det(-z*D + A) for a symmetric 0/1 matrix A (zero diagonal) and a positive
// integer diagonal D, both of size n. The determinant polynomial has degree
// exactly n with leading coefficient (-1)^n * prod(D). Throws
// DimensionMismatch when shapes disagree.
//
// Evaluates the pencil at the integer nodes 0, 1, -1, 2, -2, ... with
// fraction-free elimination per node and interpolates exactly; O(n^4) but
// entirely in integers, which beats polynomial-entry elimination for the
// sizes this library targets.
RationalPoly det_pencil(const std::vector<std::vector<int>>& A, const std::vector<long>& D);

}  // namespace catspec

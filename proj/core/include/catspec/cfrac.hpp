#pragma once

#include <utility>
#include <vector>

#include "catspec/rational_function.hpp"
#include "catspec/tree.hpp"

namespace catspec {

// One extraction step of the staircase expansion. residual is the working
// fraction after the step; on the final step it is exactly the function z.
struct ExpansionStage {
    int index = 0;  // 1-based
    long m = 0;
    double rounding_error = 0.0;    // |lead ratio - m| before rounding
    double truncation_error = 0.0;  // largest snapped coefficient, relative
    RationalFunction residual;
};

struct ExpansionTrace {
    std::vector<ExpansionStage> stages;
};

// Fraction with double coefficients, ascending, as assembled from estimated
// roots. Input side of cf_expand_rounded.
struct RealRationalFunction {
    std::vector<double> num;
    std::vector<double> den;
};

// The ratio of a rooted caterpillar as a staircase continued fraction,
// evaluated bottom-up in exact arithmetic:
//   ratio = -z + 1/t_1,  t_i = m_i z - (m_i - 2)/z - 1/t_{i+1},  t_r = z.
// The innermost interior stage therefore carries (m_{r-1} - 1)/z once t_r
// is folded in. Empty shape gives (-z^2 + 1)/z.
RationalFunction cf_build(const CaterpillarShape& shape);

// Inverse of cf_build. Requires deg num = deg den + 1 and leading ratio -1.
// Each stage reads m_i off the leading coefficients (integer >= 2), subtracts
// m_i z - (m_i - 2)/z and flips sign/reciprocal; it terminates when the
// residual hits z exactly (equivalently the subtraction step left -1/z).
// Throws NotCaterpillarForm when the input is not the ratio of any rooted
// caterpillar.
std::pair<CaterpillarShape, ExpansionTrace> cf_expand_exact(const RationalFunction& ratio);

// Same staircase on measured coefficients. Doubles are converted to exact
// rationals once and all stage arithmetic stays exact, so error does not
// compound in floating point; m_i is rounded to the nearest integer and the
// coefficients that the exact identity forces to vanish are checked against
// tol * (coefficient scale) and snapped to zero. A rounded m_i farther than
// tol * max(1, |value|) from an integer, or a forced coefficient above its
// bound, throws ToleranceExceeded.
std::pair<CaterpillarShape, ExpansionTrace> cf_expand_rounded(const RealRationalFunction& ratio,
                                                              double tol);

}  // namespace catspec

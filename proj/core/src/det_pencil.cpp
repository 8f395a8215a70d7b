#include "catspec/det_pencil.hpp"

#include "catspec/errors.hpp"

namespace catspec {

namespace {

// Bareiss fraction-free elimination; every division is exact.
Int integer_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

RationalPoly det_pencil(const std::vector<std::vector<int>>& A, const std::vector<long>& D) {
    const size_t n = A.size();
    if (D.size() != n) throw DimensionMismatch("det_pencil: A and D sizes differ");
    for (const auto& row : A)
        if (row.size() != n) throw DimensionMismatch("det_pencil: A is not square");
    if (n == 0) return RationalPoly::constant(Rat(1));

    // Nodes 0, 1, -1, 2, -2, ...: n+1 of them pins a degree-n polynomial.
    std::vector<Int> nodes;
    nodes.reserve(n + 1);
    nodes.emplace_back(0);
    for (long v = 1; nodes.size() < n + 1; ++v) {
        nodes.emplace_back(v);
        if (nodes.size() < n + 1) nodes.emplace_back(-v);
    }

    std::vector<Int> values;
    values.reserve(nodes.size());
    for (const Int& z : nodes) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m[i][j] = (i == j) ? Int(-z * D[i]) : Int(A[i][j]);
        values.push_back(integer_det(std::move(m)));
    }

    // Newton form of the interpolant, then expansion to the monomial basis.
    const size_t cnt = nodes.size();
    std::vector<Rat> divided(cnt);
    for (size_t i = 0; i < cnt; ++i) divided[i] = Rat(values[i]);
    for (size_t level = 1; level < cnt; ++level)
        for (size_t i = cnt - 1; i >= level; --i)
            divided[i] = (divided[i] - divided[i - 1]) / Rat(nodes[i] - nodes[i - level]);

    RationalPoly result = RationalPoly::constant(divided[cnt - 1]);
    for (size_t i = cnt - 1; i-- > 0;) {
        RationalPoly factor({Rat(-nodes[i]), Rat(1)});
        result = result * factor + RationalPoly::constant(divided[i]);
    }
    return result;
}

}  // namespace catspec

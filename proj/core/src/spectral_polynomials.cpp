#include "catspec/spectral_polynomials.hpp"

namespace catspec {

PencilPair build_pencil(const Tree& t) {
    const int p = t.vertex_count();
    if (t.degree(0) != 1) throw RootDegreeNotOne("vertex 0 must be pendant");

    std::vector<std::vector<int>> a(static_cast<size_t>(p), std::vector<int>(static_cast<size_t>(p), 0));
    std::vector<long> d(static_cast<size_t>(p));
    for (auto [u, v] : t.edges()) {
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    for (int v = 0; v < p; ++v) d[static_cast<size_t>(v)] = t.degree(v);

    PencilPair out;
    out.psi = det_pencil(a, d);

    std::vector<std::vector<int>> a1(static_cast<size_t>(p - 1), std::vector<int>(static_cast<size_t>(p - 1)));
    std::vector<long> d1(static_cast<size_t>(p - 1));
    for (int i = 1; i < p; ++i) {
        d1[static_cast<size_t>(i - 1)] = d[static_cast<size_t>(i)];
        for (int j = 1; j < p; ++j) a1[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    out.theta = det_pencil(a1, d1);

    // 1 - z^2 divides psi exactly: z = 1 for any connected graph, z = -1
    // because trees are bipartite.
    RationalPoly one_minus_z2({Rat(1), Rat(0), Rat(-1)});
    auto [q, r] = divrem(out.psi, one_minus_z2);
    if (!r.is_zero()) throw NotDivisible("psi not divisible by 1 - z^2");
    out.omega = q;
    return out;
}

RationalFunction psi_theta_ratio(const Tree& t) {
    PencilPair pencil = build_pencil(t);
    RationalFunction ratio = reduce_fraction(pencil.psi, pencil.theta);
    Rat lead_ratio = ratio.num().leading() / ratio.den().leading();
    if (lead_ratio != -1) {
        RationalPoly scaled = ratio.num() * Rat(Rat(-1) / lead_ratio);
        return RationalFunction(scaled, ratio.den());
    }
    return ratio;
}

}  // namespace catspec

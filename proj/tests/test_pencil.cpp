#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catspec/det_pencil.hpp"
#include "catspec/spectral_polynomials.hpp"
#include "catspec/tree.hpp"
#include "support/oracles.hpp"

using namespace catspec;
using testsupport::ipoly;

TEST_CASE("2x2 pencil determinant") {
    CHECK(det_pencil({{0, 1}, {1, 0}}, {1, 1}) == ipoly({-1, 0, 1}));
}

TEST_CASE("hand-expanded 3x3 and 4x4 determinants") {
    CHECK(det_pencil({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}, {1, 2, 1}) == ipoly({0, 2, 0, -2}));
    CHECK(det_pencil({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}}, {1, 3, 1, 1}) ==
          ipoly({0, 0, -3, 0, 3}));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(det_pencil({{0, 1}, {1, 0}}, {1, 1, 1}), DimensionMismatch);
}

TEST_CASE("leading coefficient is (-1)^n times the degree product") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 15; ++i) {
        Tree t = testsupport::random_tree(2 + (int)(rng() % 25), rng());
        int n = t.vertex_count();
        std::vector<std::vector<int>> A((size_t)n, std::vector<int>((size_t)n, 0));
        std::vector<long> D((size_t)n);
        for (auto& [a, b] : t.edges()) A[(size_t)a][(size_t)b] = A[(size_t)b][(size_t)a] = 1;
        Rat lead(1);
        for (int v = 0; v < n; ++v) {
            D[(size_t)v] = t.degree(v);
            lead *= t.degree(v);
        }
        if (n % 2) lead = -lead;
        auto p = det_pencil(A, D);
        CHECK(p.degree() == n);
        CHECK(p.leading() == lead);
    }
}

TEST_CASE("P2 pencil pair") {
    auto pp = build_pencil(shape_to_tree(CaterpillarShape()));
    CHECK(pp.psi == ipoly({-1, 0, 1}));
    CHECK(pp.theta == ipoly({0, -1}));
    CHECK(pp.omega == ipoly({-1}));
}

TEST_CASE("P3 pencil pair keeps original degrees in theta") {
    auto pp = build_pencil(shape_to_tree(CaterpillarShape({2})));
    CHECK(pp.psi == ipoly({0, 2, 0, -2}));
    CHECK(pp.theta == ipoly({-1, 0, 2}));
    CHECK(pp.omega == ipoly({0, 2}));
}

TEST_CASE("12-vertex pencil pair") {
    auto pp = build_pencil(shape_to_tree(CaterpillarShape({5, 3, 2, 4})));
    CHECK(pp.psi == ipoly({0, 0, 0, 0, 0, 0, -40, 0, 189, 0, -269, 0, 120}));
    CHECK(pp.theta == ipoly({0, 0, 0, 0, 0, 30, 0, -156, 0, 245, 0, -120}));
    CHECK(pp.omega == ipoly({0, 0, 0, 0, 0, 0, -40, 0, 149, 0, -120}));
    CHECK(pp.psi.degree() == 12);
    CHECK(pp.psi.leading() == 120);  // p even, degree product 5*3*2*4 = 120
}

TEST_CASE("pencil structure holds for every small shape") {
    RationalPoly one_minus_z2 = ipoly({1, 0, -1});
    for (int p = 2; p <= 8; ++p)
        for (const auto& s : enumerate_shapes(p)) {
            auto pp = build_pencil(shape_to_tree(s));
            CHECK(pp.psi.degree() == p);
            CHECK(pp.theta.degree() == p - 1);
            CHECK(pp.omega.degree() == p - 2);
            CHECK(pp.omega * one_minus_z2 == pp.psi);
            CHECK(pp.psi.eval(Rat(1)) == 0);
            CHECK(pp.psi.eval(Rat(-1)) == 0);
            CHECK(pp.theta.eval(Rat(1)) != 0);
            CHECK(pp.theta.eval(Rat(-1)) != 0);
            // bipartite parity
            CHECK(pp.psi.reflected() == (p % 2 ? -pp.psi : pp.psi));
            CHECK(pp.theta.reflected() == (p % 2 ? pp.theta : -pp.theta));
        }
}

TEST_CASE("root must be pendant") {
    Tree mid(3, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(build_pencil(mid), RootDegreeNotOne);
}

TEST_CASE("ratio fixtures") {
    auto p2 = psi_theta_ratio(shape_to_tree(CaterpillarShape()));
    CHECK(p2.num() == ipoly({1, 0, -1}));
    CHECK(p2.den() == ipoly({0, 1}));

    auto star = psi_theta_ratio(Tree(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(star.num() == ipoly({0, 3, 0, -3}));
    CHECK(star.den() == ipoly({-2, 0, 3}));

    auto r12 = psi_theta_ratio(shape_to_tree(CaterpillarShape({5, 3, 2, 4})));
    CHECK(r12.num() == ipoly({0, 40, 0, -189, 0, 269, 0, -120}));
    CHECK(r12.den() == ipoly({-30, 0, 156, 0, -245, 0, 120}));
}

TEST_CASE("ratio leading coefficients always divide to -1") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        auto r = psi_theta_ratio(shape_to_tree(random_shape(2 + (int)(rng() % 20), rng())));
        CHECK(r.num().degree() == r.den().degree() + 1);
        CHECK(r.num().leading() == -r.den().leading());
    }
}

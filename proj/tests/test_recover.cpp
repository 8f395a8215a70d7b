#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "catspec/recover.hpp"
#include "catspec/spectral_polynomials.hpp"
#include "catspec/spectrum.hpp"
#include "catspec/tree.hpp"

using namespace catspec;

namespace {
const double kPi = 3.14159265358979323846;

Spectrum noisy(const Spectrum& s, double amp, NoiseModel::Decay d, std::uint64_t seed) {
    return perturb(s, NoiseModel{amp, d, seed});
}
}  // namespace

TEST_CASE("3-path Neumann folds to four unit-weight clusters") {
    Tree p3 = shape_to_tree(CaterpillarShape({2}));
    auto cs = fold_and_cluster(neumann_spectrum(p3, 1.0, 10), 1.0, 10, 0.05);
    REQUIRE(cs.clusters.size() == 4);
    const double want[] = {0, kPi / 2, kPi, 3 * kPi / 2};
    for (size_t i = 0; i < 4; ++i) {
        CHECK(cs.clusters[i].center == doctest::Approx(want[i]).epsilon(1e-9));
        CHECK(cs.clusters[i].weight == 1);
        CHECK(cs.clusters[i].spread <= 1e-12);
    }
    CHECK(cs.outliers_dropped == 0);
}

TEST_CASE("interval Dirichlet folds to the two half-pi clusters") {
    auto cs = fold_and_cluster(dirichlet_spectrum(shape_to_tree(CaterpillarShape()), 1.0, 10),
                               1.0, 10, 0.05);
    REQUIRE(cs.clusters.size() == 2);
    CHECK(cs.clusters[0].center == doctest::Approx(kPi / 2).epsilon(1e-9));
    CHECK(cs.clusters[1].center == doctest::Approx(3 * kPi / 2).epsilon(1e-9));
}

TEST_CASE("decaying noise moves centers by less than 0.02") {
    Tree p3 = shape_to_tree(CaterpillarShape({2}));
    auto spec = noisy(neumann_spectrum(p3, 1.0, 50), 0.1, NoiseModel::Decay::OneOverK, 9);
    auto cs = fold_and_cluster(spec, 1.0, 50, 0.05);
    REQUIRE(cs.clusters.size() == 4);
    const double want[] = {0, kPi / 2, kPi, 3 * kPi / 2};
    for (size_t i = 0; i < 4; ++i)
        CHECK(std::fabs(cs.clusters[i].center - want[i]) < 0.02);
}

TEST_CASE("repeated roots raise the cluster weight") {
    // 3-star: the pi/2 and 3pi/2 clusters carry two members per window.  The
    // residue-0 line cluster may be reported at either end of the window; here
    // it lands at 2pi, after 3pi/2 in sorted order.
    Tree t = shape_to_tree(CaterpillarShape({3}));
    auto cs = fold_and_cluster(neumann_spectrum(t, 1.0, 12), 1.0, 12, 0.05);
    REQUIRE(cs.clusters.size() == 4);
    const double want_center[] = {kPi / 2, kPi, 3 * kPi / 2, 2 * kPi};
    const int want_weight[] = {2, 1, 2, 1};
    for (size_t i = 0; i < 4; ++i) {
        CHECK(cs.clusters[i].center == doctest::Approx(want_center[i]).epsilon(1e-9));
        CHECK(cs.clusters[i].weight == want_weight[i]);
    }
    int total_weight = 0;
    for (const auto& c : cs.clusters) total_weight += c.weight;
    CHECK(total_weight == 2 * t.vertex_count() - 2);
}

TEST_CASE("roots_from_clusters on the 3-path") {
    Tree p3 = shape_to_tree(CaterpillarShape({2}));
    auto neu = fold_and_cluster(neumann_spectrum(p3, 1.0, 10), 1.0, 10, 0.05);
    auto dir = fold_and_cluster(dirichlet_spectrum(p3, 1.0, 10), 1.0, 10, 0.05);
    auto est = roots_from_clusters(neu, dir);
    CHECK(est.inferred_p == 3);
    REQUIRE(est.alphas.entries.size() == 3);
    CHECK(est.alphas.entries[0].value == doctest::Approx(-1.0));
    CHECK(est.alphas.entries[1].value == doctest::Approx(0.0));
    CHECK(est.alphas.entries[2].value == doctest::Approx(1.0));
    REQUIRE(est.betas.entries.size() == 2);
    CHECK(est.betas.entries[0].value == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-9));
    CHECK(est.betas.entries[1].value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
}

TEST_CASE("roots_from_clusters on the 12-vertex tree") {
    Tree t = shape_to_tree(CaterpillarShape({5, 3, 2, 4}));
    auto est = roots_from_clusters(
        fold_and_cluster(neumann_spectrum(t, 1.0, 20), 1.0, 20, 0.05),
        fold_and_cluster(dirichlet_spectrum(t, 1.0, 20), 1.0, 20, 0.05));
    CHECK(est.inferred_p == 12);
    CHECK(est.alphas.total_multiplicity() == 12);
    CHECK(est.betas.total_multiplicity() == 11);
}

TEST_CASE("cluster geometry violations are named errors") {
    ClusterSet neu, dir;
    neu.windows = dir.windows = 10;
    // Dirichlet line cluster
    dir.clusters = {{0.0, 1, 0.0, 10}};
    CHECK_THROWS_AS(roots_from_clusters(neu, dir), UnexpectedLineCluster);
    // missing mirror
    dir.clusters = {{1.0, 1, 0.0, 10}};
    CHECK_THROWS_AS(roots_from_clusters(neu, dir), MirrorMismatch);
    // alpha/beta count mismatch: line-only Neumann needs exactly one beta.
    // Cluster lists are always sorted by center.
    neu.clusters = {{0.0, 1, 0.0, 10}, {kPi, 1, 0.0, 10}};
    dir.clusters = {{1.0, 1, 0.0, 10}, {2.0, 1, 0.0, 10},
                    {2 * kPi - 2.0, 1, 0.0, 10}, {2 * kPi - 1.0, 1, 0.0, 10}};
    CHECK_THROWS_AS(roots_from_clusters(neu, dir), CountMismatch);
}

TEST_CASE("assemble_ratio reproduces the 3-path ratio") {
    RootSet alphas, betas;
    alphas.entries = {{-1.0, 1}, {0.0, 1}, {1.0, 1}};
    betas.entries = {{-std::sqrt(0.5), 1}, {std::sqrt(0.5), 1}};
    auto r = assemble_ratio(alphas, betas, 1e-9);
    REQUIRE(r.num.size() == 4);
    REQUIRE(r.den.size() == 3);
    CHECK(r.num[0] == doctest::Approx(0.0));
    CHECK(r.num[1] == doctest::Approx(1.0));
    CHECK(r.num[2] == doctest::Approx(0.0));
    CHECK(r.num[3] == doctest::Approx(-1.0));
    CHECK(r.den[0] == doctest::Approx(-0.5));
    CHECK(r.den[1] == doctest::Approx(0.0));
    CHECK(r.den[2] == doctest::Approx(1.0));
}

TEST_CASE("assemble_ratio for the single edge") {
    RootSet alphas, betas;
    alphas.entries = {{-1.0, 1}, {1.0, 1}};
    betas.entries = {{0.0, 1}};
    auto r = assemble_ratio(alphas, betas, 1e-9);
    REQUIRE(r.num.size() == 3);
    CHECK(r.num[0] == doctest::Approx(1.0));
    CHECK(r.num[2] == doctest::Approx(-1.0));
    REQUIRE(r.den.size() == 2);
    CHECK(r.den[0] == doctest::Approx(0.0));
    CHECK(r.den[1] == doctest::Approx(1.0));
}

TEST_CASE("near-coincident alpha/beta pairs cancel before expansion") {
    RootSet alphas, betas;
    alphas.entries = {{-1.0, 1}, {0.0, 1}, {0.5, 1}, {1.0, 1}};
    betas.entries = {{-std::sqrt(0.5), 1}, {0.5 + 1e-12, 1}, {std::sqrt(0.5), 1}};
    auto r = assemble_ratio(alphas, betas, 1e-9);
    CHECK(r.num.size() == 4);  // degree dropped from 4 to 3
    CHECK(r.den.size() == 3);
}

TEST_CASE("assembled coefficients match the exact ratio on the 12-vertex tree") {
    Tree t = shape_to_tree(CaterpillarShape({5, 3, 2, 4}));
    auto est = roots_from_clusters(
        fold_and_cluster(neumann_spectrum(t, 1.0, 50), 1.0, 50, 0.05),
        fold_and_cluster(dirichlet_spectrum(t, 1.0, 50), 1.0, 50, 0.05));
    auto assembled = assemble_ratio(est.alphas, est.betas, 1e-9);
    auto exact = psi_theta_ratio(t);
    // compare monic-normalized coefficient vectors
    double nl = assembled.num.back(), dl = assembled.den.back();
    auto en = exact.num().coeffs();
    auto ed = exact.den().coeffs();
    double enl = to_double(en.back()), edl = to_double(ed.back());
    REQUIRE(assembled.num.size() == en.size());
    REQUIRE(assembled.den.size() == ed.size());
    for (size_t i = 0; i < en.size(); ++i)
        CHECK(std::fabs(assembled.num[i] / nl - to_double(en[i]) / enl) < 1e-9);
    for (size_t i = 0; i < ed.size(); ++i)
        CHECK(std::fabs(assembled.den[i] / dl - to_double(ed[i]) / edl) < 1e-9);
}

TEST_CASE("noiseless recovery round trips the 12-vertex tree") {
    Tree t = shape_to_tree(CaterpillarShape({5, 3, 2, 4}));
    auto rep = recover(neumann_spectrum(t, 1.0, 50), dirichlet_spectrum(t, 1.0, 50), 1.0);
    REQUIRE(rep.success);
    CHECK(rep.status == "success");
    CHECK(rep.shape == CaterpillarShape({5, 3, 2, 4}));
    CHECK(rep.inferred_p == 12);
    CHECK(rep.shape.vertex_count() == rep.inferred_p);
    CHECK(rep.trace.stages.size() == 4);
}

TEST_CASE("noiseless recovery of the single edge") {
    Tree t = shape_to_tree(CaterpillarShape());
    auto rep = recover(neumann_spectrum(t, 1.0, 50), dirichlet_spectrum(t, 1.0, 50), 1.0);
    REQUIRE(rep.success);
    CHECK(rep.shape == CaterpillarShape());
    CHECK(rep.inferred_p == 2);
}

TEST_CASE("recovery survives one seed of decaying noise") {
    Tree t = shape_to_tree(CaterpillarShape({5, 3, 2, 4}));
    auto rep = recover(noisy(neumann_spectrum(t, 1.0, 50), 0.1, NoiseModel::Decay::OneOverK, 21),
                       noisy(dirichlet_spectrum(t, 1.0, 50), 0.1, NoiseModel::Decay::OneOverK, 22),
                       1.0);
    REQUIRE(rep.success);
    CHECK(rep.shape == CaterpillarShape({5, 3, 2, 4}));
}

TEST_CASE("gross constant noise is never silently misread") {
    Tree t = shape_to_tree(CaterpillarShape({5, 3, 2, 4}));
    RecoverOptions opts;
    opts.windows = 20;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto rep = recover(
            noisy(neumann_spectrum(t, 1.0, 20), 0.5, NoiseModel::Decay::Constant, 2 * seed),
            noisy(dirichlet_spectrum(t, 1.0, 20), 0.5, NoiseModel::Decay::Constant, 2 * seed + 1),
            1.0, opts);
        if (rep.success) CHECK(rep.shape == CaterpillarShape({5, 3, 2, 4}));
        else CHECK(rep.status.substr(0, 8) == "failure(");
    }
}

TEST_CASE("failures carry the error name in the status") {
    Tree t = shape_to_tree(CaterpillarShape({3}));
    // Dirichlet spectrum fed twice: the Neumann side has no line clusters
    auto dir = dirichlet_spectrum(t, 1.0, 30);
    auto rep = recover(dir, dir, 1.0, RecoverOptions{.windows = 30});
    CHECK(!rep.success);
    CHECK(rep.status.find("failure(") == 0);
}

// Acceptance gate. Runs the seven release criteria end to end and prints one
// PASS/FAIL line each; exit status is the number of failed criteria. All
// tolerances and budgets are pinned here, not taken from flags.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "catspec/cfrac.hpp"
#include "catspec/io.hpp"
#include "catspec/recover.hpp"
#include "catspec/roots.hpp"
#include "catspec/spectral_polynomials.hpp"
#include "catspec/spectrum.hpp"
#include "catspec/tree.hpp"

#include "support/oracles.hpp"

using namespace catspec;

namespace {

constexpr double kBudget1 = 1.0;    // seconds
constexpr double kBudget2 = 60.0;
constexpr double kBudget3 = 30.0;
constexpr double kBudget4 = 120.0;
constexpr double kCharacteristicTol = 1e-9;  // relative to the coefficient scale
constexpr double kInterlaceTol = 1e-9;
constexpr int kNoiseSeeds = 100;
constexpr int kNoiseMinSuccesses = 95;
constexpr double kNoiseAmplitude = 0.1;  // on sqrt(lambda), decaying as 1/k

int failures = 0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, bool ok, const std::string& what, double secs, double budget) {
    bool in_budget = budget <= 0 || secs < budget;
    std::printf("%s criterion %d: %s (%.2f s", ok && in_budget ? "PASS" : "FAIL", idx,
                what.c_str(), secs);
    if (budget > 0) std::printf(", budget %.0f s", budget);
    std::printf(")\n");
    std::fflush(stdout);
    if (!(ok && in_budget)) ++failures;
}

RationalPoly ipoly(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

const CaterpillarShape kFig{std::vector<int>{5, 3, 2, 4}};

void criterion1() {
    auto t0 = Clock::now();
    auto num = ipoly({0, 40, 0, -189, 0, 269, 0, -120});
    auto den = ipoly({-30, 0, 156, 0, -245, 0, 120});
    auto [shape, trace] = cf_expand_exact(reduce_fraction(num, den));
    bool ok = shape == kFig;
    auto rebuilt = cf_build(kFig);
    ok = ok && rebuilt.num() == num && rebuilt.den() == den;
    report(1, ok, "worked-example expansion and exact rebuild", since(t0), kBudget1);
}

void criterion2() {
    auto t0 = Clock::now();
    int checked = 0;
    bool ok = true;
    for (int p = 2; p <= 12 && ok; ++p)
        for (const auto& s : enumerate_shapes(p)) {
            if (!(psi_theta_ratio(shape_to_tree(s)) == cf_build(s))) { ok = false; break; }
            ++checked;
        }
    std::mt19937_64 rng(20260814);
    for (int i = 0; i < 500 && ok; ++i) {
        auto s = random_shape(2 + (int)(rng() % 39), rng());
        ok = psi_theta_ratio(shape_to_tree(s)) == cf_build(s);
        ++checked;
    }
    report(2, ok, "determinant ratio equals staircase build for " + std::to_string(checked) +
                      " shapes (p<=12 exhaustive, 500 random p<=40)",
           since(t0), kBudget2);
}

void criterion3() {
    auto t0 = Clock::now();
    std::vector<std::string> keys;
    for (int p = 2; p <= 10; ++p)
        for (const auto& s : enumerate_shapes(p)) keys.push_back(ratio_to_json(cf_build(s)).dump());
    std::sort(keys.begin(), keys.end());
    bool ok = std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    report(3, ok, std::to_string(keys.size()) + " rooted shapes p<=10 give pairwise distinct ratios",
           since(t0), kBudget3);
}

void criterion4() {
    auto t0 = Clock::now();
    int checked = 0;
    bool ok = true;
    for (int p = 2; p <= 8 && ok; ++p)
        for (const auto& s : enumerate_shapes(p)) {
            Tree t = shape_to_tree(s);
            auto rep = recover(neumann_spectrum(t, 1.0, 50), dirichlet_spectrum(t, 1.0, 50), 1.0);
            if (!rep.success || !(rep.shape == s) || rep.inferred_p != p) { ok = false; break; }
            ++checked;
        }
    report(4, ok, "noiseless spectral round trip (l=1, 50 windows) for " +
                      std::to_string(checked) + " shapes p<=8",
           since(t0), kBudget4);
}

void criterion5() {
    auto t0 = Clock::now();
    Tree t = shape_to_tree(kFig);
    auto neu = neumann_spectrum(t, 1.0, 50);
    auto dir = dirichlet_spectrum(t, 1.0, 50);
    int successes = 0, wrong = 0, noisy_runs = 0;
    for (std::uint64_t seed = 1; seed <= (std::uint64_t)kNoiseSeeds; ++seed) {
        NoiseModel nm{kNoiseAmplitude, NoiseModel::Decay::OneOverK, 2 * seed};
        auto n = perturb(neu, nm);
        nm.seed = 2 * seed + 1;
        auto d = perturb(dir, nm);
        auto rep = recover(n, d, 1.0);
        ++noisy_runs;
        if (rep.success) {
            ++successes;
            if (!(rep.shape == kFig)) ++wrong;
        }
    }
    // success-implies-correct at levels the pipeline is expected to refuse
    struct Level { double amp; NoiseModel::Decay decay; int windows; };
    for (const Level& lv : {Level{0.3, NoiseModel::Decay::OneOverK, 50},
                            Level{0.5, NoiseModel::Decay::Constant, 20}}) {
        auto wneu = neumann_spectrum(t, 1.0, lv.windows);
        auto wdir = dirichlet_spectrum(t, 1.0, lv.windows);
        RecoverOptions opts;
        opts.windows = lv.windows;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            NoiseModel nm{lv.amp, lv.decay, 1000 + 2 * seed};
            auto n = perturb(wneu, nm);
            nm.seed = 1000 + 2 * seed + 1;
            auto rep = recover(n, perturb(wdir, nm), 1.0, opts);
            ++noisy_runs;
            if (rep.success && !(rep.shape == kFig)) ++wrong;
        }
    }
    bool ok = successes >= kNoiseMinSuccesses && wrong == 0;
    report(5, ok,
           "noisy recovery " + std::to_string(successes) + "/" + std::to_string(kNoiseSeeds) +
               " (need >=" + std::to_string(kNoiseMinSuccesses) + "), wrong-shape successes " +
               std::to_string(wrong) + "/" + std::to_string(noisy_runs),
           since(t0), 0);
}

void criterion6() {
    auto t0 = Clock::now();
    bool ok = true;
    int values = 0;
    for (int p = 2; p <= 8 && ok; ++p)
        for (const auto& s : enumerate_shapes(p)) {
            Tree t = shape_to_tree(s);
            auto pp = build_pencil(t);
            double scale_o = 0, scale_t = 0;
            for (const auto& c : pp.omega.coeffs())
                scale_o = std::max(scale_o, std::fabs(to_double(c)));
            for (const auto& c : pp.theta.coeffs())
                scale_t = std::max(scale_t, std::fabs(to_double(c)));
            for (const auto& e : neumann_spectrum(t, 1.0, 50).entries) {
                double x = e.sqrt_lambda;
                if (std::fabs(std::sin(x) * pp.omega.eval_double(std::cos(x))) >
                    kCharacteristicTol * scale_o) { ok = false; break; }
                ++values;
            }
            for (const auto& e : dirichlet_spectrum(t, 1.0, 50).entries) {
                if (std::fabs(pp.theta.eval_double(std::cos(e.sqrt_lambda))) >
                    kCharacteristicTol * scale_t) { ok = false; break; }
                ++values;
            }
        }
    report(6, ok, "characteristic functions vanish on " + std::to_string(values) +
                      " emitted eigenvalues (tol 1e-9 x scale)",
           since(t0), 0);
}

void criterion7() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(7117);
    bool ok = true;
    int trees = 0;
    for (int i = 0; i < 200 && ok; ++i) {
        int p = 2 + (int)(rng() % 29);
        Tree t = testsupport::random_tree(p, rng());
        auto pp = build_pencil(t);
        Rat lead(1);
        for (int v = 0; v < p; ++v) lead *= t.degree(v);
        if (p % 2) lead = -lead;
        ok = pp.psi.reflected() == (p % 2 ? -pp.psi : pp.psi)    // parity
             && pp.psi.eval(Rat(1)) == 0 && pp.psi.eval(Rat(-1)) == 0
             && pp.theta.eval(Rat(1)) != 0 && pp.theta.eval(Rat(-1)) != 0
             && pp.psi.leading() == lead;
        if (!ok) break;
        auto ra = isolate_roots(pp.psi, Rat(-1), Rat(1), 1e-11).values_with_multiplicity();
        auto rb = isolate_roots(pp.theta, Rat(-1), Rat(1), 1e-11).values_with_multiplicity();
        ok = (int)ra.size() == p && (int)rb.size() == p - 1;
        for (size_t j = 0; ok && j < rb.size(); ++j)
            ok = ra[j] - kInterlaceTol <= rb[j] && rb[j] <= ra[j + 1] + kInterlaceTol;
        ++trees;
    }
    report(7, ok, "parity, +-1 values, leading coefficient, interlacing on " +
                      std::to_string(trees) + " random trees p<=30",
           since(t0), 0);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    std::printf("acceptance: %d/7\n", 7 - failures);
    return failures;
}

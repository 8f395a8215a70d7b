#include "catspec/recover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "catspec/errors.hpp"
#include "catspec/spectral_polynomials.hpp"

namespace catspec {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2 * kPi;

double circ_dist(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, kTwoPi - d);
}

struct Member {
    double x;  // sqrt(lambda) * l
    double u;  // residue, unwrapped past the seam inside its cluster
};

}  // namespace

ClusterSet fold_and_cluster(const Spectrum& spec, double l, int windows, double gap) {
    if (!(l > 0)) throw Error("edge length must be positive");
    if (windows < 1) throw Error("windows must be >= 1");
    if (!(gap > 0)) throw Error("gap must be positive");

    std::vector<Member> pts;
    for (const auto& e : spec.entries) {
        if (!std::isfinite(e.lambda)) throw Error("non-finite eigenvalue");
        double x = std::sqrt(std::max(e.lambda, 0.0)) * l;
        if (x >= kTwoPi * windows) continue;
        pts.push_back({x, std::fmod(x, kTwoPi)});
    }

    ClusterSet out;
    out.windows = windows;
    out.gap = gap;
    if (pts.empty()) return out;

    std::sort(pts.begin(), pts.end(), [](const Member& a, const Member& b) { return a.u < b.u; });

    // Rotate so clustering starts right after the largest circular gap; the
    // cluster straddling 0 then comes out contiguous once the wrapped members
    // get +2π.
    size_t n = pts.size();
    size_t start = 0;
    double widest = pts.front().u + kTwoPi - pts.back().u;
    for (size_t i = 1; i < n; ++i) {
        double g = pts[i].u - pts[i - 1].u;
        if (g > widest) {
            widest = g;
            start = i;
        }
    }

    std::vector<std::vector<Member>> groups;
    double prev_u = 0.0;
    for (size_t j = 0; j < n; ++j) {
        Member m = pts[(start + j) % n];
        if (start + j >= n) m.u += kTwoPi;
        if (j == 0 || m.u - prev_u > gap) groups.emplace_back();
        prev_u = m.u;
        groups.back().push_back(m);
    }

    auto upper_half = [windows](const Member& m) {
        return static_cast<int>(std::floor(m.x / kTwoPi)) + 1 > windows / 2;
    };
    // Center from the upper half of the window range; earlier windows carry
    // the larger decaying error terms.
    auto center_of = [&](const std::vector<Member>& g) {
        double sum_upper = 0.0, sum_all = 0.0;
        int n_upper = 0;
        for (const Member& m : g) {
            sum_all += m.u;
            if (upper_half(m)) {
                sum_upper += m.u;
                ++n_upper;
            }
        }
        return n_upper > 0 ? sum_upper / n_upper : sum_all / static_cast<double>(g.size());
    };

    // A member whose noise exceeds the linkage gap detaches as a tiny stray
    // group, which would poison the per-window counts of the branch it left.
    // Pull strays back into the nearest full-weight group before bookkeeping.
    std::vector<char> retained(groups.size(), 0);
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        auto w = std::llround(groups[gi].size() / static_cast<double>(windows));
        retained[gi] = w >= 1;
    }
    const double reattach = 3.0 * gap;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        if (retained[gi]) continue;
        for (const Member& m : groups[gi]) {
            size_t best = groups.size();
            double best_d = reattach;
            double mu = std::fmod(m.u, kTwoPi);
            for (size_t gj = 0; gj < groups.size(); ++gj) {
                if (!retained[gj]) continue;
                double d = circ_dist(mu, std::fmod(center_of(groups[gj]), kTwoPi));
                if (d <= best_d) {
                    best_d = d;
                    best = gj;
                }
            }
            if (best == groups.size()) {
                ++out.outliers_dropped;
                continue;
            }
            // Re-express u in the host group's frame so means stay coherent.
            double host_c = center_of(groups[best]);
            double delta = mu - std::fmod(host_c, kTwoPi);
            if (delta > kPi) delta -= kTwoPi;
            if (delta < -kPi) delta += kTwoPi;
            groups[best].push_back({m.x, host_c + delta});
        }
        groups[gi].clear();
    }

    for (size_t gi = 0; gi < groups.size(); ++gi) {
        if (!retained[gi]) continue;
        const auto& g = groups[gi];
        double center_u = center_of(g);
        bool have_upper = std::any_of(g.begin(), g.end(), upper_half);

        // spread is the standard error of the center estimate over the
        // members that produced it: downstream root matching needs the
        // uncertainty of the mean, not the raw scatter, which is sqrt(n)
        // larger and dominated by the early noisy windows.
        double var_sum = 0.0;
        int n_used = 0;
        std::map<int, int> freq;  // per-window member counts
        for (const Member& m : g) {
            if (upper_half(m) == have_upper) {
                double dev = m.u - center_u;
                var_sum += dev * dev;
                ++n_used;
            }
            // (x - u) / 2π is an exact window offset: both wrapped sides of a
            // seam point land in the same window, keeping counts honest.
            int k = static_cast<int>(std::llround((m.x - m.u) / kTwoPi)) + 1;
            ++freq[k];
        }
        double spread = n_used > 1 ? std::sqrt(var_sum / (n_used * (n_used - 1.0))) : 0.0;

        int span = freq.rbegin()->first - freq.begin()->first + 1;
        if (span > windows)
            throw InconsistentWindows("cluster spans more windows than provided");
        int min_count = static_cast<int>(freq.size()) < windows ? 0 : freq.begin()->second;
        int max_count = 0;
        for (const auto& [k, c] : freq) {
            min_count = std::min(min_count, c);
            max_count = std::max(max_count, c);
        }
        if (max_count - min_count > 1)
            throw InconsistentWindows("per-window counts differ by more than 1 within a cluster");

        int total = static_cast<int>(g.size());
        int weight = static_cast<int>(std::llround(total / static_cast<double>(windows)));
        if (weight == 0) {
            out.outliers_dropped += total;
            continue;
        }
        out.clusters.push_back({std::fmod(center_u, kTwoPi), weight, spread, total});
    }

    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.center < b.center; });
    return out;
}

namespace {

// Interior clusters must pair x with 2π - x at equal weight; each pair is one
// root cos(x) of multiplicity weight.
void consume_mirror_pairs(const std::vector<Cluster>& interior, double tol,
                          std::vector<RootSet::Entry>& roots) {
    if (interior.empty()) return;
    size_t i = 0, j = interior.size() - 1;
    while (i < j) {
        double sum = interior[i].center + interior[j].center;
        if (std::fabs(sum - kTwoPi) > tol) {
            const Cluster& lone = sum < kTwoPi ? interior[i] : interior[j];
            throw MirrorMismatch("cluster at " + std::to_string(lone.center) +
                                 " has no mirror at 2π - x");
        }
        if (interior[i].weight != interior[j].weight)
            throw MirrorMismatch("mirror clusters at " + std::to_string(interior[i].center) +
                                 " and " + std::to_string(interior[j].center) +
                                 " have different weights");
        double angle = (interior[i].center + (kTwoPi - interior[j].center)) / 2.0;
        roots.push_back({std::cos(angle), interior[i].weight});
        ++i;
        --j;
    }
    if (i == j)
        throw MirrorMismatch("cluster at " + std::to_string(interior[i].center) +
                             " has no mirror at 2π - x");
}

RootSet sorted_root_set(std::vector<RootSet::Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const RootSet::Entry& a, const RootSet::Entry& b) { return a.value < b.value; });
    RootSet rs;
    rs.entries = std::move(entries);
    return rs;
}

}  // namespace

RootEstimates roots_from_clusters(const ClusterSet& neumann, const ClusterSet& dirichlet) {
    RootEstimates est;
    double n_tol = neumann.gap > 0 ? neumann.gap : 0.05;
    double d_tol = dirichlet.gap > 0 ? dirichlet.gap : 0.05;

    std::vector<RootSet::Entry> alphas;
    std::vector<Cluster> interior;
    bool saw_zero = false, saw_pi = false;
    for (const Cluster& c : neumann.clusters) {
        if (circ_dist(c.center, 0.0) <= n_tol) {
            saw_zero = true;
            alphas.push_back({1.0, 1});
            if (c.weight > 1)
                est.notes.push_back("line cluster at 0 has weight " + std::to_string(c.weight) +
                                    "; a nearby root may have merged into it");
        } else if (circ_dist(c.center, kPi) <= n_tol) {
            saw_pi = true;
            alphas.push_back({-1.0, 1});
            if (c.weight > 1)
                est.notes.push_back("line cluster at π has weight " + std::to_string(c.weight) +
                                    "; a nearby root may have merged into it");
        } else {
            interior.push_back(c);
        }
    }
    if (!saw_zero || !saw_pi)
        est.notes.push_back("expected line clusters at 0 and π are missing from the Neumann data");
    consume_mirror_pairs(interior, n_tol, alphas);

    std::vector<RootSet::Entry> betas;
    std::vector<Cluster> d_interior;
    for (const Cluster& c : dirichlet.clusters) {
        if (circ_dist(c.center, 0.0) <= d_tol || circ_dist(c.center, kPi) <= d_tol)
            throw UnexpectedLineCluster("Dirichlet cluster at " + std::to_string(c.center) +
                                        " sits on the line branch positions");
        d_interior.push_back(c);
    }
    consume_mirror_pairs(d_interior, d_tol, betas);

    est.alphas = sorted_root_set(std::move(alphas));
    est.betas = sorted_root_set(std::move(betas));
    est.inferred_p = est.alphas.total_multiplicity();
    if (est.betas.total_multiplicity() != est.inferred_p - 1)
        throw CountMismatch("counted " + std::to_string(est.alphas.total_multiplicity()) +
                            " numerator roots but " +
                            std::to_string(est.betas.total_multiplicity()) +
                            " denominator roots; expected one fewer");
    return est;
}

RealRationalFunction assemble_ratio(const RootSet& alphas, const RootSet& betas,
                                    double match_tol) {
    if (!(match_tol >= 0)) throw Error("match tolerance must be >= 0");
    std::vector<double> a = alphas.values_with_multiplicity();
    std::vector<double> b = betas.values_with_multiplicity();
    if (a.size() != b.size() + 1)
        throw CountMismatch("need exactly one more numerator root than denominator roots");

    std::vector<double> ka, kb;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::fabs(a[i] - b[j]) <= match_tol) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ka.push_back(a[i++]);
        } else {
            kb.push_back(b[j++]);
        }
    }
    while (i < a.size()) ka.push_back(a[i++]);
    while (j < b.size()) kb.push_back(b[j++]);

    auto monic_product = [](const std::vector<double>& roots) {
        std::vector<double> c{1.0};
        for (double r : roots) {
            std::vector<double> next(c.size() + 1, 0.0);
            for (size_t t = 0; t < c.size(); ++t) {
                next[t + 1] += c[t];
                next[t] -= r * c[t];
            }
            c = std::move(next);
        }
        return c;
    };
    std::vector<double> num = monic_product(ka);
    for (double& v : num) v = -v;
    std::vector<double> den = monic_product(kb);

    // The exact ratio is parity-pure (root sets symmetric about 0), so
    // wrong-parity coefficients are pure estimation noise.
    auto symmetrize = [](std::vector<double>& c) {
        size_t parity = (c.size() - 1) % 2;
        for (size_t t = 0; t < c.size(); ++t)
            if (t % 2 != parity) c[t] = 0.0;
    };
    symmetrize(num);
    symmetrize(den);
    return {std::move(num), std::move(den)};
}

namespace {

// Worst coefficient distance between the exact rebuilt ratio (den scaled
// monic) and the assembled one, relative to the assembled coefficient scale.
double validate_distance(const RationalFunction& rebuilt, const RealRationalFunction& assembled) {
    int nd = static_cast<int>(assembled.num.size()) - 1;
    int dd = static_cast<int>(assembled.den.size()) - 1;
    if (rebuilt.num().degree() != nd || rebuilt.den().degree() != dd)
        return std::numeric_limits<double>::infinity();
    double ds = to_double(rebuilt.den().leading());
    double scale = 1.0;
    for (double c : assembled.num) scale = std::max(scale, std::fabs(c));
    for (double c : assembled.den) scale = std::max(scale, std::fabs(c));
    double worst = 0.0;
    for (int i = 0; i <= nd; ++i)
        worst = std::max(worst, std::fabs(to_double(rebuilt.num().coeff(i)) / ds - assembled.num[static_cast<size_t>(i)]));
    for (int i = 0; i <= dd; ++i)
        worst = std::max(worst, std::fabs(to_double(rebuilt.den().coeff(i)) / ds - assembled.den[static_cast<size_t>(i)]));
    return worst / scale;
}

}  // namespace

RecoveryReport recover(const Spectrum& neumann, const Spectrum& dirichlet, double l,
                       const RecoverOptions& opts) {
    RecoveryReport rep;
    try {
        ClusterSet nc = fold_and_cluster(neumann, l, opts.windows, opts.gap);
        ClusterSet dc = fold_and_cluster(dirichlet, l, opts.windows, opts.gap);
        rep.neumann_clusters = nc;
        rep.dirichlet_clusters = dc;
        if (nc.outliers_dropped > 0)
            rep.notes.push_back(std::to_string(nc.outliers_dropped) +
                                " Neumann points dropped as outliers");
        if (dc.outliers_dropped > 0)
            rep.notes.push_back(std::to_string(dc.outliers_dropped) +
                                " Dirichlet points dropped as outliers");

        RootEstimates est = roots_from_clusters(nc, dc);
        rep.alphas = est.alphas;
        rep.betas = est.betas;
        rep.inferred_p = est.inferred_p;
        rep.notes.insert(rep.notes.end(), est.notes.begin(), est.notes.end());

        double spread = 0.0;
        for (const Cluster& c : nc.clusters) spread = std::max(spread, c.spread);
        for (const Cluster& c : dc.clusters) spread = std::max(spread, c.spread);
        double match_tol = std::max(10.0 * spread, opts.match_floor);
        rep.assembled = assemble_ratio(rep.alphas, rep.betas, match_tol);

        auto [shape, trace] = cf_expand_rounded(rep.assembled, opts.cf_tol);
        rep.trace = std::move(trace);
        if (shape.vertex_count() != rep.inferred_p)
            throw CountMismatch("expanded shape has p = " + std::to_string(shape.vertex_count()) +
                                " but clusters imply p = " + std::to_string(rep.inferred_p));
        double dist = validate_distance(cf_build(shape), rep.assembled);
        if (!(dist <= opts.validate_tol))
            throw ToleranceExceeded("rebuilt ratio misses the assembled one by relative " +
                                    std::to_string(dist));

        rep.shape = shape;
        rep.success = true;
        rep.status = "success";
    } catch (const Error& e) {
        rep.success = false;
        rep.status = std::string("failure(") + e.name() + ": " + e.what() + ")";
    }
    return rep;
}

}  // namespace catspec

#pragma once

#include <string>
#include <vector>

#include "catspec/cfrac.hpp"
#include "catspec/roots.hpp"
#include "catspec/spectrum.hpp"
#include "catspec/tree.hpp"

namespace catspec {

struct Cluster {
    double center = 0.0;  // folded position in [0, 2π)
    int weight = 0;       // members per window; the root multiplicity
    double spread = 0.0;  // max |member - center| after unwrapping
    int members = 0;
};

struct ClusterSet {
    std::vector<Cluster> clusters;  // ascending by center
    int windows = 0;
    double gap = 0.0;          // merge threshold the clustering ran with
    int outliers_dropped = 0;  // members of clusters present in < half the windows
};

// Folds sqrt(λ)·l mod 2π for every entry below 2π·windows and single-linkage
// clusters the residues on the circle with the given merge threshold. Cluster
// centers average the members from the upper half of the window range, where
// decaying per-window noise is smallest. weight is the per-window member
// count by majority; per-window counts differing by more than 1 within one
// cluster throw InconsistentWindows. Clusters too sparse to reach weight 1
// are dropped as outliers (noise can detach a first-window point).
ClusterSet fold_and_cluster(const Spectrum& spec, double l, int windows, double gap);

struct RootEstimates {
    RootSet alphas;  // roots of the numerator, ±1 from the line clusters included
    RootSet betas;   // roots of the denominator
    int inferred_p = 0;
    std::vector<std::string> notes;
};

// Turns cluster centers back into polynomial roots: a Neumann cluster at 0 or
// π is the line branch (+1 / -1, multiplicity 1); every other center x pairs
// with its mirror at 2π-x of equal weight, contributing cos(x) with
// multiplicity = weight. Dirichlet clusters must all be mirror pairs.
// Throws MirrorMismatch, UnexpectedLineCluster, or CountMismatch when the
// cluster geometry fits no caterpillar spectrum.
RootEstimates roots_from_clusters(const ClusterSet& neumann, const ClusterSet& dirichlet);

// num = -Π(z - α), den = Π(z - β), with α/β pairs closer than match_tol
// cancelled first (the floating-point stand-in for exact gcd reduction) and
// coefficients of the wrong parity zeroed. Requires one more alpha than beta.
RealRationalFunction assemble_ratio(const RootSet& alphas, const RootSet& betas,
                                    double match_tol);

struct RecoverOptions {
    int windows = 50;
    double gap = 0.05;            // cluster merge threshold, radians
    double cf_tol = 4e-3;         // expansion tolerance (coefficient scale)
    double match_floor = 1e-9;    // minimum α/β cancellation tolerance
    double validate_tol = 8e-3;   // rebuilt-vs-assembled coefficient tolerance
};

struct RecoveryReport {
    bool success = false;
    std::string status;  // "success" or "failure(<error>: <message>)"
    int inferred_p = 0;
    RootSet alphas;
    RootSet betas;
    RealRationalFunction assembled;
    CaterpillarShape shape;  // meaningful only on success
    ExpansionTrace trace;
    ClusterSet neumann_clusters;
    ClusterSet dirichlet_clusters;
    std::vector<std::string> notes;
};

// Full inverse pipeline: fold_and_cluster on both spectra, roots_from_clusters,
// assemble_ratio (cancellation tolerance max(10 × worst cluster spread,
// match_floor)), cf_expand_rounded, then two consistency gates: the shape's
// vertex count must equal the cluster-inferred p, and cf_build(shape) must
// reproduce the assembled ratio within validate_tol. Never throws; failures
// land in status.
RecoveryReport recover(const Spectrum& neumann, const Spectrum& dirichlet, double l,
                       const RecoverOptions& opts = {});

}  // namespace catspec

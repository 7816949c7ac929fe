#pragma once

#include <vector>

#include "ssl/graph.hpp"

namespace ssl {

// (a - lam(lam-1)) * (m - (lam-1)^2) <= (lam(lam-1))^2, the induced-H(a,m)
// consequence of lambda_min >= -lam.
bool hat_bound_holds(long long a, long long m, long long lam);

// Clique order from which the attachment dichotomy applies:
// lam^4 - 2 lam^3 + 3 lam^2 - 3 lam + 3.
long long clique_threshold(long long lam);

// t-plex order from which the plex dichotomy applies.
long long plex_threshold(long long lam, long long t);

enum class Verdict { holds, fails, not_applicable };

// Attachment counts of every outside vertex against a target set, split
// into a low band [0, low_max], a high band [high_min, |target|] and the
// middle band between them (the dichotomy violations).
struct AttachmentProfile {
    VertexSet target;
    long long low_max = 0;
    long long high_min = 0;
    std::vector<int> outside;       // vertices not in target
    std::vector<int> counts;        // neighbor counts, aligned with outside
    std::vector<int> middle_band;   // outside vertices strictly between the bands
    Verdict verdict = Verdict::not_applicable;
};

// Dichotomy for a clique c: outside vertices have at most lam(lam-1) or at
// least |c| - (lam-1)^2 neighbors in c. Below clique_threshold(lam) the
// verdict is not_applicable; the profile is returned in every case.
AttachmentProfile verify_clique_dichotomy(const Graph& g, const VertexSet& c, int lam);

// Dichotomy for a t-plex p with bands t*lam(lam-1) and |p| - t(lam-1)^2,
// applicable from plex_threshold(lam, t).
AttachmentProfile verify_plex_dichotomy(const Graph& g, const VertexSet& p, int t, int lam);

// The five properties of the main plex-family theorem, measured on a given
// family of ((lam-1)^2+1)-plexes. Property (ii) has no paper-side constant
// at this scale and is reported as a measured value only.
struct TheoremReport {
    int lam = 0;
    int n = 0;
    bool multiplicity_ok = false;   // (i) every vertex in >= 1 and <= lam plexes
    int min_multiplicity = 0;
    int max_multiplicity = 0;
    int max_uncovered_neighbors = 0;  // (ii) measured
    bool order_ok = false;          // (iii) every plex order >= n
    int min_order = 0;
    bool intersection_ok = false;   // (iv) pairwise intersections <= lam-1
    int max_intersection = 0;
    bool attachment_ok = false;     // (v) outside attachment <= ((lam-1)^2+1)lam(lam-1)
    int max_outside_attachment = 0;
};

TheoremReport verify_theorem_properties(const Graph& g, int lam,
                                        const std::vector<VertexSet>& plexes, int n);

// Per-vertex maximum clique orders of a k-regular graph and their ratio to
// k. Errors on irregular input.
struct CliqueRatioReport {
    int degree = 0;
    std::vector<int> orders;  // per vertex
    int min_order = 0;
    double avg_order = 0.0;
    double min_ratio = 0.0;
    long long corollary_denominator = 0;  // lam((lam-1)^2+1)
};

CliqueRatioReport clique_ratio_report(const Graph& g, int lam);

}  // namespace ssl

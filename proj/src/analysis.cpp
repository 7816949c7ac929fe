#include "ssl/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "ssl/cliques.hpp"

namespace ssl {

bool hat_bound_holds(long long a, long long m, long long lam) {
    if (a < 1 || m < 0 || lam < 1) throw std::invalid_argument("hat_bound_holds: bad arguments");
    const long long t = lam * (lam - 1);
    return (a - t) * (m - (lam - 1) * (lam - 1)) <= t * t;
}

long long clique_threshold(long long lam) {
    if (lam < 1) throw std::invalid_argument("clique_threshold: lambda must be >= 1");
    return lam * lam * lam * lam - 2 * lam * lam * lam + 3 * lam * lam - 3 * lam + 3;
}

long long plex_threshold(long long lam, long long t) {
    if (lam < 1 || t < 1) throw std::invalid_argument("plex_threshold: arguments must be >= 1");
    const long long q = lam * (lam - 1);
    const long long s = (lam - 1) * (lam - 1);
    return t * (q * q + q + s + (t - 1) * (s + 1) + 2);
}

namespace {

AttachmentProfile profile_attachments(const Graph& g, const VertexSet& target,
                                      long long low_max, long long high_min,
                                      bool applicable) {
    AttachmentProfile pr;
    pr.target = target;
    pr.low_max = low_max;
    pr.high_min = high_min;
    std::vector<char> in_target(g.vertex_count(), 0);
    for (int v : target) in_target[v] = 1;
    bool clean = true;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (in_target[x]) continue;
        int count = 0;
        for (int y : g.neighbors(x))
            if (in_target[y]) ++count;
        pr.outside.push_back(x);
        pr.counts.push_back(count);
        if (count > low_max && count < high_min) {
            pr.middle_band.push_back(x);
            clean = false;
        }
    }
    pr.verdict = applicable ? (clean ? Verdict::holds : Verdict::fails)
                            : Verdict::not_applicable;
    return pr;
}

}  // namespace

AttachmentProfile verify_clique_dichotomy(const Graph& g, const VertexSet& c, int lam) {
    if (lam < 1) throw std::invalid_argument("verify_clique_dichotomy: lambda must be >= 1");
    if (!is_clique(g, c)) throw std::invalid_argument("verify_clique_dichotomy: set is not a clique");
    const long long order = static_cast<long long>(c.size());
    const bool applicable = order >= clique_threshold(lam);
    return profile_attachments(g, c, static_cast<long long>(lam) * (lam - 1),
                               order - static_cast<long long>(lam - 1) * (lam - 1),
                               applicable);
}

AttachmentProfile verify_plex_dichotomy(const Graph& g, const VertexSet& p, int t, int lam) {
    if (lam < 1 || t < 1)
        throw std::invalid_argument("verify_plex_dichotomy: arguments must be >= 1");
    if (!is_t_plex(g, p, t))
        throw std::invalid_argument("verify_plex_dichotomy: set is not a " + std::to_string(t) +
                                    "-plex");
    const long long order = static_cast<long long>(p.size());
    const bool applicable = order >= plex_threshold(lam, t);
    return profile_attachments(g, p,
                               static_cast<long long>(t) * lam * (lam - 1),
                               order - static_cast<long long>(t) * (lam - 1) * (lam - 1),
                               applicable);
}

TheoremReport verify_theorem_properties(const Graph& g, int lam,
                                        const std::vector<VertexSet>& plexes, int n) {
    if (lam < 1) throw std::invalid_argument("verify_theorem_properties: lambda must be >= 1");
    const int plex_t = (lam - 1) * (lam - 1) + 1;
    for (const auto& p : plexes)
        if (!is_t_plex(g, p, plex_t))
            throw std::invalid_argument("verify_theorem_properties: a member is not a " +
                                        std::to_string(plex_t) + "-plex");
    TheoremReport rep;
    rep.lam = lam;
    rep.n = n;

    const int nv = g.vertex_count();
    std::vector<std::vector<int>> member_of(nv);
    for (size_t i = 0; i < plexes.size(); ++i)
        for (int v : plexes[i]) member_of[v].push_back(static_cast<int>(i));

    // (i) membership multiplicity in [1, lam]
    rep.min_multiplicity = nv == 0 ? 0 : static_cast<int>(member_of[0].size());
    rep.max_multiplicity = rep.min_multiplicity;
    for (int v = 0; v < nv; ++v) {
        int mult = static_cast<int>(member_of[v].size());
        rep.min_multiplicity = std::min(rep.min_multiplicity, mult);
        rep.max_multiplicity = std::max(rep.max_multiplicity, mult);
    }
    rep.multiplicity_ok = rep.min_multiplicity >= 1 && rep.max_multiplicity <= lam;

    // (ii) neighbors not sharing any plex with the vertex (measured)
    {
        std::vector<char> covered(nv, 0);
        for (int x = 0; x < nv; ++x) {
            std::vector<int> touched;
            for (int i : member_of[x])
                for (int y : plexes[i])
                    if (!covered[y]) {
                        covered[y] = 1;
                        touched.push_back(y);
                    }
            int uncovered = 0;
            for (int y : g.neighbors(x))
                if (!covered[y]) ++uncovered;
            rep.max_uncovered_neighbors = std::max(rep.max_uncovered_neighbors, uncovered);
            for (int y : touched) covered[y] = 0;
        }
    }

    // (iii) orders
    rep.min_order = plexes.empty() ? 0 : static_cast<int>(plexes.front().size());
    for (const auto& p : plexes)
        rep.min_order = std::min(rep.min_order, static_cast<int>(p.size()));
    rep.order_ok = !plexes.empty() && rep.min_order >= n;

    // (iv) pairwise intersections
    for (size_t i = 0; i < plexes.size(); ++i) {
        for (size_t j = i + 1; j < plexes.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(plexes[i].begin(), plexes[i].end(), plexes[j].begin(),
                                  plexes[j].end(), std::back_inserter(common));
            rep.max_intersection = std::max(rep.max_intersection,
                                            static_cast<int>(common.size()));
        }
    }
    rep.intersection_ok = rep.max_intersection <= lam - 1;

    // (v) outside attachment
    const long long attach_bound = static_cast<long long>(plex_t) * lam * (lam - 1);
    for (const auto& p : plexes) {
        std::vector<char> in_p(nv, 0);
        for (int v : p) in_p[v] = 1;
        for (int x = 0; x < nv; ++x) {
            if (in_p[x]) continue;
            int count = 0;
            for (int y : g.neighbors(x))
                if (in_p[y]) ++count;
            rep.max_outside_attachment = std::max(rep.max_outside_attachment, count);
        }
    }
    rep.attachment_ok = rep.max_outside_attachment <= attach_bound;
    return rep;
}

CliqueRatioReport clique_ratio_report(const Graph& g, int lam) {
    if (lam < 1) throw std::invalid_argument("clique_ratio_report: lambda must be >= 1");
    const int k = g.regular_degree();
    if (k < 0) throw std::invalid_argument("clique_ratio_report: graph is not regular");
    if (g.vertex_count() == 0)
        throw std::invalid_argument("clique_ratio_report: empty graph");
    CliqueRatioReport rep;
    rep.degree = k;
    rep.corollary_denominator =
        static_cast<long long>(lam) * ((static_cast<long long>(lam) - 1) * (lam - 1) + 1);
    long long sum = 0;
    rep.min_order = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        int order = static_cast<int>(max_clique_containing(g, v).size());
        rep.orders.push_back(order);
        rep.min_order = std::min(rep.min_order, order);
        sum += order;
    }
    rep.avg_order = static_cast<double>(sum) / g.vertex_count();
    rep.min_ratio = k == 0 ? static_cast<double>(rep.min_order)
                           : static_cast<double>(rep.min_order) / k;
    return rep;
}

}  // namespace ssl

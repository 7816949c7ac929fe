#include "ssl/cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssl {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Bron-Kerbosch with pivoting. Branches that cannot reach n_min vertices
// are cut; X still carries exclusions so maximality is preserved.
void bk_threshold(const Graph& g, std::vector<int>& r, std::vector<int> p,
                  std::vector<int> x, int n_min, std::vector<VertexSet>& out) {
    if (static_cast<int>(r.size() + p.size()) < n_min) return;
    if (p.empty() && x.empty()) {
        VertexSet c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    int pivot = -1, best = -1;
    for (int u : p) {
        int k = static_cast<int>(intersect_sorted(g.neighbors(u), p).size());
        if (k > best) { best = k; pivot = u; }
    }
    for (int u : x) {
        int k = static_cast<int>(intersect_sorted(g.neighbors(u), p).size());
        if (k > best) { best = k; pivot = u; }
    }
    std::vector<int> branch;
    const auto& pn = g.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pn.begin(), pn.end(), std::back_inserter(branch));
    for (int v : branch) {
        r.push_back(v);
        bk_threshold(g, r, intersect_sorted(p, g.neighbors(v)),
                     intersect_sorted(x, g.neighbors(v)), n_min, out);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        auto it = std::lower_bound(x.begin(), x.end(), v);
        x.insert(it, v);
    }
}

// Maximum-clique search with size pruning. If lex_first is set, candidates
// are scanned in ascending order and only strictly larger cliques replace
// the incumbent, so the first maximum found is the lexicographically
// smallest; pruning then only cuts branches that cannot reach best_known.
void max_clique_rec(const Graph& g, std::vector<int>& r, std::vector<int> p,
                    int& best_size, VertexSet& best, bool lex_first, int target) {
    if (p.empty()) {
        if (static_cast<int>(r.size()) > best_size) {
            best_size = static_cast<int>(r.size());
            best = r;
            std::sort(best.begin(), best.end());
        }
        return;
    }
    if (lex_first) {
        if (best_size >= target) return;  // already found the lex-min of target size
        if (static_cast<int>(r.size() + p.size()) < target) return;
        for (size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            std::vector<int> rest(p.begin() + i + 1, p.end());
            r.push_back(v);
            max_clique_rec(g, r, intersect_sorted(rest, g.neighbors(v)), best_size, best,
                           lex_first, target);
            r.pop_back();
            if (best_size >= target) return;
        }
        return;
    }
    if (static_cast<int>(r.size() + p.size()) <= best_size) return;
    // greedy colouring bound on the candidate set
    {
        std::vector<int> color(p.size(), 0);
        int colors = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            std::vector<char> used(colors + 2, 0);
            for (size_t j = 0; j < i; ++j)
                if (g.adjacent(p[i], p[j])) used[color[j]] = 1;
            int c = 1;
            while (used[c]) ++c;
            color[i] = c;
            colors = std::max(colors, c);
        }
        if (static_cast<int>(r.size()) + colors <= best_size) return;
    }
    for (size_t i = 0; i < p.size(); ++i) {
        if (static_cast<int>(r.size() + p.size() - i) <= best_size) return;
        int v = p[i];
        std::vector<int> rest(p.begin() + i + 1, p.end());
        r.push_back(v);
        max_clique_rec(g, r, intersect_sorted(rest, g.neighbors(v)), best_size, best,
                       lex_first, target);
        r.pop_back();
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques_at_least(const Graph& g, int n_min) {
    if (n_min < 1) throw std::invalid_argument("maximal_cliques_at_least: n_min must be >= 1");
    std::vector<VertexSet> out;
    std::vector<int> r, p, x;
    for (int v = 0; v < g.vertex_count(); ++v) p.push_back(v);
    bk_threshold(g, r, std::move(p), std::move(x), n_min, out);
    std::sort(out.begin(), out.end());
    return out;
}

int max_clique_size_within(const Graph& g, const VertexSet& candidates) {
    check_vertex_set(g, candidates);
    if (candidates.empty()) return 0;
    std::vector<int> r;
    int best_size = 0;
    VertexSet best;
    max_clique_rec(g, r, candidates, best_size, best, false, 0);
    return best_size;
}

int max_clique_size(const Graph& g) {
    VertexSet all;
    for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    return max_clique_size_within(g, all);
}

VertexSet max_clique_containing(const Graph& g, int x) {
    if (x < 0 || x >= g.vertex_count())
        throw std::invalid_argument("max_clique_containing: vertex out of range");
    // pass 1: maximum order among cliques through x
    int best_size = 0;
    VertexSet best;
    std::vector<int> r = {x};
    max_clique_rec(g, r, g.neighbors(x), best_size, best, false, 0);
    const int target = best_size == 0 ? 1 : best_size;

    // pass 2: first clique of that order in lexicographic scan order
    best_size = 0;
    best.clear();
    r = {x};
    max_clique_rec(g, r, g.neighbors(x), best_size, best, true, target);
    if (best.empty()) best = {x};
    return best;
}

}  // namespace ssl

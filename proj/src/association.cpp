#include "ssl/association.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ssl/certify.hpp"
#include "ssl/cliques.hpp"
#include "ssl/generators.hpp"

namespace ssl {

int m_lambda(int lam) {
    if (lam < 1) throw std::invalid_argument("m_lambda: lambda must be >= 1");
    for (int m = 1;; ++m) {
        if (!certify_graph_lambda_min_at_least(gen_ktilde(m), lam).psd) return m;
        // Eq.-(1)-style safety stop: lambda_min(K~_{2m}) >= -lam forces
        // (m - lam(lam-1))(m - (lam-1)^2) <= (lam(lam-1))^2, so the sweep
        // cannot run past that range.
        long long t = static_cast<long long>(lam) * (lam - 1);
        if (m > t * t + t + (lam - 1) * (lam - 1) + 2)
            throw std::logic_error("m_lambda: sweep exceeded theoretical bound");
    }
}

namespace {

int non_neighbors_in(const Graph& g, int x, const VertexSet& c) {
    int non = 0;
    for (int y : c)
        if (y != x && !g.adjacent(x, y)) ++non;
    return non;
}

// C1 == C2 under the relation: each vertex of either clique has at most
// m-1 non-neighbors in the other.
bool cliques_equivalent(const Graph& g, const VertexSet& c1, const VertexSet& c2, int m) {
    for (int x : c1)
        if (non_neighbors_in(g, x, c2) > m - 1) return false;
    for (int y : c2)
        if (non_neighbors_in(g, y, c1) > m - 1) return false;
    return true;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

VertexSet quasi_clique_of(const Graph& g, const VertexSet& clique, int m) {
    VertexSet q;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (non_neighbors_in(g, x, clique) <= m - 1) q.push_back(x);
    return q;
}

CliqueClassSet clique_classes(const Graph& g, int m, int n, bool allow_small_n) {
    if (m < 1) throw std::invalid_argument("clique_classes: m must be >= 1");
    if (n < (m + 1) * (m + 1) && !allow_small_n)
        throw std::invalid_argument(
            "clique_classes: n = " + std::to_string(n) + " is below (m+1)^2 = " +
            std::to_string((m + 1) * (m + 1)) +
            "; the relation is only guaranteed to be an equivalence from there");

    CliqueClassSet out;
    out.m = m;
    out.n = n;
    out.cliques = maximal_cliques_at_least(g, n);
    const int count = static_cast<int>(out.cliques.size());

    UnionFind uf(count);
    std::vector<std::vector<char>> equivalent(count, std::vector<char>(count, 0));
    for (int i = 0; i < count; ++i) {
        equivalent[i][i] = 1;
        for (int j = i + 1; j < count; ++j) {
            if (cliques_equivalent(g, out.cliques[i], out.cliques[j], m)) {
                equivalent[i][j] = equivalent[j][i] = 1;
                uf.unite(i, j);
            }
        }
    }
    // transitivity: all pairs inside one union-find class must be related.
    // Below the (m+1)^2 floor that is an input-class failure; at or above it
    // the cited equivalence lemma would be contradicted.
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (uf.find(i) == uf.find(j) && !equivalent[i][j]) {
                if (n < (m + 1) * (m + 1))
                    throw std::invalid_argument(
                        "clique_classes: relation is not transitive at this n; "
                        "cliques " + std::to_string(i) + " and " + std::to_string(j));
                throw std::runtime_error(
                    "clique_classes: relation failed to be an equivalence despite "
                    "n >= (m+1)^2 (counterexample candidate): cliques " +
                    std::to_string(i) + "," + std::to_string(j));
            }
        }
    }

    std::vector<int> root_to_class(count, -1);
    for (int i = 0; i < count; ++i) {
        int r = uf.find(i);
        if (root_to_class[r] == -1) {
            root_to_class[r] = static_cast<int>(out.classes.size());
            out.classes.emplace_back();
        }
        out.classes[root_to_class[r]].push_back(i);
    }

    for (const auto& members : out.classes) {
        VertexSet q = quasi_clique_of(g, out.cliques[members.front()], m);
        for (size_t k = 1; k < members.size(); ++k) {
            if (quasi_clique_of(g, out.cliques[members[k]], m) != q)
                throw std::runtime_error(
                    "clique_classes: quasi-clique differs between representatives of one "
                    "class (counterexample candidate)");
        }
        out.quasi_cliques.push_back(std::move(q));
    }
    return out;
}

AssociatedHoffman associated_hoffman(const Graph& g, int m, int n, bool allow_small_n) {
    AssociatedHoffman out;
    out.classes = clique_classes(g, m, n, allow_small_n);
    const int slims = g.vertex_count();
    const int fats = static_cast<int>(out.classes.classes.size());
    out.no_classes = fats == 0;

    std::vector<std::pair<int, int>> edges = g.edges();
    for (int c = 0; c < fats; ++c) {
        for (int x : out.classes.quasi_cliques[c]) edges.emplace_back(x, slims + c);
        out.class_of_fat.push_back(c);
    }
    out.hoffman.underlying = Graph(slims + fats, edges);
    out.hoffman.slim_count = slims;
    out.hoffman.fat_count = fats;
    if (fats > 0) require_valid(out.hoffman);
    return out;
}

namespace {

// Clique of order `need` inside `candidates` (sorted); appends to chosen and
// returns true on success. Candidates are restricted to common neighbors as
// the clique grows.
bool find_clique_in(const Graph& g, const std::vector<int>& candidates, int need,
                    std::vector<int>& chosen) {
    if (need == 0) return true;
    if (static_cast<int>(candidates.size()) < need) return false;
    for (size_t i = 0; i + need <= candidates.size(); ++i) {
        int v = candidates[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
        chosen.push_back(v);
        if (find_clique_in(g, next, need - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

// Enumerate m-cliques A inside `inside`, then look for an m-clique among the
// common neighbors of A within `outside`.
bool find_split_clique(const Graph& g, const std::vector<int>& inside,
                       const std::vector<int>& outside, int m,
                       std::vector<int>& a_part, std::vector<int>& b_part) {
    if (static_cast<int>(a_part.size()) == m) {
        return find_clique_in(g, outside, m, b_part);
    }
    for (size_t i = 0; i < inside.size(); ++i) {
        int v = inside[i];
        std::vector<int> next_inside;
        for (size_t j = i + 1; j < inside.size(); ++j)
            if (g.adjacent(v, inside[j])) next_inside.push_back(inside[j]);
        std::vector<int> next_outside;
        for (int w : outside)
            if (g.adjacent(v, w)) next_outside.push_back(w);
        if (static_cast<int>(a_part.size() + 1 + next_inside.size()) < m) continue;
        if (static_cast<int>(next_outside.size()) < m) continue;
        a_part.push_back(v);
        if (find_split_clique(g, next_inside, next_outside, m, a_part, b_part)) return true;
        a_part.pop_back();
    }
    return false;
}

}  // namespace

KtildeSearch check_ktilde_free(const Graph& g, int m) {
    if (m < 1) throw std::invalid_argument("check_ktilde_free: m must be >= 1");
    for (int x = 0; x < g.vertex_count(); ++x) {
        const auto& nb = g.neighbors(x);
        if (static_cast<int>(nb.size()) < m) continue;
        std::vector<int> outside;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != x && !g.adjacent(x, v)) outside.push_back(v);
        if (static_cast<int>(outside.size()) < m) continue;
        std::vector<int> a_part, b_part;
        if (find_split_clique(g, nb, outside, m, a_part, b_part)) {
            VertexSet witness = {x};
            witness.insert(witness.end(), a_part.begin(), a_part.end());
            witness.insert(witness.end(), b_part.begin(), b_part.end());
            std::sort(witness.begin(), witness.end());
            return {false, witness};
        }
    }
    return {true, {}};
}

bool fat_degree_bound_check(const AssociatedHoffman& ah, int lam) {
    for (int v = 0; v < ah.hoffman.slim_count; ++v)
        if (static_cast<int>(ah.hoffman.fat_neighbors(v).size()) > lam) return false;
    return true;
}

}  // namespace ssl

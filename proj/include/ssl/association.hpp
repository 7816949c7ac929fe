#pragma once

#include <vector>

#include "ssl/graph.hpp"
#include "ssl/hoffman.hpp"

namespace ssl {

// min{ m : lambda_min(K~_{2m}) < -lam }, decided by exact certification
// swept upward from m = 1. Finite for every lam >= 1.
int m_lambda(int lam);

// Equivalence classes of the maximal cliques of order >= n under the
// mutual-non-neighbor relation with parameter m, plus one quasi-clique per
// class. Classes are numbered by their smallest clique in the lexicographic
// clique ordering.
struct CliqueClassSet {
    int m = 0;
    int n = 0;
    std::vector<VertexSet> cliques;           // C(n), lexicographic
    std::vector<std::vector<int>> classes;    // indices into cliques
    std::vector<VertexSet> quasi_cliques;     // one per class
};

// Requires n >= (m+1)^2 unless allow_small_n is set; the computed relation
// is verified to be transitive either way, and a non-transitive outcome is
// an error.
CliqueClassSet clique_classes(const Graph& g, int m, int n, bool allow_small_n = false);

// x belongs to the quasi-clique of C when it has at most m-1 non-neighbors
// in C (itself excluded).
VertexSet quasi_clique_of(const Graph& g, const VertexSet& clique, int m);

struct AssociatedHoffman {
    HoffmanGraph hoffman;           // slim graph equals the input graph
    std::vector<int> class_of_fat;  // fat index (0-based among fats) -> class
    bool no_classes = false;        // C(n) was empty
    CliqueClassSet classes;
};

AssociatedHoffman associated_hoffman(const Graph& g, int m, int n,
                                     bool allow_small_n = false);

struct KtildeSearch {
    bool free = true;
    VertexSet witness;  // 2m+1 vertices inducing K~_{2m} when not free
};

// Search for an induced K~_{2m}: a 2m-clique plus an outside vertex with
// exactly m neighbors in it.
KtildeSearch check_ktilde_free(const Graph& g, int m);

// Every slim vertex of the associated Hoffman graph has at most lam fat
// neighbors (no induced h^(lam+1)).
bool fat_degree_bound_check(const AssociatedHoffman& ah, int lam);

}  // namespace ssl

#pragma once

#include <vector>

#include "ssl/graph.hpp"

namespace ssl {

// All maximal cliques of order >= n_min, each sorted, output in
// lexicographic order of the sorted vertex sequences.
std::vector<VertexSet> maximal_cliques_at_least(const Graph& g, int n_min);

// Order of a maximum clique within the candidate set (empty set -> 0).
int max_clique_size_within(const Graph& g, const VertexSet& candidates);

int max_clique_size(const Graph& g);

// A maximum-order clique containing x; among those, the lexicographically
// smallest vertex sequence.
VertexSet max_clique_containing(const Graph& g, int x);

}  // namespace ssl

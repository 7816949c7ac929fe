#pragma once

#include <vector>

#include "ssl/graph.hpp"

namespace ssl {

struct PlexPartition {
    std::vector<VertexSet> blocks;  // exactly t blocks, each inducing a clique
    int t = 0;
};

// Partition a t-plex into t cliques whose sizes differ by at most one,
// i.e. an equitable proper t-coloring of the complement of the induced
// subgraph (max degree <= t-1 there). Deterministic: identical inputs give
// identical partitions.
PlexPartition equitable_clique_partition(const Graph& g, const VertexSet& p, int t);

}  // namespace ssl

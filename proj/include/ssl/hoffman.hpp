#pragma once

#include <string>
#include <vector>

#include "ssl/eigen.hpp"
#include "ssl/graph.hpp"

namespace ssl {

// Graph with a slim/fat vertex labeling. Canonical ordering: slim vertices
// are indices 0..slim_count-1, fat vertices follow. Valid instances have no
// fat-fat edges and no fat vertex without a slim neighbor.
struct HoffmanGraph {
    Graph underlying;
    int slim_count = 0;
    int fat_count = 0;

    int total() const { return slim_count + fat_count; }
    bool is_fat(int v) const { return v >= slim_count; }

    std::vector<int> fat_neighbors(int v) const;
    std::vector<int> slim_neighbors(int v) const;
    int common_fat_count(int slim_a, int slim_b) const;
};

HoffmanGraph hoffman_from_graph(const Graph& g);  // all vertices slim

// Empty list iff both labeling conditions hold.
std::vector<std::string> validate(const HoffmanGraph& h);

void require_valid(const HoffmanGraph& h);

// Sp(h) = A_s - C C^T: diagonal -(number of fat neighbors); off-diagonal
// 1 - |common fats| for adjacent slim pairs, -|common fats| otherwise.
IntMatrix special_matrix(const HoffmanGraph& h);

// Smallest eigenvalue of the special matrix.
EigenResult lambda_min_h(const HoffmanGraph& h, double tolerance = kDefaultEigenTolerance);

Graph slim_graph(const HoffmanGraph& h);

// Induced Hoffman subgraph generated by a slim subset: the given slims plus
// every fat with at least one neighbor among them.
HoffmanGraph induced_sub(const HoffmanGraph& h, const VertexSet& slims);

// Slim neighbors of a fat vertex (as slim indices).
VertexSet quasi_clique(const HoffmanGraph& h, int fat);

// Every slim vertex has at least t fat neighbors.
bool is_t_fat(const HoffmanGraph& h, int t);

struct SumCheck {
    bool ok = false;
    std::string violation;  // empty when ok
};

// The four conditions under which h is the sum of the Hoffman subgraphs
// generated by the two slim blocks.
SumCheck check_sum(const HoffmanGraph& h, const VertexSet& block1, const VertexSet& block2);

// Finest partition of the slim vertices across which Sp(h) is
// block-diagonal: connected components of the nonzero off-diagonal pattern.
// Blocks sorted, ordered by smallest member.
std::vector<VertexSet> decompose(const HoffmanGraph& h);

// Sum of parts over a shared fat namespace. fat_names[p] maps part p's fat
// vertices (in order) to global fat names; cross-part slim pairs become
// adjacent exactly when they share one global fat, and sharing two or more
// is rejected. Global fats are ordered by ascending name.
HoffmanGraph compose(const std::vector<HoffmanGraph>& parts,
                     const std::vector<std::vector<int>>& fat_names);

}  // namespace ssl

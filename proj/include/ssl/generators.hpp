#pragma once

#include <array>
#include <vector>

#include "ssl/graph.hpp"
#include "ssl/hoffman.hpp"

namespace ssl {

// Clique K_{a+m} plus an apex vertex (last index) adjacent to the first a
// clique vertices.
Graph gen_hat(int a, int m);

// K~_{2m} = gen_hat(m, m).
Graph gen_ktilde(int m);

// Hamming graph H(d, q): words of length d over q symbols, edges at Hamming
// distance one. Guarded against q^d > 10^6.
Graph gen_hamming(int d, int q);

// Cocktail party graph K_{r x 2}: 2r vertices, all edges except the r
// antipodal pairs (2i, 2i+1).
Graph gen_cocktail(int r);

// Line graph: vertices are the edges of g in lexicographic order, adjacent
// when they share an endpoint. g must have at least one edge.
Graph gen_line_graph(const Graph& g);

// 2-(v, 4, 1) design: every point pair lies in exactly one 4-element block.
struct BlockDesign {
    int v = 0;
    std::vector<std::array<int, 4>> blocks;

    int replication() const { return (v - 1) / 3; }
    int block_count() const { return static_cast<int>(blocks.size()); }
};

// Steiner systems S(2,4,v) for v = 13 (projective plane of order 3) and
// v = 16 (affine plane of order 4). Other admissible v are not built in.
BlockDesign gen_steiner(int v);

// The building block of the Steiner sum: slims s1..s4 = 0..3 with edges
// s1-s4 and s2-s3; fats f1..f4 = 4..7 attached as f1:{s1,s3}, f2:{s1,s2},
// f3:{s3,s4}, f4:{s2,s4}. Its special matrix has spectrum {-3,-3,-3,1}.
HoffmanGraph steiner_block_hoffman();

// One block Hoffman graph per design block, summed over the shared point
// set: fats are the v points, block p's four fats map to its four points in
// ascending order. The slim graph is connected and (4r-3)-regular.
HoffmanGraph steiner_hoffman(const BlockDesign& d);

// Equitable-partition quotient of K~_{2m} over {apex, attached m-clique,
// other m-clique}; its smallest eigenvalue equals lambda_min(K~_{2m}).
IntMatrix ktilde_quotient_matrix(int m);

}  // namespace ssl

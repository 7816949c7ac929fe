#pragma once

#include <utility>
#include <vector>

namespace ssl {

// Sorted, duplicate-free vertex indices. Operations taking a VertexSet
// validate it against the graph they receive.
using VertexSet = std::vector<int>;

// Undirected simple graph with canonical vertex indices 0..n-1.
// Immutable after construction; neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    // edges as unordered pairs; loops and duplicates rejected
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // all edges (u, v) with u < v, lexicographically sorted
    std::vector<std::pair<int, int>> edges() const;

    // degree if regular, -1 otherwise (n = 0 counts as regular of degree 0)
    int regular_degree() const;
    bool connected() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;

    friend Graph graph_from_adjacency(std::vector<std::vector<int>> adj);
};

// Dense symmetric-or-square integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    explicit IntMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    bool symmetric() const;
};

void check_vertex_set(const Graph& g, const VertexSet& s);

IntMatrix adjacency_matrix(const Graph& g);

// Induced subgraph on s, relabeled 0..|s|-1 by ascending original index.
Graph induced(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// |N_G(x) ∩ s|
int neighbors_in(const Graph& g, int x, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);

// Every vertex of s misses at most t-1 of the other vertices of s.
bool is_t_plex(const Graph& g, const VertexSet& s, int t);

// Least t for which s is a t-plex (1 for a clique); s must be nonempty.
int plex_parameter(const Graph& g, const VertexSet& s);

}  // namespace ssl

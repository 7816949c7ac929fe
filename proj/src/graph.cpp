#include "ssl/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ssl {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("Graph: parallel edge");
    }
    edge_count_ = static_cast<long long>(edges.size());
}

Graph graph_from_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    long long deg_sum = 0;
    for (auto& nb : g.adj_) deg_sum += static_cast<long long>(nb.size());
    g.edge_count_ = deg_sum / 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), target);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::regular_degree() const {
    if (vertex_count() == 0) return 0;
    int k = degree(0);
    for (int v = 1; v < vertex_count(); ++v)
        if (degree(v) != k) return -1;
    return k;
}

bool Graph::connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

bool IntMatrix::symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
    int prev = -1;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex set: index " + std::to_string(v) + " out of range");
        if (v <= prev)
            throw std::invalid_argument("vertex set: not strictly increasing");
        prev = v;
    }
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) m.at(u, v) = 1;
    return m;
}

Graph induced(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        for (int w : g.neighbors(s[i]))
            if (index[w] >= 0) adj[i].push_back(index[w]);
    }
    return graph_from_adjacency(std::move(adj));
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        size_t k = 0;
        for (int v = 0; v < n; ++v) {
            while (k < nb.size() && nb[k] < v) ++k;
            bool adjacent = k < nb.size() && nb[k] == v;
            if (!adjacent && v != u) adj[u].push_back(v);
        }
    }
    return graph_from_adjacency(std::move(adj));
}

int neighbors_in(const Graph& g, int x, const VertexSet& s) {
    if (x < 0 || x >= g.vertex_count())
        throw std::invalid_argument("neighbors_in: vertex out of range");
    check_vertex_set(g, s);
    int count = 0;
    for (int v : s)
        if (v != x && g.adjacent(x, v)) ++count;
    return count;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_t_plex(const Graph& g, const VertexSet& s, int t) {
    if (t < 1) throw std::invalid_argument("is_t_plex: t must be positive");
    if (s.empty()) throw std::invalid_argument("is_t_plex: empty vertex set");
    check_vertex_set(g, s);
    for (int x : s) {
        int misses = static_cast<int>(s.size()) - 1 - neighbors_in(g, x, s);
        if (misses > t - 1) return false;
    }
    return true;
}

int plex_parameter(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("plex_parameter: empty vertex set");
    check_vertex_set(g, s);
    int worst = 0;
    for (int x : s)
        worst = std::max(worst, static_cast<int>(s.size()) - 1 - neighbors_in(g, x, s));
    return worst + 1;
}

}  // namespace ssl

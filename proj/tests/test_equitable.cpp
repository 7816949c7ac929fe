#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "ssl/equitable.hpp"
#include "ssl/generators.hpp"
#include "ssl/graph.hpp"

using namespace ssl;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

void check_valid_partition(const Graph& g, const VertexSet& p, int t,
                           const PlexPartition& part) {
    REQUIRE(part.t == t);
    REQUIRE(static_cast<int>(part.blocks.size()) == t);
    size_t total = 0;
    size_t min_size = p.size() + 1, max_size = 0;
    std::vector<int> seen;
    for (const auto& block : part.blocks) {
        total += block.size();
        min_size = std::min(min_size, block.size());
        max_size = std::max(max_size, block.size());
        CHECK((block.empty() || is_clique(g, block)));
        seen.insert(seen.end(), block.begin(), block.end());
    }
    CHECK(total == p.size());
    std::sort(seen.begin(), seen.end());
    CHECK(seen == p);
    CHECK(max_size - min_size <= 1);
}

// random t-plex instance: a graph whose complement has max degree <= t-1
Graph random_plex_graph(oracles::Rng& rng, int n, int t) {
    std::vector<std::vector<char>> non(n, std::vector<char>(n, 0));
    std::vector<int> def(n, 0);
    int tries = n * t;
    for (int it = 0; it < tries; ++it) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v || non[u][v]) continue;
        if (def[u] >= t - 1 || def[v] >= t - 1) continue;
        non[u][v] = non[v][u] = 1;
        ++def[u];
        ++def[v];
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!non[u][v]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("K_9 into three triangles") {
    Graph g = complete(9);
    VertexSet p = oracles::full_vertex_set(g);
    PlexPartition part = equitable_clique_partition(g, p, 3);
    check_valid_partition(g, p, 3, part);
    for (const auto& block : part.blocks) CHECK(block.size() == 3);
}

TEST_CASE("cocktail party K_{2x4} into two K_4") {
    Graph g = gen_cocktail(4);
    VertexSet p = oracles::full_vertex_set(g);
    PlexPartition part = equitable_clique_partition(g, p, 2);
    check_valid_partition(g, p, 2, part);
    for (const auto& block : part.blocks) {
        CHECK(block.size() == 4);
        // one vertex per antipodal pair
        for (int i = 0; i < 4; ++i) {
            int hits = 0;
            for (int v : block)
                if (v / 2 == i) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("K_7 into sizes 3,2,2") {
    Graph g = complete(7);
    VertexSet p = oracles::full_vertex_set(g);
    PlexPartition part = equitable_clique_partition(g, p, 3);
    check_valid_partition(g, p, 3, part);
    std::vector<size_t> sizes;
    for (const auto& block : part.blocks) sizes.push_back(block.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{2, 2, 3});
}

TEST_CASE("t=1 returns the clique itself") {
    Graph g = complete(5);
    PlexPartition part = equitable_clique_partition(g, {1, 2, 4}, 1);
    REQUIRE(part.blocks.size() == 1);
    CHECK(part.blocks[0] == VertexSet{1, 2, 4});
    // and rejects non-cliques
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS(equitable_clique_partition(p3, {0, 1, 2}, 1));
}

TEST_CASE("plex subset inside a larger host graph") {
    // host: cocktail party plus an isolated appendix; plex = the party
    Graph cp = gen_cocktail(5);
    std::vector<std::pair<int, int>> edges = cp.edges();
    edges.emplace_back(0, 10);
    Graph host(11, edges);
    VertexSet p = oracles::full_vertex_set(cp);
    PlexPartition part = equitable_clique_partition(host, p, 2);
    check_valid_partition(host, p, 2, part);
}

TEST_CASE("rejects non-plex input") {
    Graph g(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK_THROWS(equitable_clique_partition(g, oracles::full_vertex_set(g), 2));
}

TEST_CASE("500 random t-plex instances") {
    oracles::Rng rng(24601);
    for (int it = 0; it < 500; ++it) {
        int t = 1 + rng.below(6);
        int n = t + rng.below(60 - t + 1);
        Graph g = random_plex_graph(rng, n, t);
        VertexSet p = oracles::full_vertex_set(g);
        REQUIRE(is_t_plex(g, p, t));
        PlexPartition part = equitable_clique_partition(g, p, t);
        check_valid_partition(g, p, t, part);
    }
}

TEST_CASE("determinism: identical inputs give identical partitions") {
    oracles::Rng rng(1999);
    for (int it = 0; it < 40; ++it) {
        int t = 2 + rng.below(5);
        int n = t + rng.below(40);
        Graph g = random_plex_graph(rng, n, t);
        VertexSet p = oracles::full_vertex_set(g);
        PlexPartition a = equitable_clique_partition(g, p, t);
        PlexPartition b = equitable_clique_partition(g, p, t);
        CHECK(a.blocks == b.blocks);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "ssl/association.hpp"
#include "ssl/certify.hpp"
#include "ssl/cliques.hpp"
#include "ssl/eigen.hpp"
#include "ssl/generators.hpp"

using namespace ssl;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

}  // namespace

TEST_CASE("m_lambda") {
    // lambda=1: K~_2 = P_3 already has lambda_min = -sqrt(2) < -1
    CHECK(m_lambda(1) == 1);
    CHECK(lambda_min(gen_ktilde(1)).value < -1.0);
    // lambda=2: sweep. K~_6 stays above -2, K~_8 drops below.
    CHECK(m_lambda(2) == 4);
    CHECK(lambda_min(gen_ktilde(3)).value == doctest::Approx(-1.8951).epsilon(1e-3));
    CHECK(lambda_min(gen_ktilde(4)).value < -2.0);
    CHECK_THROWS(m_lambda(0));
}

TEST_CASE("m_lambda lower bound and monotonicity") {
    int prev = 0;
    for (int lam = 1; lam <= 6; ++lam) {
        int m = m_lambda(lam);
        CHECK(m >= (lam - 1) * (lam - 1) + 1);
        // the witness behind the bound: K~_{2(lam-1)^2} keeps lambda_min >= -lam
        if (lam >= 2)
            CHECK(certify_graph_lambda_min_at_least(gen_ktilde((lam - 1) * (lam - 1)), lam).psd);
        CHECK(m >= prev);
        prev = m;
    }
}

TEST_CASE("clique classes on K_30") {
    CliqueClassSet cs = clique_classes(complete(30), 4, 25);
    REQUIRE(cs.classes.size() == 1);
    CHECK(cs.cliques.size() == 1);
    CHECK(cs.quasi_cliques[0].size() == 30);
}

TEST_CASE("clique classes on L(K_30): thirty star classes") {
    Graph l = gen_line_graph(complete(30));
    CliqueClassSet cs = clique_classes(l, 4, 25);
    REQUIRE(cs.classes.size() == 30);
    for (const auto& members : cs.classes) CHECK(members.size() == 1);
    for (size_t c = 0; c < cs.classes.size(); ++c) {
        // quasi-clique of each class is its own star
        CHECK(cs.quasi_cliques[c] == cs.cliques[cs.classes[c].front()]);
        CHECK(cs.quasi_cliques[c].size() == 29);
    }
}

TEST_CASE("clique classes merge overlapping near-cliques") {
    // K_30 minus a perfect non-edge: two maximal 29-cliques, equivalent
    Graph g = complement(Graph(30, {{0, 1}}));
    CliqueClassSet cs = clique_classes(g, 4, 25);
    CHECK(cs.cliques.size() == 2);
    REQUIRE(cs.classes.size() == 1);
    CHECK(cs.classes[0].size() == 2);
    CHECK(cs.quasi_cliques[0].size() == 30);
}

TEST_CASE("clique classes: C(n) empty") {
    CliqueClassSet cs = clique_classes(gen_hamming(2, 2), 1, 4);
    CHECK(cs.cliques.empty());
    CHECK(cs.classes.empty());
}

TEST_CASE("small-n floor") {
    CHECK_THROWS(clique_classes(complete(10), 2, 8));          // 8 < 9
    CHECK_NOTHROW(clique_classes(complete(10), 2, 8, true));   // override verifies
    CHECK_NOTHROW(clique_classes(complete(10), 2, 9));
}

TEST_CASE("non-transitive relation below the floor is rejected") {
    // sliding 4-cliques {1,2,3,4}, {2,3,4,5}, {3,4,5,6}: adjacent pairs are
    // related under m=2 but the outer pair is not
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    auto cliques = maximal_cliques_at_least(g, 4);
    REQUIRE(cliques.size() == 3);
    CHECK_THROWS_AS(clique_classes(g, 2, 4, true), std::invalid_argument);
}

TEST_CASE("associated hoffman graph of L(K_30)") {
    Graph l = gen_line_graph(complete(30));
    AssociatedHoffman ah = associated_hoffman(l, 4, 25);
    CHECK_FALSE(ah.no_classes);
    CHECK(ah.hoffman.slim_count == 435);
    CHECK(ah.hoffman.fat_count == 30);
    CHECK(validate(ah.hoffman).empty());
    CHECK(slim_graph(ah.hoffman) == l);
    // every edge of K_30 lies in exactly the stars of its two endpoints
    for (int v = 0; v < ah.hoffman.slim_count; ++v)
        CHECK(ah.hoffman.fat_neighbors(v).size() == 2);
    CHECK(fat_degree_bound_check(ah, 2));
    CHECK_FALSE(fat_degree_bound_check(ah, 1));
}

TEST_CASE("associated hoffman graph of K_30") {
    AssociatedHoffman ah = associated_hoffman(complete(30), 4, 25);
    CHECK(ah.hoffman.fat_count == 1);
    CHECK(quasi_clique(ah.hoffman, 30).size() == 30);
    CHECK(fat_degree_bound_check(ah, 1));
}

TEST_CASE("associated hoffman graph with no classes") {
    AssociatedHoffman ah = associated_hoffman(petersen(), 2, 9);
    CHECK(ah.no_classes);
    CHECK(ah.hoffman.fat_count == 0);
    CHECK(ah.hoffman.slim_count == 10);
    CHECK(slim_graph(ah.hoffman) == petersen());
}

TEST_CASE("quasi-clique well-definedness across representatives") {
    oracles::Rng rng(6060);
    // random graphs plus a planted clique so classes are nonempty
    for (int it = 0; it < 25; ++it) {
        int n = 12 + rng.below(6);
        Graph g = oracles::random_graph(rng, n, 0.35);
        std::vector<std::pair<int, int>> edges = g.edges();
        for (int u = 0; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v)
                if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        Graph host(n, edges);
        // m=2, n=9 = (m+1)^2; construction asserts equal quasi-cliques
        // across representatives internally
        CHECK_NOTHROW(clique_classes(host, 2, 9));
    }
}

TEST_CASE("check_ktilde_free") {
    // C_5 contains an induced P_3 = K~_2
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    KtildeSearch r = check_ktilde_free(c5, 1);
    CHECK_FALSE(r.free);
    REQUIRE(r.witness.size() == 3);
    // witness induces P_3: two edges among three vertices
    CHECK(induced(c5, r.witness).edge_count() == 2);

    // complete graphs have no outside vertex
    CHECK(check_ktilde_free(complete(9), 4).free);
    CHECK(check_ktilde_free(complete(3), 1).free);

    // K~_8 contains itself
    KtildeSearch self = check_ktilde_free(gen_ktilde(4), 4);
    CHECK_FALSE(self.free);
    CHECK(self.witness.size() == 9);

    // L(K_30) is K~_8-free (m(2) = 4)
    CHECK(check_ktilde_free(gen_line_graph(complete(30)), 4).free);
}

TEST_CASE("check_ktilde_free matches definition on random graphs") {
    oracles::Rng rng(4477);
    for (int it = 0; it < 60; ++it) {
        int n = 4 + rng.below(6);
        Graph g = oracles::random_graph(rng, n, 0.5);
        for (int m = 1; 2 * m + 1 <= n; ++m) {
            // brute force: any 2m-clique with an apex seeing exactly m of it
            bool found = false;
            auto cliques = oracles::brute_maximal_cliques(g, 2 * m);
            // enumerate subsets of maximal cliques of size exactly 2m
            for (uint32_t mask = 1; mask < (1u << n) && !found; ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) s.push_back(v);
                if (static_cast<int>(s.size()) != 2 * m) continue;
                if (!is_clique(g, s)) continue;
                for (int x = 0; x < n && !found; ++x) {
                    if (std::binary_search(s.begin(), s.end(), x)) continue;
                    if (neighbors_in(g, x, s) == m) found = true;
                }
            }
            CHECK(check_ktilde_free(g, m).free == !found);
        }
    }
}

TEST_CASE("fat degree bound on a hand-built violation") {
    // one slim on three fats: violates the bound for lam=2
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}};
    AssociatedHoffman ah;
    ah.hoffman.underlying = Graph(4, edges);
    ah.hoffman.slim_count = 1;
    ah.hoffman.fat_count = 3;
    CHECK_FALSE(fat_degree_bound_check(ah, 2));
    CHECK(fat_degree_bound_check(ah, 3));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "ssl/eigen.hpp"
#include "ssl/formats.hpp"
#include "ssl/generators.hpp"
#include "ssl/hoffman.hpp"

using namespace ssl;

namespace {

// h^(k): one slim vertex adjacent to k fat vertices
HoffmanGraph slim_with_fats(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int f = 0; f < k; ++f) edges.emplace_back(0, 1 + f);
    HoffmanGraph h;
    h.underlying = Graph(1 + k, edges);
    h.slim_count = 1;
    h.fat_count = k;
    return h;
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("validation") {
    CHECK(validate(slim_with_fats(2)).empty());
    // two adjacent fats
    HoffmanGraph bad1;
    bad1.underlying = Graph(3, {{0, 1}, {0, 2}, {1, 2}});
    bad1.slim_count = 1;
    bad1.fat_count = 2;
    auto v1 = validate(bad1);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].find("fat-fat edge") != std::string::npos);
    // isolated fat
    HoffmanGraph bad2;
    bad2.underlying = Graph(2, {});
    bad2.slim_count = 1;
    bad2.fat_count = 1;
    auto v2 = validate(bad2);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].find("fat without slim neighbor") != std::string::npos);
}

TEST_CASE("special matrix of the steiner block") {
    HoffmanGraph b = steiner_block_hoffman();
    REQUIRE(validate(b).empty());
    CHECK(is_t_fat(b, 2));
    IntMatrix sp = special_matrix(b);
    REQUIRE(sp.n == 4);
    const long long expect[4][4] = {
        {-2, -1, -1, 1},
        {-1, -2, 1, -1},
        {-1, 1, -2, -1},
        {1, -1, -1, -2},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(sp.at(i, j) == expect[i][j]);
    // spectrum {-3,-3,-3,1}: char poly (t+3)^3 (t-1) = t^4 + 8t^3 + 18t^2 - 27
    auto cp = oracles::char_poly(sp);
    CHECK(cp == std::vector<long long>{-27, 0, 18, 8, 1});
    CHECK(lambda_min_h(b).value == doctest::Approx(-3.0).epsilon(1e-9));
}

TEST_CASE("special matrix basics") {
    // h^(k) has the 1x1 special matrix [-k]
    for (int k : {1, 2, 3}) {
        IntMatrix sp = special_matrix(slim_with_fats(k));
        REQUIRE(sp.n == 1);
        CHECK(sp.at(0, 0) == -k);
        CHECK(lambda_min_h(slim_with_fats(k)).value == doctest::Approx(-k));
    }
    // no fats: special matrix is the adjacency matrix
    HoffmanGraph k3 = hoffman_from_graph(complete(3));
    CHECK(special_matrix(k3).a == adjacency_matrix(complete(3)).a);
    CHECK(lambda_min_h(k3).value == doctest::Approx(-1.0));
}

TEST_CASE("special matrix equals A_s - C C^T on random hoffman graphs") {
    oracles::Rng rng(909);
    for (int it = 0; it < 60; ++it) {
        int slims = 1 + rng.below(40);
        int fats = rng.below(std::max(1, 50 - slims));
        HoffmanGraph h = oracles::random_hoffman(rng, slims, fats, 0.4);
        CHECK(special_matrix(h).a == oracles::brute_special_matrix(h).a);
    }
}

TEST_CASE("hoffman interlacing on random slim subsets") {
    oracles::Rng rng(911);
    for (int it = 0; it < 100; ++it) {
        HoffmanGraph h = oracles::random_hoffman(rng, 2 + rng.below(10), rng.below(5), 0.4);
        VertexSet w;
        for (int v = 0; v < h.slim_count; ++v)
            if (rng.chance(0.6)) w.push_back(v);
        if (w.empty()) w.push_back(rng.below(h.slim_count));
        HoffmanGraph sub = induced_sub(h, w);
        CHECK(lambda_min_h(sub).value >= lambda_min_h(h).value - 1e-7);
    }
}

TEST_CASE("slim graph") {
    CHECK(slim_graph(slim_with_fats(3)) == Graph(1));
    CHECK(slim_graph(steiner_block_hoffman()) == Graph(4, {{0, 3}, {1, 2}}));
    Graph g = gen_hamming(2, 2);
    CHECK(slim_graph(hoffman_from_graph(g)) == g);
}

TEST_CASE("induced hoffman subgraph") {
    HoffmanGraph b = steiner_block_hoffman();
    // whole slim set reproduces the graph
    HoffmanGraph whole = induced_sub(b, {0, 1, 2, 3});
    CHECK(whole.underlying == b.underlying);
    CHECK(whole.slim_count == 4);
    // {s1} carries its two fats: h^(2)
    HoffmanGraph one = induced_sub(b, {0});
    CHECK(one.slim_count == 1);
    CHECK(one.fat_count == 2);
    CHECK(special_matrix(one).at(0, 0) == -2);
    // empty slim set
    HoffmanGraph empty = induced_sub(b, {});
    CHECK(empty.slim_count == 0);
    CHECK(empty.fat_count == 0);
}

TEST_CASE("quasi-cliques and t-fatness") {
    HoffmanGraph h2 = slim_with_fats(2);
    CHECK(quasi_clique(h2, 1) == VertexSet{0});
    CHECK(quasi_clique(h2, 2) == VertexSet{0});
    CHECK_THROWS(quasi_clique(h2, 0));  // slim vertex

    HoffmanGraph b = steiner_block_hoffman();
    CHECK(quasi_clique(b, 4) == VertexSet{0, 2});  // f1: {s1, s3}
    CHECK(is_t_fat(b, 2));
    CHECK_FALSE(is_t_fat(b, 3));
    CHECK_FALSE(is_t_fat(hoffman_from_graph(complete(3)), 1));
    CHECK(is_t_fat(slim_with_fats(3), 3));

    // steiner sums: every quasi-clique induces the cocktail party graph on
    // r antipodal pairs
    for (int v : {13, 16}) {
        HoffmanGraph s = steiner_hoffman(gen_steiner(v));
        Graph sg = slim_graph(s);
        int r = (v - 1) / 3;
        for (int f = s.slim_count; f < s.total(); ++f) {
            VertexSet q = quasi_clique(s, f);
            REQUIRE(static_cast<int>(q.size()) == 2 * r);
            Graph iq = induced(sg, q);
            CHECK(iq.regular_degree() == 2 * r - 2);
            Graph comp = complement(iq);
            CHECK(comp.edge_count() == r);
            CHECK(comp.regular_degree() == 1);
        }
    }
}

TEST_CASE("check_sum") {
    // disjoint union of two fat-free graphs, natural split
    HoffmanGraph disjoint;
    disjoint.underlying = Graph(4, {{0, 1}, {2, 3}});
    disjoint.slim_count = 4;
    disjoint.fat_count = 0;
    auto ok = check_sum(disjoint, {0, 1}, {2, 3});
    CHECK(ok.ok);

    // steiner block split {s1,s2} | {s3,s4}: s1 and s3 share f1 but are
    // not adjacent
    auto bad = check_sum(steiner_block_hoffman(), {0, 1}, {2, 3});
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("condition 4") != std::string::npos);

    // steiner sum v=13: each block against the rest is a genuine sum
    HoffmanGraph s = steiner_hoffman(gen_steiner(13));
    VertexSet first_block = {0, 1, 2, 3};
    VertexSet rest;
    for (int v = 4; v < s.slim_count; ++v) rest.push_back(v);
    CHECK(check_sum(s, first_block, rest).ok);

    CHECK_THROWS(check_sum(disjoint, {0, 1}, {1, 2, 3}));  // overlap
    CHECK_THROWS(check_sum(disjoint, {0, 1}, {2}));        // not covering
}

TEST_CASE("decompose") {
    // fat-free connected graph: one block
    auto blocks = decompose(hoffman_from_graph(complete(4)));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == VertexSet{0, 1, 2, 3});

    // steiner block is indecomposable
    CHECK(decompose(steiner_block_hoffman()).size() == 1);

    // steiner sum v=13: 13 blocks of 4 slims
    HoffmanGraph s = steiner_hoffman(gen_steiner(13));
    auto parts = decompose(s);
    REQUIRE(parts.size() == 13);
    for (size_t b = 0; b < parts.size(); ++b) {
        REQUIRE(parts[b].size() == 4);
        for (int i = 0; i < 4; ++i)
            CHECK(parts[b][i] == static_cast<int>(4 * b) + i);
    }
}

TEST_CASE("compose") {
    // single part: underlying graph unchanged
    HoffmanGraph b = steiner_block_hoffman();
    HoffmanGraph same = compose({b}, {{10, 20, 30, 40}});
    CHECK(same.underlying == b.underlying);

    // two copies of h^(1) sharing one fat: slim graph K_2
    HoffmanGraph h1 = slim_with_fats(1);
    HoffmanGraph two = compose({h1, h1}, {{5}, {5}});
    CHECK(two.slim_count == 2);
    CHECK(two.fat_count == 1);
    CHECK(slim_graph(two) == complete(2));

    // empty input: identity
    HoffmanGraph none = compose({}, {});
    CHECK(none.slim_count == 0);
    CHECK(none.fat_count == 0);

    // two slims sharing two fats violate sum condition (4)
    HoffmanGraph h2 = slim_with_fats(2);
    CHECK_THROWS_WITH(compose({h2, h2}, {{7, 8}, {7, 8}}),
                      doctest::Contains("sum condition (4)"));

    // 13 blocks over S(2,4,13): 52 slims, 13 fats, 13-regular slim graph
    HoffmanGraph s = steiner_hoffman(gen_steiner(13));
    CHECK(s.slim_count == 52);
    CHECK(s.fat_count == 13);
    Graph sg = slim_graph(s);
    CHECK(sg.regular_degree() == 13);
    CHECK(sg.connected());
    CHECK(is_t_fat(s, 2));
}

TEST_CASE("compose and check_sum round trip on random sums") {
    oracles::Rng rng(1453);
    for (int it = 0; it < 100; ++it) {
        // parts with disjoint-by-construction fat names, some shared
        int nparts = 2 + rng.below(3);
        std::vector<HoffmanGraph> parts;
        std::vector<std::vector<int>> names;
        int next_name = 0;
        for (int p = 0; p < nparts; ++p) {
            int slims = 1 + rng.below(4);
            int fats = 1 + rng.below(3);
            parts.push_back(oracles::random_hoffman(rng, slims, fats, 0.5));
            std::vector<int> nm;
            for (int f = 0; f < fats; ++f) {
                // reuse an existing name sometimes to create shared fats
                if (next_name > 0 && rng.chance(0.3)) {
                    int cand = rng.below(next_name);
                    if (std::find(nm.begin(), nm.end(), cand) == nm.end()) {
                        nm.push_back(cand);
                        continue;
                    }
                }
                nm.push_back(next_name++);
            }
            names.push_back(nm);
        }
        HoffmanGraph sum;
        try {
            sum = compose(parts, names);
        } catch (const std::invalid_argument&) {
            continue;  // a cross pair shared two fats: legitimately not a sum
        }
        REQUIRE(validate(sum).empty());

        // each part versus the rest satisfies the sum conditions
        int offset = 0;
        for (int p = 0; p < nparts; ++p) {
            VertexSet block, rest;
            for (int v = 0; v < parts[p].slim_count; ++v) block.push_back(offset + v);
            for (int v = 0; v < sum.slim_count; ++v)
                if (v < offset || v >= offset + parts[p].slim_count) rest.push_back(v);
            if (!rest.empty()) CHECK(check_sum(sum, block, rest).ok);
            offset += parts[p].slim_count;
        }

        // Sp of the sum restricted to a part equals the part's Sp
        IntMatrix sp = special_matrix(sum);
        offset = 0;
        for (int p = 0; p < nparts; ++p) {
            IntMatrix psp = special_matrix(parts[p]);
            for (int i = 0; i < psp.n; ++i)
                for (int j = 0; j < psp.n; ++j)
                    CHECK(sp.at(offset + i, offset + j) == psp.at(i, j));
            offset += psp.n;
        }
        // and cross blocks vanish
        offset = 0;
        for (int p = 0; p < nparts; ++p) {
            for (int i = 0; i < parts[p].slim_count; ++i)
                for (int j = 0; j < sp.n; ++j)
                    if (j < offset || j >= offset + parts[p].slim_count)
                        CHECK(sp.at(offset + i, j) == 0);
            offset += parts[p].slim_count;
        }

        // decompose refines to exactly the part blocks when each part is
        // indecomposable
        bool all_indecomposable = true;
        for (const auto& part : parts)
            if (decompose(part).size() != 1) all_indecomposable = false;
        if (all_indecomposable) {
            auto blocks = decompose(sum);
            REQUIRE(blocks.size() == static_cast<size_t>(nparts));
            offset = 0;
            for (int p = 0; p < nparts; ++p) {
                VertexSet want;
                for (int v = 0; v < parts[p].slim_count; ++v) want.push_back(offset + v);
                CHECK(blocks[p] == want);
                offset += parts[p].slim_count;
            }
        }
    }
}

TEST_CASE("steiner degree bookkeeping") {
    for (int v : {13, 16}) {
        BlockDesign d = gen_steiner(v);
        HoffmanGraph s = steiner_hoffman(d);
        Graph sg = slim_graph(s);
        int r = d.replication();
        CHECK(sg.regular_degree() == 4 * r - 3);
    }
}

TEST_CASE("hoffman file format") {
    HoffmanGraph s = steiner_hoffman(gen_steiner(13));
    std::stringstream ss;
    write_hoffman(ss, s);
    HoffmanGraph back = read_hoffman(ss);
    CHECK(back.underlying == s.underlying);
    CHECK(back.slim_count == s.slim_count);
    CHECK(back.fat_count == s.fat_count);

    auto parse = [](const std::string& text) {
        std::stringstream in(text);
        return read_hoffman(in);
    };
    CHECK(parse("h 2 1\ne 0 1\ne 0 2\n").fat_count == 1);
    CHECK_THROWS_WITH(parse("h 1 2\ne 0 1\ne 1 2\n"), doctest::Contains("fat-fat"));
    CHECK_THROWS(parse("p 2 1\ne 0 1\n"));  // wrong header
    CHECK_THROWS(parse("h 2 1\ne 0 3\n"));  // out of range
}

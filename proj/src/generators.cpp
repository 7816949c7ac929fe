#include "ssl/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ssl {

Graph gen_hat(int a, int m) {
    if (a < 1) throw std::invalid_argument("gen_hat: a must be >= 1");
    if (m < 0) throw std::invalid_argument("gen_hat: m must be >= 0");
    const int clique = a + m;
    const int apex = clique;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
    for (int u = 0; u < a; ++u) edges.emplace_back(u, apex);
    return Graph(clique + 1, edges);
}

Graph gen_ktilde(int m) {
    if (m < 1) throw std::invalid_argument("gen_ktilde: m must be >= 1");
    return gen_hat(m, m);
}

Graph gen_hamming(int d, int q) {
    if (d < 1) throw std::invalid_argument("gen_hamming: d must be >= 1");
    if (q < 2) throw std::invalid_argument("gen_hamming: q must be >= 2");
    long long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= q;
        if (size > 1000000) throw std::invalid_argument("gen_hamming: q^d exceeds 10^6");
    }
    const int n = static_cast<int>(size);
    std::vector<std::pair<int, int>> edges;
    // neighbors differ in one coordinate; enumerate larger-symbol changes only
    for (int u = 0; u < n; ++u) {
        long long place = 1;
        int rest = u;
        for (int i = 0; i < d; ++i) {
            int digit = rest % q;
            for (int other = digit + 1; other < q; ++other) {
                int v = u + static_cast<int>(place) * (other - digit);
                edges.emplace_back(u, v);
            }
            rest /= q;
            place *= q;
        }
    }
    return Graph(n, edges);
}

Graph gen_cocktail(int r) {
    if (r < 1) throw std::invalid_argument("gen_cocktail: r must be >= 1");
    const int n = 2 * r;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_line_graph(const Graph& g) {
    auto ge = g.edges();
    if (ge.empty()) throw std::invalid_argument("gen_line_graph: graph has no edges");
    const int n = static_cast<int>(ge.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto [a, b] = ge[i];
            auto [c, d] = ge[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

namespace {

void validate_design(const BlockDesign& d) {
    std::vector<std::vector<int>> pair_count(d.v, std::vector<int>(d.v, 0));
    for (const auto& block : d.blocks) {
        for (int i = 0; i < 4; ++i) {
            if (block[i] < 0 || block[i] >= d.v)
                throw std::logic_error("design: point out of range");
            for (int j = i + 1; j < 4; ++j) {
                if (block[i] == block[j]) throw std::logic_error("design: repeated point");
                ++pair_count[block[i]][block[j]];
                ++pair_count[block[j]][block[i]];
            }
        }
    }
    for (int i = 0; i < d.v; ++i)
        for (int j = i + 1; j < d.v; ++j)
            if (pair_count[i][j] != 1)
                throw std::logic_error("design: pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") covered " +
                                       std::to_string(pair_count[i][j]) + " times");
}

// Projective plane of order 3. Points and lines are the F_3^3 vectors with
// first nonzero coordinate 1, in lexicographic order; incidence is a zero
// dot product mod 3.
BlockDesign steiner_13() {
    std::vector<std::array<int, 3>> reps;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                std::array<int, 3> v{x, y, z};
                int first = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
                if (first == 1) reps.push_back(v);
            }
    BlockDesign d;
    d.v = static_cast<int>(reps.size());
    for (const auto& line : reps) {
        std::array<int, 4> block{};
        int k = 0;
        for (int p = 0; p < d.v; ++p) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot += line[i] * reps[p][i];
            if (dot % 3 == 0) block[k++] = p;
        }
        if (k != 4) throw std::logic_error("steiner_13: line with wrong point count");
        d.blocks.push_back(block);
    }
    return d;
}

// Affine plane of order 4 over GF(4) = {0,1,w,w+1}, w^2 = w+1.
BlockDesign steiner_16() {
    static constexpr int mul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    auto add = [](int a, int b) { return a ^ b; };
    auto point = [](int x, int y) { return 4 * x + y; };
    BlockDesign d;
    d.v = 16;
    for (int c = 0; c < 4; ++c) {  // vertical lines x = c
        std::array<int, 4> block{};
        for (int y = 0; y < 4; ++y) block[y] = point(c, y);
        std::sort(block.begin(), block.end());
        d.blocks.push_back(block);
    }
    for (int m = 0; m < 4; ++m) {  // lines y = m*x + c
        for (int c = 0; c < 4; ++c) {
            std::array<int, 4> block{};
            for (int x = 0; x < 4; ++x) block[x] = point(x, add(mul[m][x], c));
            std::sort(block.begin(), block.end());
            d.blocks.push_back(block);
        }
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

}  // namespace

BlockDesign gen_steiner(int v) {
    if (v % 12 != 1 && v % 12 != 4)
        throw std::invalid_argument("gen_steiner: no S(2,4," + std::to_string(v) +
                                    ") exists (v must be 1 or 4 mod 12)");
    BlockDesign d;
    if (v == 13) {
        d = steiner_13();
    } else if (v == 16) {
        d = steiner_16();
    } else {
        throw std::invalid_argument("gen_steiner: only v = 13 and v = 16 are built in");
    }
    validate_design(d);
    if (d.block_count() != d.v * (d.v - 1) / 12)
        throw std::logic_error("gen_steiner: block count mismatch");
    return d;
}

HoffmanGraph steiner_block_hoffman() {
    // slims 0..3, fats 4..7
    std::vector<std::pair<int, int>> edges = {
        {0, 3}, {1, 2},          // slim edges s1-s4, s2-s3
        {0, 4}, {2, 4},          // f1: {s1, s3}
        {0, 5}, {1, 5},          // f2: {s1, s2}
        {2, 6}, {3, 6},          // f3: {s3, s4}
        {1, 7}, {3, 7},          // f4: {s2, s4}
    };
    HoffmanGraph h;
    h.underlying = Graph(8, edges);
    h.slim_count = 4;
    h.fat_count = 4;
    return h;
}

HoffmanGraph steiner_hoffman(const BlockDesign& d) {
    validate_design(d);
    std::vector<HoffmanGraph> parts(d.blocks.size(), steiner_block_hoffman());
    std::vector<std::vector<int>> fat_names;
    fat_names.reserve(d.blocks.size());
    for (const auto& block : d.blocks) {
        std::array<int, 4> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        fat_names.push_back({sorted[0], sorted[1], sorted[2], sorted[3]});
    }
    return compose(parts, fat_names);
}

IntMatrix ktilde_quotient_matrix(int m) {
    if (m < 1) throw std::invalid_argument("ktilde_quotient_matrix: m must be >= 1");
    IntMatrix q(3);
    q.at(0, 0) = 0; q.at(0, 1) = m;     q.at(0, 2) = 0;
    q.at(1, 0) = 1; q.at(1, 1) = m - 1; q.at(1, 2) = m;
    q.at(2, 0) = 0; q.at(2, 1) = m;     q.at(2, 2) = m - 1;
    return q;
}

}  // namespace ssl

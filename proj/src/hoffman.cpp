#include "ssl/hoffman.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ssl {

std::vector<int> HoffmanGraph::fat_neighbors(int v) const {
    std::vector<int> out;
    for (int w : underlying.neighbors(v))
        if (is_fat(w)) out.push_back(w);
    return out;
}

std::vector<int> HoffmanGraph::slim_neighbors(int v) const {
    std::vector<int> out;
    for (int w : underlying.neighbors(v))
        if (!is_fat(w)) out.push_back(w);
    return out;
}

int HoffmanGraph::common_fat_count(int slim_a, int slim_b) const {
    int count = 0;
    for (int f : underlying.neighbors(slim_a))
        if (is_fat(f) && underlying.adjacent(slim_b, f)) ++count;
    return count;
}

HoffmanGraph hoffman_from_graph(const Graph& g) {
    return HoffmanGraph{g, g.vertex_count(), 0};
}

std::vector<std::string> validate(const HoffmanGraph& h) {
    std::vector<std::string> violations;
    if (h.slim_count < 0 || h.fat_count < 0 ||
        h.underlying.vertex_count() != h.total()) {
        violations.push_back("vertex counts inconsistent with underlying graph");
        return violations;
    }
    for (int f = h.slim_count; f < h.total(); ++f) {
        bool has_slim = false;
        for (int w : h.underlying.neighbors(f)) {
            if (h.is_fat(w)) {
                if (f < w)
                    violations.push_back("fat-fat edge " + std::to_string(f) + "-" +
                                         std::to_string(w));
            } else {
                has_slim = true;
            }
        }
        if (!has_slim)
            violations.push_back("fat without slim neighbor: " + std::to_string(f));
    }
    return violations;
}

void require_valid(const HoffmanGraph& h) {
    auto v = validate(h);
    if (!v.empty()) throw std::invalid_argument("invalid Hoffman graph: " + v.front());
}

IntMatrix special_matrix(const HoffmanGraph& h) {
    require_valid(h);
    const int s = h.slim_count;
    IntMatrix sp(s);
    for (int i = 0; i < s; ++i) {
        sp.at(i, i) = -static_cast<long long>(h.fat_neighbors(i).size());
        for (int j = i + 1; j < s; ++j) {
            long long common = h.common_fat_count(i, j);
            long long v = (h.underlying.adjacent(i, j) ? 1 : 0) - common;
            sp.at(i, j) = v;
            sp.at(j, i) = v;
        }
    }
    return sp;
}

EigenResult lambda_min_h(const HoffmanGraph& h, double tolerance) {
    IntMatrix sp = special_matrix(h);
    if (sp.n == 0) throw std::invalid_argument("empty Hoffman graph");
    EigenResult r;
    r.value = lambda_min_value(sp);
    r.tolerance = tolerance;
    return r;
}

Graph slim_graph(const HoffmanGraph& h) {
    VertexSet slims;
    for (int v = 0; v < h.slim_count; ++v) slims.push_back(v);
    return induced(h.underlying, slims);
}

HoffmanGraph induced_sub(const HoffmanGraph& h, const VertexSet& slims) {
    check_vertex_set(h.underlying, slims);
    for (int v : slims)
        if (h.is_fat(v)) throw std::invalid_argument("induced_sub: set contains a fat vertex");
    VertexSet keep = slims;
    for (int f = h.slim_count; f < h.total(); ++f) {
        for (int v : slims) {
            if (h.underlying.adjacent(f, v)) {
                keep.push_back(f);
                break;
            }
        }
    }
    std::sort(keep.begin(), keep.end());
    HoffmanGraph out;
    out.underlying = induced(h.underlying, keep);
    out.slim_count = static_cast<int>(slims.size());
    out.fat_count = static_cast<int>(keep.size() - slims.size());
    return out;
}

VertexSet quasi_clique(const HoffmanGraph& h, int fat) {
    if (fat < h.slim_count || fat >= h.total())
        throw std::invalid_argument("quasi_clique: vertex is not fat");
    VertexSet q;
    for (int w : h.underlying.neighbors(fat))
        if (!h.is_fat(w)) q.push_back(w);
    return q;
}

bool is_t_fat(const HoffmanGraph& h, int t) {
    if (t < 1) throw std::invalid_argument("is_t_fat: t must be positive");
    for (int v = 0; v < h.slim_count; ++v)
        if (static_cast<int>(h.fat_neighbors(v).size()) < t) return false;
    return true;
}

SumCheck check_sum(const HoffmanGraph& h, const VertexSet& block1, const VertexSet& block2) {
    check_vertex_set(h.underlying, block1);
    check_vertex_set(h.underlying, block2);
    std::vector<int> owner(h.slim_count, -1);
    auto claim = [&](const VertexSet& block, int id) {
        for (int v : block) {
            if (v >= h.slim_count)
                throw std::invalid_argument("check_sum: block contains a fat vertex");
            if (owner[v] != -1)
                throw std::invalid_argument("check_sum: blocks overlap at " + std::to_string(v));
            owner[v] = id;
        }
    };
    claim(block1, 0);
    claim(block2, 1);
    for (int v = 0; v < h.slim_count; ++v)
        if (owner[v] == -1)
            throw std::invalid_argument("check_sum: slim vertex " + std::to_string(v) +
                                        " not covered");

    // fats of the generated subgraphs
    std::vector<std::vector<char>> has_fat(2, std::vector<char>(h.total(), 0));
    for (int f = h.slim_count; f < h.total(); ++f)
        for (int w : h.underlying.neighbors(f))
            if (!h.is_fat(w)) has_fat[owner[w]][f] = 1;

    // (1) every vertex of h lies in one of the generated subgraphs
    for (int f = h.slim_count; f < h.total(); ++f)
        if (!has_fat[0][f] && !has_fat[1][f])
            return {false, "condition 1: fat vertex " + std::to_string(f) +
                               " in neither part"};
    // (2) slim partition: established above.
    // (3) slim-fat edges stay within the part's fat set: automatic for
    // generated subgraphs, verified literally.
    for (int v = 0; v < h.slim_count; ++v)
        for (int f : h.fat_neighbors(v))
            if (!has_fat[owner[v]][f])
                return {false, "condition 3: slim " + std::to_string(v) + " adjacent to fat " +
                                   std::to_string(f) + " outside its part"};
    // (4) cross pairs: at most one common fat, exactly one iff adjacent
    for (int a : block1) {
        for (int b : block2) {
            int common = h.common_fat_count(a, b);
            if (common > 1)
                return {false, "condition 4: slims " + std::to_string(a) + "," +
                                   std::to_string(b) + " share " + std::to_string(common) +
                                   " fats"};
            bool adjacent = h.underlying.adjacent(a, b);
            if (adjacent != (common == 1))
                return {false, "condition 4: slims " + std::to_string(a) + "," +
                                   std::to_string(b) +
                                   (adjacent ? " adjacent without a common fat"
                                             : " non-adjacent but share a fat")};
        }
    }
    return {true, ""};
}

std::vector<VertexSet> decompose(const HoffmanGraph& h) {
    require_valid(h);
    IntMatrix sp = special_matrix(h);
    const int s = h.slim_count;
    std::vector<int> comp(s, -1);
    std::vector<VertexSet> blocks;
    for (int v = 0; v < s; ++v) {
        if (comp[v] != -1) continue;
        int id = static_cast<int>(blocks.size());
        VertexSet block;
        std::vector<int> stack = {v};
        comp[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            block.push_back(u);
            for (int w = 0; w < s; ++w) {
                if (comp[w] == -1 && sp.at(u, w) != 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;  // ordered by smallest member: discovery order is 0..s-1
}

HoffmanGraph compose(const std::vector<HoffmanGraph>& parts,
                     const std::vector<std::vector<int>>& fat_names) {
    if (parts.size() != fat_names.size())
        throw std::invalid_argument("compose: one fat-name map required per part");
    std::vector<int> names;
    for (size_t p = 0; p < parts.size(); ++p) {
        require_valid(parts[p]);
        if (static_cast<int>(fat_names[p].size()) != parts[p].fat_count)
            throw std::invalid_argument("compose: fat-name map size mismatch in part " +
                                        std::to_string(p));
        std::vector<int> local = fat_names[p];
        std::sort(local.begin(), local.end());
        if (std::adjacent_find(local.begin(), local.end()) != local.end())
            throw std::invalid_argument("compose: fat names not injective within part " +
                                        std::to_string(p));
        names.insert(names.end(), local.begin(), local.end());
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::map<int, int> fat_index;
    for (size_t i = 0; i < names.size(); ++i)
        fat_index[names[i]] = static_cast<int>(i);

    int total_slims = 0;
    for (const auto& part : parts) total_slims += part.slim_count;
    const int total_fats = static_cast<int>(names.size());

    std::vector<int> slim_offset(parts.size(), 0);
    for (size_t p = 1; p < parts.size(); ++p)
        slim_offset[p] = slim_offset[p - 1] + parts[p - 1].slim_count;

    // global fat sets per slim, for the cross-part adjacency rule
    std::vector<std::vector<int>> slim_fats(total_slims);
    std::vector<std::pair<int, int>> edges;
    for (size_t p = 0; p < parts.size(); ++p) {
        const auto& part = parts[p];
        for (int v = 0; v < part.slim_count; ++v) {
            int gv = slim_offset[p] + v;
            for (int w : part.underlying.neighbors(v)) {
                if (part.is_fat(w)) {
                    int name = fat_names[p][w - part.slim_count];
                    slim_fats[gv].push_back(fat_index.at(name));
                } else if (v < w) {
                    edges.emplace_back(gv, slim_offset[p] + w);
                }
            }
        }
    }
    for (auto& fats : slim_fats) std::sort(fats.begin(), fats.end());

    for (size_t p = 0; p < parts.size(); ++p) {
        for (size_t q = p + 1; q < parts.size(); ++q) {
            for (int a = slim_offset[p]; a < slim_offset[p] + parts[p].slim_count; ++a) {
                for (int b = slim_offset[q]; b < slim_offset[q] + parts[q].slim_count; ++b) {
                    std::vector<int> common;
                    std::set_intersection(slim_fats[a].begin(), slim_fats[a].end(),
                                          slim_fats[b].begin(), slim_fats[b].end(),
                                          std::back_inserter(common));
                    if (common.size() >= 2)
                        throw std::invalid_argument("compose: sum condition (4) violated: slims " +
                                                    std::to_string(a) + "," + std::to_string(b) +
                                                    " share " + std::to_string(common.size()) +
                                                    " fats");
                    if (common.size() == 1) edges.emplace_back(a, b);
                }
            }
        }
    }
    for (int v = 0; v < total_slims; ++v)
        for (int f : slim_fats[v]) edges.emplace_back(v, total_slims + f);

    HoffmanGraph out;
    out.underlying = Graph(total_slims + total_fats, edges);
    out.slim_count = total_slims;
    out.fat_count = total_fats;
    return out;
}

}  // namespace ssl

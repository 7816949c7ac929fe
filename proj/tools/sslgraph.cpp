// sslgraph: structural analysis of graphs with bounded smallest eigenvalue.
//
// Subcommands:
//   analyze        full pipeline, JSON report on stdout (or --out)
//   generate       write a named graph family to edge-list / hoffman format
//   decompose      factor a hoffman file into indecomposable slim blocks
//   mlambda        print m(lambda)
//   partition-plex equitable clique partition of a t-plex
//
// Exit codes: 0 clean, 1 input/usage error, 2 when analysis finds a
// counterexample candidate to a paper-implied invariant.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ssl/association.hpp"
#include "ssl/eigen.hpp"
#include "ssl/equitable.hpp"
#include "ssl/formats.hpp"
#include "ssl/generators.hpp"
#include "ssl/json_writer.hpp"
#include "ssl/pipeline.hpp"

namespace {

double tolerance_from_env() {
    const char* raw = std::getenv("SSL_EIG_TOL");
    if (raw == nullptr) return ssl::kDefaultEigenTolerance;
    char* end = nullptr;
    double v = std::strtod(raw, &end);
    if (end == raw || v <= 0.0)
        throw std::runtime_error("SSL_EIG_TOL must be a positive number");
    return v;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
}

ssl::VertexSet parse_vertex_list(const std::string& csv) {
    ssl::VertexSet out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::runtime_error("bad vertex list entry: " + item);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"structural analysis of graphs with bounded smallest eigenvalue"};
    app.require_subcommand(1);

    // analyze
    std::string an_path, an_format = "edgelist", an_out;
    int an_lambda = 0, an_n = 0;
    std::optional<int> an_m;
    int an_m_raw = -1;
    bool an_skip_ktilde = false, an_allow_small_n = false;
    auto* analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
    analyze->add_option("path", an_path, "input graph file")->required();
    analyze->add_option("--lambda", an_lambda, "integer lambda in lambda_min >= -lambda")
        ->required()->check(CLI::PositiveNumber);
    analyze->add_option("--n", an_n, "minimum clique order n")->required()
        ->check(CLI::PositiveNumber);
    analyze->add_option("--m", an_m_raw, "override m (default: m(lambda))")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--format", an_format, "input format: edgelist or hoffman")
        ->check(CLI::IsMember({"edgelist", "hoffman"}));
    analyze->add_option("--out", an_out, "write the JSON report to a file");
    analyze->add_flag("--skip-ktilde-check", an_skip_ktilde,
                      "skip the induced-K~_{2m} search");
    analyze->add_flag("--allow-small-n", an_allow_small_n,
                      "permit n below (m+1)^2 (the relation is then verified, not assumed)");

    // generate
    std::string gen_family, gen_out;
    int gen_a = 0, gen_m = 0, gen_d = 0, gen_q = 0, gen_r = 0, gen_v = 0, gen_n = 0;
    auto* generate = app.add_subcommand("generate", "write a named graph family");
    generate->add_option("family", gen_family,
                         "hat|ktilde|hamming|cocktail|linegraph-of-complete|"
                         "steiner-slim|steiner-hoffman")
        ->required();
    generate->add_option("--a", gen_a, "hat: clique attachment count");
    generate->add_option("--m", gen_m, "hat/ktilde: m");
    generate->add_option("--d", gen_d, "hamming: word length D");
    generate->add_option("--q", gen_q, "hamming: alphabet size q");
    generate->add_option("--r", gen_r, "cocktail: number of antipodal pairs");
    generate->add_option("--v", gen_v, "steiner: point count (13 or 16)");
    generate->add_option("--n", gen_n, "linegraph-of-complete: n of K_n");
    generate->add_option("--out", gen_out, "output file (default: stdout)");

    // decompose
    std::string dec_path, dec_out;
    auto* decompose_cmd = app.add_subcommand("decompose", "factor a hoffman file");
    decompose_cmd->add_option("path", dec_path, "hoffman-format input file")->required();
    decompose_cmd->add_option("--out", dec_out, "write the JSON result to a file");

    // mlambda
    int ml_lambda = 0;
    auto* mlambda_cmd = app.add_subcommand("mlambda", "print m(lambda)");
    mlambda_cmd->add_option("--lambda", ml_lambda, "integer lambda")->required()
        ->check(CLI::PositiveNumber);

    // partition-plex
    std::string pp_path, pp_vertices, pp_out;
    int pp_t = 0;
    auto* partition = app.add_subcommand("partition-plex",
                                         "equitable clique partition of a t-plex");
    partition->add_option("path", pp_path, "edge-list input file")->required();
    partition->add_option("--vertices", pp_vertices,
                          "comma-separated plex vertices (default: all)");
    partition->add_option("--t", pp_t, "plex parameter t")->required()
        ->check(CLI::PositiveNumber);
    partition->add_option("--out", pp_out, "write the JSON result to a file");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        ssl::AnalyzeOptions opts;
        opts.lambda = an_lambda;
        opts.n = an_n;
        if (analyze->count("--m") > 0) opts.m = an_m_raw;
        opts.skip_ktilde = an_skip_ktilde;
        opts.allow_small_n = an_allow_small_n;
        opts.tolerance = tolerance_from_env();
        ssl::AnalyzeOutcome outcome;
        if (an_format == "hoffman") {
            outcome = ssl::analyze_hoffman(ssl::read_hoffman_file(an_path), opts, an_path);
        } else {
            outcome = ssl::analyze_graph(ssl::read_edge_list_file(an_path), opts, an_path);
        }
        emit(outcome.report.dump(), an_out);
        return outcome.exit_code;
    }

    if (generate->parsed()) {
        std::ostringstream buf;
        if (gen_family == "hat") {
            ssl::write_edge_list(buf, ssl::gen_hat(gen_a, gen_m));
        } else if (gen_family == "ktilde") {
            ssl::write_edge_list(buf, ssl::gen_ktilde(gen_m));
        } else if (gen_family == "hamming") {
            ssl::write_edge_list(buf, ssl::gen_hamming(gen_d, gen_q));
        } else if (gen_family == "cocktail") {
            ssl::write_edge_list(buf, ssl::gen_cocktail(gen_r));
        } else if (gen_family == "linegraph-of-complete") {
            if (gen_n < 2) throw std::runtime_error("linegraph-of-complete: need --n >= 2");
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < gen_n; ++u)
                for (int v = u + 1; v < gen_n; ++v) edges.emplace_back(u, v);
            ssl::write_edge_list(buf, ssl::gen_line_graph(ssl::Graph(gen_n, edges)));
        } else if (gen_family == "steiner-slim") {
            ssl::write_edge_list(buf, ssl::slim_graph(ssl::steiner_hoffman(ssl::gen_steiner(gen_v))));
        } else if (gen_family == "steiner-hoffman") {
            ssl::write_hoffman(buf, ssl::steiner_hoffman(ssl::gen_steiner(gen_v)));
        } else {
            throw std::runtime_error("unknown family: " + gen_family);
        }
        emit(buf.str(), gen_out);
        return 0;
    }

    if (decompose_cmd->parsed()) {
        ssl::HoffmanGraph h = ssl::read_hoffman_file(dec_path);
        auto violations = ssl::validate(h);
        if (!violations.empty())
            throw std::runtime_error("invalid hoffman graph: " + violations.front());
        auto blocks = ssl::decompose(h);
        ssl::IntMatrix sp = ssl::special_matrix(h);
        bool block_diagonal = true;
        std::vector<int> block_of(h.slim_count, -1);
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int v : blocks[b]) block_of[v] = static_cast<int>(b);
        for (int i = 0; i < sp.n && block_diagonal; ++i)
            for (int j = 0; j < sp.n; ++j)
                if (block_of[i] != block_of[j] && sp.at(i, j) != 0) {
                    block_diagonal = false;
                    break;
                }
        ssl::Json out = ssl::Json::object();
        out.set("factor_count", static_cast<long long>(blocks.size()));
        out.set("block_diagonal_ok", block_diagonal);
        ssl::Json arr = ssl::Json::array();
        for (const auto& block : blocks) {
            ssl::Json f = ssl::Json::object();
            ssl::Json slims = ssl::Json::array();
            for (int v : block) slims.push(v);
            f.set("slims", std::move(slims));
            ssl::HoffmanGraph factor = ssl::induced_sub(h, block);
            f.set("fats", factor.fat_count);
            f.set("lambda_min", ssl::lambda_min_h(factor, tolerance_from_env()).value);
            arr.push(std::move(f));
        }
        out.set("factors", std::move(arr));
        emit(out.dump(), dec_out);
        return 0;
    }

    if (mlambda_cmd->parsed()) {
        std::cout << ssl::m_lambda(ml_lambda) << "\n";
        return 0;
    }

    if (partition->parsed()) {
        ssl::Graph g = ssl::read_edge_list_file(pp_path);
        ssl::VertexSet plex;
        if (pp_vertices.empty()) {
            for (int v = 0; v < g.vertex_count(); ++v) plex.push_back(v);
        } else {
            plex = parse_vertex_list(pp_vertices);
        }
        ssl::PlexPartition part = ssl::equitable_clique_partition(g, plex, pp_t);
        ssl::Json out = ssl::Json::object();
        out.set("t", part.t);
        ssl::Json blocks = ssl::Json::array();
        ssl::Json sizes = ssl::Json::array();
        for (const auto& block : part.blocks) {
            ssl::Json b = ssl::Json::array();
            for (int v : block) b.push(v);
            sizes.push(static_cast<long long>(block.size()));
            blocks.push(std::move(b));
        }
        out.set("sizes", std::move(sizes));
        out.set("blocks", std::move(blocks));
        emit(out.dump(), pp_out);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

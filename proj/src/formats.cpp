#include "ssl/formats.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssl {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // next non-comment, non-blank line; false at end of input
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + msg);
    }
};

void parse_edge_line(LineReader& r, const std::string& line, long long& u, long long& v) {
    std::istringstream iss(line);
    std::string tag, extra;
    if (!(iss >> tag >> u >> v) || tag != "e") r.fail("expected 'e <u> <v>'");
    if (iss >> extra) r.fail("trailing tokens after edge");
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    LineReader r{in};
    std::string line;
    if (!r.next(line)) r.fail("missing 'p <n> <m>' header");
    long long n = 0, m = 0;
    {
        std::istringstream iss(line);
        std::string tag, extra;
        if (!(iss >> tag >> n >> m) || tag != "p") r.fail("expected 'p <n> <m>' header");
        if (iss >> extra) r.fail("trailing tokens after header");
        if (n < 0 || m < 0) r.fail("negative count in header");
    }
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<long long, long long>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!r.next(line)) r.fail("expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
        long long u, v;
        parse_edge_line(r, line, u, v);
        if (!(0 <= u && u < v && v < n))
            r.fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") violates 0 <= u < v < n");
        if (!seen.insert({u, v}).second)
            r.fail("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (r.next(line)) r.fail("unexpected content after " + std::to_string(m) + " edges");
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

HoffmanGraph read_hoffman(std::istream& in) {
    LineReader r{in};
    std::string line;
    if (!r.next(line)) r.fail("missing 'h <s> <f>' header");
    long long s = 0, f = 0;
    {
        std::istringstream iss(line);
        std::string tag, extra;
        if (!(iss >> tag >> s >> f) || tag != "h") r.fail("expected 'h <s> <f>' header");
        if (iss >> extra) r.fail("trailing tokens after header");
        if (s < 0 || f < 0) r.fail("negative count in header");
    }
    const long long total = s + f;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<long long, long long>> seen;
    while (r.next(line)) {
        long long u, v;
        parse_edge_line(r, line, u, v);
        if (!(0 <= u && u < v && v < total))
            r.fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                   ") violates 0 <= u < v < s+f");
        if (u >= s && v >= s)
            r.fail("fat-fat edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (!seen.insert({u, v}).second)
            r.fail("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    HoffmanGraph h;
    h.underlying = Graph(static_cast<int>(total), edges);
    h.slim_count = static_cast<int>(s);
    h.fat_count = static_cast<int>(f);
    return h;
}

HoffmanGraph read_hoffman_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_hoffman(in);
}

void write_hoffman(std::ostream& out, const HoffmanGraph& h) {
    out << "h " << h.slim_count << " " << h.fat_count << "\n";
    for (auto [u, v] : h.underlying.edges()) out << "e " << u << " " << v << "\n";
}

void write_hoffman_file(const std::string& path, const HoffmanGraph& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_hoffman(out, h);
}

}  // namespace ssl

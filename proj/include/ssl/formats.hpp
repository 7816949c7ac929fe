#pragma once

#include <iosfwd>
#include <string>

#include "ssl/graph.hpp"
#include "ssl/hoffman.hpp"

namespace ssl {

// Edge-list text format: first non-comment line "p <n> <m>", then exactly m
// lines "e <u> <v>" with 0 <= u < v < n. '#' comment lines allowed anywhere.
// Duplicate or out-of-range edges are errors.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Hoffman-graph text format: header "h <s> <f>"; slims are 0..s-1, fats
// s..s+f-1; "e <u> <v>" lines until end of input. Fat-fat edges are
// rejected at parse.
HoffmanGraph read_hoffman(std::istream& in);
HoffmanGraph read_hoffman_file(const std::string& path);
void write_hoffman(std::ostream& out, const HoffmanGraph& h);
void write_hoffman_file(const std::string& path, const HoffmanGraph& h);

}  // namespace ssl

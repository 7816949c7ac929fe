#pragma once

#include <optional>
#include <string>

#include "ssl/graph.hpp"
#include "ssl/hoffman.hpp"
#include "ssl/json_writer.hpp"

namespace ssl {

struct AnalyzeOptions {
    int lambda = 1;
    int n = 1;
    std::optional<int> m;      // defaults to m_lambda(lambda)
    bool skip_ktilde = false;
    bool allow_small_n = false;
    double tolerance = 1e-9;
};

struct AnalyzeOutcome {
    Json report;
    int exit_code = 0;  // 0 clean, 2 when a paper-implied invariant failed
};

// Full pipeline on a plain graph: eigenvalue certification, m(lambda),
// associated Hoffman graph, quasi-clique plex family, dichotomies, theorem
// properties, clique ratios.
AnalyzeOutcome analyze_graph(const Graph& g, const AnalyzeOptions& opts,
                             const std::string& input_name);

// Same pipeline on a Hoffman graph: the slim graph is analyzed and the
// file's own fat vertices supply the quasi-clique plex family, so no clique
// classes are computed (and the (m+1)^2 floor on n does not apply).
AnalyzeOutcome analyze_hoffman(const HoffmanGraph& h, const AnalyzeOptions& opts,
                               const std::string& input_name);

}  // namespace ssl

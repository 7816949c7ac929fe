#pragma once

#include <string>
#include <vector>

#include "ssl/graph.hpp"

namespace ssl {

// Exact positive-semidefiniteness certificate: the sequence of leading
// principal minors along the accepted pivots (fraction-free elimination),
// or the reason the test failed. All values are exact integers.
struct PsdCertificate {
    bool psd = false;
    std::vector<int> pivot_rows;              // rows accepted as pivots, in order
    std::vector<std::string> leading_minors;  // strictly positive, one per pivot
    std::vector<int> skipped_rows;            // zero pivot with zero residual row
    int fail_row = -1;
    std::string fail_reason;  // "negative pivot" or "zero pivot with nonzero residual row"
    std::string fail_value;   // the offending minor / cross entry
};

// Exact test of M ⪰ 0 for a symmetric integer matrix, by fraction-free
// symmetric Gaussian elimination over arbitrary-precision integers.
// A zero pivot is accepted only when its entire residual row is zero.
PsdCertificate certify_psd(const IntMatrix& m);

// Exact test of lambda_min(M) >= -lam, i.e. M + lam*I ⪰ 0.
// Throws std::invalid_argument on non-symmetric input or lam < 0.
PsdCertificate certify_lambda_min_at_least(const IntMatrix& m, int lam);

PsdCertificate certify_graph_lambda_min_at_least(const Graph& g, int lam);

}  // namespace ssl

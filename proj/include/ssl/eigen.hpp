#pragma once

#include <optional>
#include <vector>

#include "ssl/graph.hpp"

namespace ssl {

struct EigenResult {
    double value = 0.0;
    double tolerance = 0.0;
    // filled in by callers that also run the exact certificate
    std::optional<int> certified_at_least;  // the integer lambda in "value >= -lambda"
    bool exact_certificate = false;
};

inline constexpr double kDefaultEigenTolerance = 1e-9;

// Eigenvalues of a dense symmetric matrix, ascending. Householder reduction
// to tridiagonal form followed by QL iteration with implicit shifts.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

std::vector<double> eigenvalues(const IntMatrix& m);

double lambda_min_value(const IntMatrix& m);

// Smallest adjacency eigenvalue; n = 0 is rejected, n = 1 yields 0.
EigenResult lambda_min(const Graph& g, double tolerance = kDefaultEigenTolerance);

}  // namespace ssl

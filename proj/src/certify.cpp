#include "ssl/certify.hpp"

#include <stdexcept>

#include "ssl/bigint.hpp"

namespace ssl {

// One-step fraction-free (Bareiss) elimination. After processing pivots
// p_1..p_k, entry (i,j) of the working matrix equals the minor of the
// original matrix on rows {p_1..p_k, i} and columns {p_1..p_k, j}; in
// particular the next pivot candidate is a leading principal minor, whose
// sign decides semidefiniteness. Rows whose pivot and entire residual row
// vanish are removed: for a symmetric matrix a zero diagonal with a nonzero
// off-diagonal entry already witnesses an indefinite 2x2 principal block.
PsdCertificate certify_psd(const IntMatrix& m) {
    if (!m.symmetric()) throw std::invalid_argument("certify_psd: matrix not symmetric");
    const int n = m.n;
    std::vector<BigInt> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * n + j] = BigInt(m.at(i, j));
    auto at = [&](int i, int j) -> BigInt& { return w[static_cast<size_t>(i) * n + j]; };

    PsdCertificate cert;
    std::vector<int> active;
    for (int i = 0; i < n; ++i) active.push_back(i);

    BigInt prev(1);
    while (!active.empty()) {
        int k = active.front();
        const BigInt pivot = at(k, k);
        if (pivot.signum() < 0) {
            cert.fail_row = k;
            cert.fail_reason = "negative pivot";
            cert.fail_value = pivot.to_string();
            return cert;
        }
        active.erase(active.begin());
        if (pivot.is_zero()) {
            for (int j : active) {
                if (!at(k, j).is_zero()) {
                    cert.fail_row = k;
                    cert.fail_reason = "zero pivot with nonzero residual row";
                    cert.fail_value = at(k, j).to_string();
                    return cert;
                }
            }
            cert.skipped_rows.push_back(k);
            continue;
        }
        cert.pivot_rows.push_back(k);
        cert.leading_minors.push_back(pivot.to_string());
        for (size_t ii = 0; ii < active.size(); ++ii) {
            int i = active[ii];
            const BigInt& rki = at(k, i);
            for (size_t jj = ii; jj < active.size(); ++jj) {
                int j = active[jj];
                BigInt v = BigInt::exact_div(pivot * at(i, j) - rki * at(k, j), prev);
                at(i, j) = v;
                if (i != j) at(j, i) = std::move(v);
            }
        }
        prev = pivot;
    }
    cert.psd = true;
    return cert;
}

PsdCertificate certify_lambda_min_at_least(const IntMatrix& m, int lam) {
    if (lam < 0) throw std::invalid_argument("certify_lambda_min_at_least: lambda must be >= 0");
    if (!m.symmetric())
        throw std::invalid_argument("certify_lambda_min_at_least: matrix not symmetric");
    IntMatrix shifted = m;
    for (int i = 0; i < m.n; ++i) shifted.at(i, i) += lam;
    return certify_psd(shifted);
}

PsdCertificate certify_graph_lambda_min_at_least(const Graph& g, int lam) {
    return certify_lambda_min_at_least(adjacency_matrix(g), lam);
}

}  // namespace ssl

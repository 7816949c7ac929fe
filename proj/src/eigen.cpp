#include "ssl/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssl {

namespace {

double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction of a symmetric matrix to tridiagonal form,
// eigenvalues only (no transform accumulation). d = diagonal,
// e = subdiagonal with e[0] unused.
void tridiagonalize(std::vector<std::vector<double>>& a,
                    std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(a.size());
    d.assign(n, 0.0);
    e.assign(n, 0.0);

    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(a[i][k]);
            if (scale == 0.0) {
                e[i] = a[i][l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                double f = a[i][l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
                    for (int k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
                    e[j] = g / h;
                    f += e[j] * a[i][j];
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i][j];
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a[j][k] -= f * e[k] + g * a[i][k];
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = a[i][i];
}

// QL iteration with implicit shifts on a tridiagonal matrix.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 2.3e-16 * dd || std::fabs(e[m]) < 1e-300) break;
            }
            if (m != l) {
                if (++iter == 60)
                    throw std::runtime_error("eigensolver: QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    std::vector<double> d, e;
    tridiagonalize(a, d, e);
    tridiagonal_eigenvalues(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> eigenvalues(const IntMatrix& m) {
    std::vector<std::vector<double>> a(m.n, std::vector<double>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) a[i][j] = static_cast<double>(m.at(i, j));
    return symmetric_eigenvalues(std::move(a));
}

double lambda_min_value(const IntMatrix& m) {
    if (m.n == 0) throw std::invalid_argument("lambda_min: empty matrix");
    return eigenvalues(m).front();
}

EigenResult lambda_min(const Graph& g, double tolerance) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    if (tolerance <= 0.0) throw std::invalid_argument("lambda_min: tolerance must be positive");
    EigenResult r;
    r.value = lambda_min_value(adjacency_matrix(g));
    r.tolerance = tolerance;
    return r;
}

}  // namespace ssl

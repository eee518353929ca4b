// Brute-force reference routines for the test suites. Everything here is
// deliberately independent of the library's linear-algebra path: plain
// std::vector<double> loops and a hand-rolled cyclic Jacobi eigensolver.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;  // row-major, rows of equal length

inline Vec col_mean(const Mat& x) {
    const std::size_t n = x.size(), d = x.empty() ? 0 : x[0].size();
    Vec mean(d, 0.0);
    for (const auto& row : x)
        for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
    for (std::size_t j = 0; j < d; ++j) mean[j] /= static_cast<double>(n);
    return mean;
}

inline Mat centered(const Mat& x) {
    const Vec mean = col_mean(x);
    Mat out = x;
    for (auto& row : out)
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= mean[j];
    return out;
}

// Sample covariance with the (n-1) divisor.
inline Mat covariance(const Mat& x) {
    const std::size_t n = x.size(), d = x.empty() ? 0 : x[0].size();
    const Mat xc = centered(x);
    Mat cov(d, Vec(d, 0.0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) cov[i][j] += xc[r][i] * xc[r][j];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) cov[i][j] /= static_cast<double>(n - 1);
    return cov;
}

struct EigenDecomposition {
    Vec values;   // descending
    Mat vectors;  // vectors[i] is the unit eigenvector for values[i]
};

// Cyclic Jacobi for symmetric matrices. Rotates away off-diagonal mass until
// it drops below tol * frobenius(A).
inline EigenDecomposition jacobi_eigen(Mat a, double tol = 1e-14, int max_sweeps = 100) {
    const std::size_t d = a.size();
    Mat v(d, Vec(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) v[i][i] = 1.0;

    double frob = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) frob += a[i][j] * a[i][j];
    frob = std::sqrt(frob);
    if (frob == 0.0) frob = 1.0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) off += 2.0 * a[i][j] * a[i][j];
        if (std::sqrt(off) <= tol * frob) break;

        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                if (std::abs(a[p][q]) <= 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });

    EigenDecomposition out;
    out.values.resize(d);
    out.vectors.assign(d, Vec(d, 0.0));
    for (std::size_t r = 0; r < d; ++r) {
        out.values[r] = a[order[r]][order[r]];
        for (std::size_t k = 0; k < d; ++k) out.vectors[r][k] = v[k][order[r]];
    }
    return out;
}

// Same sign convention as the library: largest-magnitude entry positive,
// ties broken by the lowest index.
inline void fix_sign(Vec& u) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < u.size(); ++k)
        if (std::abs(u[k]) > std::abs(u[best])) best = k;
    if (u[best] < 0.0)
        for (double& e : u) e = -e;
}

// Top principal directions of x, descending variance, sign-fixed.
inline Mat principal_components(const Mat& x, std::size_t k) {
    EigenDecomposition eig = jacobi_eigen(covariance(x));
    Mat components(eig.vectors.begin(), eig.vectors.begin() + static_cast<std::ptrdiff_t>(k));
    for (auto& u : components) fix_sign(u);
    return components;
}

inline Vec explained_variance_ratios(const Mat& x) {
    EigenDecomposition eig = jacobi_eigen(covariance(x));
    double total = 0.0;
    for (double ev : eig.values) total += std::max(ev, 0.0);
    Vec ratios(eig.values.size(), 0.0);
    if (total < 1e-12) return ratios;
    for (std::size_t i = 0; i < ratios.size(); ++i) ratios[i] = std::max(eig.values[i], 0.0) / total;
    return ratios;
}

// Center, eigendecompose the covariance, subtract each row's rank-D projection.
inline Mat brute_ppa(const Mat& x, std::size_t top_d) {
    Mat xc = centered(x);
    if (top_d == 0) return xc;
    const Mat u = principal_components(x, top_d);
    for (auto& row : xc) {
        Vec delta(row.size(), 0.0);
        for (std::size_t i = 0; i < top_d; ++i) {
            double proj = 0.0;
            for (std::size_t j = 0; j < row.size(); ++j) proj += u[i][j] * row[j];
            for (std::size_t j = 0; j < row.size(); ++j) delta[j] += proj * u[i][j];
        }
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= delta[j];
    }
    return xc;
}

// Project centered rows onto the top-k principal directions.
inline Mat brute_pca_transform(const Mat& x, std::size_t k) {
    const Mat xc = centered(x);
    const Mat u = principal_components(x, k);
    Mat out(x.size(), Vec(k, 0.0));
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t i = 0; i < k; ++i) {
            double proj = 0.0;
            for (std::size_t j = 0; j < xc[r].size(); ++j) proj += u[i][j] * xc[r][j];
            out[r][i] = proj;
        }
    return out;
}

// O(n^2) fractional average ranks: 1 + #smaller + (#equal-excluding-self)/2.
inline Vec average_ranks(const Vec& v) {
    Vec ranks(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t smaller = 0, equal = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] < v[i]) ++smaller;
            else if (v[j] == v[i] && j != i) ++equal;
        }
        ranks[i] = 1.0 + static_cast<double>(smaller) + static_cast<double>(equal) / 2.0;
    }
    return ranks;
}

// Pearson correlation of the fractional ranks; NaN when either side is constant.
inline double brute_spearman(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("brute_spearman: bad lengths");
    const Vec ra = average_ranks(a), rb = average_ranks(b);
    const std::size_t n = ra.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) { ma += ra[i]; mb += rb[i]; }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (saa <= 0.0 || sbb <= 0.0) return std::nan("");
    return sab / std::sqrt(saa * sbb);
}

}  // namespace oracle

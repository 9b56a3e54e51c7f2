#include "polyexp/roots.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace polyexp {

void poly_eval2(const std::vector<double>& c, Complex z, Complex& p, Complex& dp) {
    p = 0;
    dp = 0;
    for (size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

double poly_rel_residual(const std::vector<double>& c, Complex z) {
    Complex p, dp;
    poly_eval2(c, z, p, dp);
    double scale = 0, az = std::abs(z), zi = 1;
    for (double ci : c) {
        scale += std::abs(ci) * zi;
        zi *= az;
    }
    if (scale == 0) scale = 1;
    return std::abs(p) / scale;
}

namespace {

std::vector<Complex> companion_roots(const std::vector<double>& c) {
    int n = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) A(i, n - 1) = -c[i] / c[n];
    for (int i = 1; i < n; ++i) A(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
    std::vector<Complex> roots(n);
    for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

std::vector<Complex> aberth_roots(const std::vector<double>& c, int max_iters) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<Complex> z(n);
    double r0 = std::pow(std::abs(c[0] / c[n]), 1.0 / n);
    if (!(r0 > 0) || !std::isfinite(r0)) r0 = 1.0;
    for (int k = 0; k < n; ++k) {
        double th = 2 * M_PI * k / n + 0.77;
        z[k] = (r0 * 1.0000001) * Complex(std::cos(th), std::sin(th));
    }
    std::vector<bool> done(n, false);
    for (int it = 0; it < max_iters; ++it) {
        bool all = true;
        for (int k = 0; k < n; ++k) {
            if (done[k]) continue;
            Complex p, dp;
            poly_eval2(c, z[k], p, dp);
            if (std::abs(p) == 0) {
                done[k] = true;
                continue;
            }
            Complex nk = (dp == Complex(0)) ? Complex(1e-12) : p / dp;
            Complex sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            Complex denom = 1.0 - nk * sum;
            Complex step = (std::abs(denom) < 1e-300) ? nk : nk / denom;
            z[k] -= step;
            if (std::abs(step) < 1e-15 * (1 + std::abs(z[k])))
                done[k] = true;
            else
                all = false;
        }
        if (all) break;
    }
    return z;
}

}  // namespace

std::vector<Complex> poly_roots_numeric(const std::vector<double>& c, const NumericRootOpts& opts) {
    if (c.size() < 2) return {};
    if (c.back() == 0) throw std::invalid_argument("poly_roots_numeric: zero leading coefficient");

    int n = static_cast<int>(c.size()) - 1;
    std::vector<Complex> roots = (n <= 180) ? companion_roots(c) : aberth_roots(c, opts.max_iters);

    // Newton polish and certify.
    for (auto& z : roots) {
        for (int it = 0; it < 60; ++it) {
            Complex p, dp;
            poly_eval2(c, z, p, dp);
            if (std::abs(p) == 0) break;
            if (dp == Complex(0)) break;
            Complex step = p / dp;
            z -= step;
            if (std::abs(step) < 1e-16 * (1 + std::abs(z))) break;
        }
        if (poly_rel_residual(c, z) > opts.rel_residual)
            throw std::runtime_error("poly_roots_numeric: residual certification failed");
    }
    return roots;
}

}  // namespace polyexp

#include "tanglab/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace tanglab {

namespace {

Complex horner(const CoeffVec& c, Complex z) {
    Complex acc = c[c.size() - 1];
    for (Eigen::Index k = c.size() - 2; k >= 0; --k) acc = acc * z + c[k];
    return acc;
}

Complex horner_deriv(const CoeffVec& c, Complex z) {
    Complex acc = c[c.size() - 1] * double(c.size() - 1);
    for (Eigen::Index k = c.size() - 2; k >= 1; --k) acc = acc * z + c[k] * double(k);
    return acc;
}

}  // namespace

Complex poly_newton(const CoeffVec& coeffs, Complex w, Complex seed, int max_iter, double tol) {
    Complex z = seed;
    double scale = 0;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) scale = std::max(scale, std::abs(coeffs[k]));
    for (int it = 0; it < max_iter; ++it) {
        Complex f = horner(coeffs, z) - w;
        Complex df = horner_deriv(coeffs, z);
        if (std::abs(df) < 1e-300) break;
        Complex step = f / df;
        z -= step;
        if (std::abs(step) < tol * (1.0 + std::abs(z)) || std::abs(f) < tol * scale) break;
    }
    return z;
}

std::vector<Complex> poly_roots(const CoeffVec& coeffs, double rel_tol) {
    double scale = 0;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) scale = std::max(scale, std::abs(coeffs[k]));
    if (scale == 0) throw DomainError("root finding on the zero polynomial");

    Eigen::Index deg = coeffs.size() - 1;
    while (deg > 0 && std::abs(coeffs[deg]) <= rel_tol * scale) --deg;
    if (deg == 0) return {};

    CoeffVec c = coeffs.head(deg + 1) / coeffs[deg];
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<Complex> roots(deg);
    for (Eigen::Index i = 0; i < deg; ++i)
        roots[i] = poly_newton(coeffs, Complex(0), es.eigenvalues()[i], 8);
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius) {
    std::vector<RootCluster> clusters;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex sum = roots[i];
        int count = 1;
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (!used[j] && std::abs(roots[j] - sum / double(count)) <= radius) {
                sum += roots[j];
                ++count;
                used[j] = true;
            }
        }
        clusters.push_back({sum / double(count), count});
    }
    return clusters;
}

int vanishing_order(const Series1& p, Complex z0, double rel_tol) {
    // Taylor coefficients at z0 by repeated synthetic division: after pass k,
    // c[k] holds the coefficient of (z - z0)^k.
    CoeffVec c = p.coeffs();
    int n = static_cast<int>(c.size());
    for (int k = 0; k < n; ++k)
        for (int i = n - 2; i >= k; --i) c[i] += c[i + 1] * z0;
    double scale = 0;
    for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(c[k]));
    if (scale == 0) return p.degree() + 1;
    for (int k = 0; k < n; ++k)
        if (std::abs(c[k]) > rel_tol * scale) return k;
    return p.degree() + 1;
}

}  // namespace tanglab

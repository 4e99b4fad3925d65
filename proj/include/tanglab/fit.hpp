#ifndef TANGLAB_FIT_HPP
#define TANGLAB_FIT_HPP

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "tanglab/series.hpp"
#include "tanglab/types.hpp"

namespace tanglab {

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double residual = 0;  // rms of fit residuals
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("line fit needs >= 2 points");
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd A(n, 2);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        A(i, 0) = x[i];
        A(i, 1) = 1.0;
        b(i) = y[i];
    }
    Eigen::Vector2d sol = A.colPivHouseholderQr().solve(b);
    double rms = std::sqrt((A * sol - b).squaredNorm() / double(n));
    return {sol[0], sol[1], rms};
}

// Taylor coefficients c_0..c_degree of an analytic function from samples on
// the circle of the given radius (plain DFT; sample count picked from degree).
inline CoeffVec taylor_from_circle(const std::function<Complex(Complex)>& f, Complex center,
                                   double radius, int degree, int oversample = 4) {
    int n = std::max(8, oversample * (degree + 1));
    CoeffVec vals(n);
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * k / n;
        vals[k] = f(center + Complex(radius * std::cos(th), radius * std::sin(th)));
    }
    CoeffVec out(degree + 1);
    for (int m = 0; m <= degree; ++m) {
        Complex acc(0);
        for (int k = 0; k < n; ++k) {
            double th = -2.0 * M_PI * m * k / n;
            acc += vals[k] * Complex(std::cos(th), std::sin(th));
        }
        out[m] = acc / (double(n) * std::pow(radius, m));
    }
    return out;
}

inline Series1 taylor_series_from_circle(const std::function<Complex(Complex)>& f, Complex center,
                                         double radius, int degree) {
    return Series1(taylor_from_circle(f, center, radius, degree), radius);
}

// Two-variable Taylor table by a tensor DFT on a polydisc torus.
inline Series2 taylor2_from_samples(const std::function<Complex(Complex, Complex)>& f,
                                    Complex c1, Complex c2, double r1, double r2, int degree,
                                    int oversample = 2) {
    int n = std::max(8, oversample * (degree + 1));
    Eigen::MatrixXcd vals(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double t1 = 2.0 * M_PI * a / n, t2 = 2.0 * M_PI * b / n;
            vals(a, b) = f(c1 + std::polar(r1, t1), c2 + std::polar(r2, t2));
        }
    Series2 out(degree, r1, r2);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) {
            Complex acc(0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double ph = -2.0 * M_PI * (double(i) * a + double(j) * b) / n;
                    acc += vals(a, b) * Complex(std::cos(ph), std::sin(ph));
                }
            out.coeff_ref(i, j) = acc / (double(n) * double(n) * std::pow(r1, i) * std::pow(r2, j));
        }
    return out;
}

// Deterministic parallel map: task i writes slot i, merge order is by index.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace tanglab

#endif

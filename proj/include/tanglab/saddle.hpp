#ifndef TANGLAB_SADDLE_HPP
#define TANGLAB_SADDLE_HPP

// Saddle periodic points: multipliers and eigenframes, resonance detection,
// invariant-manifold germs, the multiplicative normal form
// (u x (1 + y g1), s y (1 + x g2)), Koenigs linearization, and the
// zero-dynamical-slope section of the projectivized dynamics.

#include <optional>
#include <utility>
#include <vector>

#include "tanglab/henon.hpp"
#include "tanglab/series.hpp"
#include "tanglab/types.hpp"

namespace tanglab {

enum class PointType { saddle, sink, source, indifferent };

struct SaddleData {
    Vec2 point;
    int period = 1;
    Complex u, s;        // |s| < 1 < |u|
    Vec2 e_u, e_s;       // unit eigenvectors
    double residual = 0; // |f^n(p) - p|
    double rho = 0;      // spectral margin, see margins()
};

struct PeriodicPointReport {
    Vec2 point;
    int period;
    Complex mu1, mu2;  // |mu1| >= |mu2|
    double residual;
    PointType type;
    std::optional<SaddleData> saddle;  // present when type == saddle
};

// Newton on f^n(x) - x from the seed; classification bands: a multiplier with
// ||mu| - 1| <= indifferent_band yields PointType::indifferent.
PeriodicPointReport find_periodic(const AnyMap& map, int period, const Vec2& seed,
                                  double tol = 1e-12, int max_iter = 100,
                                  double indifferent_band = kIndifferentBand);

// all (a, b), a,b >= 1, a+b <= order, with |u^a s^b - 1| <= tol, sorted
// lexicographically; an empty list certifies non-resonance through a+b <= order
std::vector<std::pair<int, int>> detect_resonance(Complex u, Complex s, int order,
                                                  double tol = kResonanceTol);

// near-resonances in the conditioning band above the exact tolerance
std::vector<std::pair<int, int>> near_resonances(Complex u, Complex s, int order,
                                                 double tol = kResonanceTol,
                                                 double band = kNearResonanceBand);

struct Margins {
    double rho;  // largest value with 1+rho <= |u| <= 1+1/rho and same for 1/|s|
    int r;       // smoothness order for derivative-decay estimates, given l
    int k_prime; // non-resonance order required by the slope section
};
Margins margins(Complex u, Complex s, int ell);

struct ManifoldGerm {
    SaddleData saddle;
    bool stable = true;
    Series1 x, y;       // parameterization t -> (x(t), y(t)), W(0) = saddle point
    Complex multiplier; // s or u
    double radius = 0;  // validity radius used for the residual estimate
    double residual = 0;// sup |f(W(t)) - W(mu t)| on |t| = radius
};

enum class BranchKind { stable, unstable };

// order-by-order solve of f(W(t)) = W(mu t) with W'(0) the chosen eigenvector
ManifoldGerm manifold_germ(const AnyMap& map, const SaddleData& saddle, BranchKind kind,
                           int degree, double radius = 0.1);

struct NormalFormGerm {
    Complex u, s;
    int k = 1;              // monomials of g1, g2 all have total degree >= k
    Series2 g1, g2;
    LocalMap change;        // tangent-to-identity coordinate change to the input
    double norm_g1 = 0, norm_g2 = 0;  // sup bounds on the working bidisk
    double conjugacy_residual = 0;

    LocalMap as_map(int degree) const;
};

// brings a local saddle germ with diagonal linear part to the form
// (u x (1 + y g1), s y (1 + x g2)) with g1, g2 vanishing to order k:
// degree-by-degree elimination, separatrix straightening, then Koenigs
// linearization inside each separatrix.
NormalFormGerm normal_form(const LocalMap& germ, int k, double tol = 1e-8);

// phi with phi(h(x)) = u phi(x) and phi(x) - x = O(x^{k+2}); requires the
// coefficients of x^2..x^{k+1} of h to vanish
Series1 koenigs_linearize(const Series1& h, int k, double tol = 1e-10);

// invariant slope section m = zeta(y) of the projectivized dynamics over the
// stable axis; zeta(0) = 0
Series1 zero_slope_section(const NormalFormGerm& nf, int degree);

bool dynamical_slope_nonzero(const NormalFormGerm& nf, Complex y, Complex slope,
                             double tol = 1e-9);

// one step of the projectivized map over the stable axis: (y, m) -> (y', m')
std::pair<Complex, Complex> projectivized_step(const NormalFormGerm& nf, Complex y, Complex m);

}  // namespace tanglab

#endif

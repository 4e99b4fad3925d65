#ifndef TANGLAB_POLYROOTS_HPP
#define TANGLAB_POLYROOTS_HPP

#include <vector>

#include "tanglab/series.hpp"
#include "tanglab/types.hpp"

namespace tanglab {

// All roots of the polynomial with ascending coefficients c[0..n], via the
// balanced companion matrix, each polished by a few Newton steps.  Leading
// coefficients below rel_tol * max|c| are stripped first.
std::vector<Complex> poly_roots(const CoeffVec& coeffs, double rel_tol = 1e-13);

inline std::vector<Complex> poly_roots(const Series1& p, double rel_tol = 1e-13) {
    return poly_roots(p.coeffs(), rel_tol);
}

// Roots grouped into clusters of nearby values; each cluster carries its
// center (mean) and size.  Used where a multiple root splits under rounding.
struct RootCluster {
    Complex center;
    int multiplicity;
};
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius);

// Vanishing order of p at z0: smallest k with |p^{(k)}(z0)| / k! above
// rel_tol times the magnitude scale of p.  Returns degree+1 if all vanish.
int vanishing_order(const Series1& p, Complex z0, double rel_tol = 1e-8);

// One Newton solve for p(z) = w from the given seed; returns the refined root.
Complex poly_newton(const CoeffVec& coeffs, Complex w, Complex seed, int max_iter = 60,
                    double tol = 1e-13);

}  // namespace tanglab

#endif

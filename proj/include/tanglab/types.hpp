#ifndef TANGLAB_TYPES_HPP
#define TANGLAB_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace tanglab {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;
using CoeffVec = Eigen::VectorXcd;

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr double kResonanceTol = 1e-9;
inline constexpr double kNearResonanceBand = 1e-4;
inline constexpr double kSmallDivisorFloor = 1e-8;
inline constexpr double kIndifferentBand = 1e-6;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition or domain-of-validity violation.
struct DomainError : Error {
    using Error::Error;
};

// A homological divisor fell below the floor; (i, j) is the offending monomial.
struct SmallDivisorError : Error {
    int i, j;
    double divisor_abs;
    SmallDivisorError(int i_, int j_, double d)
        : Error("small divisor at monomial (" + std::to_string(i_) + "," + std::to_string(j_) +
                "): |divisor| = " + std::to_string(d)),
          i(i_), j(j_), divisor_abs(d) {}
};

// Multiplier relation u^a s^b = 1 obstructing a normal form.
struct ResonanceError : Error {
    int a, b;
    ResonanceError(int a_, int b_)
        : Error("resonance u^" + std::to_string(a_) + " s^" + std::to_string(b_) + " = 1"), a(a_), b(b_) {}
};

struct NonInvertibleError : Error {
    using Error::Error;
};

struct NewtonError : Error {
    using Error::Error;
};

// A root or tangency sits too close to a domain boundary to be classified.
struct BoundaryAmbiguityError : Error {
    using Error::Error;
};

inline bool approx_eq(Complex a, Complex b, double tol = kDefaultRelTol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace tanglab

#endif

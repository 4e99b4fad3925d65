#ifndef TANGLAB_HENON_HPP
#define TANGLAB_HENON_HPP

// Generalized Hénon maps h_{P,a}(z, w) = (a w + P(z), z), their compositions,
// analytic parameter families, and localization at periodic points.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tanglab/series.hpp"
#include "tanglab/types.hpp"

namespace tanglab {

enum class Direction { forward, inverse };

struct HenonFactor {
    CoeffVec P;  // ascending coefficients, degree >= 2
    Complex a;   // Jacobian coefficient, nonzero

    HenonFactor(CoeffVec p, Complex a_) : P(std::move(p)), a(a_) {
        if (P.size() < 3) throw DomainError("Henon factor polynomial must have degree >= 2");
        if (std::abs(P[P.size() - 1]) == 0) throw DomainError("leading coefficient of P vanishes");
        if (std::abs(a) == 0) throw DomainError("Henon factor with zero Jacobian coefficient");
    }

    Complex p_eval(Complex z) const {
        Complex acc = P[P.size() - 1];
        for (Eigen::Index k = P.size() - 2; k >= 0; --k) acc = acc * z + P[k];
        return acc;
    }
    Complex p_deriv(Complex z) const {
        Complex acc = P[P.size() - 1] * double(P.size() - 1);
        for (Eigen::Index k = P.size() - 2; k >= 1; --k) acc = acc * z + P[k] * double(k);
        return acc;
    }
    int degree() const { return static_cast<int>(P.size()) - 1; }
};

class PolynomialAutomorphism {
  public:
    PolynomialAutomorphism() = default;
    explicit PolynomialAutomorphism(std::vector<HenonFactor> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw DomainError("automorphism needs at least one factor");
    }

    // quadratic Hénon f_{a,c}(z, w) = (a w + z^2 + c, z)
    static PolynomialAutomorphism quadratic(Complex a, Complex c) {
        CoeffVec p(3);
        p << c, Complex(0), Complex(1);
        return PolynomialAutomorphism({HenonFactor(p, a)});
    }

    const std::vector<HenonFactor>& factors() const { return factors_; }
    int dynamical_degree() const {
        int d = 1;
        for (const auto& f : factors_) d *= f.degree();
        return d;
    }
    Complex jacobian() const {
        Complex j(1);
        for (const auto& f : factors_) j *= -f.a;
        return j;
    }

  private:
    std::vector<HenonFactor> factors_;
};

Vec2 map_point(const PolynomialAutomorphism& map, const Vec2& point, Direction dir = Direction::forward);
Mat2 derivative(const PolynomialAutomorphism& map, const Vec2& point, Direction dir = Direction::forward);
Vec2 iterate(const PolynomialAutomorphism& map, Vec2 point, int n, Direction dir = Direction::forward);
Mat2 iterate_derivative(const PolynomialAutomorphism& map, Vec2 point, int n,
                        Direction dir = Direction::forward);

// ---------------------------------------------------------------------------
// Local maps: a germ of C^2 holomorphic map fixing the origin, as a pair of
// two-variable series in (x, y).

struct LocalMap {
    Series2 fx, fy;

    int degree() const { return std::min(fx.degree(), fy.degree()); }
    Vec2 operator()(const Vec2& p) const { return Vec2(fx(p[0], p[1]), fy(p[0], p[1])); }
    Mat2 linear_part() const {
        Mat2 m;
        m << fx.coeff(1, 0), fx.coeff(0, 1), fy.coeff(1, 0), fy.coeff(0, 1);
        return m;
    }
    Mat2 derivative_at(const Vec2& p) const {
        Mat2 m;
        m << derive(fx, Var::first)(p[0], p[1]), derive(fx, Var::second)(p[0], p[1]),
             derive(fy, Var::first)(p[0], p[1]), derive(fy, Var::second)(p[0], p[1]);
        return m;
    }

    static LocalMap linear(Complex u, Complex s, int degree) {
        return {Series2::monomial(1, 0, u, degree), Series2::monomial(0, 1, s, degree)};
    }
};

// composition g(f(x,y)) truncated to the common degree
LocalMap compose(const LocalMap& g, const LocalMap& f);
// inverse germ, degree by degree; linear part must be invertible
LocalMap invert_germ(const LocalMap& f);
// curve image: f(x(t), y(t)) componentwise
std::pair<Series1, Series1> apply_to_curve(const LocalMap& f, const Series1& x, const Series1& y);
std::pair<Series1, Series1> apply_to_curve(const PolynomialAutomorphism& f, const Series1& x,
                                           const Series1& y, Direction dir = Direction::forward);

// Either a global polynomial automorphism or a synthetic local germ.
using AnyMap = std::variant<PolynomialAutomorphism, LocalMap>;

Vec2 map_point(const AnyMap& map, const Vec2& point, Direction dir = Direction::forward);
Mat2 derivative(const AnyMap& map, const Vec2& point, Direction dir = Direction::forward);
Vec2 iterate(const AnyMap& map, Vec2 point, int n, Direction dir = Direction::forward);
Mat2 iterate_derivative(const AnyMap& map, Vec2 point, int n, Direction dir = Direction::forward);

// ---------------------------------------------------------------------------
// Parameter families.  Coefficients are polynomial functions of lambda in
// C^dim (dim 1 or 2) stored as triangular tables, so lambda-derivatives are
// exact.

class ParamPoly {
  public:
    ParamPoly() : dim_(1), table_(Series2(0)) {}
    static ParamPoly constant(Complex c, int dim);
    // monomial c * l1^i (dim 1) or c * l1^i l2^j (dim 2)
    static ParamPoly monomial(int dim, int i, int j, Complex c);

    int dim() const { return dim_; }
    Complex eval(const Eigen::VectorXcd& lambda) const;
    Complex deriv(const Eigen::VectorXcd& lambda, int component) const;
    ParamPoly operator+(const ParamPoly& other) const;
    ParamPoly operator*(const ParamPoly& other) const;

    const Series2& table() const { return table_; }

  private:
    int dim_;
    Series2 table_;  // coefficients indexed by lambda powers (second power 0 when dim 1)
};

struct ParametricFactor {
    std::vector<ParamPoly> P;  // ascending coefficient polynomials
    ParamPoly a;
};

// Synthetic local family: pair of (x, y)-germs whose coefficients are
// polynomial in one lambda power each: sum_k lambda^k * germ_k.
struct SyntheticFamily {
    std::vector<Series2> fx_by_power, fy_by_power;
    LocalMap eval(Complex lambda) const;
    LocalMap dlambda(Complex lambda) const;
};

class ParametricFamily {
  public:
    ParametricFamily(int dim, std::vector<ParametricFactor> factors, Eigen::VectorXcd box_center,
                     Eigen::VectorXd box_radius)
        : dim_(dim), factors_(std::move(factors)), box_center_(std::move(box_center)),
          box_radius_(std::move(box_radius)) {
        if (dim_ < 1 || dim_ > 2) throw DomainError("parameter dimension must be 1 or 2");
    }
    explicit ParametricFamily(SyntheticFamily synth, double box_radius = 1.0)
        : dim_(1), synthetic_(std::move(synth)), box_center_(Eigen::VectorXcd::Zero(1)),
          box_radius_(Eigen::VectorXd::Constant(1, box_radius)) {}

    // all quadratic Hénon maps, lambda = (a, c)
    static ParametricFamily quadratic_henon(Complex a_center, double a_radius, Complex c_center,
                                            double c_radius);

    int dim() const { return dim_; }
    bool is_synthetic() const { return synthetic_.has_value(); }
    void check_box(const Eigen::VectorXcd& lambda) const;

    AnyMap eval(const Eigen::VectorXcd& lambda) const;

    // exact d/d lambda_component of lambda -> f_lambda(point), assembled from
    // the coefficient-wise derivatives by the chain rule across factors
    Vec2 param_velocity(const Eigen::VectorXcd& lambda, int component, const Vec2& point) const;

    // per-factor coefficient derivatives (dP ascending, da), exact
    struct FactorJet {
        CoeffVec dP;
        Complex da;
    };
    std::vector<FactorJet> coefficient_jets(const Eigen::VectorXcd& lambda, int component) const;

  private:
    int dim_;
    std::vector<ParametricFactor> factors_;
    std::optional<SyntheticFamily> synthetic_;
    Eigen::VectorXcd box_center_;
    Eigen::VectorXd box_radius_;
};

// Taylor expansion of frame^{-1} (f^period(p + frame xi) - p) through the
// given total degree; the germ fixes the origin and its linear part is the
// frame-conjugated derivative.
LocalMap localize(const PolynomialAutomorphism& map, const Vec2& fixed_point, int period,
                  const Mat2& frame, int degree, double tol = 1e-8);

}  // namespace tanglab

#endif

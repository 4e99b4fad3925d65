#include "tanglab/henon.hpp"

#include <Eigen/Dense>

namespace tanglab {

Vec2 map_point(const PolynomialAutomorphism& map, const Vec2& point, Direction dir) {
    Vec2 p = point;
    if (dir == Direction::forward) {
        for (auto it = map.factors().rbegin(); it != map.factors().rend(); ++it)
            p = Vec2(it->a * p[1] + it->p_eval(p[0]), p[0]);
    } else {
        for (const auto& f : map.factors())
            p = Vec2(p[1], (p[0] - f.p_eval(p[1])) / f.a);
    }
    return p;
}

Mat2 derivative(const PolynomialAutomorphism& map, const Vec2& point, Direction dir) {
    Vec2 p = point;
    Mat2 J = Mat2::Identity();
    if (dir == Direction::forward) {
        for (auto it = map.factors().rbegin(); it != map.factors().rend(); ++it) {
            Mat2 D;
            D << it->p_deriv(p[0]), it->a, Complex(1), Complex(0);
            J = D * J;
            p = Vec2(it->a * p[1] + it->p_eval(p[0]), p[0]);
        }
    } else {
        for (const auto& f : map.factors()) {
            Vec2 q(p[1], (p[0] - f.p_eval(p[1])) / f.a);
            Mat2 D;
            D << Complex(0), Complex(1), Complex(1) / f.a, -f.p_deriv(p[1]) / f.a;
            J = D * J;
            p = q;
        }
    }
    return J;
}

Vec2 iterate(const PolynomialAutomorphism& map, Vec2 point, int n, Direction dir) {
    for (int i = 0; i < n; ++i) point = map_point(map, point, dir);
    return point;
}

Mat2 iterate_derivative(const PolynomialAutomorphism& map, Vec2 point, int n, Direction dir) {
    Mat2 J = Mat2::Identity();
    for (int i = 0; i < n; ++i) {
        J = derivative(map, point, dir) * J;
        point = map_point(map, point, dir);
    }
    return J;
}

LocalMap compose(const LocalMap& g, const LocalMap& f) {
    return {substitute(g.fx, f.fx, f.fy), substitute(g.fy, f.fx, f.fy)};
}

LocalMap invert_germ(const LocalMap& f) {
    const int d = f.degree();
    Mat2 L = f.linear_part();
    if (std::abs(L.determinant()) < 1e-12)
        throw NonInvertibleError("germ inversion: singular linear part");
    Mat2 Li = L.inverse();
    double r1 = f.fx.radius1(), r2 = f.fx.radius2();

    // start from the linear inverse and correct degree by degree:
    // g <- g - Li * (f(g) - id), which fixes the coefficients of total degree k
    // at step k because f(g) - id is already correct below k.
    LocalMap g{Series2(d, r1, r2), Series2(d, r1, r2)};
    g.fx.coeff_ref(1, 0) = Li(0, 0); g.fx.coeff_ref(0, 1) = Li(0, 1);
    g.fy.coeff_ref(1, 0) = Li(1, 0); g.fy.coeff_ref(0, 1) = Li(1, 1);
    for (int k = 2; k <= d; ++k) {
        LocalMap fg = compose(f, g);
        Series2 ex = fg.fx - Series2::monomial(1, 0, Complex(1), d, r1, r2);
        Series2 ey = fg.fy - Series2::monomial(0, 1, Complex(1), d, r1, r2);
        for (int i = 0; i <= k; ++i) {
            int j = k - i;
            Complex exc = ex.coeff(i, j), eyc = ey.coeff(i, j);
            g.fx.coeff_ref(i, j) -= Li(0, 0) * exc + Li(0, 1) * eyc;
            g.fy.coeff_ref(i, j) -= Li(1, 0) * exc + Li(1, 1) * eyc;
        }
    }
    return g;
}

std::pair<Series1, Series1> apply_to_curve(const LocalMap& f, const Series1& x, const Series1& y) {
    return {substitute_curve(f.fx, x, y), substitute_curve(f.fy, x, y)};
}

std::pair<Series1, Series1> apply_to_curve(const PolynomialAutomorphism& f, const Series1& x,
                                           const Series1& y, Direction dir) {
    Series1 cx = x, cy = y;
    auto p_on_series = [](const HenonFactor& h, const Series1& s) {
        Series1 acc = Series1::constant(h.P[h.P.size() - 1], s.degree(), s.radius());
        for (Eigen::Index k = h.P.size() - 2; k >= 0; --k) {
            acc = acc * s;
            acc.coeff_ref(0) += h.P[k];
        }
        return acc;
    };
    if (dir == Direction::forward) {
        for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it) {
            Series1 nx = it->a * cy + p_on_series(*it, cx);
            cy = cx;
            cx = nx;
        }
    } else {
        for (const auto& h : f.factors()) {
            Series1 ny = (cx - p_on_series(h, cy)) * (Complex(1) / h.a);
            cx = cy;
            cy = ny;
        }
    }
    return {cx, cy};
}

Vec2 map_point(const AnyMap& map, const Vec2& point, Direction dir) {
    return std::visit(
        [&](const auto& m) -> Vec2 {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PolynomialAutomorphism>) return map_point(m, point, dir);
            else {
                if (dir == Direction::forward) return m(point);
                return invert_germ(m)(point);
            }
        },
        map);
}

Mat2 derivative(const AnyMap& map, const Vec2& point, Direction dir) {
    return std::visit(
        [&](const auto& m) -> Mat2 {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PolynomialAutomorphism>) return derivative(m, point, dir);
            else {
                if (dir == Direction::forward) return m.derivative_at(point);
                return invert_germ(m).derivative_at(point);
            }
        },
        map);
}

Vec2 iterate(const AnyMap& map, Vec2 point, int n, Direction dir) {
    for (int i = 0; i < n; ++i) point = map_point(map, point, dir);
    return point;
}

Mat2 iterate_derivative(const AnyMap& map, Vec2 point, int n, Direction dir) {
    Mat2 J = Mat2::Identity();
    for (int i = 0; i < n; ++i) {
        J = derivative(map, point, dir) * J;
        point = map_point(map, point, dir);
    }
    return J;
}

// ---------------------------------------------------------------------------

ParamPoly ParamPoly::constant(Complex c, int dim) {
    ParamPoly p;
    p.dim_ = dim;
    p.table_ = Series2::constant(c, 0);
    return p;
}

ParamPoly ParamPoly::monomial(int dim, int i, int j, Complex c) {
    if (dim == 1 && j != 0) throw DomainError("one-parameter family with a second parameter power");
    ParamPoly p;
    p.dim_ = dim;
    p.table_ = Series2::monomial(i, j, c);
    return p;
}

Complex ParamPoly::eval(const Eigen::VectorXcd& lambda) const {
    Complex l1 = lambda[0];
    Complex l2 = (lambda.size() > 1) ? lambda[1] : Complex(0);
    return table_(l1, l2);
}

Complex ParamPoly::deriv(const Eigen::VectorXcd& lambda, int component) const {
    if (table_.degree() == 0) return Complex(0);
    Series2 d = derive(table_, component == 0 ? Var::first : Var::second);
    Complex l1 = lambda[0];
    Complex l2 = (lambda.size() > 1) ? lambda[1] : Complex(0);
    return d(l1, l2);
}

ParamPoly ParamPoly::operator+(const ParamPoly& other) const {
    ParamPoly r;
    r.dim_ = std::max(dim_, other.dim_);
    int d = std::max(table_.degree(), other.table_.degree());
    r.table_ = table_.truncated(d) + other.table_.truncated(d);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& other) const {
    ParamPoly r;
    r.dim_ = std::max(dim_, other.dim_);
    int d = table_.degree() + other.table_.degree();
    r.table_ = table_.truncated(d) * other.table_.truncated(d);
    return r;
}

LocalMap SyntheticFamily::eval(Complex lambda) const {
    if (fx_by_power.empty() || fy_by_power.empty())
        throw DomainError("empty synthetic family");
    Series2 fx = fx_by_power[0], fy = fy_by_power[0];
    Complex lp(1);
    for (size_t k = 1; k < std::max(fx_by_power.size(), fy_by_power.size()); ++k) {
        lp *= lambda;
        if (k < fx_by_power.size()) fx = fx + fx_by_power[k] * lp;
        if (k < fy_by_power.size()) fy = fy + fy_by_power[k] * lp;
    }
    return {fx, fy};
}

LocalMap SyntheticFamily::dlambda(Complex lambda) const {
    Series2 fx(fx_by_power[0].degree()), fy(fy_by_power[0].degree());
    Complex lp(1);
    for (size_t k = 1; k < std::max(fx_by_power.size(), fy_by_power.size()); ++k) {
        if (k < fx_by_power.size()) fx = fx + fx_by_power[k] * (double(k) * lp);
        if (k < fy_by_power.size()) fy = fy + fy_by_power[k] * (double(k) * lp);
        lp *= lambda;
    }
    return {fx, fy};
}

ParametricFamily ParametricFamily::quadratic_henon(Complex a_center, double a_radius,
                                                   Complex c_center, double c_radius) {
    ParametricFactor f;
    f.a = ParamPoly::monomial(2, 1, 0, Complex(1));
    f.P = {ParamPoly::monomial(2, 0, 1, Complex(1)), ParamPoly::constant(Complex(0), 2),
           ParamPoly::constant(Complex(1), 2)};
    Eigen::VectorXcd center(2);
    center << a_center, c_center;
    Eigen::VectorXd radius(2);
    radius << a_radius, c_radius;
    return ParametricFamily(2, {std::move(f)}, center, radius);
}

void ParametricFamily::check_box(const Eigen::VectorXcd& lambda) const {
    if (lambda.size() != dim_) throw DomainError("parameter dimension mismatch");
    for (int i = 0; i < dim_; ++i)
        if (std::abs(lambda[i] - box_center_[i]) > box_radius_[i] * (1 + 1e-12))
            throw DomainError("parameter outside the declared box");
}

AnyMap ParametricFamily::eval(const Eigen::VectorXcd& lambda) const {
    check_box(lambda);
    if (synthetic_) return synthetic_->eval(lambda[0]);
    std::vector<HenonFactor> factors;
    factors.reserve(factors_.size());
    for (const auto& pf : factors_) {
        CoeffVec p(pf.P.size());
        for (size_t k = 0; k < pf.P.size(); ++k) p[static_cast<Eigen::Index>(k)] = pf.P[k].eval(lambda);
        factors.emplace_back(std::move(p), pf.a.eval(lambda));
    }
    return PolynomialAutomorphism(std::move(factors));
}

std::vector<ParametricFamily::FactorJet> ParametricFamily::coefficient_jets(
    const Eigen::VectorXcd& lambda, int component) const {
    check_box(lambda);
    if (synthetic_) throw DomainError("coefficient jets apply to factor families only");
    std::vector<FactorJet> jets;
    jets.reserve(factors_.size());
    for (const auto& pf : factors_) {
        FactorJet j;
        j.dP.resize(static_cast<Eigen::Index>(pf.P.size()));
        for (size_t k = 0; k < pf.P.size(); ++k)
            j.dP[static_cast<Eigen::Index>(k)] = pf.P[k].deriv(lambda, component);
        j.da = pf.a.deriv(lambda, component);
        jets.push_back(std::move(j));
    }
    return jets;
}

Vec2 ParametricFamily::param_velocity(const Eigen::VectorXcd& lambda, int component,
                                      const Vec2& point) const {
    check_box(lambda);
    if (synthetic_) {
        LocalMap d = synthetic_->dlambda(lambda[0]);
        return d(point);
    }
    AnyMap m = eval(lambda);
    const auto& map = std::get<PolynomialAutomorphism>(m);
    auto jets = coefficient_jets(lambda, component);
    Vec2 q = point, v = Vec2::Zero();
    for (size_t idx = map.factors().size(); idx-- > 0;) {
        const auto& f = map.factors()[idx];
        const auto& j = jets[idx];
        Complex dP_at_q(0);
        for (Eigen::Index k = j.dP.size() - 1; k >= 0; --k) dP_at_q = dP_at_q * q[0] + j.dP[k];
        Mat2 D;
        D << f.p_deriv(q[0]), f.a, Complex(1), Complex(0);
        v = D * v + Vec2(j.da * q[1] + dP_at_q, Complex(0));
        q = Vec2(f.a * q[1] + f.p_eval(q[0]), q[0]);
    }
    return v;
}

LocalMap localize(const PolynomialAutomorphism& map, const Vec2& fixed_point, int period,
                  const Mat2& frame, int degree, double tol) {
    if (std::abs(frame.determinant()) < 1e-12) throw DomainError("singular localization frame");
    Vec2 image = iterate(map, fixed_point, period);
    if ((image - fixed_point).norm() > tol)
        throw DomainError("localize: point is not periodic of the declared period");

    double r1 = 1.0, r2 = 1.0;
    Series2 X(degree, r1, r2), Y(degree, r1, r2);
    X.coeff_ref(0, 0) = fixed_point[0];
    X.coeff_ref(1, 0) = frame(0, 0);
    X.coeff_ref(0, 1) = frame(0, 1);
    Y.coeff_ref(0, 0) = fixed_point[1];
    Y.coeff_ref(1, 0) = frame(1, 0);
    Y.coeff_ref(0, 1) = frame(1, 1);

    auto p_on_series2 = [&](const HenonFactor& h, const Series2& s) {
        Series2 acc = Series2::constant(h.P[h.P.size() - 1], degree, r1, r2);
        for (Eigen::Index k = h.P.size() - 2; k >= 0; --k) {
            acc = acc * s;
            acc.coeff_ref(0, 0) += h.P[k];
        }
        return acc;
    };
    for (int it = 0; it < period; ++it) {
        for (auto f = map.factors().rbegin(); f != map.factors().rend(); ++f) {
            Series2 nx = f->a * Y + p_on_series2(*f, X);
            Y = X;
            X = nx;
        }
    }
    X.coeff_ref(0, 0) -= fixed_point[0];
    Y.coeff_ref(0, 0) -= fixed_point[1];
    Mat2 Fi = frame.inverse();
    LocalMap germ{Fi(0, 0) * X + Fi(0, 1) * Y, Fi(1, 0) * X + Fi(1, 1) * Y};
    // exact fixing of the origin: the residual constant term is below tol by the
    // periodicity check; zero it so downstream recurrences see a true germ
    germ.fx.coeff_ref(0, 0) = Complex(0);
    germ.fy.coeff_ref(0, 0) = Complex(0);
    return germ;
}

}  // namespace tanglab

#ifndef TANGLAB_SERIES_HPP
#define TANGLAB_SERIES_HPP

// Truncated complex power series in one and two variables. These carry a
// truncation degree, a validity radius and a conservative sup-norm tail bound;
// every arithmetic operation keeps the representation sound: evaluating the
// stored polynomial part at |t| <= radius differs from the represented
// function by at most tail().

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "tanglab/types.hpp"

namespace tanglab {

template <typename Scalar = Complex>
class TruncatedSeries1 {
  public:
    using CoeffType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    TruncatedSeries1() : coef_(CoeffType::Zero(1)) {}
    explicit TruncatedSeries1(int degree, double radius = 1.0, double tail = 0.0)
        : coef_(CoeffType::Zero(degree + 1)), radius_(radius), tail_(tail) {
        check_shape();
    }
    TruncatedSeries1(CoeffType c, double radius = 1.0, double tail = 0.0)
        : coef_(std::move(c)), radius_(radius), tail_(tail) {
        if (coef_.size() == 0) coef_ = CoeffType::Zero(1);
        check_shape();
    }
    TruncatedSeries1(std::initializer_list<Scalar> c, double radius = 1.0, double tail = 0.0)
        : coef_(Eigen::Map<const CoeffType>(c.begin(), static_cast<Eigen::Index>(c.size()))),
          radius_(radius), tail_(tail) {
        if (coef_.size() == 0) coef_ = CoeffType::Zero(1);
        check_shape();
    }

    static TruncatedSeries1 monomial(int power, Scalar c = Scalar(1), int degree = -1, double radius = 1.0) {
        TruncatedSeries1 s(degree < power ? power : degree, radius);
        s.coef_[power] = c;
        return s;
    }
    static TruncatedSeries1 identity(int degree, double radius = 1.0) { return monomial(1, Scalar(1), degree, radius); }
    static TruncatedSeries1 constant(Scalar c, int degree = 0, double radius = 1.0) {
        TruncatedSeries1 s(degree, radius);
        s.coef_[0] = c;
        return s;
    }

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    double radius() const { return radius_; }
    double tail() const { return tail_; }
    void set_radius(double r) {
        if (!(r > 0)) throw DomainError("series radius must be positive");
        radius_ = r;
    }
    void set_tail(double t) {
        if (!(t >= 0)) throw DomainError("series tail bound must be nonnegative");
        tail_ = t;
    }

    Scalar coeff(int k) const { return (k >= 0 && k <= degree()) ? coef_[k] : Scalar(0); }
    Scalar& coeff_ref(int k) { return coef_[k]; }
    const CoeffType& coeffs() const { return coef_; }

    Scalar operator()(Scalar t) const {
        Scalar acc = coef_[degree()];
        for (int k = degree() - 1; k >= 0; --k) acc = acc * t + coef_[k];
        return acc;
    }

    double max_abs_coeff() const {
        double m = 0;
        for (int k = 0; k <= degree(); ++k) m = std::max(m, std::abs(coef_[k]));
        return m;
    }

    // sup of the polynomial part over |t| <= r, bounded by the coefficient sum.
    double sup_bound(double r) const {
        double s = 0, p = 1;
        for (int k = 0; k <= degree(); ++k, p *= r) s += std::abs(coef_[k]) * p;
        return s;
    }
    double sup_bound() const { return sup_bound(radius_); }

    TruncatedSeries1 truncated(int new_degree) const {
        if (new_degree >= degree()) {
            TruncatedSeries1 r = *this;
            if (new_degree > degree()) {
                CoeffType c = CoeffType::Zero(new_degree + 1);
                c.head(coef_.size()) = coef_;
                r.coef_ = std::move(c);
            }
            return r;
        }
        TruncatedSeries1 r(new_degree, radius_, tail_);
        r.coef_ = coef_.head(new_degree + 1);
        // dropped terms are absorbed into the tail bound
        double extra = 0, p = std::pow(radius_, new_degree + 1);
        for (int k = new_degree + 1; k <= degree(); ++k, p *= radius_) extra += std::abs(coef_[k]) * p;
        r.tail_ = tail_ + extra;
        return r;
    }

    // variable scaling t -> a t (exact)
    TruncatedSeries1 scaled_variable(Scalar a) const {
        TruncatedSeries1 r = *this;
        Scalar p(1);
        for (int k = 0; k <= degree(); ++k, p *= a) r.coef_[k] *= p;
        double aa = std::abs(a);
        if (aa > 0) r.radius_ = radius_ / aa;
        return r;
    }

  private:
    void check_shape() const {
        if (!(radius_ > 0)) throw DomainError("series radius must be positive");
        if (!(tail_ >= 0)) throw DomainError("series tail bound must be nonnegative");
        for (int k = 0; k < coef_.size(); ++k)
            if (!std::isfinite(std::abs(coef_[k]))) throw DomainError("non-finite series coefficient");
    }

    CoeffType coef_;
    double radius_ = 1.0;
    double tail_ = 0.0;
};

using Series1 = TruncatedSeries1<>;

template <typename S>
TruncatedSeries1<S> operator+(const TruncatedSeries1<S>& a, const TruncatedSeries1<S>& b) {
    int d = std::min(a.degree(), b.degree());
    double r = std::min(a.radius(), b.radius());
    TruncatedSeries1<S> at = a.truncated(d), bt = b.truncated(d);
    TruncatedSeries1<S> res(d, r, at.tail() + bt.tail());
    for (int k = 0; k <= d; ++k) res.coeff_ref(k) = at.coeff(k) + bt.coeff(k);
    return res;
}

template <typename S>
TruncatedSeries1<S> operator-(const TruncatedSeries1<S>& a, const TruncatedSeries1<S>& b) {
    return a + (b * S(-1));
}

template <typename S>
TruncatedSeries1<S> operator*(const TruncatedSeries1<S>& a, S c) {
    TruncatedSeries1<S> r = a;
    for (int k = 0; k <= r.degree(); ++k) r.coeff_ref(k) *= c;
    r.set_tail(a.tail() * std::abs(c));
    return r;
}
template <typename S>
TruncatedSeries1<S> operator*(S c, const TruncatedSeries1<S>& a) { return a * c; }

template <typename S>
TruncatedSeries1<S> operator*(const TruncatedSeries1<S>& a, const TruncatedSeries1<S>& b) {
    int d = std::min(a.degree(), b.degree());
    double r = std::min(a.radius(), b.radius());
    TruncatedSeries1<S> res(d, r);
    double dropped = 0;
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            if (i + j <= d)
                res.coeff_ref(i + j) += a.coeff(i) * b.coeff(j);
            else
                dropped += std::abs(a.coeff(i)) * std::abs(b.coeff(j)) * std::pow(r, i + j);
        }
    }
    // cross terms between tails and polynomial parts, plus dropped monomials
    res.set_tail(a.tail() * b.sup_bound(r) + b.tail() * a.sup_bound(r) + a.tail() * b.tail() + dropped);
    return res;
}

template <typename S>
TruncatedSeries1<S> derive(const TruncatedSeries1<S>& a) {
    if (a.degree() == 0) throw DomainError("cannot derive a degree-0 series");
    TruncatedSeries1<S> r(a.degree() - 1, a.radius());
    for (int k = 1; k <= a.degree(); ++k) r.coeff_ref(k - 1) = a.coeff(k) * S(double(k));
    if (a.tail() > 0) {
        // Cauchy estimate on the half-radius disk for the remainder's derivative
        r.set_radius(a.radius() / 2);
        r.set_tail(4.0 * a.tail() / a.radius());
    }
    return r;
}

// Coefficient-level composition with no domain accounting; used by jet
// algebra (reversion, conjugacy recurrences) where only the truncated
// coefficients are meaningful.
template <typename S>
TruncatedSeries1<S> compose_formal(const TruncatedSeries1<S>& outer, const TruncatedSeries1<S>& inner) {
    int d = std::min(outer.degree(), inner.degree());
    TruncatedSeries1<S> in = inner.truncated(d);
    in.set_tail(0);
    TruncatedSeries1<S> acc = TruncatedSeries1<S>::constant(outer.coeff(outer.degree()), d, inner.radius());
    for (int k = outer.degree() - 1; k >= 0; --k) {
        acc = acc * in;
        acc.set_tail(0);
        acc.coeff_ref(0) += outer.coeff(k);
    }
    return acc;
}

// outer(inner(t)) through degree min(D_outer, D_inner).  Horner on truncated
// arithmetic keeps the coefficients exact through the result degree and
// accumulates dropped-term bounds in the tail.
template <typename S>
TruncatedSeries1<S> compose(const TruncatedSeries1<S>& outer, const TruncatedSeries1<S>& inner) {
    double inner_sup = inner.sup_bound() + inner.tail();
    if (inner_sup > outer.radius() + kDefaultRelTol)
        throw DomainError("composition domain violation: sup|inner| exceeds outer radius");
    TruncatedSeries1<S> acc = compose_formal(outer, inner);
    double lip = 0, p = 1;  // sup |outer'| on the outer disk
    for (int k = 1; k <= outer.degree(); ++k) {
        lip += k * std::abs(outer.coeff(k)) * p;
        p *= outer.radius();
    }
    acc.set_tail(acc.tail() + outer.tail() + inner.tail() * lip);
    return acc;
}

template <typename S>
TruncatedSeries1<S> reciprocal(const TruncatedSeries1<S>& f);

// Compositional inverse: g with f(g(t)) = t through the common degree.
template <typename S>
TruncatedSeries1<S> revert(const TruncatedSeries1<S>& f, double tol = 1e-8) {
    double scale = std::max(1.0, f.max_abs_coeff());
    if (std::abs(f.coeff(0)) > tol * scale)
        throw DomainError("reversion requires f(0) = 0");
    if (std::abs(f.coeff(1)) < tol * scale)
        throw NonInvertibleError("non-invertible germ: |f'(0)| below tolerance");
    int d = f.degree();
    TruncatedSeries1<S> g(d, f.radius());
    g.coeff_ref(1) = S(1) / f.coeff(1);
    for (int k = 2; k <= d; ++k) {
        TruncatedSeries1<S> h = compose_formal(f.truncated(k), g.truncated(k));
        g.coeff_ref(k) = -h.coeff(k) / f.coeff(1);
    }
    // one Newton pass on the series equation f(g) = id to shed rounding
    if (d >= 1) {
        TruncatedSeries1<S> e = compose_formal(f, g);
        e.coeff_ref(1) -= S(1);
        TruncatedSeries1<S> fp(d, f.radius());
        for (int k = 1; k <= d; ++k) fp.coeff_ref(k - 1) = f.coeff(k) * S(double(k));
        g = g - e * reciprocal(compose_formal(fp, g));
    }
    if (f.tail() > 0) g.set_tail(f.tail() / std::abs(f.coeff(1)));
    return g;
}

// ---------------------------------------------------------------------------
// Two variables, total-degree triangular table, row-major in the first
// variable: (i, j) with i + j <= D, rows i = 0..D.

template <typename Scalar = Complex>
class TruncatedSeries2 {
  public:
    using CoeffType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    TruncatedSeries2() : TruncatedSeries2(0) {}
    explicit TruncatedSeries2(int degree, double r1 = 1.0, double r2 = 1.0, double tail = 0.0)
        : deg_(degree), r1_(r1), r2_(r2), tail_(tail),
          coef_(CoeffType::Zero((degree + 1) * (degree + 2) / 2)) {
        if (degree < 0) throw DomainError("negative truncation degree");
        if (!(r1 > 0) || !(r2 > 0)) throw DomainError("series radius must be positive");
    }

    static TruncatedSeries2 monomial(int i, int j, Scalar c = Scalar(1), int degree = -1,
                                     double r1 = 1.0, double r2 = 1.0) {
        TruncatedSeries2 s(degree < i + j ? i + j : degree, r1, r2);
        s.coeff_ref(i, j) = c;
        return s;
    }
    static TruncatedSeries2 constant(Scalar c, int degree, double r1 = 1.0, double r2 = 1.0) {
        return monomial(0, 0, c, degree, r1, r2);
    }

    int degree() const { return deg_; }
    double radius1() const { return r1_; }
    double radius2() const { return r2_; }
    double tail() const { return tail_; }
    void set_tail(double t) {
        if (!(t >= 0)) throw DomainError("series tail bound must be nonnegative");
        tail_ = t;
    }
    void set_radii(double r1, double r2) {
        if (!(r1 > 0) || !(r2 > 0)) throw DomainError("series radius must be positive");
        r1_ = r1; r2_ = r2;
    }

    int index(int i, int j) const { return i * (deg_ + 1) - i * (i - 1) / 2 + j; }
    Scalar coeff(int i, int j) const {
        return (i >= 0 && j >= 0 && i + j <= deg_) ? coef_[index(i, j)] : Scalar(0);
    }
    Scalar& coeff_ref(int i, int j) { return coef_[index(i, j)]; }
    const CoeffType& table() const { return coef_; }
    Scalar& table_ref(int flat) { return coef_[flat]; }

    Scalar operator()(Scalar x, Scalar y) const {
        // Horner in x, inner Horner in y
        Scalar acc(0);
        for (int i = deg_; i >= 0; --i) {
            Scalar row(0);
            for (int j = deg_ - i; j >= 0; --j) row = row * y + coeff(i, j);
            acc = acc * x + row;
        }
        return acc;
    }

    double max_abs_coeff() const {
        double m = 0;
        for (int k = 0; k < coef_.size(); ++k) m = std::max(m, std::abs(coef_[k]));
        return m;
    }

    double sup_bound(double r1, double r2) const {
        double s = 0;
        for (int i = 0; i <= deg_; ++i)
            for (int j = 0; i + j <= deg_; ++j)
                s += std::abs(coeff(i, j)) * std::pow(r1, i) * std::pow(r2, j);
        return s;
    }
    double sup_bound() const { return sup_bound(r1_, r2_); }

    TruncatedSeries2 truncated(int new_degree) const {
        TruncatedSeries2 r(new_degree, r1_, r2_, tail_);
        double extra = 0;
        for (int i = 0; i <= deg_; ++i)
            for (int j = 0; i + j <= deg_; ++j) {
                if (i + j <= new_degree)
                    r.coeff_ref(i, j) = coeff(i, j);
                else
                    extra += std::abs(coeff(i, j)) * std::pow(r1_, i) * std::pow(r2_, j);
            }
        r.tail_ = tail_ + extra;
        return r;
    }

    // lowest total degree with a coefficient above tol * max|c|; degree()+1 if none
    int order(double rel_tol = kDefaultRelTol) const {
        double floor = rel_tol * std::max(1e-300, max_abs_coeff());
        for (int d = 0; d <= deg_; ++d)
            for (int i = 0; i <= d; ++i)
                if (std::abs(coeff(i, d - i)) > floor) return d;
        return deg_ + 1;
    }

  private:
    int deg_;
    double r1_, r2_, tail_;
    CoeffType coef_;
};

using Series2 = TruncatedSeries2<>;

template <typename S>
TruncatedSeries2<S> operator+(const TruncatedSeries2<S>& a, const TruncatedSeries2<S>& b) {
    int d = std::min(a.degree(), b.degree());
    TruncatedSeries2<S> at = a.truncated(d), bt = b.truncated(d);
    TruncatedSeries2<S> r(d, std::min(a.radius1(), b.radius1()), std::min(a.radius2(), b.radius2()),
                          at.tail() + bt.tail());
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) r.coeff_ref(i, j) = at.coeff(i, j) + bt.coeff(i, j);
    return r;
}

template <typename S>
TruncatedSeries2<S> operator*(const TruncatedSeries2<S>& a, S c) {
    TruncatedSeries2<S> r = a;
    for (int i = 0; i <= r.degree(); ++i)
        for (int j = 0; i + j <= r.degree(); ++j) r.coeff_ref(i, j) *= c;
    r.set_tail(a.tail() * std::abs(c));
    return r;
}
template <typename S>
TruncatedSeries2<S> operator*(S c, const TruncatedSeries2<S>& a) { return a * c; }

template <typename S>
TruncatedSeries2<S> operator-(const TruncatedSeries2<S>& a, const TruncatedSeries2<S>& b) {
    return a + b * S(-1);
}

template <typename S>
TruncatedSeries2<S> operator*(const TruncatedSeries2<S>& a, const TruncatedSeries2<S>& b) {
    int d = std::min(a.degree(), b.degree());
    double r1 = std::min(a.radius1(), b.radius1());
    double r2 = std::min(a.radius2(), b.radius2());
    TruncatedSeries2<S> res(d, r1, r2);
    double dropped = 0;
    for (int i1 = 0; i1 <= a.degree(); ++i1)
        for (int j1 = 0; i1 + j1 <= a.degree(); ++j1) {
            S ca = a.coeff(i1, j1);
            if (ca == S(0)) continue;
            for (int i2 = 0; i2 <= b.degree(); ++i2)
                for (int j2 = 0; i2 + j2 <= b.degree(); ++j2) {
                    S cb = b.coeff(i2, j2);
                    if (cb == S(0)) continue;
                    if (i1 + i2 + j1 + j2 <= d)
                        res.coeff_ref(i1 + i2, j1 + j2) += ca * cb;
                    else
                        dropped += std::abs(ca) * std::abs(cb) * std::pow(r1, i1 + i2) * std::pow(r2, j1 + j2);
                }
        }
    res.set_tail(a.tail() * b.sup_bound(r1, r2) + b.tail() * a.sup_bound(r1, r2) + a.tail() * b.tail() + dropped);
    return res;
}

enum class Var { first, second };

template <typename S>
TruncatedSeries2<S> derive(const TruncatedSeries2<S>& a, Var v) {
    if (a.degree() == 0) throw DomainError("cannot derive a degree-0 series");
    TruncatedSeries2<S> r(a.degree() - 1, a.radius1(), a.radius2());
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; i + j <= a.degree(); ++j) {
            if (v == Var::first && i >= 1) r.coeff_ref(i - 1, j) = a.coeff(i, j) * S(double(i));
            if (v == Var::second && j >= 1) r.coeff_ref(i, j - 1) = a.coeff(i, j) * S(double(j));
        }
    if (a.tail() > 0) {
        double rr = (v == Var::first) ? a.radius1() : a.radius2();
        if (v == Var::first) r.set_radii(a.radius1() / 2, a.radius2());
        else r.set_radii(a.radius1(), a.radius2() / 2);
        r.set_tail(4.0 * a.tail() / rr);
    }
    return r;
}

// Per-monomial divide w_{ij} = rhs_{ij} / eigen_factor(i, j); the workhorse of
// normal-form and invariant-graph recurrences.  A divisor below the floor on a
// non-negligible monomial is a (near-)resonance signal.
template <typename S>
TruncatedSeries2<S> solve_homological(const TruncatedSeries2<S>& rhs,
                                      const std::function<S(int, int)>& eigen_factor,
                                      double divisor_floor = kSmallDivisorFloor,
                                      double rel_tol = kDefaultRelTol) {
    TruncatedSeries2<S> w(rhs.degree(), rhs.radius1(), rhs.radius2());
    double scale = rhs.max_abs_coeff();
    for (int i = 0; i <= rhs.degree(); ++i)
        for (int j = 0; i + j <= rhs.degree(); ++j) {
            S c = rhs.coeff(i, j);
            if (std::abs(c) <= rel_tol * scale) continue;
            S f = eigen_factor(i, j);
            if (std::abs(f) < divisor_floor) throw SmallDivisorError(i, j, std::abs(f));
            w.coeff_ref(i, j) = c / f;
        }
    return w;
}

// Restrictions and promotions ------------------------------------------------

// F(x, 0) or F(0, y) as a one-variable series
template <typename S>
TruncatedSeries1<S> restrict_to_axis(const TruncatedSeries2<S>& f, Var kept) {
    TruncatedSeries1<S> r(f.degree(), kept == Var::first ? f.radius1() : f.radius2(), f.tail());
    for (int k = 0; k <= f.degree(); ++k)
        r.coeff_ref(k) = (kept == Var::first) ? f.coeff(k, 0) : f.coeff(0, k);
    return r;
}

template <typename S>
TruncatedSeries2<S> promote(const TruncatedSeries1<S>& f, Var as, int degree, double other_radius = 1.0) {
    TruncatedSeries2<S> r(degree,
                          as == Var::first ? f.radius() : other_radius,
                          as == Var::second ? f.radius() : other_radius, f.tail());
    for (int k = 0; k <= std::min(degree, f.degree()); ++k) {
        if (as == Var::first) r.coeff_ref(k, 0) = f.coeff(k);
        else r.coeff_ref(0, k) = f.coeff(k);
    }
    return r;
}

// F(X(x,y), Y(x,y)) truncated to min degree, by Horner in both slots.  This is
// a jet-level operation: the result carries f's tail, not the compounded
// product bounds (which are vacuous for conjugacy algebra).
template <typename S>
TruncatedSeries2<S> substitute(const TruncatedSeries2<S>& f, const TruncatedSeries2<S>& X,
                               const TruncatedSeries2<S>& Y) {
    int d = std::min({f.degree(), X.degree(), Y.degree()});
    TruncatedSeries2<S> Xt = X.truncated(d), Yt = Y.truncated(d);
    Xt.set_tail(0); Yt.set_tail(0);
    // rows in x: f = sum_i x^i A_i(y); evaluate A_i at Y, then Horner in X
    TruncatedSeries2<S> acc(d, Xt.radius1(), Xt.radius2());
    for (int i = f.degree(); i >= 0; --i) {
        TruncatedSeries2<S> row(d, Xt.radius1(), Xt.radius2());
        for (int j = f.degree() - i; j >= 0; --j) {
            row = row * Yt;
            row.set_tail(0);
            row.coeff_ref(0, 0) += f.coeff(i, j);
        }
        acc = acc * Xt + row;
        acc.set_tail(0);
    }
    acc.set_tail(f.tail());
    return acc;
}

// F(x(t), y(t)) as a one-variable series (jet-level, see substitute)
template <typename S>
TruncatedSeries1<S> substitute_curve(const TruncatedSeries2<S>& f, const TruncatedSeries1<S>& x,
                                     const TruncatedSeries1<S>& y) {
    int d = std::min({f.degree(), x.degree(), y.degree()});
    TruncatedSeries1<S> xt = x.truncated(d), yt = y.truncated(d);
    xt.set_tail(0); yt.set_tail(0);
    TruncatedSeries1<S> acc(d, xt.radius());
    for (int i = f.degree(); i >= 0; --i) {
        TruncatedSeries1<S> row(d, xt.radius());
        for (int j = f.degree() - i; j >= 0; --j) {
            row = row * yt;
            row.set_tail(0);
            row.coeff_ref(0) += f.coeff(i, j);
        }
        acc = acc * xt + row;
        acc.set_tail(0);
    }
    acc.set_tail(f.tail());
    return acc;
}

// Exact division by x or y; throws if the complementary boundary row is nonzero.
template <typename S>
TruncatedSeries2<S> divide_by_variable(const TruncatedSeries2<S>& f, Var v, double rel_tol = 1e-8) {
    double scale = std::max(1e-300, f.max_abs_coeff());
    TruncatedSeries2<S> r(f.degree() == 0 ? 0 : f.degree() - 1, f.radius1(), f.radius2(), f.tail());
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; i + j <= f.degree(); ++j) {
            S c = f.coeff(i, j);
            bool boundary = (v == Var::first) ? (i == 0) : (j == 0);
            if (boundary) {
                if (std::abs(c) > rel_tol * scale)
                    throw DomainError("series not divisible by the requested variable");
                continue;
            }
            if (v == Var::first) r.coeff_ref(i - 1, j) = c;
            else r.coeff_ref(i, j - 1) = c;
        }
    return r;
}

// low-order arithmetic used by germ code: multiplicative inverse of a unit series
template <typename S>
TruncatedSeries1<S> reciprocal(const TruncatedSeries1<S>& f) {
    if (std::abs(f.coeff(0)) < 1e-14) throw NonInvertibleError("reciprocal of a non-unit series");
    int d = f.degree();
    TruncatedSeries1<S> g(d, f.radius());
    g.coeff_ref(0) = S(1) / f.coeff(0);
    for (int k = 1; k <= d; ++k) {
        S acc(0);
        for (int i = 1; i <= k; ++i) acc += f.coeff(i) * g.coeff(k - i);
        g.coeff_ref(k) = -acc / f.coeff(0);
    }
    return g;
}

}  // namespace tanglab

#endif

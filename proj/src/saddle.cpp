#include "tanglab/saddle.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace tanglab {

PeriodicPointReport find_periodic(const AnyMap& map, int period, const Vec2& seed, double tol,
                                  int max_iter, double indifferent_band) {
    if (period < 1) throw DomainError("period must be >= 1");
    Vec2 z = seed;
    double res = 0;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        Vec2 F = iterate(map, z, period) - z;
        res = F.norm();
        if (res <= tol * (1 + z.norm())) {
            converged = true;
            break;
        }
        Mat2 J = iterate_derivative(map, z, period) - Mat2::Identity();
        double scale = J.cwiseAbs().maxCoeff();
        if (std::abs(J.determinant()) < 1e-14 * std::max(1.0, scale * scale))
            throw NewtonError("singular Newton matrix: derivative of f^n - id is non-invertible "
                              "(multiplier-1 degeneracy)");
        z -= J.partialPivLu().solve(F);
        if (!std::isfinite(z.norm()) || z.norm() > 1e8) throw NewtonError("Newton divergence");
    }
    if (!converged) throw NewtonError("Newton did not converge within the iteration cap");

    Mat2 D = iterate_derivative(map, z, period);
    Eigen::ComplexEigenSolver<Mat2> es(D);
    int i1 = std::abs(es.eigenvalues()[0]) >= std::abs(es.eigenvalues()[1]) ? 0 : 1;
    Complex mu1 = es.eigenvalues()[i1], mu2 = es.eigenvalues()[1 - i1];

    PeriodicPointReport rep;
    rep.point = z;
    rep.period = period;
    rep.mu1 = mu1;
    rep.mu2 = mu2;
    rep.residual = (iterate(map, z, period) - z).norm();

    auto near_one = [&](Complex m) { return std::abs(std::abs(m) - 1.0) <= indifferent_band; };
    if (near_one(mu1) || near_one(mu2)) {
        rep.type = PointType::indifferent;
    } else if (std::abs(mu1) > 1 && std::abs(mu2) < 1) {
        rep.type = PointType::saddle;
        SaddleData sd;
        sd.point = z;
        sd.period = period;
        sd.u = mu1;
        sd.s = mu2;
        sd.e_u = es.eigenvectors().col(i1).normalized();
        sd.e_s = es.eigenvectors().col(1 - i1).normalized();
        sd.residual = rep.residual;
        sd.rho = margins(mu1, mu2, 1).rho;
        rep.saddle = sd;
    } else if (std::abs(mu1) < 1) {
        rep.type = PointType::sink;
    } else {
        rep.type = PointType::source;
    }
    return rep;
}

std::vector<std::pair<int, int>> detect_resonance(Complex u, Complex s, int order, double tol) {
    if (!(std::abs(s) < 1 && 1 < std::abs(u))) throw DomainError("resonance scan needs |s| < 1 < |u|");
    std::vector<std::pair<int, int>> found;
    for (int a = 1; a < order; ++a) {
        Complex ua = std::pow(u, a);
        for (int b = 1; a + b <= order; ++b) {
            if (std::abs(ua * std::pow(s, b) - Complex(1)) <= tol) found.emplace_back(a, b);
        }
    }
    return found;
}

std::vector<std::pair<int, int>> near_resonances(Complex u, Complex s, int order, double tol,
                                                 double band) {
    std::vector<std::pair<int, int>> found;
    for (int a = 1; a < order; ++a)
        for (int b = 1; a + b <= order; ++b) {
            double d = std::abs(std::pow(u, a) * std::pow(s, b) - Complex(1));
            if (d > tol && d <= band) found.emplace_back(a, b);
        }
    return found;
}

Margins margins(Complex u, Complex s, int ell) {
    double au = std::abs(u), ais = 1.0 / std::abs(s);
    if (au <= 1 + 1e-14 || ais <= 1 + 1e-14) throw DomainError("degenerate multiplier modulus 1");
    double rho = std::min(std::min(au - 1, ais - 1), std::min(1 / (au - 1), 1 / (ais - 1)));
    double L = std::log(1 + 1 / rho) / std::log(1 + rho);
    Margins m;
    m.rho = rho;
    m.r = static_cast<int>(std::ceil(2 + (1 + L) * ell - 1e-12));
    m.k_prime = static_cast<int>(std::ceil(2 + L - 1e-12));
    return m;
}

ManifoldGerm manifold_germ(const AnyMap& map, const SaddleData& saddle, BranchKind kind, int degree,
                           double radius) {
    const Complex mu = (kind == BranchKind::stable) ? saddle.s : saddle.u;
    const Vec2 ev = (kind == BranchKind::stable) ? saddle.e_s : saddle.e_u;
    Mat2 D = iterate_derivative(map, saddle.point, saddle.period);

    Series1 wx(degree), wy(degree);
    wx.coeff_ref(0) = saddle.point[0];
    wy.coeff_ref(0) = saddle.point[1];
    wx.coeff_ref(1) = ev[0];
    wy.coeff_ref(1) = ev[1];

    auto push_curve = [&](const Series1& x, const Series1& y) {
        std::pair<Series1, Series1> c{x, y};
        for (int i = 0; i < saddle.period; ++i) {
            c = std::visit([&](const auto& m) { return apply_to_curve(m, c.first, c.second); }, map);
        }
        return c;
    };

    Complex muk = mu;
    for (int k = 2; k <= degree; ++k) {
        muk *= mu;
        auto img = push_curve(wx.truncated(k), wy.truncated(k));
        Vec2 Nk(img.first.coeff(k), img.second.coeff(k));
        Mat2 A = muk * Mat2::Identity() - D;
        double scale = std::max(1.0, D.cwiseAbs().maxCoeff());
        if (std::abs(A.determinant()) < kSmallDivisorFloor * scale)
            throw SmallDivisorError(k, 0, std::abs(A.determinant()));
        Vec2 wk = A.partialPivLu().solve(Nk);
        wx.coeff_ref(k) = wk[0];
        wy.coeff_ref(k) = wk[1];
    }

    ManifoldGerm germ;
    germ.saddle = saddle;
    germ.stable = (kind == BranchKind::stable);
    germ.multiplier = mu;
    germ.radius = radius;
    germ.x = wx;
    germ.y = wy;

    double worst = 0;
    const int samples = 64;
    for (int i = 0; i < samples; ++i) {
        Complex t = std::polar(radius, 2 * M_PI * i / samples);
        Vec2 w(wx(t), wy(t));
        Vec2 img = iterate(map, w, saddle.period);
        Vec2 tgt(wx(mu * t), wy(mu * t));
        worst = std::max(worst, (img - tgt).norm());
    }
    germ.residual = worst;
    return germ;
}

Series1 koenigs_linearize(const Series1& h, int k, double tol) {
    const int d = h.degree();
    const Complex u = h.coeff(1);
    double scale = std::max(1.0, h.max_abs_coeff());
    if (std::abs(h.coeff(0)) > tol * scale) throw DomainError("linearization requires h(0) = 0");
    if (std::abs(std::abs(u) - 1.0) < 1e-10)
        throw DomainError("linearization at an indifferent multiplier");
    for (int j = 2; j <= std::min(d, k + 1); ++j)
        if (std::abs(h.coeff(j)) > tol * scale)
            throw DomainError("linearization flatness violated: nonzero coefficient at degree " +
                              std::to_string(j));

    Series1 phi = Series1::identity(d, h.radius());
    Complex uj = u;
    for (int j = 2; j <= d; ++j) {
        uj *= u;
        Series1 lhs = compose_formal(phi.truncated(j), h.truncated(j));
        // phi(h(x)) = u phi(x): with phi_j unknown the j-th coefficient reads
        // phi_j u^j + known = u phi_j
        phi.coeff_ref(j) = -lhs.coeff(j) / (uj - u);
        // re-add the piece of lhs that assumed phi_j = 0
        phi.coeff_ref(j) += Complex(0);
    }
    return phi;
}

namespace {

// (x, y) -> (x + psi(y), y) and its exact inverse, as local maps
LocalMap shear_x(const Series1& psi, int degree, Complex sign) {
    Series2 fx = Series2::monomial(1, 0, Complex(1), degree);
    fx = fx + promote(psi, Var::second, degree) * sign;
    Series2 fy = Series2::monomial(0, 1, Complex(1), degree);
    return {fx, fy};
}

LocalMap shear_y(const Series1& chi, int degree, Complex sign) {
    Series2 fx = Series2::monomial(1, 0, Complex(1), degree);
    Series2 fy = Series2::monomial(0, 1, Complex(1), degree);
    fy = fy + promote(chi, Var::first, degree) * sign;
    return {fx, fy};
}

double germ_distance(const LocalMap& a, const LocalMap& b) {
    double d = 0;
    int deg = std::min(a.degree(), b.degree());
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) {
            d = std::max(d, std::abs(a.fx.coeff(i, j) - b.fx.coeff(i, j)));
            d = std::max(d, std::abs(a.fy.coeff(i, j) - b.fy.coeff(i, j)));
        }
    return d;
}

}  // namespace

LocalMap NormalFormGerm::as_map(int degree) const {
    Series2 x = Series2::monomial(1, 0, Complex(1), degree);
    Series2 y = Series2::monomial(0, 1, Complex(1), degree);
    Series2 fx = u * (x * (Series2::constant(Complex(1), degree) + y * g1.truncated(degree)));
    Series2 fy = s * (y * (Series2::constant(Complex(1), degree) + x * g2.truncated(degree)));
    return {fx, fy};
}

NormalFormGerm normal_form(const LocalMap& germ, int k, double tol) {
    const int D = germ.degree();
    if (D < k + 2) throw DomainError("normal form needs truncation degree >= k + 2");
    Mat2 L = germ.linear_part();
    double lscale = L.cwiseAbs().maxCoeff();
    if (std::abs(L(0, 1)) > tol * lscale || std::abs(L(1, 0)) > tol * lscale)
        throw DomainError("normal form expects a diagonal linear part (localize with an eigenframe)");
    const Complex u = L(0, 0), s = L(1, 1);
    if (!(std::abs(s) < 1 && 1 < std::abs(u))) throw DomainError("normal form requires a saddle germ");

    auto res = detect_resonance(u, s, k + 1);
    if (!res.empty()) throw ResonanceError(res.front().first, res.front().second);

    LocalMap F = germ;
    LocalMap change{Series2::monomial(1, 0, Complex(1), D), Series2::monomial(0, 1, Complex(1), D)};

    // stage 1: kill all nonlinear monomials of total degree 2..k+1
    for (int d = 2; d <= k + 1; ++d) {
        Series2 H1(D), H2(D);
        bool any = false;
        for (int i = 0; i <= d; ++i) {
            int j = d - i;
            Complex c1 = F.fx.coeff(i, j), c2 = F.fy.coeff(i, j);
            if (std::abs(c1) > 0) { H1.coeff_ref(i, j) = c1; any = true; }
            if (std::abs(c2) > 0) { H2.coeff_ref(i, j) = c2; any = true; }
        }
        if (!any) continue;
        Series2 h1 = solve_homological<Complex>(
            H1, [&](int i, int j) { return std::pow(u, i) * std::pow(s, j) - u; });
        Series2 h2 = solve_homological<Complex>(
            H2, [&](int i, int j) { return std::pow(u, i) * std::pow(s, j) - s; });
        LocalMap phi{Series2::monomial(1, 0, Complex(1), D) + h1,
                     Series2::monomial(0, 1, Complex(1), D) + h2};
        F = compose(invert_germ(phi), compose(F, phi));
        change = compose(change, phi);
    }

    // stage 2: straighten the separatrices.  Stable graph x = psi(y):
    for (int pass = 0; pass < 2; ++pass) {
        bool stable_pass = (pass == 0);
        Series1 g(D);
        for (int j = 2; j <= D; ++j) {
            Series1 gj = g.truncated(j);
            Series1 idv = Series1::identity(j);
            Series1 Fx, Fy;
            if (stable_pass) {
                Fx = substitute_curve(F.fx, gj, idv);
                Fy = substitute_curve(F.fy, gj, idv);
                Series1 G = Fx - compose_formal(gj, Fy);
                Complex div = u - std::pow(s, j);
                g.coeff_ref(j) = -G.coeff(j) / div;
            } else {
                Fx = substitute_curve(F.fx, idv, gj);
                Fy = substitute_curve(F.fy, idv, gj);
                Series1 G = Fy - compose_formal(gj, Fx);
                Complex div = s - std::pow(u, j);
                g.coeff_ref(j) = -G.coeff(j) / div;
            }
        }
        LocalMap phi = stable_pass ? shear_x(g, D, Complex(1)) : shear_y(g, D, Complex(1));
        LocalMap phi_inv = stable_pass ? shear_x(g, D, Complex(-1)) : shear_y(g, D, Complex(-1));
        F = compose(phi_inv, compose(F, phi));
        change = compose(change, phi);
    }

    // stage 3: Koenigs linearization inside each separatrix
    {
        Series1 hu = restrict_to_axis(F.fx, Var::first);
        Series1 phiu = koenigs_linearize(hu, k, tol);
        Series1 phiu_inv = revert(phiu);
        LocalMap cu{promote(phiu_inv, Var::first, D), Series2::monomial(0, 1, Complex(1), D)};
        LocalMap cu_fwd{promote(phiu, Var::first, D), Series2::monomial(0, 1, Complex(1), D)};
        F = compose(cu_fwd, compose(F, cu));
        change = compose(change, cu);

        Series1 hs = restrict_to_axis(F.fy, Var::second);
        Series1 phis = koenigs_linearize(hs, k, tol);
        Series1 phis_inv = revert(phis);
        LocalMap cs{Series2::monomial(1, 0, Complex(1), D), promote(phis_inv, Var::second, D)};
        LocalMap cs_fwd{Series2::monomial(1, 0, Complex(1), D), promote(phis, Var::second, D)};
        F = compose(cs_fwd, compose(F, cs));
        change = compose(change, cs);
    }

    NormalFormGerm nf;
    nf.u = u;
    nf.s = s;
    nf.k = k;
    nf.change = change;

    Series2 q1 = divide_by_variable(F.fx, Var::first, 100 * tol) * (Complex(1) / u);
    q1.coeff_ref(0, 0) -= Complex(1);
    nf.g1 = divide_by_variable(q1, Var::second, 100 * tol);
    Series2 q2 = divide_by_variable(F.fy, Var::second, 100 * tol) * (Complex(1) / s);
    q2.coeff_ref(0, 0) -= Complex(1);
    nf.g2 = divide_by_variable(q2, Var::first, 100 * tol);
    nf.norm_g1 = nf.g1.sup_bound();
    nf.norm_g2 = nf.g2.sup_bound();

    // conjugacy residual: input ∘ change vs change ∘ output, coefficient-wise
    LocalMap lhs = compose(germ, change);
    LocalMap rhs = compose(change, nf.as_map(D));
    nf.conjugacy_residual = germ_distance(lhs, rhs);
    return nf;
}

Series1 zero_slope_section(const NormalFormGerm& nf, int degree) {
    const Complex u = nf.u, s = nf.s;
    Margins m = margins(u, s, 1);
    auto res = detect_resonance(u, s, m.k_prime);
    if (!res.empty()) throw ResonanceError(res.front().first, res.front().second);

    Series1 g1_axis = restrict_to_axis(nf.g1, Var::second).truncated(degree);
    Series1 g2_axis = restrict_to_axis(nf.g2, Var::second).truncated(degree);
    Series1 y = Series1::identity(degree);
    Series1 A = y * g1_axis;          // so 1 + A multiplies the slope denominator
    Series1 B = y * g2_axis;
    const Complex su = s / u;

    Series1 zeta(degree);
    for (int j = 1; j <= degree; ++j) {
        // residual of the invariance equation with zeta_j = 0
        Series1 zj = zeta.truncated(j);
        Series1 lhs = zj.scaled_variable(s) * (Series1::constant(Complex(1), j) + A.truncated(j));
        Series1 rhs = (zj + B.truncated(j)) * su;
        Complex div = std::pow(s, j) - su;
        if (std::abs(div) < kSmallDivisorFloor) throw SmallDivisorError(1, j - 1, std::abs(div));
        zeta.coeff_ref(j) = (rhs.coeff(j) - lhs.coeff(j)) / div;
    }
    return zeta;
}

std::pair<Complex, Complex> projectivized_step(const NormalFormGerm& nf, Complex y, Complex m) {
    Series1 g1_axis = restrict_to_axis(nf.g1, Var::second);
    Series1 g2_axis = restrict_to_axis(nf.g2, Var::second);
    Complex denom = Complex(1) + y * g1_axis(y);
    Complex mp = (nf.s / nf.u) * (m + y * g2_axis(y)) / denom;
    return {nf.s * y, mp};
}

bool dynamical_slope_nonzero(const NormalFormGerm& nf, Complex y, Complex slope, double tol) {
    int degree = std::max(8, nf.g1.degree() + 2);
    Series1 zeta = zero_slope_section(nf, degree);
    return std::abs(slope - zeta(y)) > tol;
}

}  // namespace tanglab

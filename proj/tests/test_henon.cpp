#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "tanglab/henon.hpp"

using namespace tanglab;
using C = Complex;

TEST_CASE("quadratic Hénon fixes the origin at c = 0") {
    auto f = PolynomialAutomorphism::quadratic(C(0.5), C(0));
    Vec2 img = map_point(f, Vec2(C(0), C(0)));
    CHECK(img.norm() == 0.0);
}

TEST_CASE("single factor h_{z^2,1} at (1,1)") {
    CoeffVec p(3);
    p << C(0), C(0), C(1);
    PolynomialAutomorphism f({HenonFactor(p, C(1))});
    Vec2 img = map_point(f, Vec2(C(1), C(1)));
    CHECK(std::abs(img[0] - C(2)) < 1e-15);
    CHECK(std::abs(img[1] - C(1)) < 1e-15);
}

TEST_CASE("inverse round-trips 100 random points") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-2, 2);
    CoeffVec p1(3), p2(4);
    p1 << C(-1.1, 0.2), C(0.3), C(1);
    p2 << C(0.5), C(0, -0.4), C(0.1), C(1);
    PolynomialAutomorphism f({HenonFactor(p1, C(0.3, 0.1)), HenonFactor(p2, C(-0.7))});
    for (int i = 0; i < 100; ++i) {
        Vec2 z(C(dist(rng), dist(rng)), C(dist(rng), dist(rng)));
        Vec2 round = map_point(f, map_point(f, z), Direction::inverse);
        CHECK((round - z).norm() < 1e-10 * (1 + z.norm()));
        Vec2 round2 = map_point(f, map_point(f, z, Direction::inverse));
        CHECK((round2 - z).norm() < 1e-9 * (1 + z.norm()));
    }
}

TEST_CASE("derivative rows and constant Jacobian") {
    CoeffVec p(3);
    p << C(-1), C(0), C(1);  // z^2 - 1
    PolynomialAutomorphism f({HenonFactor(p, C(0.4))});
    Vec2 z(C(0.7, 0.1), C(-0.2));
    Mat2 D = derivative(f, z);
    CHECK(std::abs(D(0, 0) - C(1.4, 0.2)) < 1e-14);
    CHECK(std::abs(D(0, 1) - C(0.4)) < 1e-14);
    CHECK(std::abs(D(1, 0) - C(1)) < 1e-14);
    CHECK(std::abs(D(1, 1)) < 1e-14);
    CHECK(std::abs(D.determinant() - f.jacobian()) < 1e-13);
}

TEST_CASE("Jacobian constancy at 1000 random points") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> dist(-3, 3);
    CoeffVec p1(3), p2(3);
    p1 << C(0.2, -1), C(0.1), C(1);
    p2 << C(-0.6), C(0), C(0.5, 0.5);
    PolynomialAutomorphism f({HenonFactor(p1, C(0.25)), HenonFactor(p2, C(1.5, -0.2))});
    C jac = f.jacobian();
    CHECK(std::abs(jac - C(0.25) * C(1.5, -0.2)) < 1e-14);  // product of (-a_i)
    for (int i = 0; i < 1000; ++i) {
        Vec2 z(C(dist(rng), dist(rng)), C(dist(rng), dist(rng)));
        CHECK(std::abs(derivative(f, z).determinant() - jac) <= 1e-10 * (1 + std::abs(jac)));
    }
}

TEST_CASE("derivative against central finite differences") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(-1, 1);
    CoeffVec p(4);
    p << C(0.3), C(-0.2, 0.1), C(0), C(1);
    PolynomialAutomorphism f({HenonFactor(p, C(-0.35, 0.05))});
    const double h = 1e-6;
    for (int i = 0; i < 25; ++i) {
        Vec2 z(C(dist(rng), dist(rng)), C(dist(rng), dist(rng)));
        Mat2 D = derivative(f, z);
        for (int col = 0; col < 2; ++col) {
            Vec2 dz = Vec2::Zero();
            dz[col] = C(h);
            Vec2 fd = (map_point(f, Vec2(z + dz)) - map_point(f, Vec2(z - dz))) / C(2 * h);
            CHECK((fd - D.col(col)).norm() < 1e-6 * (1 + D.norm()));
        }
    }
}

TEST_CASE("family evaluation and exact parameter velocity") {
    auto fam = ParametricFamily::quadratic_henon(C(0.3), 0.4, C(-1.0), 1.0);
    Eigen::VectorXcd lam(2);
    lam << C(0.3), C(-1.2);
    auto m = fam.eval(lam);
    const auto& f = std::get<PolynomialAutomorphism>(m);
    CHECK(std::abs(f.factors()[0].a - C(0.3)) < 1e-15);
    CHECK(std::abs(f.factors()[0].P[0] - C(-1.2)) < 1e-15);

    // d/dc adds the constant map (1, 0) to the first component
    Vec2 z(C(0.2, 0.1), C(-0.4));
    Vec2 vc = fam.param_velocity(lam, 1, z);
    CHECK(std::abs(vc[0] - C(1)) < 1e-14);
    CHECK(std::abs(vc[1]) < 1e-14);

    // central finite differences in each parameter component
    const double h = 1e-6;
    for (int comp = 0; comp < 2; ++comp) {
        Eigen::VectorXcd lp = lam, lm = lam;
        lp[comp] += C(h);
        lm[comp] -= C(h);
        Vec2 fd = (map_point(fam.eval(lp), z) - map_point(fam.eval(lm), z)) / C(2 * h);
        Vec2 v = fam.param_velocity(lam, comp, z);
        CHECK((fd - v).norm() < 1e-6);
    }
    Eigen::VectorXcd outside(2);
    outside << C(5.0), C(-1.0);
    CHECK_THROWS_AS(fam.eval(outside), DomainError);
}

TEST_CASE("localize: linear-in-disguise map with identity frame") {
    // factor with P(z) = z^2 at the origin fixed point: germ linear part ((0,a),(1,0))
    CoeffVec p(3);
    p << C(0), C(0), C(1);
    PolynomialAutomorphism f({HenonFactor(p, C(0.5))});
    LocalMap germ = localize(f, Vec2(C(0), C(0)), 1, Mat2::Identity(), 4);
    Mat2 L = germ.linear_part();
    CHECK(std::abs(L(0, 0)) < 1e-14);
    CHECK(std::abs(L(0, 1) - C(0.5)) < 1e-14);
    CHECK(std::abs(L(1, 0) - C(1)) < 1e-14);
    CHECK(std::abs(germ.fx.coeff(2, 0) - C(1)) < 1e-14);  // the z^2 term survives
}

TEST_CASE("localize at the f_{0.5,0} saddle diagonalizes to diag(u, s)") {
    auto f = PolynomialAutomorphism::quadratic(C(0.5), C(0));
    Vec2 fp(C(0.5), C(0.5));
    Mat2 D = derivative(f, fp);
    Eigen::ComplexEigenSolver<Mat2> es(D);
    // order eigenvalues with |u| > 1 first
    int iu = std::abs(es.eigenvalues()[0]) > std::abs(es.eigenvalues()[1]) ? 0 : 1;
    Mat2 frame;
    frame.col(0) = es.eigenvectors().col(iu);
    frame.col(1) = es.eigenvectors().col(1 - iu);
    LocalMap germ = localize(f, fp, 1, frame, 6);
    Mat2 L = germ.linear_part();
    const double sqrt3 = std::sqrt(3.0);
    CHECK(std::abs(L(0, 0) - C((1 + sqrt3) / 2)) < 1e-12);
    CHECK(std::abs(L(1, 1) - C((1 - sqrt3) / 2)) < 1e-12);
    CHECK(std::abs(L(0, 1)) < 1e-12);
    CHECK(std::abs(L(1, 0)) < 1e-12);

    // conjugacy: germ agrees with frame^-1 (f(p + frame xi) - p) on a small bidisk
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-0.08, 0.08);
    for (int i = 0; i < 30; ++i) {
        Vec2 xi(C(dist(rng), dist(rng)), C(dist(rng), dist(rng)));
        Vec2 direct = frame.inverse() * (map_point(f, Vec2(fp + frame * xi)) - fp);
        Vec2 via = germ(xi);
        CHECK((direct - via).norm() < 1e-7);  // degree-6 truncation on |xi| <= 0.11
    }
}

TEST_CASE("localize truncation error scales like radius^(D+1)") {
    auto f = PolynomialAutomorphism::quadratic(C(0.5), C(0));
    Vec2 fp(C(0.5), C(0.5));
    for (int D : {2, 4}) {
        LocalMap germ = localize(f, fp, 1, Mat2::Identity(), D);
        double worst = 0;
        for (int k = 0; k < 16; ++k) {
            double th = 2 * M_PI * k / 16;
            Vec2 xi(std::polar(0.1, th), std::polar(0.1, th + 1.0));
            Vec2 direct = map_point(f, Vec2(fp + xi)) - fp;
            worst = std::max(worst, (direct - germ(xi)).norm());
        }
        // the quadratic map is exactly degree 2, so D >= 2 reproduces it
        CHECK(worst < 1e-13);
    }
    CHECK_THROWS_AS(localize(f, Vec2(C(0.3), C(0.3)), 1, Mat2::Identity(), 3), DomainError);
}

TEST_CASE("germ inversion and composition round-trip") {
    Series2 fx = Series2::monomial(1, 0, C(2), 5);
    fx.coeff_ref(0, 2) = C(0.3);
    Series2 fy = Series2::monomial(0, 1, C(1.0 / 3), 5);
    fy.coeff_ref(2, 0) = C(-0.2, 0.1);
    LocalMap f{fx, fy};
    LocalMap g = invert_germ(f);
    LocalMap round = compose(f, g);
    CHECK(std::abs(round.fx.coeff(1, 0) - C(1)) < 1e-12);
    CHECK(std::abs(round.fy.coeff(0, 1) - C(1)) < 1e-12);
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            if (i == 1 && j == 0) continue;
            if (i == 0 && j == 1) continue;
            CHECK(std::abs(round.fx.coeff(i, j)) < 1e-12);
            CHECK(std::abs(round.fy.coeff(i, j)) < 1e-12);
        }
}

TEST_CASE("synthetic family evaluates and differentiates in lambda") {
    // f_lambda(x, y) = (2x + y^2 + lambda, y/3) as a germ family
    SyntheticFamily syn;
    Series2 fx0 = Series2::monomial(1, 0, C(2), 3);
    fx0.coeff_ref(0, 2) = C(1);
    syn.fx_by_power = {fx0, Series2::constant(C(1), 3)};
    syn.fy_by_power = {Series2::monomial(0, 1, C(1.0 / 3), 3)};
    ParametricFamily fam(syn, 2.0);
    Eigen::VectorXcd lam(1);
    lam << C(0.25);
    auto m = fam.eval(lam);
    const auto& germ = std::get<LocalMap>(m);
    CHECK(std::abs(germ.fx.coeff(0, 0) - C(0.25)) < 1e-15);
    Vec2 v = fam.param_velocity(lam, 0, Vec2(C(0.1), C(0.1)));
    CHECK(std::abs(v[0] - C(1)) < 1e-15);
    CHECK(std::abs(v[1]) < 1e-15);
}

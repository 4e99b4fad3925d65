#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tanglab/series.hpp"

using namespace tanglab;
using C = Complex;

namespace {

Series1 random_series(std::mt19937_64& rng, int degree, double max_coeff = 2.0) {
    std::uniform_real_distribution<double> dist(-max_coeff, max_coeff);
    Series1 s(degree);
    for (int k = 0; k <= degree; ++k) s.coeff_ref(k) = C(dist(rng), dist(rng));
    return s;
}

double coeff_distance(const Series1& a, const Series1& b) {
    double d = 0;
    for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k)
        d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
    return d;
}

}  // namespace

TEST_CASE("product identity (1+t)(1-t) = 1-t^2") {
    Series1 a({C(1), C(1), C(0)});
    Series1 b({C(1), C(-1), C(0)});
    Series1 p = a * b;
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == C(1));
    CHECK(p.coeff(1) == C(0));
    CHECK(p.coeff(2) == C(-1));
}

TEST_CASE("derivative of t^3") {
    Series1 t3 = Series1::monomial(3);
    Series1 d = derive(t3);
    CHECK(d.degree() == 2);
    CHECK(d.coeff(2) == C(3));
    CHECK_THROWS_AS(derive(Series1::constant(C(1))), DomainError);
}

TEST_CASE("two-variable add cancels the parameter") {
    Series2 a = Series2::monomial(0, 2, C(1), 2);  // t^2 with (lambda, t) ordering
    a.coeff_ref(1, 0) = C(1);                      // + lambda
    Series2 b = Series2::monomial(1, 0, C(-1), 2);
    Series2 s = a + b;
    CHECK(s.coeff(0, 2) == C(1));
    CHECK(s.coeff(1, 0) == C(0));
    CHECK(s.degree() == 2);
}

TEST_CASE("composition: outer t^2, inner 2t") {
    Series1 outer = Series1::monomial(2);
    Series1 inner = Series1::monomial(1, C(2), 2, 0.5);
    Series1 got = compose(outer, inner);
    CHECK(std::abs(got.coeff(2) - C(4)) < 1e-15);
    CHECK(std::abs(got.coeff(0)) < 1e-15);
    CHECK(std::abs(got.coeff(1)) < 1e-15);
}

TEST_CASE("composition with zero inner collapses") {
    Series1 outer({C(0), C(1), C(1)});
    Series1 inner(2);
    Series1 got = compose(outer, inner);
    for (int k = 0; k <= got.degree(); ++k) CHECK(std::abs(got.coeff(k)) < 1e-15);
}

TEST_CASE("composition recovers exp(-t) coefficients") {
    // oracle: factorial recurrence for exp
    const int D = 8;
    Series1 expser(D);
    double fact = 1;
    for (int k = 0; k <= D; ++k) {
        if (k > 0) fact *= k;
        expser.coeff_ref(k) = C(1.0 / fact);
    }
    Series1 minus_t = Series1::monomial(1, C(-1), D);
    Series1 got = compose(expser, minus_t);
    fact = 1;
    for (int k = 0; k <= D; ++k) {
        if (k > 0) fact *= k;
        double expected = ((k % 2) ? -1.0 : 1.0) / fact;
        CHECK(std::abs(got.coeff(k) - C(expected)) < 1e-14);
    }
}

TEST_CASE("composition domain violation") {
    Series1 outer = Series1::monomial(2, C(1), 2, 0.5);  // radius 1/2
    Series1 inner = Series1::monomial(1, C(3), 2, 1.0);  // sup 3 on the unit disk
    CHECK_THROWS_AS(compose(outer, inner), DomainError);
}

TEST_CASE("reversion of 2t") {
    Series1 f = Series1::monomial(1, C(2), 3);
    Series1 g = revert(f);
    CHECK(std::abs(g.coeff(1) - C(0.5)) < 1e-15);
    for (int k : {0, 2, 3}) CHECK(std::abs(g.coeff(k)) < 1e-14);
}

TEST_CASE("reversion of t + t^2 gives the Lagrange coefficients") {
    Series1 f({C(0), C(1), C(1), C(0), C(0)});
    Series1 g = revert(f);
    CHECK(std::abs(g.coeff(1) - C(1)) < 1e-13);
    CHECK(std::abs(g.coeff(2) - C(-1)) < 1e-13);
    CHECK(std::abs(g.coeff(3) - C(2)) < 1e-13);
    CHECK(std::abs(g.coeff(4) - C(-5)) < 1e-13);
}

TEST_CASE("reversion rejects t^2") {
    Series1 f = Series1::monomial(2, C(1), 4);
    CHECK_THROWS_AS(revert(f), NonInvertibleError);
}

TEST_CASE("reversion round-trip on random well-conditioned germs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        // keep |f'(0)| >= 1 so the inverse's coefficients stay O(1) and the
        // round-trip bound is actually measurable in doubles
        Series1 f = random_series(rng, 8, 1.0);
        f.coeff_ref(0) = C(0);
        f.coeff_ref(1) = C(1.0, 0.3) + f.coeff(1) * C(0.2);
        Series1 g = revert(f);
        Series1 round = compose_formal(f, g);
        Series1 id = Series1::identity(8);
        CHECK(coeff_distance(round, id) < 1e-10);
    }
}

TEST_CASE("ring axioms on random coefficient tables") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Series1 a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
        CHECK(coeff_distance(a * (b * c), (a * b) * c) < 1e-12 * a.max_abs_coeff() * b.max_abs_coeff() * c.max_abs_coeff() * 50);
        CHECK(coeff_distance(a * (b + c), a * b + a * c) < 1e-12 * 50);
        CHECK(coeff_distance(a + b, b + a) == 0.0);
    }
}

TEST_CASE("solve_homological divides monomial-wise") {
    Series2 rhs = Series2::monomial(1, 1, C(1), 2);
    auto half = solve_homological<Complex>(rhs, [](int, int) { return C(2); });
    CHECK(std::abs(half.coeff(1, 1) - C(0.5)) < 1e-15);

    Series2 zero(3);
    auto w = solve_homological<Complex>(zero, [](int, int) { return C(1e-30); });
    CHECK(w.max_abs_coeff() == 0.0);

    // u^2 - u with u = 2 divides x^2
    Series2 x2 = Series2::monomial(2, 0, C(1), 2);
    auto v = solve_homological<Complex>(x2, [](int i, int j) {
        C u(2);
        return std::pow(u, i) * std::pow(C(0.5), j) - u;
    });
    CHECK(std::abs(v.coeff(2, 0) - C(0.5)) < 1e-15);
}

TEST_CASE("solve_homological reports the offending monomial") {
    Series2 rhs = Series2::monomial(1, 1, C(1), 3);
    try {
        solve_homological<Complex>(rhs, [](int i, int j) { return (i == 1 && j == 1) ? C(1e-12) : C(1); });
        FAIL("expected a small-divisor error");
    } catch (const SmallDivisorError& e) {
        CHECK(e.i == 1);
        CHECK(e.j == 1);
    }
}

TEST_CASE("tail-bound soundness: polynomial series evaluate exactly") {
    std::mt19937_64 rng(99);
    Series1 a = random_series(rng, 5);
    CHECK(a.tail() == 0.0);
    Series1 b = random_series(rng, 5);
    Series1 p = a * b;  // truncation drops degree > 5: tail must cover it
    CHECK(p.tail() > 0.0);
    std::uniform_real_distribution<double> ang(0, 6.28);
    for (int i = 0; i < 20; ++i) {
        C t = std::polar(0.9, ang(rng));
        CHECK(std::abs(p(t) - a(t) * b(t)) <= p.tail() + 1e-12);
    }
}

TEST_CASE("truncation policy: result degree is the min input degree") {
    Series1 a(6), b(4);
    CHECK((a + b).degree() == 4);
    CHECK((a * b).degree() == 4);
    Series2 c(5), d(3);
    CHECK((c + d).degree() == 3);
    CHECK((c * d).degree() == 3);
}

TEST_CASE("two-variable substitute matches pointwise evaluation") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-0.3, 0.3);
    Series2 f(4), X(4), Y(4);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            f.coeff_ref(i, j) = C(dist(rng), dist(rng));
            X.coeff_ref(i, j) = C(dist(rng), dist(rng)) * 0.3;
            Y.coeff_ref(i, j) = C(dist(rng), dist(rng)) * 0.3;
        }
    X.coeff_ref(0, 0) = C(0);
    Y.coeff_ref(0, 0) = C(0);
    Series2 g = substitute(f, X, Y);
    for (int i = 0; i < 10; ++i) {
        C x(dist(rng) * 0.1, dist(rng) * 0.1), y(dist(rng) * 0.1, dist(rng) * 0.1);
        double err = std::abs(g(x, y) - f(X(x, y), Y(x, y)));
        // agreement to truncation order: inputs are O(0.1), degree 4
        CHECK(err < 1e-5);
    }
}

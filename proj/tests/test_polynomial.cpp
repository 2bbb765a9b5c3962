#include "polyrec/polynomial.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace polyrec;
using namespace polyrec::testutil;
using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

TEST_CASE("eval at real and complex points") {
    Polynomial w2({-3.0, 1.0, 1.0});  // z^2 + z - 3, W_2 for (1,-1,2,-3)
    CHECK(w2.eval(Real(0)) == -3);

    Polynomial zero = Polynomial::zero();
    CHECK(zero.eval(Complex(2.5, -1.0)) == Complex(0.0, 0.0));

    // root from the quadratic formula, (-1+sqrt(13))/2
    Real root = (sqrt(Real(13)) - 1) / 2;
    CHECK(abs(w2.eval(root)) < 1e-12);

    // real inputs stay exactly real
    Complex at_real = w2.eval(Complex(Real(1.5), Real(0)));
    CHECK(at_real.im.is_zero());
}

TEST_CASE("linear_combine implements one recurrence step") {
    Polynomial p({-3.0, 1.0, 1.0});
    Polynomial l1({-1.0, 1.0});
    Polynomial q({0.0, 1.0});
    Polynomial l2({-3.0, 2.0});
    Polynomial r = linear_combine(p, l1, q, l2);
    REQUIRE(r.degree() == 3);
    CHECK(r.coeff(0) == 3);
    CHECK(r.coeff(1) == -7);
    CHECK(r.coeff(2) == 2);
    CHECK(r.coeff(3) == 1);

    Polynomial one({1.0});
    Polynomial ab({2.0, 3.0});
    Polynomial combo = linear_combine(one, ab, Polynomial::zero(), Polynomial({9.0, 9.0}));
    CHECK(combo.coeff(0) == 2);
    CHECK(combo.coeff(1) == 3);

    Polynomial z({0.0, 1.0});
    Polynomial sum = linear_combine(one, z, one, Polynomial({1.0}));
    CHECK(sum.degree() == 1);
    CHECK(sum.coeff(0) == 1);
    CHECK(sum.coeff(1) == 1);

    CHECK_THROWS_AS(linear_combine(p, Polynomial({1.0, 1.0, 1.0}), q, l2),
                    std::invalid_argument);
}

TEST_CASE("derivative") {
    Polynomial p({3.0, -7.0, 2.0, 1.0});
    Polynomial d = p.derivative();
    CHECK(d.coeff(0) == -7);
    CHECK(d.coeff(1) == 4);
    CHECK(d.coeff(2) == 3);

    CHECK(Polynomial({5.0}).derivative().is_zero());

    std::vector<Real> z10(11, Real(0));
    z10[10] = 1;
    Polynomial d10 = Polynomial(z10).derivative();
    CHECK(d10.degree() == 9);
    CHECK(d10.leading() == 10);
}

TEST_CASE("divide_exact") {
    Polynomial num({-1.0, 0.0, 1.0});
    Polynomial den({-1.0, 1.0});
    DivisionResult r = divide_exact(num, den);
    CHECK(r.quotient.coeff(0) == 1);
    CHECK(r.quotient.coeff(1) == 1);
    CHECK(r.relative_remainder == 0);

    // W_2 for (1,-1,1,-1): z^2 - 1, divisible by A = z - 1
    Polynomial w2({-1.0, 0.0, 1.0});
    DivisionResult r2 = divide_exact(w2, Polynomial({-1.0, 1.0}));
    CHECK(r2.quotient.degree() == 1);
    CHECK(r2.relative_remainder == 0);

    // non-divisible: (z^2+1)/(z-1) leaves remainder p(1) = 2
    DivisionResult r3 = divide_exact(Polynomial({1.0, 0.0, 1.0}), den);
    CHECK(r3.relative_remainder == 2);

    CHECK_THROWS_AS(divide_exact(num, Polynomial::zero()), std::domain_error);
}

TEST_CASE("eval linearity over random polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng, 8);
        Polynomial q = random_poly(rng, 8);
        Real alpha(rand_in(rng, -3, 3)), beta(rand_in(rng, -3, 3));
        Complex z(rand_in(rng, -2, 2), rand_in(rng, -2, 2));
        Complex lhs = (alpha * p + beta * q).eval(z);
        Complex rhs = alpha * p.eval(z) + beta * q.eval(z);
        CHECK(approx(lhs, rhs, 1e-10));
    }
}

TEST_CASE("divide then multiply reconstructs the dividend") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng, 10);
        Polynomial q = random_poly(rng, 4);
        if (q.is_zero()) continue;
        DivisionResult r = divide_exact(p, q);
        Polynomial back = r.quotient * q;
        Polynomial resid = p - back;
        CHECK(resid.max_abs_coeff() <=
              r.relative_remainder * p.max_abs_coeff() + Real(1e-10) * (1 + p.max_abs_coeff()));
    }
}

TEST_CASE("linear_combine degree rule") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng, 8);
        Polynomial q = random_poly(rng, 8);
        Polynomial l1({rand_in(rng, -3, 3), rand_in(rng, 1, 3)});
        Polynomial l2({rand_in(rng, -3, 3), rand_in(rng, 1, 3)});
        Polynomial r = linear_combine(p, l1, q, l2);
        int expect = 1 + std::max(p.degree(), q.degree());
        // leading terms have the same sign here, no cancellation possible
        CHECK(r.degree() == expect);
    }
}

TEST_CASE("normalization flushes tiny coefficients and rejects non-finite") {
    Polynomial p({1.0, 1e-30, 1.0});
    CHECK(p.coeff(1) == 0);
    Polynomial q(std::vector<Real>{Real(1), Real(1e-30)});
    CHECK(q.degree() == 0);
    CHECK_THROWS_AS(Polynomial(std::vector<Real>{Real(1) / Real(0)}), std::invalid_argument);
}

TEST_CASE("precision is tracked per polynomial") {
    Polynomial p({1.0, 2.0}, 256);
    CHECK(p.precision_bits() == 256);
    Polynomial q = p.with_precision(128);
    CHECK(q.precision_bits() == 128);
    CHECK(q.coeff(1) == 2);
}

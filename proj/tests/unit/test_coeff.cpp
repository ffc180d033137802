#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qweyl/coeff/hseries.hpp"
#include "qweyl/coeff/ratfunc.hpp"
#include "qweyl/coeff/scalar.hpp"
#include "qweyl/error.hpp"

using namespace qweyl;
using namespace qweyl::coeff;

namespace {

Scalar s(int e) { return Scalar::s_pow(e); }

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-4, 4), num(-5, 5), den(1, 4), count(0, 4);
    Scalar out;
    int n = count(rng);
    for (int k = 0; k < n; ++k) {
        GaussianRational c(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
        c = GaussianRational(c.re(), c.im());
        out += Scalar::monomial(c, exp(rng));
    }
    return out;
}

// Factorials as exact rationals.
mpq_class inv_factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return mpq_class(1, 1) / mpq_class(f);
}

}  // namespace

TEST_CASE("gaussian rationals stay canonical") {
    GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
    CHECK(a.re() == mpq_class(1, 2));
    CHECK(a.im().get_den() == 2);
    CHECK((GaussianRational::i() * GaussianRational::i()) == GaussianRational(-1));
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(GaussianRational(0).inverse(), NonUnit);
    CHECK(GaussianRational::fraction(-1, 2).to_string() == "-1/2");
    CHECK(GaussianRational(mpq_class(1), mpq_class(2)).to_string() == "(1 + 2 i)");
}

TEST_CASE("scalar arithmetic examples") {
    CHECK((s(1) - s(-1)) * (s(1) + s(-1)) == s(2) - s(-2));
    CHECK(Scalar::q() * Scalar::q_pow(-1) == Scalar(1));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("scalar inverse") {
    Scalar iq = Scalar::i() * Scalar::q();
    CHECK(iq.inverse() == -(Scalar::i() * Scalar::q_pow(-1)));
    CHECK(Scalar(1).inverse() == Scalar(1));
    CHECK_THROWS_AS((Scalar(1) + Scalar::q()).inverse(), NonUnit);
    CHECK_THROWS_AS(Scalar().inverse(), NonUnit);
}

TEST_CASE("scalar conjugation") {
    CHECK((Scalar::i() * s(1)).conj() == -(Scalar::i() * s(1)));
    CHECK(Scalar(3).conj() == Scalar(3));
    CHECK((-Scalar::i()).conj() == Scalar::i());
}

TEST_CASE("scalar printing") {
    CHECK((s(1) - s(-1)).to_string() == "-q^(-1/2) + q^(1/2)");
    CHECK((Scalar::q() + Scalar(1) + Scalar::q_pow(-1)).to_string() == "q^-1 + 1 + q");
    CHECK(Scalar().to_string() == "0");
}

TEST_CASE("qint examples and oracle") {
    CHECK(qint(1) == Scalar(1));
    CHECK(qint(2) == s(1) + s(-1));
    CHECK(qint(3) == Scalar::q() + Scalar(1) + Scalar::q_pow(-1));
    CHECK(qint(0).is_zero());
    for (int n = -50; n <= 50; ++n) {
        CHECK(qint(n) * (s(1) - s(-1)) == s(n) - s(-n));
        // Numeric oracle at s = 1.3.
        long double x = 1.3L;
        long double expect = (std::pow(x, n) - std::pow(x, -n)) / (x - 1 / x);
        CHECK(std::abs(qint(n).evaluate(x).real() - expect) <= 1e-9L * (1 + std::abs(expect)));
    }
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        CHECK(a - a == Scalar());
    }
}

TEST_CASE("exact division and gcd") {
    Scalar a = Scalar::q() + Scalar(1), b = Scalar::q() - Scalar(2);
    CHECK(exact_divide(a * b, a) == b);
    CHECK_THROWS_AS(exact_divide(a, b), NotDivisible);
    CHECK(divides(a, a * b * s(3)));
    Scalar g = gcd(a * b, a * (Scalar::q() + Scalar(5)));
    CHECK(g == a);
}

TEST_CASE("expand q to h") {
    HSeries e = expand_q_to_h(Scalar::q(), 2);
    CHECK(e == HSeries({1, 1, GaussianRational::fraction(1, 2)}));
    HSeries sinh2 = expand_q_to_h(Scalar::q() - Scalar::q_pow(-1), 4);
    CHECK(sinh2 == HSeries({0, 2, 0, GaussianRational::fraction(1, 3), 0}));
    CHECK(expand_q_to_h(Scalar(1), 3) == HSeries::constant(1, 3));

    // Oracle: coefficient of h^n in q^(e/2) is (e/2)^n / n!.
    for (int e = -5; e <= 5; ++e) {
        HSeries x = expand_q_to_h(s(e), 6);
        for (int n = 0; n <= 6; ++n) {
            mpq_class base(e, 2), p = 1;
            for (int k = 0; k < n; ++k) p *= base;
            CHECK(x[n] == GaussianRational(p * inv_factorial(n)));
        }
    }
}

TEST_CASE("expand q to h is multiplicative") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK(expand_q_to_h(a * b, 5) == expand_q_to_h(a, 5) * expand_q_to_h(b, 5));
    }
}

TEST_CASE("hseries order discipline") {
    CHECK_THROWS_AS(HSeries::h(3) + HSeries::h(4), OrderMismatch);
    CHECK_THROWS_AS(HSeries::h(3) * HSeries::h(4), OrderMismatch);
    CHECK(HSeries::h(3).valuation() == 1);
}

TEST_CASE("hseries division") {
    HSeries d = expand_q_to_h(Scalar::q() - Scalar::q_pow(-1), 4);
    HSeries one = hseries_divide(d, d);
    CHECK(one == HSeries::constant(1, 3));
    HSeries num = HSeries::h(4).scaled(-2);
    HSeries quo = hseries_divide(num, d);
    // -2h / (2h + h^3/3) = -1/(1 + h^2/6) = -1 + h^2/6 - ...
    CHECK(quo == HSeries({-1, 0, GaussianRational::fraction(1, 6), 0}));
    // Long-division oracle: quo * (d / h) == num / h at order 3.
    HSeries dh({2, 0, GaussianRational::fraction(1, 3), 0});
    CHECK(quo * dh == HSeries({-2, 0, 0, 0}));
    CHECK_THROWS_AS(hseries_divide(HSeries::constant(1, 3), HSeries::h(3).scaled(2)), NotDivisible);
}

TEST_CASE("rational functions") {
    Scalar dq = Scalar::q() - Scalar::q_pow(-1);
    RatFunc r(Scalar(1), dq);
    CHECK((r * RatFunc(dq)).as_laurent() == Scalar(1));
    RatFunc a(Scalar::q() + Scalar(1), Scalar::q() - Scalar(1));
    RatFunc b(Scalar::q() - Scalar(1), Scalar::q() + Scalar(1));
    CHECK(a * b == RatFunc(1));
    CHECK((a + b).evaluate(1.7L).real() ==
          doctest::Approx(double((3.89L * 3.89L + 1.89L * 1.89L) / (1.89L * 3.89L))));
    CHECK(RatFunc(Scalar::q(), Scalar::q() * Scalar::q()) == RatFunc(Scalar::q_pow(-1)));
}

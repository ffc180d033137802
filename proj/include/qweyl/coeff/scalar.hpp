#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/coeff/gaussian_rational.hpp"

namespace qweyl::coeff {

// Laurent polynomial in s = q^(1/2) over Q(i). Terms are kept sorted by
// ascending exponent with no zero coefficients, so structural equality is
// ring equality.
class Scalar {
public:
    using Term = std::pair<int, GaussianRational>;

    Scalar() = default;
    Scalar(long v);               // NOLINT: implicit from integers
    Scalar(GaussianRational c);   // NOLINT: implicit from constants

    static Scalar monomial(GaussianRational c, int s_exponent);
    static Scalar s_pow(int e) { return monomial(1, e); }
    static Scalar q_pow(int e) { return monomial(1, 2 * e); }
    static Scalar q() { return q_pow(1); }
    static Scalar i() { return GaussianRational::i(); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // A unit of the Laurent ring: c * s^k with c != 0.
    bool is_unit() const { return is_monomial(); }

    GaussianRational constant_term() const;
    GaussianRational coefficient(int s_exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    Scalar scaled(const GaussianRational& c) const;
    Scalar shifted(int s_exponent) const;
    Scalar inverse() const;  // throws NonUnit
    Scalar pow(int n) const;
    // i -> -i, s fixed.
    Scalar conj() const;
    // s -> s^k (k may be negative).
    Scalar substitute_power(int k) const;
    // Value at q = 1 (s = 1).
    GaussianRational at_one() const;
    std::complex<long double> evaluate(long double s) const;

    std::string to_string() const;

private:
    void add_term(int e, const GaussianRational& c);
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// (s^n - s^-n)/(s - s^-1), exact.
Scalar qint(int n);
// Exact quotient a / b in the Laurent ring; throws NotDivisible if b does not divide a.
Scalar exact_divide(const Scalar& a, const Scalar& b);
bool divides(const Scalar& b, const Scalar& a);
// Greatest common divisor normalized to a polynomial with nonzero constant
// term and leading coefficient 1 (units of the Laurent ring are c*s^k).
Scalar gcd(const Scalar& a, const Scalar& b);

// Text form used by the expression grammar: "q", "q^2", "q^-1", "q^(1/2)".
std::string q_power_text(int s_exponent);

}  // namespace qweyl::coeff

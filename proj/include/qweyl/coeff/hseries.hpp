#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qweyl/coeff/gaussian_rational.hpp"
#include "qweyl/coeff/scalar.hpp"

namespace qweyl::coeff {

// Truncated power series c_0 + c_1 h + ... + c_K h^K. Binary operations
// require equal K and throw OrderMismatch otherwise; lowering K only
// happens through truncated().
class HSeries {
public:
    explicit HSeries(int order = 0);
    HSeries(std::vector<GaussianRational> coeffs);

    static HSeries constant(const GaussianRational& c, int order);
    static HSeries h(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    const GaussianRational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    GaussianRational& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    bool is_zero() const;
    // Lowest order with a nonzero coefficient; order()+1 for the zero series.
    int valuation() const;

    HSeries operator-() const;
    HSeries& operator+=(const HSeries& o);
    HSeries& operator-=(const HSeries& o);
    HSeries& operator*=(const HSeries& o);
    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
    friend HSeries operator*(HSeries a, const HSeries& b) { return a *= b; }
    friend bool operator==(const HSeries& a, const HSeries& b) { return a.coeffs_ == b.coeffs_; }

    HSeries scaled(const GaussianRational& c) const;
    HSeries conj() const;
    HSeries truncated(int order) const;

    std::string to_string() const;

private:
    void require_same_order(const HSeries& o) const;
    std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HSeries& s);

// Substitutes s = exp(h/2), truncating at h^K.
HSeries expand_q_to_h(const Scalar& a, int order);

// Quotient num/den where den has valuation v <= valuation(num). The result
// has order K - v. Throws NotDivisible if num has a nonzero term below v.
HSeries hseries_divide(const HSeries& num, const HSeries& den);

}  // namespace qweyl::coeff

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qweyl/coeff/scalar.hpp"

namespace qweyl::coeff {

// Element of Q(i)(s). Stored reduced, with the denominator a monic
// polynomial in s with nonzero constant term, so equality is structural.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(long v) : num_(v), den_(1) {}            // NOLINT
    RatFunc(Scalar num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RatFunc(Scalar num, Scalar den);

    const Scalar& num() const { return num_; }
    const Scalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    // The Laurent polynomial this equals, if any.
    std::optional<Scalar> as_laurent() const;

    RatFunc operator-() const { return {-num_, den_}; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc conj() const { return {num_.conj(), den_.conj()}; }
    std::complex<long double> evaluate(long double s) const;
    std::string to_string() const;

private:
    void normalize();
    Scalar num_;
    Scalar den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace qweyl::coeff

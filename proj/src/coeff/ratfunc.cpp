#include "qweyl/coeff/ratfunc.hpp"

#include <ostream>

#include "qweyl/error.hpp"

namespace qweyl::coeff {

RatFunc::RatFunc(Scalar num, Scalar den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw NotDivisible("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (!den_.is_monomial()) {
        Scalar g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    // Move the unit part c*s^k of the denominator into the numerator.
    int shift = den_.min_exponent();
    GaussianRational lead = den_.terms().back().second;
    Scalar unit = Scalar::monomial(lead, shift);
    Scalar unit_inv = unit.inverse();
    den_ = den_ * unit_inv;
    num_ = num_ * unit_inv;
}

std::optional<Scalar> RatFunc::as_laurent() const {
    if (den_.is_one()) return num_;
    return std::nullopt;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw NotDivisible("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::complex<long double> RatFunc::evaluate(long double s) const {
    return num_.evaluate(s) / den_.evaluate(s);
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

}  // namespace qweyl::coeff

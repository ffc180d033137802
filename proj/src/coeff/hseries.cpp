#include "qweyl/coeff/hseries.hpp"

#include <ostream>

#include "qweyl/error.hpp"

namespace qweyl::coeff {

HSeries::HSeries(int order) {
    if (order < 0) throw BadParams("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

HSeries::HSeries(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw BadParams("series needs at least one coefficient");
}

HSeries HSeries::constant(const GaussianRational& c, int order) {
    HSeries out(order);
    out.coeffs_[0] = c;
    return out;
}

HSeries HSeries::h(int order) {
    HSeries out(order);
    if (order >= 1) out.coeffs_[1] = 1;
    return out;
}

bool HSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

int HSeries::valuation() const {
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (!coeffs_[n].is_zero()) return static_cast<int>(n);
    return order() + 1;
}

void HSeries::require_same_order(const HSeries& o) const {
    if (o.order() != order())
        throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                            std::to_string(o.order()));
}

HSeries HSeries::operator-() const {
    HSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

HSeries& HSeries::operator+=(const HSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

HSeries& HSeries::operator*=(const HSeries& o) {
    require_same_order(o);
    std::vector<GaussianRational> out(coeffs_.size());
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (std::size_t b = 0; a + b < coeffs_.size(); ++b)
            if (!o.coeffs_[b].is_zero()) out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    coeffs_ = std::move(out);
    return *this;
}

HSeries HSeries::scaled(const GaussianRational& c) const {
    HSeries out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

HSeries HSeries::conj() const {
    HSeries out = *this;
    for (auto& x : out.coeffs_) x = x.conj();
    return out;
}

HSeries HSeries::truncated(int new_order) const {
    if (new_order > order())
        throw OrderMismatch("cannot raise series order from " + std::to_string(order()) +
                            " to " + std::to_string(new_order));
    HSeries out(new_order);
    for (int n = 0; n <= new_order; ++n) out[n] = (*this)[n];
    return out;
}

std::string HSeries::to_string() const {
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const auto& c = coeffs_[n];
        if (c.is_zero()) continue;
        std::string hp = n == 0 ? "" : (n == 1 ? "h" : "h^" + std::to_string(n));
        std::string cs = c.to_string();
        bool neg = !c.is_compound() && !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (hp.empty()) out += cs;
        else if (cs == "1") out += hp;
        else out += cs + " " + hp;
    }
    if (out.empty()) out = "0";
    return out + " + O(h^" + std::to_string(coeffs_.size()) + ")";
}

std::ostream& operator<<(std::ostream& os, const HSeries& s) { return os << s.to_string(); }

HSeries expand_q_to_h(const Scalar& a, int order) {
    if (order < 0) throw BadParams("series order must be >= 0");
    HSeries out(order);
    for (const auto& [e, c] : a.terms()) {
        // exp(e h / 2) = sum (e/2)^n h^n / n!
        mpq_class rate(e, 2);
        rate.canonicalize();
        mpq_class term = 1;
        for (int n = 0; n <= order; ++n) {
            if (n > 0) term = term * rate / n;
            out[n] += c * GaussianRational(term);
        }
    }
    return out;
}

HSeries hseries_divide(const HSeries& num, const HSeries& den) {
    if (num.order() != den.order())
        throw OrderMismatch("series orders differ in division");
    int K = num.order();
    int v = den.valuation();
    if (v > K) throw NotDivisible("division by a series that vanishes to the working order");
    for (int n = 0; n < v; ++n)
        if (!num[n].is_zero())
            throw NotDivisible("numerator has a nonzero term at order h^" + std::to_string(n) +
                               " below the divisor valuation " + std::to_string(v));
    int out_order = K - v;
    HSeries out(out_order);
    GaussianRational lead_inv = den[v].inverse();
    for (int n = 0; n <= out_order; ++n) {
        GaussianRational acc = num[n + v];
        for (int j = 1; j <= n; ++j) acc -= out[n - j] * den[v + j];
        out[n] = acc * lead_inv;
    }
    return out;
}

}  // namespace qweyl::coeff

#include "qweyl/coeff/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "qweyl/error.hpp"

namespace qweyl::coeff {

namespace {

// Dense polynomial helpers; index = exponent.
using Dense = std::vector<GaussianRational>;

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Scalar = s^shift * dense(s), dense[0] != 0.
std::pair<int, Dense> to_dense(const Scalar& a) {
    if (a.is_zero()) return {0, {}};
    int lo = a.min_exponent();
    Dense d(static_cast<std::size_t>(a.max_exponent() - lo + 1));
    for (const auto& [e, c] : a.terms()) d[static_cast<std::size_t>(e - lo)] = c;
    return {lo, d};
}

Scalar from_dense(int shift, const Dense& d) {
    Scalar out;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (!d[k].is_zero()) out += Scalar::monomial(d[k], shift + static_cast<int>(k));
    return out;
}

// Long division; returns {quotient, remainder}.
std::pair<Dense, Dense> divmod(Dense num, const Dense& den) {
    if (den.empty()) throw NotDivisible("division by zero polynomial");
    trim(num);
    if (num.size() < den.size()) return {{}, num};
    Dense quot(num.size() - den.size() + 1);
    GaussianRational lead_inv = den.back().inverse();
    for (std::size_t k = num.size() - 1;; --k) {
        GaussianRational c = num[k] * lead_inv;
        std::size_t shift = k - (den.size() - 1);
        quot[shift] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        if (k == den.size() - 1) break;
    }
    trim(num);
    trim(quot);
    return {quot, num};
}

}  // namespace

Scalar::Scalar(long v) {
    if (v != 0) terms_.emplace_back(0, GaussianRational(v));
}

Scalar::Scalar(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

Scalar Scalar::monomial(GaussianRational c, int s_exponent) {
    Scalar out;
    if (!c.is_zero()) out.terms_.emplace_back(s_exponent, std::move(c));
    return out;
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

GaussianRational Scalar::constant_term() const { return coefficient(0); }

GaussianRational Scalar::coefficient(int s_exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s_exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == s_exponent) return it->second;
    return {};
}

int Scalar::min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
int Scalar::max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

void Scalar::add_term(int e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {e, c});
    }
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        return Scalar::monomial(a.terms_[0].second * b.terms_[0].second,
                                a.terms_[0].first + b.terms_[0].first);
    }
    std::map<int, GaussianRational> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    Scalar out;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.terms_.emplace_back(e, std::move(c));
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return {};
    Scalar out = *this;
    for (auto& t : out.terms_) t.second *= c;
    return out;
}

Scalar Scalar::shifted(int s_exponent) const {
    Scalar out = *this;
    for (auto& t : out.terms_) t.first += s_exponent;
    return out;
}

Scalar Scalar::inverse() const {
    if (terms_.size() != 1)
        throw NonUnit("scalar " + to_string() + " is not a monomial unit");
    return monomial(terms_[0].second.inverse(), -terms_[0].first);
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar out(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1) out *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return out;
}

Scalar Scalar::conj() const {
    Scalar out = *this;
    for (auto& t : out.terms_) t.second = t.second.conj();
    return out;
}

Scalar Scalar::substitute_power(int k) const {
    Scalar out;
    for (const auto& [e, c] : terms_) out.add_term(e * k, c);
    return out;
}

GaussianRational Scalar::at_one() const {
    GaussianRational acc;
    for (const auto& t : terms_) acc += t.second;
    return acc;
}

std::complex<long double> Scalar::evaluate(long double s) const {
    std::complex<long double> acc = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<long double> cc(static_cast<long double>(c.real_double()),
                                     static_cast<long double>(c.imag_double()));
        acc += cc * std::pow(s, static_cast<long double>(e));
    }
    return acc;
}

std::string q_power_text(int e) {
    if (e == 0) return "";
    if (e % 2 != 0) return "q^(" + std::to_string(e) + "/2)";
    int k = e / 2;
    if (k == 1) return "q";
    return "q^" + std::to_string(k);
}

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        GaussianRational mag = c;
        bool negative = false;
        if (!c.is_compound()) {
            if (c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0) {
                negative = true;
                mag = -c;
            }
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string qp = q_power_text(e);
        if (mag.is_one()) {
            out += qp.empty() ? "1" : qp;
        } else {
            out += mag.to_string();
            if (!qp.empty()) out += " " + qp;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar qint(int n) {
    // (s^n - s^-n)/(s - s^-1) = sum_{k=0}^{|n|-1} s^(|n|-1-2k), odd in n.
    Scalar out;
    int m = n < 0 ? -n : n;
    for (int k = 0; k < m; ++k) out += Scalar::s_pow(m - 1 - 2 * k);
    return n < 0 ? -out : out;
}

Scalar exact_divide(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw NotDivisible("division by zero scalar");
    if (a.is_zero()) return {};
    auto [sa, da] = to_dense(a);
    auto [sb, db] = to_dense(b);
    auto [quot, rem] = divmod(da, db);
    if (!rem.empty())
        throw NotDivisible(b.to_string() + " does not divide " + a.to_string());
    return from_dense(sa - sb, quot);
}

bool divides(const Scalar& b, const Scalar& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    auto da = to_dense(a).second;
    auto db = to_dense(b).second;
    return divmod(da, db).second.empty();
}

Scalar gcd(const Scalar& a, const Scalar& b) {
    Dense x = to_dense(a).second;
    Dense y = to_dense(b).second;
    while (!y.empty()) {
        Dense r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return {};
    GaussianRational lead_inv = x.back().inverse();
    for (auto& c : x) c *= lead_inv;
    // x[0] != 0 holds because both inputs were shifted to nonzero constant terms.
    return from_dense(0, x);
}

}  // namespace qweyl::coeff

#include "qweyl/weyl/local_weyl.hpp"

#include <algorithm>
#include <sstream>

#include "qweyl/error.hpp"

namespace qweyl::weyl {

using coeff::GaussianRational;

namespace {

void require_same_order(const LocalWeylElement& a, const LocalWeylElement& b) {
    if (a.order() != b.order())
        throw OrderMismatch("local Weyl elements of order " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
}

// (b)_j = b (b - 1) ... (b - j + 1)
mpz_class falling(int b, int j) {
    mpz_class out = 1;
    for (int k = 0; k < j; ++k) out *= b - k;
    return out;
}

mpz_class binomial(int n, int k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// (-i)^j
GaussianRational minus_i_pow(int j) {
    switch (j % 4) {
        case 0: return 1;
        case 1: return -GaussianRational::i();
        case 2: return -1;
        default: return GaussianRational::i();
    }
}

std::string monomial_text(int a, int b) {
    std::string out;
    if (a > 0) out += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b != 0) {
        if (!out.empty()) out += " ";
        out += b == 1 ? "p" : "p^" + std::to_string(b);
    }
    return out;
}

}  // namespace

LocalWeylElement LocalWeylElement::constant(const HSeries& c) { return monomial(0, 0, c); }

LocalWeylElement LocalWeylElement::monomial(int a, int b, const HSeries& c) {
    if (a < 0) throw BadParams("negative power of x");
    LocalWeylElement out(c.order());
    out.add_term(a, b, c);
    return out;
}

HSeries LocalWeylElement::coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? HSeries(order_) : it->second;
}

void LocalWeylElement::add_term(int a, int b, const HSeries& c) {
    if (c.order() != order_)
        throw OrderMismatch("term of order " + std::to_string(c.order()) + " added to element of order " +
                            std::to_string(order_));
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LocalWeylElement LocalWeylElement::operator-() const {
    LocalWeylElement out(order_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

LocalWeylElement& LocalWeylElement::operator+=(const LocalWeylElement& o) {
    require_same_order(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LocalWeylElement& LocalWeylElement::operator-=(const LocalWeylElement& o) { return *this += -o; }

LocalWeylElement operator*(const LocalWeylElement& a, const LocalWeylElement& b) {
    return local_multiply(a, b);
}

LocalWeylElement LocalWeylElement::scaled(const HSeries& c) const {
    LocalWeylElement out(order_);
    for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * c);
    return out;
}

LocalWeylElement LocalWeylElement::divided(const HSeries& den) const {
    int v = den.valuation();
    LocalWeylElement out(order_ - v);
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, coeff::hseries_divide(c, den));
    return out;
}

LocalWeylElement LocalWeylElement::truncated(int order) const {
    LocalWeylElement out(order);
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c.truncated(order));
    return out;
}

LocalWeylElement LocalWeylElement::at_order(int n) const {
    LocalWeylElement out(0);
    if (n < 0 || n > order_) return out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, HSeries::constant(c[n], 0));
    return out;
}

int LocalWeylElement::valuation() const {
    int v = order_ + 1;
    for (const auto& [k, c] : terms_) v = std::min(v, c.valuation());
    return v;
}

LocalWeylElement LocalWeylElement::star() const {
    LocalWeylElement out(order_);
    for (const auto& [k, c] : terms_) out += commute_p_power_past_x(k.second, k.first, order_).scaled(c.conj());
    return out;
}

std::string LocalWeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        std::string m = monomial_text(it->first.first, it->first.second);
        if (!m.empty()) os << " " << m;
    }
    return os.str();
}

LocalWeylElement commute_p_power_past_x(int b, int c, int order) {
    LocalWeylElement out(order);
    for (int j = 0; j <= c; ++j) {
        mpz_class f = falling(b, j);
        if (f == 0) break;
        GaussianRational k = minus_i_pow(j) * GaussianRational(mpq_class(f * binomial(c, j)));
        out.add_term(c - j, b - j, HSeries::constant(k, order));
    }
    return out;
}

LocalWeylElement local_multiply(const LocalWeylElement& a, const LocalWeylElement& b) {
    require_same_order(a, b);
    LocalWeylElement out(a.order());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            HSeries c = ca * cb;
            if (c.is_zero()) continue;
            auto middle = commute_p_power_past_x(ka.second, kb.first, a.order());
            for (const auto& [km, cm] : middle.terms())
                out.add_term(ka.first + km.first, km.second + kb.second, cm * c);
        }
    }
    return out;
}

}  // namespace qweyl::weyl

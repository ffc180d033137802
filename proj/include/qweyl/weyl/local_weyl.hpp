#pragma once

#include <map>
#include <string>
#include <utility>

#include "qweyl/coeff/hseries.hpp"

namespace qweyl::weyl {

using coeff::HSeries;

// Sum of c_{a,b}(h) x^a p^b in the Weyl algebra A_1 localized at p, with
// a >= 0, b any integer, and series coefficients truncated at a common order.
class LocalWeylElement {
public:
    using Key = std::pair<int, int>;  // (a, b)

    explicit LocalWeylElement(int order = 0) : order_(order) {}
    static LocalWeylElement constant(const HSeries& c);
    static LocalWeylElement monomial(int a, int b, const HSeries& c);
    static LocalWeylElement x(int order) { return monomial(1, 0, HSeries::constant(1, order)); }
    static LocalWeylElement p(int order) { return monomial(0, 1, HSeries::constant(1, order)); }
    static LocalWeylElement p_inv(int order) { return monomial(0, -1, HSeries::constant(1, order)); }

    int order() const { return order_; }
    const std::map<Key, HSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    HSeries coefficient(int a, int b) const;

    void add_term(int a, int b, const HSeries& c);

    LocalWeylElement operator-() const;
    LocalWeylElement& operator+=(const LocalWeylElement& o);
    LocalWeylElement& operator-=(const LocalWeylElement& o);
    friend LocalWeylElement operator+(LocalWeylElement a, const LocalWeylElement& b) { return a += b; }
    friend LocalWeylElement operator-(LocalWeylElement a, const LocalWeylElement& b) { return a -= b; }
    friend LocalWeylElement operator*(const LocalWeylElement& a, const LocalWeylElement& b);
    friend bool operator==(const LocalWeylElement&, const LocalWeylElement&) = default;

    LocalWeylElement scaled(const HSeries& c) const;
    // Coefficientwise division by a series (see hseries_divide); lowers the order.
    LocalWeylElement divided(const HSeries& den) const;
    LocalWeylElement truncated(int order) const;
    // Terms of h-degree exactly n, as an element with rational coefficients (order 0).
    LocalWeylElement at_order(int n) const;
    // Lowest h-order carrying a nonzero coefficient; order()+1 when zero.
    int valuation() const;

    // Involution with x and p real: conjugate coefficients, reverse factors.
    LocalWeylElement star() const;

    std::string to_string() const;

private:
    int order_;
    std::map<Key, HSeries> terms_;
};

// Normal-ordered product; both factors must share the truncation order.
LocalWeylElement local_multiply(const LocalWeylElement& a, const LocalWeylElement& b);

// p^b x^c written as sum_j C(c, j) (b)_j (-i)^j x^(c-j) p^(b-j), valid for every integer b.
LocalWeylElement commute_p_power_past_x(int b, int c, int order);

}  // namespace qweyl::weyl

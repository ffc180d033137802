#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qweyl::coeff {

// re + i*im over the rationals. mpq_class keeps both parts canonical
// (lowest terms, positive denominator) after every operation.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT: implicit from integers
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {0, 1}; }
    static GaussianRational fraction(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    // |z|^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Canonical text: "3", "-1/2", "i", "-2/3 i", "(1 + 2 i)".
    // `needs_parens` reports whether the text is a compound sum.
    std::string to_string() const;
    bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

    double real_double() const { return re_.get_d(); }
    double imag_double() const { return im_.get_d(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace qweyl::coeff

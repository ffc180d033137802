#include "qweyl/coeff/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

#include "qweyl/error.hpp"

namespace qweyl::coeff {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return {v, 0};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw NonUnit("inverse of zero Gaussian rational");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

namespace {

std::string rational_text(const mpq_class& v) { return v.get_str(); }

}  // namespace

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return rational_text(re_);
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rational_text(im_) + " i";
    }
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + rational_text(re_);
    if (sgn(im_) < 0) {
        out += " - ";
        mpq_class a = -im_;
        out += (a == 1) ? std::string("i") : rational_text(a) + " i";
    } else {
        out += " + ";
        out += (im_ == 1) ? std::string("i") : rational_text(im_) + " i";
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.to_string();
}

}  // namespace qweyl::coeff

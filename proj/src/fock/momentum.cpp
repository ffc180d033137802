#include "qweyl/fock/momentum.hpp"

#include <cmath>

#include "qweyl/error.hpp"

namespace qweyl::fock {

using coeff::GaussianRational;
using coeff::RatFunc;
using coeff::Scalar;

namespace {

template <class Rep>
void init_basis(Rep& rep, int levels, const char* field) {
    if (levels < 2) throw BadParams("momentum representation needs M >= 2");
    rep.dim = static_cast<std::size_t>(2 * levels + 1);
    rep.field = field;
    for (int n = -levels; n <= levels; ++n) {
        rep.labels.push_back(n);
        if (std::abs(n) <= levels - 1) rep.interior_mask.push_back(static_cast<std::size_t>(n + levels));
    }
}

}  // namespace

ExactRep momentum_rep_exact(int levels) {
    ExactRep rep;
    init_basis(rep, levels, "exact");
    const std::size_t d = rep.dim;
    ExactMatrix p(d), xi(d), u(d), v(d);
    Scalar dq = Scalar::q() - Scalar::q_pow(-1);
    Scalar i = Scalar::i();
    for (int n = -levels; n <= levels; ++n) {
        auto c = static_cast<std::size_t>(n + levels);
        p(c, c) = RatFunc(Scalar::q_pow(n));
        if (n > -levels) {
            xi(c - 1, c) = RatFunc(i * Scalar::s_pow(1 - 2 * n), dq);
            u(c - 1, c) = RatFunc(Scalar::s_pow(-1));
        }
        if (n < levels) {
            xi(c + 1, c) = RatFunc(-(i * Scalar::s_pow(-1 - 2 * n)), dq);
            v(c + 1, c) = RatFunc(Scalar::s_pow(1));
        }
    }
    rep.matrices["p"] = p;
    rep.matrices["xi"] = xi;
    rep.matrices["u"] = u;
    rep.matrices["uinv"] = v;
    return rep;
}

FloatRep momentum_rep_float(int levels, long double q, long double pi0) {
    if (!(q > 1)) throw BadParams("q must exceed 1");
    if (!(pi0 >= 1 && pi0 < q)) throw BadParams("pi0 must lie in [1, q)");
    FloatRep rep;
    init_basis(rep, levels, "float");
    auto d = static_cast<Eigen::Index>(rep.dim);
    FloatMatrix p = FloatMatrix::Zero(d, d), xi = p, u = p, v = p;
    const Complex i(0, 1);
    long double s = std::sqrt(q), dq = q - 1 / q;
    for (int n = -levels; n <= levels; ++n) {
        Eigen::Index c = n + levels;
        long double pn = pi0 * std::pow(q, static_cast<long double>(n));
        p(c, c) = pn;
        if (n > -levels) {
            xi(c - 1, c) = i * s / (pn * dq);
            u(c - 1, c) = 1 / s;
        }
        if (n < levels) {
            xi(c + 1, c) = -i / (s * pn * dq);
            v(c + 1, c) = s;
        }
    }
    rep.matrices["p"] = p;
    rep.matrices["xi"] = xi;
    rep.matrices["u"] = u;
    rep.matrices["uinv"] = v;
    return rep;
}

ExactMatrix derived_u(const ExactRep& rep) {
    const ExactMatrix& p = rep.matrices.at("p");
    const ExactMatrix& xi = rep.matrices.at("xi");
    ExactMatrix comm = xi * p - (p * xi).scaled(RatFunc(Scalar::q_pow(-1)));
    return comm.scaled(RatFunc(-Scalar::i()));
}

std::vector<Complex> eigenfunction_eval(int n, long double pi0, long double q,
                                        const std::vector<long double>& grid) {
    long double k = pi0 * std::pow(q, static_cast<long double>(n));
    std::vector<Complex> out;
    out.reserve(grid.size());
    for (long double x : grid) out.push_back(std::exp(Complex(0, k * x)));
    return out;
}

}  // namespace qweyl::fock

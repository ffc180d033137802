#include "qweyl/fock/oscillator.hpp"

#include <cmath>

#include "qweyl/error.hpp"

namespace qweyl::fock {

namespace {

FloatRep ladder_rep(int dim, const char* lower, const char* raise, auto amplitude) {
    if (dim < 2) throw BadParams("Fock truncation needs at least two levels");
    auto n = static_cast<Eigen::Index>(dim);
    FloatMatrix a = FloatMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = amplitude(static_cast<int>(k));
    FloatRep rep;
    rep.dim = static_cast<std::size_t>(dim);
    rep.field = "float";
    rep.matrices[lower] = a;
    rep.matrices[raise] = a.transpose();
    for (int k = 0; k < dim; ++k) rep.labels.push_back(k);
    for (int k = 0; k + 1 < dim; ++k) rep.interior_mask.push_back(static_cast<std::size_t>(k));
    return rep;
}

// (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)), n at q = 1.
long double qint_float(int n, long double q) {
    if (q == 1) return n;
    long double s = std::sqrt(q);
    return (std::pow(s, n) - std::pow(s, -n)) / (s - 1 / s);
}

}  // namespace

FloatRep classical_osc_rep(int dim) {
    FloatRep rep = ladder_rep(dim, "A", "Ad", [](int k) { return Complex(std::sqrt(static_cast<long double>(k))); });
    auto n = static_cast<Eigen::Index>(dim);
    FloatMatrix N = FloatMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) N(k, k) = static_cast<long double>(k);
    rep.matrices["N"] = N;
    return rep;
}

coeff::Scalar q_osc_eigenvalue(int n) {
    if (n < 0) throw BadParams("negative Fock level");
    coeff::Scalar out;
    for (int k = 0; k < n; ++k) out += coeff::Scalar::q_pow(k);
    return out;
}

FloatRep q_osc_rep(int dim, long double q) {
    if (!(q > 0)) throw BadParams("q must be positive");
    long double s = std::sqrt(q);
    return ladder_rep(dim, "a", "ad", [&](int k) { return Complex(std::sqrt(q_osc_eigenvalue(k).evaluate(s).real())); });
}

long double qint_ratio(int n, long double q) {
    if (n != 0) return qint_float(n, q) / n;
    if (q == 1) return 1;
    long double s = std::sqrt(q);
    return std::log(q) / (s - 1 / s);
}

FloatRep deformed_osc_rep(int dim, long double q, bool rescale) {
    if (!(q > 0)) throw BadParams("q must be positive");
    FloatRep base = classical_osc_rep(dim);
    auto n = static_cast<Eigen::Index>(dim);
    // Diagonal functions of N.
    FloatMatrix quarter = FloatMatrix::Zero(n, n), root = FloatMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        quarter(k, k) = std::pow(q, static_cast<long double>(k) / 4);
        root(k, k) = std::sqrt(qint_ratio(static_cast<int>(k), q));
    }
    long double c = rescale ? std::pow(q, -0.125L) : 1.0L;
    FloatRep rep = base;
    rep.matrices.clear();
    rep.matrices["a"] = c * quarter * base.matrices["A"] * root;
    rep.matrices["ad"] = c * quarter * root * base.matrices["Ad"];
    return rep;
}

DeformingMapReport deforming_map_check(int dim, long double q) {
    if (dim < 4) throw BadParams("deforming map check needs at least four levels");
    auto n = static_cast<Eigen::Index>(dim);
    auto residual = [&](bool rescale) {
        FloatRep rep = deformed_osc_rep(dim, q, rescale);
        const FloatMatrix& a = rep.matrices["a"];
        const FloatMatrix& ad = rep.matrices["ad"];
        FloatMatrix r = a * ad - q * (ad * a) - FloatMatrix::Identity(n, n);
        // Interior: both row and column at most D - 2.
        long double worst = 0;
        for (Eigen::Index i = 0; i + 1 < n; ++i)
            for (Eigen::Index j = 0; j + 1 < n; ++j) worst = std::max(worst, std::abs(r(i, j)));
        return worst;
    };
    DeformingMapReport out;
    out.dim = dim;
    out.q = q;
    out.residual_rescaled = residual(true);
    out.residual_unscaled = residual(false);
    out.predicted_unscaled = std::abs(std::pow(q, 0.25L) - 1);
    FloatRep limit = deformed_osc_rep(dim, 1, false);
    out.classical_limit_error =
        (limit.matrices["a"] - classical_osc_rep(dim).matrices["A"]).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace qweyl::fock

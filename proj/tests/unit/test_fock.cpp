#include <cmath>

#include "doctest.h"
#include "qweyl/catalog/catalog.hpp"
#include "qweyl/error.hpp"
#include "qweyl/fock/momentum.hpp"
#include "qweyl/fock/oscillator.hpp"

using namespace qweyl;
using namespace qweyl::fock;
using coeff::RatFunc;
using coeff::Scalar;

TEST_CASE("classical oscillator matrices") {
    auto r2 = classical_osc_rep(2);
    FloatMatrix c = r2.matrices["A"] * r2.matrices["Ad"] - r2.matrices["Ad"] * r2.matrices["A"];
    CHECK(std::abs(c(0, 0) - Complex(1)) < 1e-15L);
    CHECK(std::abs(c(1, 1) - Complex(-1)) < 1e-15L);
    auto r = classical_osc_rep(10);
    FloatMatrix n = r.matrices["Ad"] * r.matrices["A"] - r.matrices["N"];
    CHECK(n.cwiseAbs().maxCoeff() < 1e-15L);
    auto pres = catalog::oscillator_classical();
    for (const auto& item : check_relations(*pres, r, 1, 1e-12L)) {
        INFO(item.relation);
        CHECK(item.pass);
    }
    // [N, A] = -A, checked directly.
    FloatMatrix na = r.matrices["N"] * r.matrices["A"] - r.matrices["A"] * r.matrices["N"] + r.matrices["A"];
    CHECK(interior_residual(na, r.interior_mask) < 1e-14L);
}

TEST_CASE("q oscillator eigenvalues") {
    CHECK(q_osc_eigenvalue(0).is_zero());
    CHECK(q_osc_eigenvalue(1) == Scalar(1));
    for (int n = 0; n < 30; ++n)
        CHECK(q_osc_eigenvalue(n + 1) == Scalar::q() * q_osc_eigenvalue(n) + Scalar(1));
    auto pres = catalog::q_oscillator();
    for (long double q : {0.5L, 1.0L, 1.2L, 3.0L}) {
        auto r = q_osc_rep(24, q);
        for (const auto& item : check_relations(*pres, r, q, 1e-9L)) CHECK(item.pass);
    }
    FloatMatrix diff = q_osc_rep(8, 1).matrices["a"] - classical_osc_rep(8).matrices["A"];
    CHECK(diff.cwiseAbs().maxCoeff() < 1e-15L);
}

TEST_CASE("deforming map") {
    auto rep = deforming_map_check(64, 1.2L);
    CHECK(rep.residual_rescaled < 1e-9L);
    CHECK(std::abs(rep.residual_unscaled - rep.predicted_unscaled) < 1e-12L);
    CHECK(rep.classical_limit_error == 0);
    // Eigenvalue oracle: ad a on |n> is q^((2n-1)/4) [n].
    long double q = 1.2L, s = std::sqrt(q);
    auto d = deformed_osc_rep(12, q, false);
    FloatMatrix ada = d.matrices["ad"] * d.matrices["a"];
    for (int n = 0; n < 12; ++n) {
        long double qn = (std::pow(s, n) - std::pow(s, -n)) / (s - 1 / s);
        CHECK(std::abs(ada(n, n).real() - std::pow(q, (2 * n - 1) / 4.0L) * qn) < 1e-12L);
    }
    CHECK(qint_ratio(0, 1) == 1);
    CHECK(std::abs(qint_ratio(0, 1.0000001L) - 1) < 1e-6L);
    CHECK_THROWS_AS(deforming_map_check(3, 1.2L), BadParams);
}

TEST_CASE("momentum representation, exact") {
    auto rep = momentum_rep_exact(8);
    for (std::size_t c = 0; c < rep.dim; ++c)
        CHECK(rep.matrices["p"](c, c) == RatFunc(Scalar::q_pow(rep.labels[c])));
    // u is determined by p and xi.
    ExactMatrix u = derived_u(rep);
    ExactMatrix diff = u - rep.matrices["u"];
    CHECK(diff.columns_zero(rep.interior_mask));

    auto corrected = catalog::q_heisenberg(catalog::QHeisStage::FinalCorrected);
    for (const auto& item : check_relations(*corrected, rep)) {
        INFO(item.relation << " " << item.residual);
        CHECK(item.pass);
    }
    auto printed = catalog::q_heisenberg(catalog::QHeisStage::FinalPrinted);
    for (const auto& item : check_relations(*printed, rep)) {
        INFO(item.relation);
        CHECK(item.pass == (item.relation != "u p"));
    }
}

TEST_CASE("momentum representation, float") {
    auto corrected = catalog::q_heisenberg(catalog::QHeisStage::FinalCorrected);
    for (long double pi0 : {1.0L, 1.1L}) {
        auto rep = momentum_rep_float(8, 1.3L, pi0);
        for (const auto& item : check_relations(*corrected, rep, 1.3L, 1e-9L)) {
            INFO(item.relation);
            CHECK(item.pass);
        }
    }
    CHECK_THROWS_AS(momentum_rep_float(8, 1.3L, 1.3L), BadParams);
    CHECK_THROWS_AS(momentum_rep_float(8, 1.3L, 0.9L), BadParams);
}

TEST_CASE("momentum eigenfunctions") {
    long double q = 1.3L, pi0 = 1.1L;
    CHECK(eigenfunction_eval(0, 1, q, {0})[0] == Complex(1));
    std::vector<long double> grid;
    for (int k = -20; k <= 20; ++k) grid.push_back(0.1L * k);
    const long double step = 1e-5L;
    for (int n = -2; n <= 2; ++n) {
        auto f = eigenfunction_eval(n, pi0, q, grid);
        std::vector<long double> plus, minus;
        for (long double x : grid) {
            plus.push_back(x + step);
            minus.push_back(x - step);
        }
        auto fp = eigenfunction_eval(n, pi0, q, plus), fm = eigenfunction_eval(n, pi0, q, minus);
        Complex k(0, pi0 * std::pow(q, static_cast<long double>(n)));
        for (std::size_t j = 0; j < grid.size(); ++j) {
            CHECK(std::abs(std::abs(f[j]) - 1) < 1e-15L);
            Complex deriv = (fp[j] - fm[j]) / (2 * step);
            CHECK(std::abs(deriv - k * f[j]) <= 1e-6L * std::abs(k));
        }
    }
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qweyl/error.hpp"
#include "qweyl/freealg/rewriting.hpp"
#include "qweyl/freealg/syntax.hpp"
#include "qweyl/soq/diff_algebra.hpp"

using namespace qweyl;
using namespace qweyl::soq;
using freealg::normal_form;

namespace {

const std::filesystem::path kData = std::filesystem::path(QWEYL_TEST_DATA_DIR) / "so3.rmat";

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Scalar qp(int e) { return Scalar::q_pow(e); }

// Built once; every test reads from it.
const DiffSO& algebra() {
    static const DiffSO a = [] {
        RMatrix r = load_and_validate_rmatrix(kData);
        ProjectorSet p = spectral_projectors(r);
        Metric g = extract_metric(p.P_zero, r.N);
        return build_diff_presentation(r, p, g);
    }();
    return a;
}

// (R - q)(R - q^(1-N)): its rows span the same space as the P^- rows,
// without denominators.
ScalarMatrix minus_numerator(const RMatrix& r) {
    auto id = ScalarMatrix::identity(r.R.size());
    return (r.R - id.scaled(Scalar::q())) * (r.R - id.scaled(qp(1 - r.N)));
}

}  // namespace

TEST_CASE("shipped R-matrix validates exactly") {
    RMatrix r = read_rmatrix_file(kData);
    auto v = validate_rmatrix(r);
    CHECK(v.braid);
    CHECK(v.cubic);
    CHECK(v.invertible);
    CHECK(r.R * r.R_inv == ScalarMatrix::identity(9));
}

TEST_CASE("permutation matrix is rejected as degenerate") {
    RMatrix r;
    r.N = 3;
    r.labels = {-1, 0, 1};
    r.R = ScalarMatrix(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r.R(r.pair(i, j), r.pair(j, i)) = Scalar(1);
    CHECK_THROWS_AS(validate_rmatrix(r), DegenerateEigenvalues);
}

TEST_CASE("corrupted entry fails the braid check") {
    std::string text = read_text(kData);
    auto pos = text.find("0  0  0  0  1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 13, "0  0  0  0  2");
    RMatrix r = parse_rmatrix(text);
    try {
        validate_rmatrix(r);
        FAIL("expected ValidationFailed");
    } catch (const ValidationFailed& e) {
        CHECK(std::string(e.what()).find("braid") != std::string::npos);
    }
}

TEST_CASE("malformed R-matrix files") {
    CHECK_THROWS_AS(parse_rmatrix("N=3 basis=-1,0,1\n-1 -1 -1 q\n"), Error);
    CHECK_THROWS_AS(parse_rmatrix("basis=-1,0,1\n"), Error);
    CHECK_THROWS_AS(parse_rmatrix("N=3 basis=-1,0,1\n-1 -1 -1 7 q\n"), Error);
}

TEST_CASE("projectors are eigenprojectors of R") {
    RMatrix r = load_and_validate_rmatrix(kData);
    ProjectorSet p = spectral_projectors(r);
    auto checks = check_projectors(r, p);
    CHECK(checks.idempotent);
    CHECK(checks.orthogonal);
    CHECK(checks.complete);
    CHECK(checks.reconstructs);
    // Independent: R P = lambda P for each projector.
    RatMatrix R = to_rat(r.R);
    CHECK(R * p.P_plus == p.P_plus.scaled(RatFunc(Scalar::q())));
    CHECK(R * p.P_minus == p.P_minus.scaled(RatFunc(-qp(-1))));
    CHECK(R * p.P_zero == p.P_zero.scaled(RatFunc(qp(-2))));
    // Symmetric square 6 = 5 + 1, antisymmetric square 3.
    CHECK(exact_rank(p.P_plus) == 5);
    CHECK(exact_rank(p.P_minus) == 3);
    CHECK(exact_rank(p.P_zero) == 1);
}

TEST_CASE("metric factorization and rescale invariance") {
    RMatrix r = load_and_validate_rmatrix(kData);
    ProjectorSet p = spectral_projectors(r);
    Metric g = extract_metric(p.P_zero, 3);
    CHECK(metric_reconstructs(p.P_zero, g));
    CHECK(g.c == RatFunc(Scalar::q(), Scalar(1) + Scalar::q() + qp(2)));
    CHECK(g.g_lower * g.g_lower == ScalarMatrix::identity(3));
    CHECK(g.g_upper * g.g_lower == ScalarMatrix::identity(3));
    CHECK(g.g_lower(1, 1) == Scalar(1));
    // The basis-independent ratio.
    CHECK(g.g_lower(2, 0) == Scalar::q() * g.g_lower(0, 2));

    Metric h = g;
    Scalar lam = Scalar(2) * qp(3);
    h.g_upper = g.g_upper.scaled(lam);
    h.g_lower = g.g_lower.scaled(lam);
    h.c = g.c / RatFunc(lam * lam);
    CHECK(metric_reconstructs(p.P_zero, h));
    h.c = g.c;
    CHECK_FALSE(metric_reconstructs(p.P_zero, h));

    CHECK_THROWS_AS(extract_metric(p.P_minus, 3), NotRankOne);
}

TEST_CASE("quantum plane and derivative relations lie in the ideal") {
    const auto& a = algebra();
    auto M = minus_numerator(a.R);
    const auto& L = a.labels();
    for (std::size_t row = 0; row < 9; ++row) {
        Element xx, dd;
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l) {
                const Scalar& c = M(row, a.R.pair(k, l));
                if (c.is_zero()) continue;
                xx += c * a.x(L[k]) * a.x(L[l]);
                dd += c * a.d(L[l]) * a.d(L[k]);
            }
        CHECK(normal_form(xx, *a.x_sector).is_zero());
        CHECK(normal_form(dd, *a.d_sector).is_zero());
        CHECK(normal_form(xx, *a.full).is_zero());
    }
}

TEST_CASE("derivative action is the R-matrix rule") {
    const auto& a = algebra();
    const auto& L = a.labels();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Element expect = i == j ? Element(Scalar(1)) : Element();
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l) {
                    const Scalar& c = a.R.at(j, k, i, l);
                    if (!c.is_zero()) expect += Scalar::q() * c * a.x(L[l]) * a.d(L[k]);
                }
            Element got = normal_form(a.d(L[i]) * a.x(L[j]), *a.full);
            CHECK(got == normal_form(expect, *a.full));
        }
}

TEST_CASE("sectors are confluent") {
    const auto& a = algebra();
    CHECK(freealg::overlap_check(*a.x_sector, 4).empty());
    CHECK(freealg::overlap_check(*a.d_sector, 4).empty());
    CHECK(freealg::overlap_check(*a.conj_sector, 4).empty());
    CHECK(freealg::overlap_check(*a.full, 3).empty());
}

TEST_CASE("L and Delta are central") {
    const auto& a = algebra();
    for (int k : a.labels()) {
        CHECK(normal_form(freealg::commutator(a.L(), a.x(k)), *a.x_sector).is_zero());
        CHECK(normal_form(freealg::commutator(a.Delta(), a.d(k)), *a.d_sector).is_zero());
    }
    CHECK(normal_form(freealg::commutator(a.L(), a.L()), *a.x_sector).is_zero());
    // Not central against the other sector.
    CHECK_FALSE(normal_form(freealg::commutator(a.L(), a.d(0)), *a.full).is_zero());
}

TEST_CASE("qconjr substitute satisfies the conjugated action") {
    const auto& a = algebra();
    CHECK(a.qconjr_factor() == Scalar::q() * (Scalar::q() - Scalar(1)));
    Element lam_expr = a.conj_action_defect(a.labels()[0], a.labels()[0]);
    CHECK(lam_expr.constant() == Scalar(1));
    for (int k : a.labels())
        for (int j : a.labels()) {
            Element defect = a.conj_action_defect(k, j);
            if (k == j)
                CHECK(defect == lam_expr);
            else
                CHECK(defect.is_zero());
        }
    // Lam_expr scales coordinates by q^2.
    for (int k : a.labels()) {
        Element lhs = lam_expr * a.x(k) - qp(2) * a.x(k) * lam_expr;
        CHECK(normal_form(lhs, *a.conj_sector).is_zero());
    }
}

TEST_CASE("star is an involutive anti-automorphism") {
    const auto& a = algebra();
    const auto& full = *a.full;
    REQUIRE(full.has_star());
    for (std::size_t g = 0; g < full.generator_count(); ++g) {
        Element e = Element::generator(static_cast<freealg::GenId>(g));
        CHECK(freealg::apply_star(full, freealg::apply_star(full, e)) == e);
    }
    CHECK(a.d_scale_solutions == 1);
    CHECK_FALSE(a.transcribed_star_failure.empty());
    // star(x^i) = sum_j g_{ji} x^j.
    for (std::size_t i = 0; i < 3; ++i) {
        Element expect;
        for (std::size_t j = 0; j < 3; ++j) expect += a.g.g_lower(j, i) * a.x(a.labels()[j]);
        CHECK(freealg::apply_star(full, a.x(a.labels()[i])) == expect);
    }
}

TEST_CASE("D relations and star") {
    const auto& a = algebra();
    const auto& full = *a.full;
    auto M = minus_numerator(a.R);
    const auto& L = a.labels();
    for (std::size_t row = 0; row < 9; ++row) {
        Element dd;
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t l = 0; l < 3; ++l)
                if (!M(row, a.R.pair(k, l)).is_zero()) dd += M(row, a.R.pair(k, l)) * a.D(L[l]) * a.D(L[k]);
        CHECK(normal_form(dd, full).is_zero());
    }
    // star(D_0) = -D_0 holds; for the outer labels there is a factor q^(+-3/2).
    CHECK(freealg::apply_star(full, a.D(0)) == normal_form(-a.D(0), full));
    CHECK(freealg::apply_star(full, a.D(1)) == normal_form(-Scalar::s_pow(3) * a.D(-1), full));
    CHECK(freealg::apply_star(full, a.D(-1)) == normal_form(-Scalar::s_pow(-3) * a.D(1), full));
}

TEST_CASE("r1 holds up to the factor q^-i") {
    const auto& a = algebra();
    const auto& full = *a.full;
    for (int i : a.labels()) {
        int e = a.r_exponent(i);
        CHECK(e == (i == 0 ? 1 : 2));
        Element lhs = qp(-e) * freealg::apply_star(full, a.r(-i));
        CHECK(normal_form(lhs - qp(-i) * a.r_tilde(i), full).is_zero());
        if (i != 0) CHECK_FALSE(normal_form(lhs - a.r_tilde(i), full).is_zero());
    }
    // r_i is nontrivial with constant term 1 + q^-3.
    CHECK(a.r(1).constant() == Scalar(1) + qp(-3));
}

TEST_CASE("suite report is deterministic") {
    auto r1 = run_soq_suite(kData);
    auto r2 = run_soq_suite(kData);
    REQUIRE(r1.items.size() == r2.items.size());
    for (std::size_t k = 0; k < r1.items.size(); ++k) {
        CHECK(r1.items[k].name == r2.items[k].name);
        CHECK(r1.items[k].residual == r2.items[k].residual);
    }
    std::size_t failed = 0;
    for (const auto& it : r1.items) failed += it.pass ? 0 : 1;
    // Literal star(D_+-1) = -D_-+1 and literal r1 for i = +-1.
    CHECK(failed == 6);
}

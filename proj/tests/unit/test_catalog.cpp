#include <random>

#include "doctest.h"
#include "qweyl/catalog/catalog.hpp"
#include "qweyl/error.hpp"
#include "qweyl/freealg/rewriting.hpp"
#include "qweyl/freealg/syntax.hpp"

using namespace qweyl;
using namespace qweyl::catalog;
using namespace qweyl::freealg;
using coeff::Scalar;

namespace {

const Scalar I = Scalar::i();
Scalar qp(int e) { return Scalar::q_pow(e); }

// Copy of `p` with every rule coefficient specialized at q = 1.
std::shared_ptr<Presentation> at_q_one(const Presentation& p) {
    auto out = std::make_shared<Presentation>(p.name() + "@1", p.generators());
    for (const auto& r : p.rules()) {
        Element rhs;
        for (const auto& [w, c] : r.rhs.terms()) rhs.add_term(w, Scalar(c.at_one()));
        out->add_rule(r.lhs, rhs, r.label);
    }
    return out;
}

Element random_element(const Presentation& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 3), c(-2, 2);
    std::uniform_int_distribution<int> g(0, static_cast<int>(p.generator_count()) - 1);
    Element e;
    for (int k = 0; k < 3; ++k) {
        Word w;
        int n = len(rng);
        for (int j = 0; j < n; ++j) w = w + Word::single(static_cast<GenId>(g(rng)));
        e.add_term(w, Scalar(c(rng)) + I * qp(c(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("heisenberg") {
    auto h1 = heisenberg(1);
    Element x = h1->gen("x"), p = h1->gen("p");
    CHECK(normal_form(p * x, *h1) == x * p - Element(I));
    CHECK(apply_star(*h1, x * p) == x * p - Element(I));
    auto h2 = heisenberg(2);
    CHECK(normal_form(h2->gen("p1") * h2->gen("x2"), *h2) == h2->gen("x2") * h2->gen("p1"));
    CHECK(check_relation(*h2, h2->gen("x1") * h2->gen("p2"), h2->gen("p2") * h2->gen("x1")).holds);
    CHECK_THROWS_AS(heisenberg(0), BadParams);
}

TEST_CASE("classical oscillator") {
    auto o = oscillator_classical();
    Element a = o->gen("A"), ad = o->gen("Ad"), n = o->gen("N");
    CHECK(normal_form(a * ad - ad * a, *o) == Element(1));
    CHECK(normal_form(n * a - a * n, *o) == -a);
    CHECK(apply_star(*o, a * ad) == normal_form(a * ad, *o));
}

TEST_CASE("q oscillator") {
    auto o = q_oscillator();
    Element a = o->gen("a"), ad = o->gen("ad");
    CHECK(normal_form(a * ad, *o) == Scalar::q() * (ad * a) + Element(1));
    auto one = at_q_one(*o);
    CHECK(normal_form(a * ad - ad * a, *one) == Element(1));
}

TEST_CASE("q heisenberg stages") {
    auto b = q_heisenberg(QHeisStage::Basic);
    Element p = b->gen("p"), x = b->gen("x");
    CHECK(normal_form(p * x - Scalar::q() * (x * p), *b) == Element(-I));
    auto one = at_q_one(*b);
    CHECK(normal_form(p * x - x * p, *one) == Element(-I));

    auto c = q_heisenberg(QHeisStage::Conjugated);
    Element cx = c->gen("x"), cxb = c->gen("xb");
    CHECK(normal_form(cx * cxb - Scalar::q() * (cxb * cx), *c).is_zero());

    auto f = q_heisenberg(QHeisStage::FinalCorrected);
    Element P = f->gen("p"), U = f->gen("u"), X = f->gen("xi"), V = f->gen("uinv");
    CHECK(normal_form(U * V, *f) == Element(1));
    CHECK(normal_form(V * U, *f) == Element(1));
    CHECK(check_relation(*f, (Scalar::q() - qp(-1)) * (P * X), I * (U - V)).holds);
    CHECK(apply_star(*f, I * U) == normal_form(-I * qp(-1) * V, *f));
    CHECK(apply_star(*f, apply_star(*f, X)) == X);
}

TEST_CASE("q heisenberg displayed relations hold in every stage") {
    for (auto st : {QHeisStage::Basic, QHeisStage::Conjugated, QHeisStage::WithR,
                    QHeisStage::TildeXi, QHeisStage::FinalCorrected}) {
        auto p = q_heisenberg(st);
        for (const auto& r : p->relations()) {
            INFO(stage_name(st) << ": " << r.label);
            CHECK(check_relation(*p, r.lhs, r.rhs).holds);
        }
    }
}

TEST_CASE("printed final stage is not confluent") {
    auto p = q_heisenberg(QHeisStage::FinalPrinted);
    auto amb = overlap_check(*p, 6);
    CHECK(!amb.empty());
}

TEST_CASE("qdiff presentation") {
    auto p = by_key("qdiff:dim=2,k=1");
    Element x1 = p->gen("x_1"), d1 = p->gen("D_1"), u1 = p->gen("u_1"), v1 = p->gen("uinv_1");
    Element xm = p->gen("x_m1"), dm = p->gen("D_m1");
    CHECK(check_relation(*p, d1 * x1 - Scalar::q() * (x1 * d1), v1).holds);
    CHECK(check_relation(*p, d1 * x1 - qp(-1) * (x1 * d1), u1).holds);
    CHECK(apply_star(*p, d1) == -dm);
    CHECK(normal_form(d1 * xm - xm * d1, *p).is_zero());
    for (const auto& r : p->relations()) {
        INFO(r.label);
        CHECK(check_relation(*p, r.lhs, r.rhs).holds);
    }
    auto p2 = by_key("qdiff:dim=3,k=2");
    for (const auto& r : p2->relations()) {
        INFO(r.label);
        CHECK(check_relation(*p2, r.lhs, r.rhs).holds);
    }
    // q -> 1: D x - x D = 1.
    auto one = at_q_one(*by_key("qdiff:dim=1"));
    Element x0 = one->gen("x_0"), d0 = one->gen("D_0"), u0 = one->gen("u_0");
    CHECK(normal_form(d0 * x0 - x0 * d0, *one) == u0);
    CHECK(normal_form(u0 * u0, *one) == Element(1));
}

TEST_CASE("qdiff rejects bad k") {
    CHECK_THROWS_AS(qdiff_presentation({-1, 1}, {{-1, 1}, {1, 1}}), BadK);
    CHECK_THROWS_AS(qdiff_presentation({0}, {{0, 0}}), BadK);
    CHECK_NOTHROW(qdiff_presentation({-1, 1}, {{-1, -3}, {1, 3}}));
}

TEST_CASE("every catalog presentation is confluent at length 6") {
    for (const auto& key : all_keys()) {
        if (key == "qheis5:variant=printed") continue;
        INFO(key);
        auto p = by_key(key);
        CHECK(overlap_check(*p, 6).empty());
    }
}

TEST_CASE("star squares to the identity") {
    std::mt19937 rng(5);
    for (const auto& key : all_keys()) {
        auto p = by_key(key);
        if (!p->has_star()) continue;
        INFO(key);
        for (GenId g = 0; g < p->generator_count(); ++g) {
            Element e = Element::generator(g);
            CHECK(apply_star(*p, apply_star(*p, e)) == normal_form(e, *p));
        }
        if (key == "qheis5:variant=printed") continue;
        for (int t = 0; t < 5; ++t) {
            Element e = random_element(*p, rng);
            CHECK(apply_star(*p, apply_star(*p, e)) == normal_form(e, *p));
        }
    }
}

TEST_CASE("normal form is multiplicative") {
    std::mt19937 rng(9);
    for (const auto& key : all_keys()) {
        if (key == "qheis5:variant=printed") continue;
        auto p = by_key(key);
        INFO(key);
        for (int t = 0; t < 5; ++t) {
            Element a = random_element(*p, rng), b = random_element(*p, rng);
            CHECK(normal_form(a * b, *p) ==
                  normal_form(normal_form(a, *p) * normal_form(b, *p), *p));
        }
    }
}

TEST_CASE("identity morphisms") {
    for (const auto& key : all_keys()) {
        INFO(key);
        CHECK(verify_hom(identity_morphism(by_key(key))).all_pass());
    }
}

TEST_CASE("named morphisms") {
    auto list = named_morphisms();
    REQUIRE(list.size() == 4);
    CHECK(verify_hom(remark1_morphism(false)).all_pass());
    CHECK_FALSE(verify_hom(remark1_morphism(true)).all_pass());
    auto naive = verify_hom(naive_oscillator_map());
    CHECK_FALSE(naive.all_pass());
    auto o = naive_oscillator_map().target;
    REQUIRE(naive.items.size() == 1);
    CHECK(naive.items[0].residual == (Scalar(1) - Scalar::q()) * o->gen("N"));
    bool rescale = false;
    for (const auto& m : list) rescale = rescale || (m.name == "deforming-map" && m.rescale_q_minus_eighth);
    CHECK(rescale);
}

TEST_CASE("catalog keys") {
    CHECK(CatalogKey::parse("heisenberg:n=2").params.at("n") == "2");
    CHECK(by_key("heisenberg:n=2")->generator_count() == 4);
    CHECK_THROWS_AS(by_key("nope"), UsageError);
    CHECK_THROWS_AS(by_key("heisenberg:m=2"), UsageError);
    CHECK_THROWS_AS(by_key("qheis5:variant=x"), UsageError);
}

#include "qweyl/catalog/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <sstream>

#include "qweyl/error.hpp"

namespace qweyl::catalog {

using coeff::Scalar;
using freealg::GenId;
using freealg::Generator;
using freealg::Presentation;
using freealg::Word;

namespace {

const Scalar kI = Scalar::i();

Scalar qp(int e) { return Scalar::q_pow(e); }

Element pw(const Element& e, int n) {
    Element out(1);
    for (int k = 0; k < n; ++k) out = out * e;
    return out;
}

// Orients the displayed relation lhs = rhs as a rule on lhs's single word.
void rule(Presentation& p, const Element& lhs_word, const Element& rhs, const std::string& label) {
    p.add_rule(lhs_word.terms().begin()->first, rhs, label);
}

}  // namespace

PresentationPtr heisenberg(int n) {
    if (n < 1) throw BadParams("heisenberg: n must be positive");
    auto xname = [n](int j) { return n == 1 ? std::string("x") : "x" + std::to_string(j); };
    auto pname = [n](int j) { return n == 1 ? std::string("p") : "p" + std::to_string(j); };
    std::vector<Generator> gens;
    for (int j = 1; j <= n; ++j) gens.push_back({xname(j), 1, j});
    for (int j = 1; j <= n; ++j) gens.push_back({pname(j), 1, n + j});
    auto p = std::make_shared<Presentation>(n == 1 ? "heisenberg" : "heisenberg" + std::to_string(n),
                                            gens);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            Element pj = p->gen(pname(j)), xi = p->gen(xname(i));
            Element rhs = xi * pj;
            if (i == j) rhs -= Element(kI);
            rule(*p, pj * xi, rhs, "[" + pname(j) + "," + xname(i) + "]");
            p->add_relation("[" + pname(j) + "," + xname(i) + "]", commutator(pj, xi),
                            i == j ? Element(-kI) : Element());
        }
        for (int i = 1; i < j; ++i) {
            Element xj = p->gen(xname(j)), xi = p->gen(xname(i));
            Element pj = p->gen(pname(j)), pi = p->gen(pname(i));
            rule(*p, xj * xi, xi * xj, "[" + xname(j) + "," + xname(i) + "]");
            rule(*p, pj * pi, pi * pj, "[" + pname(j) + "," + pname(i) + "]");
            p->add_relation("[" + xname(j) + "," + xname(i) + "]", commutator(xj, xi), Element());
            p->add_relation("[" + pname(j) + "," + pname(i) + "]", commutator(pj, pi), Element());
        }
    }
    std::vector<Element> star;
    for (GenId g = 0; g < p->generator_count(); ++g) star.push_back(Element::generator(g));
    p->set_star(star);
    return p;
}

PresentationPtr oscillator_classical() {
    auto p = std::make_shared<Presentation>(
        "oscillator", std::vector<Generator>{{"A", 1, 1}, {"Ad", 1, 2}, {"N", 1, 3}});
    Element a = p->gen("A"), ad = p->gen("Ad"), n = p->gen("N");
    rule(*p, a * ad, n + Element(1), "A Ad");
    rule(*p, ad * a, n, "N");
    rule(*p, n * a, a * n - a, "N A");
    rule(*p, n * ad, ad * n + ad, "N Ad");
    p->add_relation("ccr", commutator(a, ad), Element(1));
    p->add_relation("number", n, ad * a);
    p->set_star({ad, a, n});
    return p;
}

PresentationPtr q_oscillator() {
    auto p = std::make_shared<Presentation>("qoscillator",
                                            std::vector<Generator>{{"ad", 1, 1}, {"a", 1, 2}});
    Element a = p->gen("a"), ad = p->gen("ad");
    rule(*p, a * ad, qp(1) * (ad * a) + Element(1), "qccr");
    p->add_relation("qccr", a * ad - qp(1) * (ad * a), Element(1));
    p->set_star({a, ad});
    return p;
}

std::string stage_name(QHeisStage stage) {
    switch (stage) {
        case QHeisStage::Basic: return "qheis1";
        case QHeisStage::Conjugated: return "qheis3";
        case QHeisStage::WithR: return "qheis3r";
        case QHeisStage::TildeXi: return "qheis4";
        case QHeisStage::FinalPrinted: return "qheis5-printed";
        case QHeisStage::FinalCorrected: return "qheis5";
    }
    return "?";
}

namespace {

PresentationPtr qheis_final(bool printed) {
    auto p = std::make_shared<Presentation>(
        printed ? "qheis5-printed" : "qheis5",
        std::vector<Generator>{{"p", 1, 1}, {"u", 2, 2}, {"xi", 1, 3}, {"uinv", 5, 4}});
    Element P = p->gen("p"), U = p->gen("u"), X = p->gen("xi"), V = p->gen("uinv");
    Scalar up_coeff = printed ? qp(-1) : qp(1);
    Scalar dq = qp(1) - qp(-1);
    rule(*p, X * P, qp(-1) * (P * X) + kI * U, "xi p");
    rule(*p, U * P, up_coeff * (P * U), "u p");
    rule(*p, X * U, qp(1) * (U * X), "xi u");
    rule(*p, U * U, Element(1) - (kI * dq * up_coeff) * (P * U * X), "u u");
    rule(*p, V, U + (kI * dq) * (P * X), "uinv");
    p->add_relation("xi p", X * P - qp(-1) * (P * X), kI * U);
    p->add_relation("xi p +", X * P - qp(1) * (P * X), kI * V);
    p->add_relation("u p", U * P, up_coeff * (P * U));
    p->add_relation("u xi", U * X, qp(-1) * (X * U));
    p->add_relation("u uinv", U * V, Element(1));
    p->add_relation("uinv u", V * U, Element(1));
    p->set_star({P, qp(-1) * V, X, qp(1) * U});
    p->add_inverse_pair(p->id("u"), p->id("uinv"));
    return p;
}

}  // namespace

PresentationPtr q_heisenberg(QHeisStage stage) {
    if (stage == QHeisStage::FinalPrinted) return qheis_final(true);
    if (stage == QHeisStage::FinalCorrected) return qheis_final(false);

    std::vector<Generator> gens{{"xb", 1, 1}, {"x", 1, 2}, {"p", 1, 3}};
    if (stage == QHeisStage::Basic) gens = {{"x", 1, 1}, {"p", 1, 2}};
    if (stage == QHeisStage::WithR || stage == QHeisStage::TildeXi) {
        gens.push_back({"r", 3, 4});
        gens.push_back({"rb", 3, 5});
    }
    if (stage == QHeisStage::TildeXi) gens.push_back({"xit", 2, 6});
    auto p = std::make_shared<Presentation>(stage_name(stage), gens);

    Element P = p->gen("p"), X = p->gen("x");
    rule(*p, P * X, qp(1) * (X * P) - Element(kI), "p x");
    p->add_relation("p x", P * X - qp(1) * (X * P), Element(-kI));
    if (stage == QHeisStage::Basic) return p;

    Element XB = p->gen("xb");
    rule(*p, P * XB, qp(-1) * (XB * P) - Element(kI * qp(-1)), "p xb");
    rule(*p, X * XB, qp(1) * (XB * X), "x xb");
    p->add_relation("p xb", P * XB - qp(-1) * (XB * P), Element(-kI * qp(-1)));
    p->add_relation("x xb", X * XB, qp(1) * (XB * X));

    std::vector<Element> star{X, XB, P};  // xb -> x, x -> xb, p -> p
    if (stage == QHeisStage::Conjugated) {
        p->set_star(star);
        return p;
    }

    Element R = p->gen("r"), RB = p->gen("rb");
    rule(*p, R, kI * commutator(P, X), "r");
    rule(*p, RB, kI * commutator(P, XB), "rb");
    p->add_relation("r", R, kI * commutator(P, X));
    p->add_relation("rb", RB, kI * commutator(P, XB));
    // Consequences displayed alongside the defining relations.
    p->add_relation("r x", R * X, qp(1) * (X * R));
    p->add_relation("rb xb", RB * XB, qp(-1) * (XB * RB));
    p->add_relation("p r", P * R, qp(1) * (R * P));
    p->add_relation("p rb", P * RB, qp(-1) * (RB * P));
    star.push_back(RB);
    star.push_back(R);
    if (stage == QHeisStage::WithR) {
        p->set_star(star);
        return p;
    }

    Element XT = p->gen("xit");
    rule(*p, XT, X + XB, "xit");
    p->add_relation("xit", XT, X + XB);
    Scalar c = qp(-1) + Scalar(1);
    p->add_relation("xit p -", XT * P - qp(-1) * (P * XT), (kI * c) * RB);
    p->add_relation("xit p +", XT * P - qp(1) * (P * XT), (kI * c * qp(1)) * R);
    star.push_back(XT);
    p->set_star(star);
    return p;
}

std::vector<int> lightcone_indices(int dim) {
    if (dim < 1) throw BadParams("dimension must be positive");
    std::vector<int> out;
    int n = dim / 2;
    for (int a = -n; a <= n; ++a)
        if (a != 0 || dim % 2 == 1) out.push_back(a);
    return out;
}

std::string index_suffix(int alpha) {
    return alpha < 0 ? "m" + std::to_string(-alpha) : std::to_string(alpha);
}

PresentationPtr qdiff_presentation(const std::vector<int>& indices, const std::map<int, int>& k) {
    auto kof = [&](int a) {
        auto it = k.find(a);
        if (it == k.end()) throw BadK("no k given for index " + std::to_string(a));
        return it->second;
    };
    for (int a : indices) {
        int ka = kof(a);
        if (ka == 0) throw BadK("k(" + std::to_string(a) + ") must be nonzero");
        if (a != 0) {
            bool mirrored = false;
            for (int b : indices) mirrored = mirrored || b == -a;
            if (!mirrored) throw BadK("index " + std::to_string(a) + " has no mirror index");
            if (kof(-a) != -ka)
                throw BadK("k(" + std::to_string(a) + ") != -k(" + std::to_string(-a) + ")");
        }
    }

    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Generator> gens;
    int prec = 0;
    for (int a : sorted) {
        int K = std::abs(kof(a));
        std::string s = index_suffix(a);
        gens.push_back({"x_" + s, K, ++prec});
        gens.push_back({"u_" + s, 2, ++prec});
        gens.push_back({"D_" + s, K, ++prec});
        gens.push_back({"uinv_" + s, 4 * K + 1, ++prec});
    }
    auto p = std::make_shared<Presentation>("qdiff", gens);

    for (int a : sorted) {
        int ka = kof(a), K = std::abs(ka);
        std::string s = index_suffix(a);
        Element x = p->gen("x_" + s), d = p->gen("D_" + s), u = p->gen("u_" + s),
                v = p->gen("uinv_" + s);
        Scalar c = qp(K) - qp(-K);
        rule(*p, d * x, qp(-K) * (x * d) + pw(u, K), "D x " + s);
        rule(*p, u * x, qp(1) * (x * u), "u x " + s);
        rule(*p, d * u, qp(1) * (u * d), "D u " + s);
        rule(*p, pw(u, 2 * K), Element(1) + (c * qp(K)) * (x * pw(u, K) * d), "u^2k " + s);
        rule(*p, v, pw(u, 2 * K - 1) - (c * qp(K - 1)) * (x * pw(u, K - 1) * d), "uinv " + s);
        p->add_inverse_pair(p->id("u_" + s), p->id("uinv_" + s));

        auto upow = [&](int e) { return e >= 0 ? pw(u, e) : pw(v, -e); };
        p->add_relation("diffdef- " + s, d * x - qp(ka) * (x * d), upow(-ka));
        p->add_relation("diffdef+ " + s, d * x - qp(-ka) * (x * d), upow(ka));
        p->add_relation("u x " + s, u * x, qp(1) * (x * u));
        p->add_relation("u D " + s, u * d, qp(-1) * (d * u));
        p->add_relation("u uinv " + s, u * v, Element(1));
    }
    // Different indices commute.
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            std::string sa = index_suffix(sorted[i]), sb = index_suffix(sorted[j]);
            for (const char* l1 : {"x_", "u_", "D_"}) {
                for (const char* l2 : {"x_", "u_", "D_"}) {
                    Element hi = p->gen(std::string(l1) + sb), lo = p->gen(std::string(l2) + sa);
                    rule(*p, hi * lo, lo * hi, std::string(l1) + sb + " " + l2 + sa);
                }
            }
        }
    }

    std::vector<Element> star(p->generator_count());
    for (int a : sorted) {
        std::string s = index_suffix(a), m = index_suffix(-a);
        star[p->id("x_" + s)] = p->gen("x_" + m);
        star[p->id("D_" + s)] = -p->gen("D_" + m);
        star[p->id("u_" + s)] = qp(-1) * p->gen("uinv_" + m);
        star[p->id("uinv_" + s)] = qp(1) * p->gen("u_" + m);
    }
    p->set_star(star);
    return p;
}

PresentationPtr almost_commutative3(bool printed) {
    auto p = std::make_shared<Presentation>(
        printed ? "almost-commutative3-printed" : "almost-commutative3",
        std::vector<Generator>{{"xq_m1", 1, 1}, {"xq_0", 1, 2}, {"xq_1", 1, 3}});
    Element m = p->gen("xq_m1"), z = p->gen("xq_0"), o = p->gen("xq_1");
    // Rules are oriented with the larger generator to the right.
    Scalar c = printed ? qp(1) : qp(-1);
    rule(*p, z * m, c.inverse() * (m * z), "xq_m1 xq_0");
    rule(*p, o * z, qp(1) * (z * o), "xq_0 xq_1");
    rule(*p, o * m, m * o, "xq_m1 xq_1");
    p->add_relation("xq_m1 xq_0", m * z, c * (z * m));
    p->add_relation("xq_0 xq_1", z * o, qp(-1) * (o * z));
    p->add_relation("xq_m1 xq_1", m * o, o * m);
    return p;
}

CatalogKey CatalogKey::parse(const std::string& text) {
    CatalogKey key;
    auto colon = text.find(':');
    key.name = text.substr(0, colon);
    if (key.name.empty()) throw UsageError("empty presentation key");
    if (colon == std::string::npos) return key;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("bad presentation parameter '" + item + "' in '" + text + "'");
        key.params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return key;
}

std::string CatalogKey::to_string() const {
    std::string out = name;
    char sep = ':';
    for (const auto& [k, v] : params) {
        out += sep + k + "=" + v;
        sep = ',';
    }
    return out;
}

namespace {

int int_param(const CatalogKey& key, const std::string& name, int fallback) {
    auto it = key.params.find(name);
    if (it == key.params.end()) return fallback;
    try {
        std::size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw UsageError("parameter " + name + " of '" + key.name + "' must be an integer");
    }
}

void check_params(const CatalogKey& key, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : key.params) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw UsageError("unknown parameter '" + k + "' for '" + key.name + "'");
    }
}

}  // namespace

PresentationPtr by_key(const CatalogKey& key) {
    const std::string& n = key.name;
    if (n == "heisenberg") {
        check_params(key, {"n"});
        return heisenberg(int_param(key, "n", 1));
    }
    if (n == "oscillator") return check_params(key, {}), oscillator_classical();
    if (n == "qoscillator") return check_params(key, {}), q_oscillator();
    if (n == "qheis1") return check_params(key, {}), q_heisenberg(QHeisStage::Basic);
    if (n == "qheis3") return check_params(key, {}), q_heisenberg(QHeisStage::Conjugated);
    if (n == "qheis3r") return check_params(key, {}), q_heisenberg(QHeisStage::WithR);
    if (n == "qheis4") return check_params(key, {}), q_heisenberg(QHeisStage::TildeXi);
    if (n == "qheis5") {
        check_params(key, {"variant"});
        auto it = key.params.find("variant");
        std::string v = it == key.params.end() ? "corrected" : it->second;
        if (v == "corrected") return q_heisenberg(QHeisStage::FinalCorrected);
        if (v == "printed") return q_heisenberg(QHeisStage::FinalPrinted);
        throw UsageError("qheis5 variant must be 'printed' or 'corrected'");
    }
    if (n == "qdiff") {
        check_params(key, {"dim", "k", "k0"});
        int dim = int_param(key, "dim", 2);
        int k = int_param(key, "k", 1);
        int k0 = int_param(key, "k0", 1);
        std::map<int, int> ks;
        for (int a : lightcone_indices(dim)) ks[a] = a == 0 ? k0 : (a > 0 ? k : -k);
        return qdiff_presentation(lightcone_indices(dim), ks);
    }
    if (n == "almost3") {
        check_params(key, {"variant"});
        auto it = key.params.find("variant");
        return almost_commutative3(it != key.params.end() && it->second == "printed");
    }
    throw UsageError("unknown presentation '" + n + "'");
}

PresentationPtr by_key(const std::string& key) { return by_key(CatalogKey::parse(key)); }

std::vector<std::string> all_keys() {
    return {"heisenberg:n=1", "heisenberg:n=2", "heisenberg:n=3", "oscillator",
            "qoscillator",    "qheis1",         "qheis3",         "qheis3r",
            "qheis4",         "qheis5:variant=printed", "qheis5:variant=corrected",
            "qdiff:dim=1",    "qdiff:dim=2,k=1", "qdiff:dim=2,k=2", "qdiff:dim=3,k=2",
            "almost3"};
}

Morphism naive_oscillator_map() {
    Morphism m;
    m.name = "qoscillator-to-oscillator";
    m.source = q_oscillator();
    m.target = oscillator_classical();
    m.images = {m.target->gen("Ad"), m.target->gen("A")};  // ad, a
    return m;
}

Morphism remark1_morphism(bool printed) {
    Morphism m;
    m.name = printed ? "remark1-transform-printed" : "remark1-transform";
    m.source = almost_commutative3(printed);
    m.target = qdiff_presentation({-1, 0, 1}, {{-1, -2}, {0, 1}, {1, 2}});
    const auto& t = *m.target;
    m.images = {t.gen("x_m1"), t.gen("u_m1") * t.gen("uinv_1") * t.gen("x_0"), t.gen("x_1")};
    return m;
}

std::vector<NamedMorphism> named_morphisms() {
    std::vector<NamedMorphism> out;
    out.push_back({"remark1-transform",
                   "almost commutative coordinates into the q-difference algebra on {-1,0,1}",
                   remark1_morphism(false), false});
    out.push_back({"qoscillator-to-oscillator", "a -> A, ad -> Ad (not a homomorphism)",
                   naive_oscillator_map(), false});
    out.push_back({"deforming-map",
                   "a -> sqrt([N]/N) A, ad -> Ad sqrt([N]/N) on the truncated Fock space",
                   std::nullopt, true});
    out.push_back({"ureal",
                   "p -> p, u -> q^-1 exp(-i h x p), xi -> i p^-1 (u - u^-1)/(q - q^-1) in the "
                   "local Weyl algebra",
                   std::nullopt, false});
    return out;
}

}  // namespace qweyl::catalog

#include "qweyl/qdiff/operators.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <sstream>

#include "qweyl/catalog/catalog.hpp"
#include "qweyl/error.hpp"

namespace qweyl::qdiff {

using coeff::exact_divide;
using freealg::GenId;
using freealg::Generator;
using freealg::Presentation;
using freealg::Word;

namespace {

std::string sfx(int a) { return catalog::index_suffix(a); }

std::string letter_name(const Letter& l) {
    switch (l.kind) {
        case LetterKind::X: return "x_" + sfx(l.alpha);
        case LetterKind::XInv: return "xinv_" + sfx(l.alpha);
        case LetterKind::U: return "u_" + sfx(l.alpha);
        case LetterKind::UInv: return "uinv_" + sfx(l.alpha);
        case LetterKind::D: return "D_" + sfx(l.alpha);
        case LetterKind::Del: return "del_" + sfx(l.alpha);
        case LetterKind::Lam: return "Lam";
        case LetterKind::LamInv: return "Laminv";
        case LetterKind::Q: return Calculus::q_name(l.alpha, l.t, l.e, l.d);
    }
    return "?";
}

Letter bar_q(const Letter& l) { return {LetterKind::Q, -l.alpha, -l.t, l.e - l.t, l.d}; }

// 1 - q^n
Scalar one_minus_q(int n) { return Scalar(1) - Scalar::q_pow(n); }

}  // namespace

LaurentFunction LaurentFunction::monomial(const Exponents& m, const Scalar& c) {
    LaurentFunction f;
    f.add_term(m, c);
    return f;
}

void LaurentFunction::add_term(const Exponents& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentFunction& LaurentFunction::operator+=(const LaurentFunction& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentFunction& LaurentFunction::operator-=(const LaurentFunction& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentFunction LaurentFunction::scaled(const Scalar& c) const {
    LaurentFunction out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

std::string LaurentFunction::to_string(const std::vector<int>& indices) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t k = 0; k < m.size(); ++k)
            if (m[k] != 0) os << " x_" << sfx(indices[k]) << "^" << m[k];
    }
    return os.str();
}

Calculus::Calculus(std::vector<int> indices, std::map<int, int> k, std::vector<Letter> q_letters)
    : indices_(std::move(indices)), k_(std::move(k)) {
    std::sort(indices_.begin(), indices_.end());
    for (int a : indices_) {
        auto it = k_.find(a);
        if (it == k_.end() || it->second == 0) throw BadK("missing or zero k for index " + std::to_string(a));
    }
    for (int a : indices_)
        for (auto kind : {LetterKind::X, LetterKind::XInv, LetterKind::U, LetterKind::UInv, LetterKind::D,
                          LetterKind::Del})
            letters_.push_back({kind, a});
    letters_.push_back({LetterKind::Lam});
    letters_.push_back({LetterKind::LamInv});
    std::vector<Letter> qs;
    for (const auto& l : q_letters) {
        if (l.kind != LetterKind::Q || l.d == 0) throw BadParams("Q letters need kind Q and d != 0");
        for (const Letter& c : {l, bar_q(l)}) {
            bool seen = std::any_of(qs.begin(), qs.end(), [&](const Letter& o) {
                return o.alpha == c.alpha && o.t == c.t && o.e == c.e && o.d == c.d;
            });
            if (!seen) qs.push_back(c);
        }
    }
    for (const auto& l : qs) {
        position(l.alpha);
        letters_.push_back(l);
    }
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        gens.push_back({letter_name(letters_[i]), 1, static_cast<int>(i)});
    alphabet_ = std::make_shared<Presentation>("qdiff-operators", gens);
}

std::size_t Calculus::position(int alpha) const {
    auto it = std::find(indices_.begin(), indices_.end(), alpha);
    if (it == indices_.end()) throw BadParams("index " + std::to_string(alpha) + " not in the calculus");
    return static_cast<std::size_t>(it - indices_.begin());
}

std::string Calculus::q_name(int a, int t, int e, int d) {
    auto n = [](int v) { return v < 0 ? "m" + std::to_string(-v) : std::to_string(v); };
    return "Q_" + n(a) + "_" + n(t) + "_" + n(e) + "_" + n(d);
}

Element Calculus::x(int a) const { return alphabet_->gen("x_" + sfx(a)); }
Element Calculus::xinv(int a) const { return alphabet_->gen("xinv_" + sfx(a)); }
Element Calculus::u(int a) const { return alphabet_->gen("u_" + sfx(a)); }
Element Calculus::uinv(int a) const { return alphabet_->gen("uinv_" + sfx(a)); }
Element Calculus::D(int a) const { return alphabet_->gen("D_" + sfx(a)); }
Element Calculus::del(int a) const { return alphabet_->gen("del_" + sfx(a)); }
Element Calculus::lam() const { return alphabet_->gen("Lam"); }
Element Calculus::laminv() const { return alphabet_->gen("Laminv"); }
Element Calculus::q_op(int a, int t, int e, int d) const { return alphabet_->gen(q_name(a, t, e, d)); }

LaurentFunction Calculus::act_letter(const Letter& l, const LaurentFunction& f) const {
    LaurentFunction out;
    std::size_t p = (l.kind == LetterKind::Lam || l.kind == LetterKind::LamInv) ? 0 : position(l.alpha);
    for (const auto& [m0, c] : f.terms()) {
        Exponents m = m0;
        int mp = m[p];
        switch (l.kind) {
            case LetterKind::X: ++m[p]; out.add_term(m, c); break;
            case LetterKind::XInv: --m[p]; out.add_term(m, c); break;
            case LetterKind::U: out.add_term(m, c * Scalar::q_pow(mp)); break;
            case LetterKind::UInv: out.add_term(m, c * Scalar::q_pow(-mp)); break;
            case LetterKind::D: {
                // [(q^(k m) - q^(-k m)) / (q^k - q^(-k))] x^(m - e_a)
                int k = std::abs(k_.at(l.alpha));
                if (mp == 0) break;
                Scalar coef = exact_divide(Scalar::q_pow(k * mp) - Scalar::q_pow(-k * mp),
                                           Scalar::q_pow(k) - Scalar::q_pow(-k));
                --m[p];
                out.add_term(m, c * coef);
                break;
            }
            case LetterKind::Del:
                if (mp == 0) break;
                --m[p];
                out.add_term(m, c * Scalar(mp));
                break;
            case LetterKind::Lam:
            case LetterKind::LamInv: {
                int total = 0;
                for (int v : m) total += v;
                int sign = l.kind == LetterKind::Lam ? 1 : -1;
                out.add_term(m, c * Scalar::q_pow(2 * sign * total));
                break;
            }
            case LetterKind::Q: {
                int n = l.e + l.t * mp;
                if (n == 0) break;
                out.add_term(m, c * exact_divide(one_minus_q(n), one_minus_q(l.d)));
                break;
            }
        }
    }
    return out;
}

LaurentFunction Calculus::act(const Element& op, const LaurentFunction& f) const {
    LaurentFunction out;
    for (const auto& [w, c] : op.terms()) {
        LaurentFunction g = f;
        for (std::size_t k = w.size(); k-- > 0 && !g.is_zero();) g = act_letter(letters_.at(w[k]), g);
        out += g.scaled(c);
    }
    return out;
}

Element Calculus::involute(const Element& op) const {
    auto image = [&](GenId g) -> Element {
        const Letter& l = letters_.at(g);
        switch (l.kind) {
            case LetterKind::X: return x(-l.alpha);
            case LetterKind::XInv: return xinv(-l.alpha);
            case LetterKind::U: return Scalar::q_pow(-1) * uinv(-l.alpha);
            case LetterKind::UInv: return Scalar::q() * u(-l.alpha);
            case LetterKind::D: return -D(-l.alpha);
            case LetterKind::Del: return -del(-l.alpha);
            case LetterKind::Lam: return Scalar::q_pow(-2 * static_cast<int>(indices_.size())) * laminv();
            case LetterKind::LamInv: return Scalar::q_pow(2 * static_cast<int>(indices_.size())) * lam();
            case LetterKind::Q: {
                Letter b = bar_q(l);
                return q_op(b.alpha, b.t, b.e, b.d);
            }
        }
        return Element();
    };
    Element out;
    for (const auto& [w, c] : op.terms()) {
        Element term(c.conj());
        for (std::size_t k = w.size(); k-- > 0;) term = term * image(w[k]);
        out += term;
    }
    return out;
}

Element Calculus::import(const Element& e, const Presentation& from) const {
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element term(c);
        for (std::size_t k = 0; k < w.size(); ++k) term = term * alphabet_->gen(from.generator_name(w[k]));
        out += term;
    }
    return out;
}

std::vector<Exponents> monomial_grid(std::size_t arity, int lo, int hi) {
    std::vector<Exponents> out{Exponents{}};
    for (std::size_t k = 0; k < arity; ++k) {
        std::vector<Exponents> next;
        for (const auto& m : out)
            for (int v = lo; v <= hi; ++v) {
                Exponents e = m;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

ActionCheck check_by_action(const Calculus& c, const std::string& label, const Element& lhs,
                            const Element& rhs, const std::vector<Exponents>& monomials) {
    ActionCheck out{label, true, monomials.size(), {}};
    Element diff = lhs - rhs;
    for (const auto& m : monomials) {
        LaurentFunction r = c.act(diff, LaurentFunction::monomial(m));
        if (r.is_zero()) continue;
        out.pass = false;
        out.first_failure = LaurentFunction::monomial(m).to_string(c.indices()) + ": lhs - rhs = " +
                            r.to_string(c.indices());
        break;
    }
    return out;
}

bool DiffdefReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const ActionCheck& c) { return c.pass; });
}

DiffdefReport verify_diffdef(const std::vector<int>& indices, const std::map<int, int>& k,
                             int diagonal_bound, int sweep_bound) {
    auto pres = catalog::qdiff_presentation(indices, k);
    Calculus c(indices, k);
    const std::size_t n = c.indices().size();

    // Single-variable sweeps: m_a over the diagonal bound, the rest from a small set.
    auto diagonal = [&](int alpha) {
        std::size_t p = c.position(alpha);
        std::vector<Exponents> out;
        for (const auto& rest : monomial_grid(n - 1, -1, 1)) {
            for (int m = -diagonal_bound; m <= diagonal_bound; ++m) {
                Exponents e(rest.begin(), rest.end());
                e.insert(e.begin() + static_cast<std::ptrdiff_t>(p), m);
                out.push_back(std::move(e));
            }
        }
        return out;
    };
    auto grid = monomial_grid(n, -sweep_bound, sweep_bound);

    DiffdefReport report;
    for (const auto& rel : pres->relations()) {
        // Labels end in the index suffix.
        std::string s = rel.label.substr(rel.label.rfind(' ') + 1);
        int alpha = s[0] == 'm' ? -std::stoi(s.substr(1)) : std::stoi(s);
        Element lhs = c.import(rel.lhs, *pres), rhs = c.import(rel.rhs, *pres);
        report.items.push_back(check_by_action(c, rel.label, lhs, rhs, diagonal(alpha)));
        report.items.push_back(check_by_action(c, rel.label + " (grid)", lhs, rhs, grid));
        report.items.push_back(
            check_by_action(c, "bar(" + rel.label + ")", c.involute(lhs), c.involute(rhs), grid));
    }
    // Tensor product: letters of different indices commute.
    for (int a : c.indices())
        for (int b : c.indices()) {
            if (a == b) continue;
            for (auto fa : {&Calculus::x, &Calculus::D, &Calculus::u})
                for (auto fb : {&Calculus::x, &Calculus::D, &Calculus::u}) {
                    Element ea = (c.*fa)(a), eb = (c.*fb)(b);
                    std::string label = "[" + c.alphabet().generator_name(ea.terms().begin()->first[0]) + ", " +
                            c.alphabet().generator_name(eb.terms().begin()->first[0]) + "] = 0";
                    report.items.push_back(check_by_action(c, label, ea * eb, eb * ea, grid));
                }
        }
    return report;
}

DiffdefReport verify_involution(const Calculus& c, int sweep_bound) {
    DiffdefReport report;
    auto grid = monomial_grid(c.indices().size(), -sweep_bound, sweep_bound);
    for (GenId g = 0; g < c.alphabet().generator_count(); ++g) {
        Element e = Element::generator(g);
        report.items.push_back(check_by_action(c, "bar(bar(" + c.alphabet().generator_name(g) + "))",
                                               c.involute(c.involute(e)), e, grid));
    }
    return report;
}

}  // namespace qweyl::qdiff

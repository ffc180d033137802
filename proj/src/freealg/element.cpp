#include "qweyl/freealg/element.hpp"

namespace qweyl::freealg {

Element::Element(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Word(), c);
}

Element Element::word(const Word& w, const Scalar& c) {
    Element e;
    e.add_term(w, c);
    return e;
}

Scalar Element::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
    return out;
}

Element Element::scaled(const Scalar& c) const {
    if (c.is_zero()) return {};
    Element out = *this;
    for (auto& [w, x] : out.terms_) x *= c;
    return out;
}

Element Element::conj_coefficients() const {
    Element out = *this;
    for (auto& [w, c] : out.terms_) c = c.conj();
    return out;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

}  // namespace qweyl::freealg

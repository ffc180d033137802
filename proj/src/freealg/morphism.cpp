#include "qweyl/freealg/morphism.hpp"

#include <algorithm>

#include "qweyl/error.hpp"
#include "qweyl/freealg/rewriting.hpp"
#include "qweyl/freealg/syntax.hpp"

namespace qweyl::freealg {

Element Morphism::apply(const Element& e) const {
    if (images.size() != source->generator_count())
        throw BadParams("morphism " + name + " needs one image per source generator");
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element term(c);
        for (std::size_t k = 0; k < w.size(); ++k) term = nf_multiply(term, images[w[k]], *target);
        out += term;
    }
    return normal_form(out, *target);
}

bool HomReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const HomItem& i) { return i.pass; });
}

HomReport verify_hom(const Morphism& m) {
    HomReport report{m.name, {}};
    for (const auto& rule : m.source->rules()) {
        Element lhs = m.apply(Element::word(rule.lhs));
        Element rhs = m.apply(rule.rhs);
        Element residual = normal_form(lhs - rhs, *m.target);
        std::string label = rule.label.empty()
                                ? to_text(Element::word(rule.lhs), *m.source) + " -> " +
                                      to_text(rule.rhs, *m.source)
                                : rule.label;
        report.items.push_back({label, residual.is_zero(), residual});
    }
    return report;
}

Morphism identity_morphism(const PresentationPtr& pres) {
    Morphism m{"identity:" + pres->name(), pres, pres, {}};
    for (std::size_t g = 0; g < pres->generator_count(); ++g)
        m.images.push_back(Element::generator(static_cast<GenId>(g)));
    return m;
}

}  // namespace qweyl::freealg

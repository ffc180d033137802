#include "qweyl/freealg/presentation.hpp"

#include <algorithm>
#include <cstdlib>

#include "qweyl/error.hpp"

namespace qweyl::freealg {

std::size_t default_step_limit() {
    if (const char* env = std::getenv("QWEYL_STEP_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultStepLimit;
}

MonomialOrder::MonomialOrder(const std::vector<Generator>& gens) {
    for (const auto& g : gens) {
        weights_.push_back(g.weight);
        precedence_.push_back(g.precedence);
    }
}

long MonomialOrder::weight(const Word& w) const {
    long total = 0;
    for (std::size_t k = 0; k < w.size(); ++k) total += weights_[w[k]];
    return total;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
    long wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k] == b[k]) continue;
        int pa = precedence_[a[k]], pb = precedence_[b[k]];
        if (pa != pb) return pa < pb;
        return a[k] < b[k];
    }
    return a.size() < b.size();
}

Presentation::Presentation(std::string name, std::vector<Generator> gens)
    : name_(std::move(name)),
      gens_(std::move(gens)),
      order_(gens_),
      by_first_(gens_.size()),
      step_limit_(default_step_limit()) {
    for (std::size_t a = 0; a < gens_.size(); ++a) {
        if (gens_[a].weight <= 0) throw BadParams("generator weight must be positive: " + gens_[a].name);
        for (std::size_t b = a + 1; b < gens_.size(); ++b)
            if (gens_[a].name == gens_[b].name)
                throw BadParams("duplicate generator name " + gens_[a].name);
    }
}

std::optional<GenId> Presentation::find_generator(std::string_view name) const {
    for (std::size_t k = 0; k < gens_.size(); ++k)
        if (gens_[k].name == name) return static_cast<GenId>(k);
    return std::nullopt;
}

GenId Presentation::id(std::string_view name) const {
    auto g = find_generator(name);
    if (!g) throw BadParams("unknown generator '" + std::string(name) + "' in " + name_);
    return *g;
}

Word Presentation::word(std::initializer_list<std::string_view> names) const {
    std::u16string letters;
    for (auto n : names) letters.push_back(static_cast<char16_t>(id(n)));
    return Word(letters);
}

void Presentation::add_rule(const Word& lhs, const Element& rhs, std::string label) {
    if (lhs.empty()) throw BadRule("rule with empty left-hand side");
    for (const auto& r : rules_)
        if (r.lhs == lhs) throw BadRule("duplicate rule left-hand side in " + name_);
    for (const auto& [w, c] : rhs.terms())
        if (!order_.less(w, lhs))
            throw BadRule("rule " + label + " in " + name_ +
                          " does not decrease the monomial order");
    by_first_[lhs[0]].push_back(rules_.size());
    rules_.push_back({lhs, rhs, std::move(label)});
}

Word Presentation::leading_word(const Element& e) const {
    if (e.is_zero()) throw BadParams("leading word of zero element");
    const Word* best = nullptr;
    for (const auto& [w, c] : e.terms())
        if (!best || order_.less(*best, w)) best = &w;
    return *best;
}

void Presentation::add_rule_from_relation(const Element& relation, std::string label) {
    Word lead = leading_word(relation);
    Scalar lc = relation.coefficient(lead);
    if (!lc.is_unit())
        throw BadRule("leading coefficient " + lc.to_string() + " of relation " + label +
                      " is not a unit");
    Scalar inv = lc.inverse();
    Element rhs;
    for (const auto& [w, c] : relation.terms())
        if (!(w == lead)) rhs.add_term(w, -(c * inv));
    add_rule(lead, rhs, std::move(label));
}

std::size_t Presentation::max_lhs_length() const {
    std::size_t m = 0;
    for (const auto& r : rules_) m = std::max(m, r.lhs.size());
    return m;
}

void Presentation::add_relation(std::string label, Element lhs, Element rhs) {
    relations_.push_back({std::move(label), std::move(lhs), std::move(rhs)});
}

void Presentation::set_star(std::vector<Element> images) {
    if (images.size() != gens_.size())
        throw BadParams("star needs one image per generator in " + name_);
    star_ = std::move(images);
}

const std::vector<Element>& Presentation::star_images() const {
    if (!star_) throw NoStar("presentation " + name_ + " has no star structure");
    return *star_;
}

void Presentation::add_inverse_pair(GenId g, GenId g_inv) {
    inverses_[g] = g_inv;
    inverses_[g_inv] = g;
}

std::optional<GenId> Presentation::inverse_of(GenId g) const {
    auto it = inverses_.find(g);
    if (it == inverses_.end()) return std::nullopt;
    return it->second;
}

}  // namespace qweyl::freealg

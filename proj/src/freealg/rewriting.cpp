#include "qweyl/freealg/rewriting.hpp"

#include <map>

#include "qweyl/error.hpp"

namespace qweyl::freealg {

namespace {

struct OrderLess {
    const MonomialOrder* order;
    bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w, const Presentation& pres) {
    const auto& rules = pres.rules();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t r : pres.rules_starting_with(w[pos])) {
            const Word& lhs = rules[r].lhs;
            if (pos + lhs.size() <= w.size() && w.matches_at(pos, lhs)) return std::make_pair(pos, r);
        }
    }
    return std::nullopt;
}

Element normal_form(const Element& e, const Presentation& pres) {
    // Always expand the largest pending word: every reduction produces
    // strictly smaller words, so a word moved to `done` never reappears.
    std::map<Word, Scalar, OrderLess> pending(OrderLess{&pres.order()});
    for (const auto& [w, c] : e.terms()) pending.emplace(w, c);
    Element done;
    std::size_t steps = 0;
    const std::size_t limit = pres.step_limit();
    const auto& rules = pres.rules();
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Scalar c = std::move(it->second);
        pending.erase(it);
        auto redex = find_redex(w, pres);
        if (!redex) {
            done.add_term(w, c);
            continue;
        }
        if (++steps > limit)
            throw StepLimit("normal form of an element in " + pres.name() + " exceeded " +
                            std::to_string(limit) + " reduction steps");
        auto [pos, r] = *redex;
        const RewriteRule& rule = rules[r];
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + rule.lhs.size());
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = prefix + rw + suffix;
            Scalar nc = c * rc;
            auto [slot, inserted] = pending.try_emplace(nw, nc);
            if (!inserted) {
                slot->second += nc;
                if (slot->second.is_zero()) pending.erase(slot);
            }
        }
    }
    return done;
}

Element nf_multiply(const Element& a, const Element& b, const Presentation& pres) {
    return normal_form(a * b, pres);
}

RelationCheck check_relation(const Presentation& pres, const Element& lhs, const Element& rhs) {
    RelationCheck out;
    out.residual = normal_form(lhs - rhs, pres);
    out.holds = out.residual.is_zero();
    return out;
}

std::vector<Ambiguity> enumerate_ambiguities(const Presentation& pres, std::size_t maxlen,
                                             bool unresolved_only) {
    std::vector<Ambiguity> out;
    const auto& rules = pres.rules();
    auto record = [&](Ambiguity::Kind kind, const Word& word, std::size_t a, std::size_t b,
                      const Element& ra, const Element& rb) {
        Element na = normal_form(ra, pres);
        Element nb = normal_form(rb, pres);
        if (unresolved_only && na == nb) return;
        out.push_back({kind, word, a, b, std::move(na), std::move(nb)});
    };
    for (std::size_t a = 0; a < rules.size(); ++a) {
        const Word& la = rules[a].lhs;
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const Word& lb = rules[b].lhs;
            // Overlap: a proper suffix of la equals a proper prefix of lb.
            for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
                if (la.size() + lb.size() - k > maxlen) continue;
                if (la.substr(la.size() - k) != lb.substr(0, k)) continue;
                Word word = la + lb.substr(k);
                Element ra = rules[a].rhs * Element::word(lb.substr(k));
                Element rb = Element::word(la.substr(0, la.size() - k)) * rules[b].rhs;
                record(Ambiguity::Kind::Overlap, word, a, b, ra, rb);
            }
            // Inclusion: lb occurs strictly inside la.
            if (a != b && lb.size() < la.size() && la.size() <= maxlen) {
                for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
                    if (!la.matches_at(pos, lb)) continue;
                    Element rb = Element::word(la.substr(0, pos)) * rules[b].rhs *
                                 Element::word(la.substr(pos + lb.size()));
                    record(Ambiguity::Kind::Inclusion, la, a, b, rules[a].rhs, rb);
                }
            }
        }
    }
    return out;
}

std::vector<Ambiguity> overlap_check(const Presentation& pres, std::size_t maxlen) {
    if (maxlen < pres.max_lhs_length())
        throw BadParams("maxlen " + std::to_string(maxlen) + " is below the longest rule lhs " +
                        std::to_string(pres.max_lhs_length()));
    return enumerate_ambiguities(pres, maxlen, true);
}

Element apply_star(const Presentation& pres, const Element& e) {
    const auto& images = pres.star_images();
    Element out;
    for (const auto& [w, c] : e.terms()) {
        Element term(c.conj());
        for (std::size_t k = w.size(); k-- > 0;) term = nf_multiply(term, images[w[k]], pres);
        out += term;
    }
    return normal_form(out, pres);
}

}  // namespace qweyl::freealg

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/freealg/presentation.hpp"

namespace qweyl::freealg {

// Reduces e until no word contains a rule lhs. Throws StepLimit when more
// than pres.step_limit() single-rule applications are needed.
Element normal_form(const Element& e, const Presentation& pres);

// normal_form(a * b).
Element nf_multiply(const Element& a, const Element& b, const Presentation& pres);

// First position at which some rule applies: {position, rule index}.
std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w, const Presentation& pres);

struct RelationCheck {
    bool holds = false;
    Element residual;  // normal_form(lhs - rhs)
};

RelationCheck check_relation(const Presentation& pres, const Element& lhs, const Element& rhs);

struct Ambiguity {
    enum class Kind { Overlap, Inclusion };
    Kind kind;
    Word word;
    std::size_t rule_a;
    std::size_t rule_b;
    // Normal forms of the two one-step reductions, and their difference.
    Element via_a;
    Element via_b;
    Element difference() const { return via_a - via_b; }
};

// All overlap and inclusion ambiguities between rule lhs pairs whose
// combined word has length <= maxlen. `unresolved_only` drops the ones
// whose two reductions agree.
std::vector<Ambiguity> enumerate_ambiguities(const Presentation& pres, std::size_t maxlen,
                                             bool unresolved_only);

// Unresolved ambiguities up to maxlen; empty means locally confluent at
// this length. Throws BadParams if maxlen is below the longest rule lhs.
std::vector<Ambiguity> overlap_check(const Presentation& pres, std::size_t maxlen);

// Antilinear, antimultiplicative extension of the star images, followed by
// normal_form. Throws NoStar when the presentation has no star.
Element apply_star(const Presentation& pres, const Element& e);

}  // namespace qweyl::freealg

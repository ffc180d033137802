#pragma once

#include <string>

#include <json.hpp>

#include "qweyl/freealg/presentation.hpp"

namespace qweyl::freealg {

// Canonical text: terms in descending monomial order, juxtaposed factors,
// repeated letters folded into powers ("q^2 ad a^2 + (q + 1) a").
std::string to_text(const Element& e, const Presentation& pres);
std::string word_text(const Word& w, const Presentation& pres);

// {"terms": [{"word": [names...], "coeff": "<scalar text>"}]}
nlohmann::json to_json(const Element& e, const Presentation& pres);

}  // namespace qweyl::freealg

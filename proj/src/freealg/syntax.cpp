#include "qweyl/freealg/syntax.hpp"

#include <algorithm>
#include <vector>

namespace qweyl::freealg {

namespace {

std::vector<std::pair<Word, Scalar>> sorted_terms(const Element& e, const Presentation& pres) {
    std::vector<std::pair<Word, Scalar>> terms(e.terms().begin(), e.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return pres.order().less(b.first, a.first);
    });
    return terms;
}

// Pulls a leading minus sign out of a monomial scalar with a plain
// (non-compound) coefficient.
std::pair<bool, Scalar> split_sign(const Scalar& c) {
    if (!c.is_monomial()) return {false, c};
    const auto& g = c.terms()[0].second;
    if (g.is_compound()) return {false, c};
    bool neg = g.is_real() ? sgn(g.re()) < 0 : sgn(g.im()) < 0;
    return {neg, neg ? -c : c};
}

}  // namespace

std::string word_text(const Word& w, const Presentation& pres) {
    std::string out;
    std::size_t k = 0;
    while (k < w.size()) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!out.empty()) out += " ";
        out += pres.generator_name(w[k]);
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

std::string to_text(const Element& e, const Presentation& pres) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    auto terms = sorted_terms(e, pres);
    if (terms.size() == 1 && terms[0].first.empty()) return terms[0].second.to_string();
    for (const auto& [w, c] : terms) {
        auto [neg, mag] = split_sign(c);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string wt = word_text(w, pres);
        if (wt.empty()) {
            out += mag.is_monomial() ? mag.to_string() : "(" + mag.to_string() + ")";
        } else if (mag.is_one()) {
            out += wt;
        } else if (mag.is_monomial()) {
            out += mag.to_string() + " " + wt;
        } else {
            out += "(" + mag.to_string() + ") " + wt;
        }
    }
    return out;
}

nlohmann::json to_json(const Element& e, const Presentation& pres) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : sorted_terms(e, pres)) {
        nlohmann::json names = nlohmann::json::array();
        for (std::size_t k = 0; k < w.size(); ++k) names.push_back(pres.generator_name(w[k]));
        terms.push_back({{"word", names}, {"coeff", c.to_string()}});
    }
    return {{"terms", terms}};
}

}  // namespace qweyl::freealg

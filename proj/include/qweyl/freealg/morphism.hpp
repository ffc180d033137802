#pragma once

#include <string>
#include <vector>

#include "qweyl/freealg/presentation.hpp"

namespace qweyl::freealg {

// Algebra map given by generator images; nothing is assumed about it until
// verify_hom runs.
struct Morphism {
    std::string name;
    PresentationPtr source;
    PresentationPtr target;
    std::vector<Element> images;

    // phi(e), normal-ordered in the target.
    Element apply(const Element& e) const;
};

struct HomItem {
    std::string relation;
    bool pass = false;
    Element residual;
};

struct HomReport {
    std::string morphism;
    std::vector<HomItem> items;
    bool all_pass() const;
};

// For each source rule lhs -> rhs: normal_form(phi(lhs) - phi(rhs)) in the target.
HomReport verify_hom(const Morphism& m);

Morphism identity_morphism(const PresentationPtr& pres);

}  // namespace qweyl::freealg

#pragma once

#include "qweyl/freealg/element.hpp"

namespace qweyl::weyl {

// A derivation of the Weyl algebra A_1 (catalog heisenberg(1)), given by
// the images of x and p.
struct DerivationSpec {
    freealg::Element image_x;
    freealg::Element image_p;
    int degree_bound = 3;
};

// Solves [a, x] = d(x), [a, p] = d(p) for a of total degree at most
// degree_bound + 1 with zero constant term. Throws BadParams if the images
// violate d(p x - x p + i) = 0 or have non-constant coefficients, and
// NoSolution if the linear system has no solution within the bound.
freealg::Element inner_derivation_solve(const DerivationSpec& d);

}  // namespace qweyl::weyl

#pragma once

#include <string>
#include <vector>

#include "qweyl/freealg/presentation.hpp"
#include "qweyl/weyl/local_weyl.hpp"

namespace qweyl::weyl {

// u = exp(-i h p x) = q^-1 exp(-i h x p), truncated at h^K.
LocalWeylElement build_u(int order);
// q exp(i h x p), the inverse of build_u.
LocalWeylElement build_u_inv(int order);
// i p^-1 (u - u^-1) / (q - q^-1) through h^K (u is built one order higher).
LocalWeylElement build_xi(int order);

// Scalars go through q = exp(h); generators through `images`.
LocalWeylElement evaluate(const freealg::Element& e, const freealg::Presentation& pres,
                          const std::vector<LocalWeylElement>& images, int order);

enum class Variant { Printed, Corrected };
std::string variant_name(Variant v);

struct RealizationItem {
    std::string relation;  // label
    std::string text;      // "lhs = rhs"
    bool pass = false;
    LocalWeylElement residual;
    int leading_order = -1;  // lowest h-order of the residual, -1 when it vanishes
};

struct RealizationReport {
    Variant variant;
    int order;
    std::vector<RealizationItem> items;
    bool all_pass() const;
};

// Substitutes p, xi, u, uinv by their series realizations into every
// displayed relation of the chosen final presentation.
RealizationReport verify_qheis5_realization(int order, Variant variant);

}  // namespace qweyl::weyl

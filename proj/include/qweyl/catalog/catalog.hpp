#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/freealg/morphism.hpp"
#include "qweyl/freealg/presentation.hpp"

namespace qweyl::catalog {

using freealg::Element;
using freealg::Morphism;
using freealg::PresentationPtr;

// Weyl algebra A_n: generators x1..xn, p1..pn (x, p when n = 1),
// p_j x_i -> x_i p_j - i delta_ij, everything else commuting, all generators real.
PresentationPtr heisenberg(int n);

// A A^dagger - A^dagger A = 1 with N = A^dagger A carried as a generator.
PresentationPtr oscillator_classical();

// a a^dagger - q a^dagger a = 1.
PresentationPtr q_oscillator();

enum class QHeisStage {
    Basic,           // p x - q x p = -i
    Conjugated,      // adds xb with its relations; r eliminated
    WithR,           // adds r, rb as generators defined by r = i[p, x]
    TildeXi,         // adds xit = x + xb
    FinalPrinted,    // u p = q^-1 p u as displayed
    FinalCorrected,  // u p = q p u
};

std::string stage_name(QHeisStage stage);
PresentationPtr q_heisenberg(QHeisStage stage);

// Lightcone index sets: {-n..n} for odd dim, {-n..-1, 1..n} for even dim.
std::vector<int> lightcone_indices(int dim);
// "1", "0", "m1" for index -1.
std::string index_suffix(int alpha);

// Tensor product of the one-dimensional q-difference algebras generated by
// x_a, D_a, u_a, uinv_a. Requires k(a) = -k(-a) for a != 0 and k(0) != 0;
// throws BadK otherwise.
PresentationPtr qdiff_presentation(const std::vector<int>& indices, const std::map<int, int>& k);

// The coordinates of the three-dimensional almost commutative example,
// xq_m1, xq_0, xq_1. `printed` uses the first commutation relation with
// the exponent as displayed (q), the default the one implied by the
// coordinate transform (q^-1).
PresentationPtr almost_commutative3(bool printed = false);

// Addressable catalog keys, e.g. "heisenberg:n=2", "qheis5:variant=corrected",
// "qdiff:dim=2,k=1".
struct CatalogKey {
    std::string name;
    std::map<std::string, std::string> params;
    static CatalogKey parse(const std::string& text);
    std::string to_string() const;
};

PresentationPtr by_key(const CatalogKey& key);
PresentationPtr by_key(const std::string& key);
// Keys of every shipped presentation (the confluence suite iterates these).
std::vector<std::string> all_keys();

struct NamedMorphism {
    std::string name;
    std::string description;
    // Present when source and target are both rewriting presentations.
    std::optional<Morphism> symbolic;
    // The oscillator map is realized numerically (square roots of N); the
    // constant q^(-1/8) rescale restores the relation exactly.
    bool rescale_q_minus_eighth = false;
};

std::vector<NamedMorphism> named_morphisms();

// a -> A, ad -> Ad: not a deforming map; documents the residual.
Morphism naive_oscillator_map();
// Coordinates xq of the almost commutative space into the q-difference
// algebra on {-1, 0, 1}: xq_0 -> u_m1 uinv_1 x_0.
Morphism remark1_morphism(bool printed = false);

}  // namespace qweyl::catalog

#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "qweyl/freealg/element.hpp"
#include "qweyl/freealg/presentation.hpp"
#include "qweyl/soq/rmatrix.hpp"

namespace qweyl::soq {

using freealg::Element;
using freealg::PresentationPtr;

// Generator names: x_m1, x_0, x_1 (coordinates), d_m1.. (derivatives),
// dh_m1.. (conjugated derivatives), Lam, Laminv.
std::string coordinate_name(int label);
std::string derivative_name(int label);
std::string conjugate_derivative_name(int label);

// The differential algebra on the quantum plane. All presentations share
// one generator list (so elements move between them unchanged) and differ
// in which rules they carry.
struct DiffSO {
    RMatrix R;
    ProjectorSet projectors;
    Metric g;

    PresentationPtr full;         // every rule, with star from x_scale/d_scale
    PresentationPtr x_sector;     // quantum plane only
    PresentationPtr d_sector;     // derivative relations only
    PresentationPtr conj_sector;  // x, d and Lam rules; dh unused

    // star(x^m) = x_scale[m] x^-m, read off the metric (x^i -> sum_j g_{ji} x^j).
    // star(d_m) = d_scale[m] dh_-m and star(dh_-m) = d_scale[m]^-1 d_m, solved
    // so that star maps every rule into the ideal. Indexed by label position.
    std::vector<Scalar> x_scale;
    std::vector<Scalar> d_scale;
    // Solutions found in the search window (1 means the scaling is unique there).
    std::size_t d_scale_solutions = 0;
    // Label of the first rule broken by the transcribed derivative star
    // d_m -> -q^-N sum_i g_{mi} dh_i; empty if it preserves every rule.
    std::string transcribed_star_failure;

    // Copy of `full` whose star uses the given scales.
    PresentationPtr with_star(const std::vector<Scalar>& xs, const std::vector<Scalar>& ds) const;

    int N() const { return R.N; }
    const std::vector<int>& labels() const { return R.labels; }
    Element x(int label) const;
    Element d(int label) const;
    Element dh(int label) const;
    Element lam() const;
    Element lam_inv() const;

    // x_k = sum_j g_{kj} x^j.
    Element x_lower(int label) const;
    // sum g_{ij} x^i x^j and sum g^{ij} d_i d_j; the normalizing prefactor
    // (1 + q^(N-2))^-1 is dropped from both and folded into qconjr_factor.
    Element L() const;
    Element Delta() const;
    // q^(N-1) (q - q^-1) / (1 + q^(N-2)).
    Scalar qconjr_factor() const;
    // K_k = d_k + qconjr_factor * x_k Delta; the substitute for dh_k is Lam^-1 K_k.
    Element conj_numerator(int label) const;
    Element conj_substitute(int label) const;
    // K_k x^j - q sum R̂^-1{jc}_{kl} x^l K_c, normal-ordered in conj_sector.
    // The conjugated action holds for Lam^-1 K exactly when this equals
    // delta_kj Lam; the diagonal value is the realization of Lam.
    Element conj_action_defect(int k, int j) const;
    // d_i + q^-N dh_i.
    Element D(int label) const;
    // q-exponent used in D_i x^i - q^e x^i D_i: 2, or 1 for the label 0.
    int r_exponent(int label) const;
    Element r(int label) const;
    Element r_tilde(int label) const;
};

// Derives every rule from the R-matrix and metric: quantum plane and
// derivative relations by eliminating the P^- rows, derivative actions from
// R̂ and R̂^-1, the derivative cross relation, and the Lam scaling rules.
DiffSO build_diff_presentation(const RMatrix& r, const ProjectorSet& p, const Metric& g);

struct SoqItem {
    std::string name;
    bool pass = false;
    std::string residual;  // "0" on pass
};

struct SoqReport {
    std::vector<SoqItem> items;
    std::vector<std::string> notes;
    bool all_pass() const;
    void add(std::string name, bool pass, std::string residual);
    void append(const SoqReport& other);
};

SoqReport rmatrix_checks(const RMatrix& r, const ProjectorSet& p, const Metric& g);
// Confluence of the sectors and of the full presentation; star is an
// anti-automorphism and an involution.
SoqReport structure_checks(const DiffSO& a);
SoqReport centrality_checks(const DiffSO& a);
SoqReport verify_qconjr_and_D(const DiffSO& a);
SoqReport compute_r_and_verify_r1(const DiffSO& a);

// Loads, validates and runs every check above.
SoqReport run_soq_suite(const std::filesystem::path& rmatrix_file);

}  // namespace qweyl::soq

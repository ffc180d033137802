#include "qweyl/weyl/realization.hpp"

#include "qweyl/catalog/catalog.hpp"
#include "qweyl/error.hpp"
#include "qweyl/freealg/syntax.hpp"

namespace qweyl::weyl {

using coeff::GaussianRational;
using coeff::Scalar;
using coeff::expand_q_to_h;

namespace {

// exp(c h x p) through h^K.
LocalWeylElement exp_xp(const GaussianRational& c, int order) {
    LocalWeylElement xp = local_multiply(LocalWeylElement::x(order), LocalWeylElement::p(order));
    LocalWeylElement power = LocalWeylElement::constant(HSeries::constant(1, order));
    LocalWeylElement out(order);
    GaussianRational factor = 1;  // c^n / n!
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            power = local_multiply(power, xp);
            factor = factor * c / GaussianRational(n);
        }
        HSeries hn(order);
        hn[n] = factor;
        out += power.scaled(hn);
    }
    return out;
}

}  // namespace

LocalWeylElement build_u(int order) {
    if (order < 1) throw BadParams("series order must be at least 1");
    return exp_xp(-GaussianRational::i(), order).scaled(expand_q_to_h(Scalar::q_pow(-1), order));
}

LocalWeylElement build_u_inv(int order) {
    if (order < 1) throw BadParams("series order must be at least 1");
    return exp_xp(GaussianRational::i(), order).scaled(expand_q_to_h(Scalar::q(), order));
}

LocalWeylElement build_xi(int order) {
    if (order < 1) throw BadParams("series order must be at least 1");
    int k = order + 1;
    LocalWeylElement diff = build_u(k) - build_u_inv(k);
    LocalWeylElement num = local_multiply(LocalWeylElement::p_inv(k), diff)
                               .scaled(HSeries::constant(GaussianRational::i(), k));
    return num.divided(expand_q_to_h(Scalar::q() - Scalar::q_pow(-1), k));
}

LocalWeylElement evaluate(const freealg::Element& e, const freealg::Presentation& pres,
                          const std::vector<LocalWeylElement>& images, int order) {
    if (images.size() != pres.generator_count())
        throw BadParams("realization needs one image per generator of " + pres.name());
    LocalWeylElement out(order);
    for (const auto& [w, c] : e.terms()) {
        LocalWeylElement term = LocalWeylElement::constant(expand_q_to_h(c, order));
        for (std::size_t k = 0; k < w.size(); ++k) term = local_multiply(term, images.at(w[k]));
        out += term;
    }
    return out;
}

std::string variant_name(Variant v) { return v == Variant::Printed ? "printed" : "corrected"; }

bool RealizationReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

RealizationReport verify_qheis5_realization(int order, Variant variant) {
    auto pres = catalog::q_heisenberg(variant == Variant::Printed ? catalog::QHeisStage::FinalPrinted
                                                                  : catalog::QHeisStage::FinalCorrected);
    std::vector<LocalWeylElement> images(pres->generator_count());
    images[pres->id("p")] = LocalWeylElement::p(order);
    images[pres->id("u")] = build_u(order);
    images[pres->id("uinv")] = build_u_inv(order);
    images[pres->id("xi")] = build_xi(order);

    RealizationReport report{variant, order, {}};
    for (const auto& rel : pres->relations()) {
        RealizationItem item;
        item.relation = rel.label;
        item.text = freealg::to_text(rel.lhs, *pres) + " = " + freealg::to_text(rel.rhs, *pres);
        item.residual = evaluate(rel.lhs, *pres, images, order) - evaluate(rel.rhs, *pres, images, order);
        item.pass = item.residual.is_zero();
        item.leading_order = item.pass ? -1 : item.residual.valuation();
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace qweyl::weyl

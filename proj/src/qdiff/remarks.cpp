#include "qweyl/qdiff/remarks.hpp"

#include <algorithm>
#include <optional>

#include "qweyl/coeff/ratfunc.hpp"

namespace qweyl::qdiff {

using coeff::RatFunc;

namespace {

Scalar qp(int e) { return Scalar::q_pow(e); }

const std::map<int, int> kUnit{{-1, -1}, {0, 1}, {1, 1}};

// If rhs acts as c * lhs on every monomial for one rational function c, returns c.
std::optional<RatFunc> proportionality(const Calculus& c, const Element& lhs, const Element& rhs,
                                       const std::vector<Exponents>& monomials) {
    std::optional<RatFunc> ratio;
    for (const auto& m : monomials) {
        LaurentFunction a = c.act(lhs, LaurentFunction::monomial(m));
        LaurentFunction b = c.act(rhs, LaurentFunction::monomial(m));
        if (a.is_zero() && b.is_zero()) continue;
        if (a.is_zero() || b.is_zero() || a.terms().size() != 1 || b.terms().size() != 1 ||
            a.terms().begin()->first != b.terms().begin()->first)
            return std::nullopt;
        RatFunc r = RatFunc(b.terms().begin()->second) / RatFunc(a.terms().begin()->second);
        if (ratio && !(*ratio == r)) return std::nullopt;
        ratio = r;
    }
    return ratio;
}

}  // namespace

bool RemarkReport::all_ok() const {
    return std::all_of(items.begin(), items.end(), [](const RemarkItem& i) { return i.ok(); });
}

RemarkReport remark1_transform(int sweep_bound) {
    Calculus c({-1, 0, 1}, kUnit);
    auto grid = monomial_grid(3, -sweep_bound, sweep_bound);
    Element xm = c.x(-1), x0 = c.u(-1) * c.uinv(1) * c.x(0), x1 = c.x(1);
    Element d0 = c.u(1) * c.uinv(-1) * c.D(0);
    int k0 = c.k(0);

    RemarkReport rep;
    auto add = [&](std::string statement, const Element& lhs, const Element& rhs, bool expected = true) {
        rep.items.push_back({statement, expected, check_by_action(c, statement, lhs, rhs, grid)});
    };
    add("xq_m1 xq_0 = q^-1 xq_0 xq_m1", xm * x0, qp(-1) * (x0 * xm));
    add("xq_m1 xq_0 = q xq_0 xq_m1 (as displayed)", xm * x0, qp(1) * (x0 * xm), false);
    add("xq_0 xq_1 = q^-1 xq_1 xq_0", x0 * x1, qp(-1) * (x1 * x0));
    add("xq_m1 xq_1 = xq_1 xq_m1", xm * x1, x1 * xm);
    add("bar(xq_0) = xq_0", c.involute(x0), x0);
    add("bar(xq_m1) = xq_1", c.involute(xm), x1);
    add("bar(xq_1) = xq_m1", c.involute(x1), xm);
    add("D0q xq_0 - q^k xq_0 D0q = u_0^-k", d0 * x0 - qp(k0) * (x0 * d0), c.uinv(0));
    add("D0q xq_0 - q^-k xq_0 D0q = u_0^k", d0 * x0 - qp(-k0) * (x0 * d0), c.u(0));
    add("u_0 xq_0 = q xq_0 u_0", c.u(0) * x0, qp(1) * (x0 * c.u(0)));
    add("u_0 D0q = q^-1 D0q u_0", c.u(0) * d0, qp(-1) * (d0 * c.u(0)));
    add("D0q xq_1 = q xq_1 D0q", d0 * x1, qp(1) * (x1 * d0));
    add("D0q xq_m1 = q^-1 xq_m1 D0q", d0 * xm, qp(-1) * (xm * d0));
    rep.notes.push_back(
        "the first coordinate relation holds with q^-1; the displayed exponent q is flagged");
    rep.notes.push_back(
        "the second displayed relation is read as xq_0 xq_1 = q^-1 xq_1 xq_0");
    return rep;
}

Calculus remark3_calculus() {
    std::vector<Letter> qs{{LetterKind::Q, -1, 2, 0, 2},
                           {LetterKind::Q, 0, 1, 0, 1},
                           {LetterKind::Q, 1, 2, 0, 2},
                           {LetterKind::Q, 0, -2, 0, 1}};
    return Calculus({-1, 0, 1}, kUnit, qs);
}

RemarkReport remark3_unsymmetric(int sweep_bound) {
    Calculus c = remark3_calculus();
    auto grid = monomial_grid(3, -sweep_bound, sweep_bound);
    Element pm = c.u(0) * c.xinv(-1) * c.q_op(-1, 2, 0, 2);
    Element p0 = c.u(-1) * c.u(1) * c.xinv(0) * c.q_op(0, 1, 0, 1);
    Element p1 = c.u(0) * c.xinv(1) * c.q_op(1, 2, 0, 2);
    Element bar0 = c.involute(p0);
    Element hat_printed = -qp(-3) * bar0;
    Element hat = -qp(3) * bar0;
    Element uu = c.u(-1) * c.u(1), uu_inv = c.uinv(-1) * c.uinv(1);

    RemarkReport rep;
    auto add = [&](std::string statement, const Element& lhs, const Element& rhs, bool expected = true) {
        rep.items.push_back({statement, expected, check_by_action(c, statement, lhs, rhs, grid)});
    };
    add("part_0 x_0 = u_m1 u_1 + q x_0 part_0", p0 * c.x(0), uu + qp(1) * (c.x(0) * p0));
    add("part_1 x_1 = u_0 + q^2 x_1 part_1", p1 * c.x(1), c.u(0) + qp(2) * (c.x(1) * p1));
    add("part_m1 x_m1 = u_0 + q^2 x_m1 part_m1", pm * c.x(-1), c.u(0) + qp(2) * (c.x(-1) * pm));
    add("[part_m1, part_0] = 0", pm * p0, p0 * pm);
    add("[part_m1, part_1] = 0", pm * p1, p1 * pm);
    add("[part_0, part_1] = 0", p0 * p1, p1 * p0);
    add("hat(part_0) x_0 = (u_m1 u_1)^-1 + q^-1 x_0 hat(part_0), hat = -q^-3 bar (as displayed)",
        hat_printed * c.x(0), uu_inv + qp(-1) * (c.x(0) * hat_printed), false);
    add("hat(part_0) x_0 = (u_m1 u_1)^-1 + q^-1 x_0 hat(part_0), hat = -q^3 bar",
        hat * c.x(0), uu_inv + qp(-1) * (c.x(0) * hat));
    add("Lam x_0 = q^2 x_0 Lam", c.lam() * c.x(0), qp(2) * (c.x(0) * c.lam()));
    add("Lam part_0 = q^-2 part_0 Lam", c.lam() * p0, qp(-2) * (p0 * c.lam()));
    add("Lam Laminv = 1", c.lam() * c.laminv(), Element(1));
    add("bar(Lam) = q^-6 Laminv", c.involute(c.lam()), qp(-6) * c.laminv());

    // -(q+1)/(q^-2 - 1) (u_0^-2 - 1) = q^2 (1 - u_0^-2)/(1 - q)
    Element conjr_rhs = c.laminv() * p0 + qp(2) * (uu_inv * c.xinv(0) * c.q_op(0, -2, 0, 1));
    add("conjr read as an equality (hat = -q^3 bar)", hat, conjr_rhs, false);
    if (auto r = proportionality(c, hat, conjr_rhs, grid)) {
        rep.notes.push_back("conjr right-hand side = (" + r->to_string() + ") * hat(part_0), hat = -q^3 bar");
        add("conjr right-hand side = (" + r->to_string() + ") hat(part_0)", conjr_rhs,
            Element(r->as_laurent().value_or(Scalar())) * hat, r->is_laurent());
    } else {
        rep.notes.push_back("conjr right-hand side is not proportional to hat(part_0)");
    }
    if (auto r = proportionality(c, hat_printed, conjr_rhs, grid))
        rep.notes.push_back("conjr right-hand side = (" + r->to_string() + ") * hat(part_0), hat = -q^-3 bar");
    return rep;
}

}  // namespace qweyl::qdiff

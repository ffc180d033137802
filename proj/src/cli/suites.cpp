#include "qweyl/cli/suites.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <random>

#include "qweyl/catalog/catalog.hpp"
#include "qweyl/cli/parser.hpp"
#include "qweyl/error.hpp"
#include "qweyl/fock/momentum.hpp"
#include "qweyl/fock/oscillator.hpp"
#include "qweyl/freealg/rewriting.hpp"
#include "qweyl/freealg/syntax.hpp"
#include "qweyl/qdiff/remarks.hpp"
#include "qweyl/soq/diff_algebra.hpp"
#include "qweyl/weyl/inner_derivation.hpp"
#include "qweyl/weyl/realization.hpp"

#ifndef QWEYL_DATA_DIR
#define QWEYL_DATA_DIR "data"
#endif

namespace qweyl::cli {

using coeff::GaussianRational;
using coeff::Scalar;
using freealg::Element;

namespace {

std::string sci(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Le", v);
    return buf;
}

std::string elem_text(const Element& e, const freealg::Presentation& p) { return freealg::to_text(e, p); }

const std::map<std::string, std::set<std::string>>& option_table() {
    static const std::map<std::string, std::set<std::string>> t = {
        {"qheis5-realization", {"order", "variant"}},
        {"osc-map", {"dim", "q"}},
        {"momentum-rep", {"levels", "exact", "float", "q", "pi0", "variant"}},
        {"qdiff", {"bound", "sweep"}},
        {"remark1", {"sweep"}},
        {"remark3", {"sweep"}},
        {"soq", {"n", "rmatrix"}},
        {"inner-derivations", {"trials", "seed"}},
        {"confluence", {"algebra", "maxlen"}},
    };
    return t;
}

void require_positive(int v, const std::string& name) {
    if (v <= 0) throw UsageError("--" + name + " must be positive");
}

Report realization_suite(const SuiteOptions& o) {
    require_positive(o.order, "order");
    weyl::Variant v;
    if (o.variant == "corrected") v = weyl::Variant::Corrected;
    else if (o.variant == "printed") v = weyl::Variant::Printed;
    else throw UsageError("--variant must be 'corrected' or 'printed'");
    Report r;
    r.inputs = {{"order", o.order}, {"variant", o.variant}};
    auto rep = weyl::verify_qheis5_realization(o.order, v);
    for (const auto& it : rep.items) {
        std::string res = "0";
        if (!it.pass)
            res = "leading order h^" + std::to_string(it.leading_order) + ": " +
                  it.residual.at_order(it.leading_order).to_string();
        r.add(it.relation + ": " + it.text, it.pass, res);
    }
    auto xi0 = weyl::build_xi(o.order).at_order(0);
    auto diff = xi0 - weyl::LocalWeylElement::x(0);
    r.add("xi = x mod h", diff.is_zero(), diff.is_zero() ? "0" : diff.to_string());
    return r;
}

Report osc_map_suite(const SuiteOptions& o) {
    if (o.q <= 0) throw UsageError("--q must be positive");
    Report r;
    r.inputs = {{"dim", o.dim}, {"q", o.q}};
    long double q = o.q;
    auto m = fock::deforming_map_check(o.dim, q);
    r.add("a ad - q ad a - 1 = 0 on interior levels, with q^(-1/8) rescale", m.residual_rescaled < 1e-9L,
          sci(m.residual_rescaled));
    long double gap = std::fabs(m.residual_unscaled - m.predicted_unscaled);
    r.add("without rescale the residual is |q^(1/4) - 1|", gap < 1e-12L,
          sci(m.residual_unscaled) + " vs " + sci(m.predicted_unscaled));
    r.add("a = A at q = 1", m.classical_limit_error == 0, sci(m.classical_limit_error));
    // Closed form: ad a |n> = q^((2n-1)/4) [n] |n> without the rescale.
    auto d = fock::deformed_osc_rep(o.dim, q, false);
    fock::FloatMatrix ada = d.matrices.at("ad") * d.matrices.at("a");
    long double s = std::sqrt(q), worst = 0;
    for (int n = 0; n < o.dim; ++n) {
        long double qn = (std::pow(s, n) - std::pow(s, -n)) / (s - 1 / s);
        long double expect = std::pow(q, (2 * n - 1) / 4.0L) * qn;
        worst = std::max(worst, std::abs(ada(n, n) - fock::Complex(expect)) / std::max(1.0L, expect));
    }
    r.add("ad a = q^((2n-1)/4) [n] (relative)", worst < 1e-12L, sci(worst));
    return r;
}

Report momentum_suite(const SuiteOptions& o) {
    require_positive(o.levels, "levels");
    auto pres = catalog::by_key("qheis5:variant=" + o.variant);
    Report r;
    r.inputs = {{"levels", o.levels}, {"exact", o.exact}, {"variant", o.variant}};
    if (o.exact) {
        if (o.given.count("pi0") && o.pi0 != 1.0) throw UsageError("exact mode requires --pi0 1");
        auto rep = fock::momentum_rep_exact(o.levels);
        for (const auto& it : fock::check_relations(*pres, rep)) r.add(it.relation, it.pass, it.pass ? "0" : it.residual);
        bool diag = true;
        std::string bad = "0";
        const auto& p = rep.matrices.at("p");
        for (std::size_t c = 0; c < rep.dim; ++c)
            if (!(p(c, c) == coeff::RatFunc(Scalar::q_pow(rep.labels[c])))) {
                diag = false;
                bad = "level " + std::to_string(rep.labels[c]) + ": " + p(c, c).to_string();
                break;
            }
        r.add("p |n> = q^n |n>", diag, bad);
        auto du = fock::derived_u(rep) - rep.matrices.at("u");
        bool same = du.columns_zero(rep.interior_mask);
        r.add("u = -i(xi p - q^-1 p xi) on interior levels", same, same ? "0" : "differs");
    } else {
        r.inputs["q"] = o.q;
        r.inputs["pi0"] = o.pi0;
        auto rep = fock::momentum_rep_float(o.levels, o.q, o.pi0);
        for (const auto& it : fock::check_relations(*pres, rep, o.q, 1e-9L))
            r.add(it.relation, it.pass, sci(it.max_residual));
    }
    return r;
}

void add_action_checks(Report& r, const std::string& prefix, const std::vector<qdiff::ActionCheck>& items) {
    for (const auto& it : items)
        r.add(prefix + it.relation + " (" + std::to_string(it.monomials) + " monomials)", it.pass,
              it.pass ? "0" : it.first_failure);
}

Report qdiff_suite(const SuiteOptions& o) {
    require_positive(o.bound, "bound");
    require_positive(o.sweep, "sweep");
    Report r;
    r.inputs = {{"bound", o.bound}, {"sweep", o.sweep}};
    // Independent calculi; checked concurrently, reported in a fixed order.
    using Job = std::future<qdiff::DiffdefReport>;
    std::vector<std::pair<std::string, Job>> jobs;
    for (int k : {1, -1, 2, -2})
        jobs.emplace_back("dim 2, k=" + std::to_string(k) + ": ",
                          std::async(std::launch::async, [k, &o] {
                              return qdiff::verify_diffdef({-1, 1}, {{-1, -k}, {1, k}}, o.bound, o.sweep);
                          }));
    jobs.emplace_back("dim 3, k=(-2,1,2): ", std::async(std::launch::async, [&o] {
                          return qdiff::verify_diffdef({-1, 0, 1}, {{-1, -2}, {0, 1}, {1, 2}}, o.bound, o.sweep);
                      }));
    for (auto& [prefix, job] : jobs) add_action_checks(r, prefix, job.get().items);
    auto inv = qdiff::verify_involution(qdiff::remark3_calculus(), std::min(o.sweep, 3));
    add_action_checks(r, "involution: ", inv.items);
    return r;
}

Report remark_suite(const qdiff::RemarkReport& rep, int sweep) {
    Report r;
    r.inputs = {{"sweep", sweep}};
    for (const auto& it : rep.items) {
        std::string name = it.statement;
        std::string res = it.check.pass ? "0" : it.check.first_failure;
        if (!it.expected) {
            name += " [displayed form, expected to fail]";
            if (!it.check.pass) res = "fails as expected: " + res;
        }
        r.add(name, it.ok(), res);
    }
    r.notes = rep.notes;
    return r;
}

Report soq_suite(const SuiteOptions& o) {
    auto file = o.rmatrix.empty() ? default_rmatrix_file(o.n) : o.rmatrix;
    Report r;
    r.inputs = {{"n", o.n}, {"rmatrix", file.filename().string()}};
    try {
        auto parsed = soq::read_rmatrix_file(file);
        if (parsed.N != o.n)
            throw UsageError("--n " + std::to_string(o.n) + " but " + file.string() + " has N=" +
                             std::to_string(parsed.N));
        auto rep = soq::run_soq_suite(file);
        for (const auto& it : rep.items) r.add(it.name, it.pass, it.residual);
        r.notes = rep.notes;
    } catch (const ValidationFailed& e) {
        r.add("R-matrix validation", false, e.what());
    } catch (const DegenerateEigenvalues& e) {
        r.add("R-matrix validation", false, e.what());
    } catch (const NotRankOne& e) {
        r.add("rank-1 metric factorization", false, e.what());
    }
    return r;
}

Report inner_derivation_suite(const SuiteOptions& o) {
    require_positive(o.trials, "trials");
    Report r;
    r.inputs = {{"trials", o.trials}, {"seed", o.seed}};
    auto h = catalog::heisenberg(1);
    auto x = h->gen("x"), p = h->gen("p");
    {
        auto a = weyl::inner_derivation_solve({Element(1), Element(), 1});
        Element expect = Scalar::i() * p;
        r.add("d(x) = 1, d(p) = 0 is ad of i p", a == expect, a == expect ? "0" : elem_text(a - expect, *h));
    }
    {
        auto a = weyl::inner_derivation_solve({Element(), Element(Scalar::i()), 1});
        r.add("d(x) = 0, d(p) = i is ad of x", a == x, a == x ? "0" : elem_text(a - x, *h));
    }
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> v(-3, 3), deg(0, 3), bit(0, 1);
    for (int t = 0; t < o.trials; ++t) {
        Element w;
        for (int k = 0; k < 4; ++k) {
            Element m(1);
            int n = deg(rng);
            for (int j = 0; j < n; ++j) m = m * (bit(rng) ? x : p);
            int re = v(rng), im = v(rng);
            w += m.scaled(Scalar(GaussianRational(re, im)));
        }
        w = freealg::normal_form(w, *h);
        auto dx = freealg::normal_form(freealg::commutator(w, x), *h);
        auto dp = freealg::normal_form(freealg::commutator(w, p), *h);
        Element expect = w - Element(w.constant());
        std::string name = "trial " + std::to_string(t) + ": ad(" + elem_text(w, *h) + ")";
        try {
            auto a = weyl::inner_derivation_solve({dx, dp, 3});
            r.add(name, a == expect, a == expect ? "0" : elem_text(a - expect, *h));
        } catch (const NoSolution& e) {
            r.add(name, false, e.what());
        }
    }
    return r;
}

}  // namespace

std::filesystem::path default_rmatrix_file(int n) {
    return std::filesystem::path(QWEYL_DATA_DIR) / ("so" + std::to_string(n) + ".rmat");
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : option_table()) out.push_back(k);
    return out;
}

std::set<std::string> suite_options(const std::string& suite) {
    auto it = option_table().find(suite);
    if (it == option_table().end()) throw UsageError("unknown suite '" + suite + "'");
    return it->second;
}

Report run_suite(const std::string& suite, const SuiteOptions& opts) {
    auto allowed = suite_options(suite);
    for (const auto& g : opts.given)
        if (!allowed.count(g)) throw UsageError("option --" + g + " does not apply to suite '" + suite + "'");
    Report r;
    if (suite == "qheis5-realization") r = realization_suite(opts);
    else if (suite == "osc-map") r = osc_map_suite(opts);
    else if (suite == "momentum-rep") r = momentum_suite(opts);
    else if (suite == "qdiff") r = qdiff_suite(opts);
    else if (suite == "remark1") r = remark_suite(qdiff::remark1_transform(opts.sweep), opts.sweep);
    else if (suite == "remark3") r = remark_suite(qdiff::remark3_unsymmetric(opts.sweep), opts.sweep);
    else if (suite == "soq") r = soq_suite(opts);
    else if (suite == "inner-derivations") r = inner_derivation_suite(opts);
    else {
        require_positive(opts.maxlen, "maxlen");
        r = confluence_report(opts.algebra == "catalog" ? confluence_keys() : std::vector{opts.algebra}, opts.maxlen);
    }
    r.suite = "verify " + suite;
    return r;
}

std::vector<std::string> confluence_keys() {
    std::vector<std::string> keys;
    for (const auto& k : catalog::all_keys())
        if (k != "qheis5:variant=printed") keys.push_back(k);
    keys.push_back("qdiff:dim=2,k=-1");
    keys.push_back("qdiff:dim=2,k=-2");
    return keys;
}

Report confluence_report(const std::vector<std::string>& keys, int maxlen) {
    // Presentations are built up front; the checks then only read them.
    std::vector<freealg::PresentationPtr> pres;
    for (const auto& k : keys) pres.push_back(catalog::by_key(k));
    std::vector<std::future<std::vector<freealg::Ambiguity>>> jobs;
    for (const auto& p : pres)
        jobs.push_back(std::async(std::launch::async, [p, maxlen] {
            return freealg::overlap_check(*p, static_cast<std::size_t>(maxlen));
        }));
    Report r;
    r.suite = "confluence";
    r.inputs = {{"maxlen", maxlen}, {"algebras", keys}};
    for (std::size_t k = 0; k < keys.size(); ++k) {
        auto amb = jobs[k].get();
        std::string res = "0";
        if (!amb.empty())
            res = std::to_string(amb.size()) + " unresolved, first " + freealg::word_text(amb[0].word, *pres[k]) +
                  ": " + elem_text(amb[0].difference(), *pres[k]);
        r.add(keys[k] + " overlap check to length " + std::to_string(maxlen), amb.empty(), res);
    }
    return r;
}

Report normalize_report(const std::string& algebra, const std::vector<std::string>& exprs) {
    auto pres = catalog::by_key(algebra);
    Report r;
    r.suite = "normalize";
    r.inputs = {{"algebra", algebra}, {"expressions", exprs}};
    for (const auto& e : exprs) {
        auto nf = freealg::normal_form(parse_expression(e, *pres), *pres);
        r.add(e, true, elem_text(nf, *pres));
    }
    r.notes.push_back("residual column holds the normal form");
    return r;
}

Report check_report(const std::string& algebra, const std::vector<std::string>& relations) {
    auto pres = catalog::by_key(algebra);
    Report r;
    r.suite = "check";
    r.inputs = {{"algebra", algebra}, {"relations", relations}};
    for (const auto& text : relations) {
        auto [lhs, rhs] = parse_relation(text, *pres);
        auto chk = freealg::check_relation(*pres, lhs, rhs);
        r.add(text, chk.holds, elem_text(chk.residual, *pres));
    }
    return r;
}

Report rmatrix_report(const std::filesystem::path& file) {
    Report r;
    r.suite = "rmatrix-validate";
    r.inputs = {{"file", file.filename().string()}};
    soq::RMatrix R = soq::read_rmatrix_file(file);
    r.inputs["N"] = R.N;
    try {
        auto v = soq::validate_rmatrix(R);
        r.add("braid relation", v.braid, v.braid ? "0" : "fails");
        r.add("cubic characteristic identity", v.cubic, v.cubic ? "0" : "fails");
        r.add("invertible", v.invertible, v.invertible ? "0" : "fails");
        auto p = soq::spectral_projectors(R);
        auto c = soq::check_projectors(R, p);
        r.add("projectors idempotent", c.idempotent, c.idempotent ? "0" : "fails");
        r.add("projectors mutually orthogonal", c.orthogonal, c.orthogonal ? "0" : "fails");
        r.add("projectors sum to identity", c.complete, c.complete ? "0" : "fails");
        r.add("q P+ - q^-1 P- + q^(1-N) P0 = R", c.reconstructs, c.reconstructs ? "0" : "fails");
        auto rank = soq::exact_rank(p.P_zero);
        r.add("rank P0 = 1", rank == 1, std::to_string(rank));
        auto g = soq::extract_metric(p.P_zero, R.N);
        bool ok = soq::metric_reconstructs(p.P_zero, g);
        r.add("P0 = c g^{ij} g_{kl}", ok, ok ? "0" : "fails");
        r.notes.push_back("c = " + g.c.to_string());
    } catch (const ValidationFailed& e) {
        r.add("validation", false, e.what());
    } catch (const DegenerateEigenvalues& e) {
        r.add("validation", false, e.what());
    } catch (const NotRankOne& e) {
        r.add("rank P0 = 1", false, e.what());
    }
    return r;
}

Report rep_report(const std::string& algebra, const SuiteOptions& o, bool dump) {
    Report r;
    r.suite = "rep";
    auto key = catalog::CatalogKey::parse(algebra);
    auto pres = catalog::by_key(key);
    r.inputs = {{"algebra", key.to_string()}};
    auto add_float = [&](const fock::FloatRep& rep, long double q) {
        for (const auto& it : fock::check_relations(*pres, rep, q, 1e-9L)) r.add(it.relation, it.pass, sci(it.max_residual));
        if (dump) r.data = fock::to_json(rep);
    };
    if (key.name == "oscillator") {
        require_positive(o.dim, "dim");
        r.inputs["dim"] = o.dim;
        add_float(fock::classical_osc_rep(o.dim), 1.0L);
    } else if (key.name == "qoscillator") {
        require_positive(o.dim, "dim");
        r.inputs["dim"] = o.dim;
        r.inputs["q"] = o.q;
        add_float(fock::q_osc_rep(o.dim, o.q), o.q);
    } else if (key.name == "qheis5") {
        require_positive(o.levels, "levels");
        r.inputs["levels"] = o.levels;
        r.inputs["exact"] = o.exact;
        if (o.exact) {
            auto rep = fock::momentum_rep_exact(o.levels);
            for (const auto& it : fock::check_relations(*pres, rep)) r.add(it.relation, it.pass, it.pass ? "0" : it.residual);
            if (dump) r.data = fock::to_json(rep);
        } else {
            r.inputs["q"] = o.q;
            r.inputs["pi0"] = o.pi0;
            add_float(fock::momentum_rep_float(o.levels, o.q, o.pi0), o.q);
        }
    } else {
        throw UsageError("no matrix representation for '" + algebra + "' (oscillator, qoscillator, qheis5)");
    }
    return r;
}

}  // namespace qweyl::cli

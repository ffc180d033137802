// One line per acceptance criterion; exit status 0 only if all pass.
// usage: acceptance <qweyl binary> <report schema> <schema checker script>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qweyl/catalog/catalog.hpp"
#include "qweyl/cli/command.hpp"
#include "qweyl/cli/parser.hpp"
#include "qweyl/cli/suites.hpp"
#include "qweyl/fock/momentum.hpp"
#include "qweyl/fock/oscillator.hpp"
#include "qweyl/weyl/realization.hpp"
#include "random_elements.hpp"

using namespace qweyl;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail.push_back(what);
        }
    }
};

void require_report(Outcome& o, const cli::Report& r) {
    for (const auto& it : r.items) o.require(it.pass, r.suite + ": " + it.name + " :: " + it.residual);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome confluence() {
    Outcome o;
    std::vector<std::string> keys = {"heisenberg:n=1", "heisenberg:n=2", "heisenberg:n=3", "oscillator",
                                     "qoscillator", "qheis1", "qheis3", "qheis4", "qheis5:variant=corrected",
                                     "qdiff:dim=2,k=1", "qdiff:dim=2,k=-1", "qdiff:dim=2,k=2", "qdiff:dim=2,k=-2"};
    auto t0 = std::chrono::steady_clock::now();
    require_report(o, cli::confluence_report(keys, 6));
    double t = seconds_since(t0);
    o.require(t < 30, "took " + std::to_string(t) + " s");
    return o;
}

Outcome realization() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto corrected = weyl::verify_qheis5_realization(6, weyl::Variant::Corrected);
    std::set<std::string> seen;
    for (const auto& it : corrected.items) {
        seen.insert(it.relation);
        o.require(it.pass, "corrected " + it.relation + " fails at h^" + std::to_string(it.leading_order));
    }
    for (const char* rel : {"xi p", "xi p +", "u p", "u xi", "u uinv"})
        o.require(seen.count(rel) == 1, std::string("relation ") + rel + " not checked");
    auto printed = weyl::verify_qheis5_realization(6, weyl::Variant::Printed);
    for (const auto& it : printed.items) {
        if (it.relation == "u p") {
            o.require(!it.pass, "printed u-p relation unexpectedly holds");
            o.require(it.leading_order == 1, "printed u-p leading order " + std::to_string(it.leading_order));
        } else {
            o.require(it.pass, "printed " + it.relation + " fails");
        }
    }
    double t = seconds_since(t0);
    o.require(t < 10, "took " + std::to_string(t) + " s");
    return o;
}

Outcome xi_mod_h() {
    Outcome o;
    for (int k = 1; k <= 6; ++k)
        o.require(weyl::build_xi(k).at_order(0) == weyl::LocalWeylElement::x(0),
                  "order-0 part of xi differs from x at K=" + std::to_string(k));
    return o;
}

Outcome osc_map() {
    Outcome o;
    long double q = 1.2L;
    auto m = fock::deforming_map_check(64, q);
    o.require(m.residual_rescaled < 1e-9L, "rescaled residual " + std::to_string(static_cast<double>(m.residual_rescaled)));
    long double oracle = std::fabs(std::pow(q, 0.25L) - 1);
    o.require(std::fabs(m.residual_unscaled - oracle) < 1e-12L,
              "unscaled residual " + std::to_string(static_cast<double>(m.residual_unscaled)));
    // Closed-form eigenvalues of ad a without the rescale.
    auto d = fock::deformed_osc_rep(64, q, false);
    fock::FloatMatrix ada = d.matrices.at("ad") * d.matrices.at("a");
    long double s = std::sqrt(q);
    for (int n = 0; n < 64; ++n) {
        long double qn = (std::pow(s, n) - std::pow(s, -n)) / (s - 1 / s);
        long double e = std::pow(q, (2 * n - 1) / 4.0L) * qn;
        o.require(std::abs(ada(n, n) - fock::Complex(e)) <= 1e-12L * std::max(1.0L, e),
                  "eigenvalue oracle at n=" + std::to_string(n));
    }
    return o;
}

Outcome momentum() {
    Outcome o;
    auto rep = fock::momentum_rep_exact(8);
    std::set<int> interior;
    for (auto c : rep.interior_mask) interior.insert(rep.labels[c]);
    for (int n = -7; n <= 7; ++n) o.require(interior.count(n) == 1, "level " + std::to_string(n) + " not interior");
    auto pres = catalog::q_heisenberg(catalog::QHeisStage::FinalCorrected);
    for (const auto& it : fock::check_relations(*pres, rep)) o.require(it.pass, it.relation + ": " + it.residual);
    const auto& p = rep.matrices.at("p");
    for (std::size_t c = 0; c < rep.dim; ++c) {
        o.require(p(c, c) == coeff::RatFunc(coeff::Scalar::q_pow(rep.labels[c])),
                  "p diagonal at " + std::to_string(rep.labels[c]));
        for (std::size_t r = 0; r < rep.dim; ++r)
            if (r != c) o.require(p(r, c).is_zero(), "p not diagonal");
    }
    return o;
}

Outcome calculus() {
    Outcome o;
    cli::SuiteOptions so;
    so.bound = 20;
    so.sweep = 6;
    require_report(o, cli::run_suite("qdiff", so));
    require_report(o, cli::run_suite("remark1", so));
    require_report(o, cli::run_suite("remark3", so));
    return o;
}

Outcome soq_identities() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    cli::SuiteOptions so;
    require_report(o, cli::run_suite("soq", so));
    double t = seconds_since(t0);
    o.require(t < 120, "took " + std::to_string(t) + " s");
    return o;
}

Outcome inner_derivations() {
    Outcome o;
    cli::SuiteOptions so;
    so.trials = 20;
    auto r = cli::run_suite("inner-derivations", so);
    o.require(r.items.size() == 22, "expected 2 hand cases and 20 trials");
    require_report(o, r);
    return o;
}

int spawn(const std::string& cmd) {
    int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_checks(const std::string& qweyl, const std::string& schema, const std::string& checker) {
    Outcome o;
    // Round trip on 500 random elements spread over the catalog.
    std::mt19937 rng(9);
    auto keys = catalog::all_keys();
    for (int t = 0; t < 500; ++t) {
        auto pres = catalog::by_key(keys[static_cast<std::size_t>(t) % keys.size()]);
        auto e = testing::random_element(*pres, rng);
        auto text = cli::print_expression(e, *pres);
        o.require(cli::parse_expression(text, *pres) == e, "round trip: " + text);
    }
    // Documented exit codes, through the real binary.
    std::string q = "'" + qweyl + "'";
    o.require(spawn(q + " check --algebra qheis1 'p x - q x p = -i'") == 0, "check qheis1 should exit 0");
    o.require(spawn(q + " verify qheis5-realization --order 6 --variant printed") == 1, "printed variant should exit 1");
    o.require(spawn(q + " verify nosuch") == 2, "unknown suite should exit 2");
    o.require(spawn(q + " check --algebra qheis1 'p x +'") == 2, "parse error should exit 2");
    // Schema validation of JSON reports.
    o.require(spawn("python3 '" + checker + "' " + q + " '" + schema + "'") == 0, "JSON schema validation");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: acceptance <qweyl> <report schema> <schema checker>\n";
        return 2;
    }
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"confluence of the catalog to length 6", confluence},
        {"series realization of the final presentation through h^6", realization},
        {"xi = x mod h", xi_mod_h},
        {"oscillator deforming map, D=64, q=1.2", osc_map},
        {"momentum representation, exact, M=8", momentum},
        {"q-difference calculus and remarks on monomials", calculus},
        {"SO_q(3) differential calculus identities", soq_identities},
        {"inner derivations of A_1", inner_derivations},
        {"CLI round trip, exit codes, schema", [&] { return cli_checks(argv[1], argv[2], argv[3]); }},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  "
             << criteria[k].first << "  (" << seconds_since(t0) << " s)";
        std::cout << line.str() << "\n";
        for (const auto& d : o.detail) std::cout << "    " << d << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}

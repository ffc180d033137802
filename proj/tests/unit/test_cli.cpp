#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qweyl/catalog/catalog.hpp"
#include "qweyl/cli/command.hpp"
#include "qweyl/cli/parser.hpp"
#include "qweyl/cli/suites.hpp"
#include "qweyl/error.hpp"
#include "qweyl/freealg/rewriting.hpp"
#include "random_elements.hpp"

using namespace qweyl;
using namespace qweyl::cli;
using coeff::Scalar;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run qweyl_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string syntax_message(const std::string& text, const Presentation& pres) {
    try {
        parse_expression(text, pres);
    } catch (const SyntaxError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("parser examples") {
    auto h = catalog::by_key("qheis1");
    auto p = h->gen("p"), x = h->gen("x");
    Element e = parse_expression("p x - q x p", *h);
    CHECK(e == p * x - Scalar::q() * (x * p));
    CHECK(e.size() == 2);
    CHECK(parse_expression("i [p, x]", *h) == Scalar::i() * (p * x - x * p));
    CHECK(parse_expression("2 * p x", *h) == Scalar(2) * (p * x));
    CHECK(parse_expression("q^(-3/2) x^3", *h) == Scalar::s_pow(-3) * (x * x * x));
    CHECK(parse_expression("-(p + x)^2", *h) == -((p + x) * (p + x)));
    CHECK(parse_expression("(q^2)^-1 x", *h) == Scalar::q_pow(-2) * x);
    CHECK(parse_expression("7/14 x", *h) == Scalar(coeff::GaussianRational::fraction(1, 2)) * x);

    auto f = catalog::by_key("qheis5:variant=corrected");
    auto u = f->gen("u"), uinv = f->gen("uinv"), xi = f->gen("xi");
    CHECK(parse_expression("u^-1 xi", *f) == uinv * xi);
    CHECK(parse_expression("u^-2", *f) == uinv * uinv);
    CHECK(parse_expression("(q u)^-1 xi", *f) == Scalar::q_pow(-1) * (uinv * xi));
    CHECK(parse_expression("(uinv u)^-2", *f) == uinv * u * uinv * u);
    CHECK_THROWS_AS(parse_expression("(u xi)^-1", *f), SyntaxError);
}

TEST_CASE("postfix star") {
    auto h = catalog::by_key("qheis3");
    CHECK(parse_expression("x~", *h) == h->gen("xb"));
    CHECK(parse_expression("(i p x)~", *h) == -Scalar::i() * (h->gen("xb") * h->gen("p")));
    CHECK(parse_expression("x~~", *h) == h->gen("x"));
    CHECK_THROWS_AS(parse_expression("x~", *catalog::by_key("qheis1")), SyntaxError);
}

TEST_CASE("syntax errors carry offset and expected tokens") {
    auto h = catalog::by_key("qheis1");
    CHECK(syntax_message("p x +", *h) == "SyntaxError: offset 5: expected identifier, number, '(' or '['");
    CHECK(syntax_message("p y", *h).find("offset 2") != std::string::npos);
    CHECK(syntax_message("(p x", *h) == "SyntaxError: offset 4: expected ')'");
    CHECK(syntax_message("[p x]", *h) == "SyntaxError: offset 4: expected ','");
    CHECK(syntax_message("p^", *h).find("offset 2: expected integer") != std::string::npos);
    CHECK(syntax_message("x^-1", *h).find("invertible factor") != std::string::npos);
    CHECK(syntax_message("q^(1/3)", *h).find("denominator 1 or 2") != std::string::npos);
    CHECK(syntax_message("1/0 p", *h).find("nonzero denominator") != std::string::npos);
    CHECK(syntax_message("h p", *h).find("offset 0") != std::string::npos);
    CHECK(syntax_message("p ) x", *h).find("offset 2") != std::string::npos);
    CHECK_THROWS_AS(parse_relation("p = x = 1", *h), SyntaxError);
}

TEST_CASE("relations") {
    auto h = catalog::by_key("qheis1");
    auto [lhs, rhs] = parse_relation("p x - q x p = -i", *h);
    CHECK(freealg::check_relation(*h, lhs, rhs).holds);
    auto [l2, r2] = parse_relation("p x", *h);
    CHECK(r2.is_zero());
    CHECK(l2 == h->gen("p") * h->gen("x"));
}

TEST_CASE("parse and print round trip on every catalog presentation") {
    std::mt19937 rng(2024);
    for (const auto& key : catalog::all_keys()) {
        auto pres = catalog::by_key(key);
        for (int t = 0; t < 60; ++t) {
            Element e = testing::random_element(*pres, rng);
            std::string text = print_expression(e, *pres);
            INFO(key << ": " << text);
            CHECK(parse_expression(text, *pres) == e);
            // Normal forms round-trip too.
            Element nf = freealg::normal_form(e, *pres);
            CHECK(parse_expression(print_expression(nf, *pres), *pres) == nf);
        }
    }
}

TEST_CASE("exit codes") {
    CHECK(qweyl_run({"check", "--algebra", "qheis1", "p x - q x p = -i"}).code == 0);
    CHECK(qweyl_run({"check", "--algebra", "qheis1", "p x - q x p = i"}).code == 1);
    CHECK(qweyl_run({"check", "--algebra", "qheis1", "p x +"}).code == 2);
    CHECK(qweyl_run({"verify", "qheis5-realization", "--order", "6", "--variant", "printed"}).code == 1);
    CHECK(qweyl_run({"verify", "qheis5-realization", "--order", "6"}).code == 0);
    CHECK(qweyl_run({"verify", "nosuch"}).code == 2);
    CHECK(qweyl_run({"verify", "osc-map", "--order", "3"}).code == 2);
    CHECK(qweyl_run({"frobnicate"}).code == 2);
    CHECK(qweyl_run({}).code == 2);
    CHECK(qweyl_run({"--format", "yaml", "verify", "remark1"}).code == 2);
    CHECK(qweyl_run({"--help"}).code == 0);
    CHECK(qweyl_run({"confluence", "--algebra", "nosuch"}).code == 2);
    CHECK(qweyl_run({"confluence", "--algebra", "qheis5:variant=printed", "--maxlen", "4"}).code == 1);
    CHECK(qweyl_run({"confluence", "--algebra", "qheis1"}).code == 0);
    CHECK(qweyl_run({"rep", "--algebra", "qheis5", "--levels", "4"}).code == 0);
    CHECK(qweyl_run({"rep", "--algebra", "qheis1"}).code == 2);
}

TEST_CASE("exit code follows the report summary") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"verify", "qheis5-realization", "--variant", "printed"},
             {"verify", "soq"},
             {"verify", "inner-derivations", "--trials", "3"},
             {"normalize", "--algebra", "qoscillator", "a ad a"}}) {
        args.insert(args.begin(), {"--format", "json"});
        auto r = qweyl_run(args);
        auto j = nlohmann::json::parse(r.out);
        int failed = j["summary"]["failed"];
        CHECK(r.code == (failed == 0 ? 0 : 1));
        CHECK(j["summary"]["passed"].get<std::size_t>() + failed == j["items"].size());
    }
}

TEST_CASE("json reports are byte-identical across runs") {
    std::vector<std::string> args = {"--format", "json", "verify", "inner-derivations", "--trials", "5"};
    auto a = qweyl_run(args), b = qweyl_run(args);
    CHECK(a.out == b.out);
    auto c = qweyl_run({"--format", "json", "verify", "soq"});
    auto d = qweyl_run({"--format", "json", "verify", "soq"});
    CHECK(c.out == d.out);
}

TEST_CASE("config file, with command line taking precedence") {
    auto file = std::filesystem::temp_directory_path() / "qweyl_test.conf";
    {
        std::ofstream out(file);
        out << "# pinned suite\norder = 3\nvariant=printed\nformat=json\n";
    }
    auto r = qweyl_run({"verify", "qheis5-realization", "--config", file.string()});
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["inputs"]["order"] == 3);
    CHECK(j["inputs"]["variant"] == "printed");

    r = qweyl_run({"verify", "qheis5-realization", "--config", file.string(), "--variant", "corrected"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["inputs"]["variant"] == "corrected");

    {
        std::ofstream out(file);
        out << "not a pair\n";
    }
    CHECK(qweyl_run({"verify", "remark1", "--config", file.string()}).code == 2);
    CHECK(qweyl_run({"verify", "remark1", "--config", "/nonexistent/qweyl.conf"}).code == 2);
    std::filesystem::remove(file);
}

TEST_CASE("step limit from the environment") {
    auto h = catalog::heisenberg(1);
    CHECK(h->step_limit() == freealg::default_step_limit());
}

TEST_CASE("rmatrix-validate") {
    auto file = default_rmatrix_file(3);
    auto r = rmatrix_report(file);
    CHECK(r.all_pass());
    CHECK(r.items.size() == 9);
}

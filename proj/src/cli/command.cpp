#include "qweyl/cli/command.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <set>

#include "qweyl/cli/suites.hpp"
#include "qweyl/error.hpp"

namespace qweyl::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& key) {
    std::string flag = "--" + key;
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
}

struct Emitter {
    std::string format = "text";
    std::ostream& out;

    int emit(const Report& r) const {
        if (format == "json") out << to_json(r).dump(2) << "\n";
        else out << to_text(r);
        return r.exit_code();
    }
};

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string file;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) file = args[k + 1];
        else if (args[k].rfind("--config=", 0) == 0) file = args[k].substr(9);
    }
    if (file.empty()) return args;
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read config file '" + file + "'");
    std::vector<std::string> out = args;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError(file + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "config") throw UsageError(file + ":" + std::to_string(lineno) + ": nested config");
        if (!given_on_command_line(args, key)) out.push_back("--" + key + "=" + value);
    }
    return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qweyl: exact checks for q-deformed Heisenberg algebras", "qweyl"};
    app.require_subcommand(1);
    Emitter em{"text", out};
    std::string config;
    app.add_option("--format", em.format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--config", config, "key=value file; command-line options take precedence");

    SuiteOptions so;
    std::string algebra;
    std::vector<std::string> exprs;
    std::string suite;
    std::string rmatrix_file;
    bool float_mode = false, dump = false;
    std::map<std::string, CLI::Option*> suite_opts;

    auto* normalize = app.add_subcommand("normalize", "normal form of expressions");
    normalize->add_option("--algebra", algebra, "catalog key, e.g. qheis1 or heisenberg:n=2")->required();
    normalize->add_option("expressions", exprs)->required();

    auto* check = app.add_subcommand("check", "check relations \"lhs = rhs\"");
    check->add_option("--algebra", algebra)->required();
    check->add_option("relations", exprs)->required();

    auto* confluence = app.add_subcommand("confluence", "overlap check of a presentation");
    confluence->add_option("--algebra", algebra)->required();
    confluence->add_option("--maxlen", so.maxlen)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite)->required();
    suite_opts["order"] = verify->add_option("--order", so.order, "h-order K");
    suite_opts["variant"] = verify->add_option("--variant", so.variant, "corrected|printed");
    suite_opts["dim"] = verify->add_option("--dim", so.dim, "Fock dimension D");
    suite_opts["q"] = verify->add_option("--q", so.q, "float value of q");
    suite_opts["levels"] = verify->add_option("--levels", so.levels, "momentum levels M");
    suite_opts["exact"] = verify->add_flag("--exact", "exact arithmetic (default)");
    suite_opts["float"] = verify->add_flag("--float", float_mode, "float arithmetic");
    suite_opts["pi0"] = verify->add_option("--pi0", so.pi0, "momentum scale");
    suite_opts["bound"] = verify->add_option("--bound", so.bound, "exponent bound");
    suite_opts["sweep"] = verify->add_option("--sweep", so.sweep, "grid bound");
    suite_opts["n"] = verify->add_option("--n", so.n, "dimension N");
    suite_opts["rmatrix"] = verify->add_option("--rmatrix", rmatrix_file, "R-matrix data file");
    suite_opts["trials"] = verify->add_option("--trials", so.trials, "random trials");
    suite_opts["seed"] = verify->add_option("--seed", so.seed, "random seed");
    suite_opts["algebra"] = verify->add_option("--algebra", so.algebra, "catalog key or 'catalog'");
    suite_opts["maxlen"] = verify->add_option("--maxlen", so.maxlen, "overlap length bound");

    auto* rep = app.add_subcommand("rep", "check a matrix representation");
    rep->add_option("--algebra", algebra, "oscillator, qoscillator or qheis5")->required();
    rep->add_option("--dim", so.dim);
    rep->add_option("--q", so.q);
    rep->add_option("--levels", so.levels);
    rep->add_option("--pi0", so.pi0);
    auto* rep_float = rep->add_flag("--float", float_mode);
    rep->add_flag("--exact");
    rep->add_flag("--dump", dump, "include the matrices under \"data\"");

    auto* rmv = app.add_subcommand("rmatrix-validate", "validate an R-matrix data file");
    rmv->add_option("file", rmatrix_file)->required();

    for (auto* sub : {normalize, check, confluence, verify, rep, rmv}) sub->fallthrough();

    std::vector<std::string> args;
    try {
        args = merge_config(raw_args);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*normalize) return em.emit(normalize_report(algebra, exprs));
        if (*check) return em.emit(check_report(algebra, exprs));
        if (*confluence) {
            if (so.maxlen <= 0) throw UsageError("--maxlen must be positive");
            return em.emit(confluence_report({algebra}, so.maxlen));
        }
        if (*rmv) return em.emit(rmatrix_report(rmatrix_file));
        if (*rep) {
            if (float_mode && rep->count("--exact")) throw UsageError("--exact and --float are exclusive");
            so.exact = !(rep_float->count() > 0);
            return em.emit(rep_report(algebra, so, dump));
        }
        // verify
        for (const auto& [name, opt] : suite_opts)
            if (opt->count() > 0) so.given.insert(name);
        if (so.given.count("exact") && so.given.count("float"))
            throw UsageError("--exact and --float are exclusive");
        so.exact = !float_mode;
        so.rmatrix = rmatrix_file;
        return em.emit(run_suite(suite, so));
    } catch (const SyntaxError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const BadK& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // Engine failures (step limit, non-unit pivots, ...) are reported as a failing item.
        Report r;
        r.suite = verify->parsed() ? "verify " + suite : app.get_subcommands().front()->get_name();
        r.add("error", false, e.what());
        return em.emit(r);
    }
}

}  // namespace qweyl::cli

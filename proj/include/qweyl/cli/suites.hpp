#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "qweyl/cli/report.hpp"

namespace qweyl::cli {

// Every suite parameter; `given` names the ones set explicitly, so each
// suite can reject options that do not apply to it.
struct SuiteOptions {
    int order = 6;                     // qheis5-realization: h-order K
    std::string variant = "corrected"; // qheis5-realization, momentum-rep
    int dim = 64;                      // osc-map: Fock dimension D
    double q = 1.2;                    // osc-map, momentum-rep (float)
    int levels = 8;                    // momentum-rep: M
    bool exact = true;                 // momentum-rep: exact or float
    double pi0 = 1.0;                  // momentum-rep (float)
    int bound = 20;                    // qdiff: single-variable exponent bound
    int sweep = 6;                     // qdiff, remark1, remark3: grid bound
    int n = 3;                         // soq: N
    std::filesystem::path rmatrix;     // soq: data file (default: shipped so3)
    int trials = 20;                   // inner-derivations
    unsigned seed = 17;                // inner-derivations
    std::string algebra = "catalog";   // confluence: key, or the whole catalog
    int maxlen = 6;                    // confluence
    std::set<std::string> given;
};

std::vector<std::string> suite_names();
// Options each suite accepts (by long-option name).
std::set<std::string> suite_options(const std::string& suite);

// Throws UsageError for an unknown suite or an option it does not accept.
Report run_suite(const std::string& suite, const SuiteOptions& opts);

// Presentations the catalog-wide confluence check covers.
std::vector<std::string> confluence_keys();
Report confluence_report(const std::vector<std::string>& keys, int maxlen);

Report normalize_report(const std::string& algebra, const std::vector<std::string>& exprs);
Report check_report(const std::string& algebra, const std::vector<std::string>& relations);
Report rmatrix_report(const std::filesystem::path& file);
// Matrix representation of oscillator, qoscillator or qheis5 checked against
// its presentation; `dump` adds the matrices under "data".
Report rep_report(const std::string& algebra, const SuiteOptions& opts, bool dump);

std::filesystem::path default_rmatrix_file(int n);

}  // namespace qweyl::cli

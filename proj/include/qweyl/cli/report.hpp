#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qweyl::cli {

inline constexpr const char* kEngineVersion = "0.1.0";

struct ReportItem {
    std::string name;
    bool pass = false;
    std::string residual;  // "0" or a short description on pass
};

struct Report {
    std::string suite;  // verb, or "verify <suite>"
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<ReportItem> items;
    std::vector<std::string> notes;
    nlohmann::json data;  // optional payload (matrices); omitted when null

    void add(std::string name, bool pass, std::string residual);
    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
    // 0 when every item passes, 1 otherwise.
    int exit_code() const { return all_pass() ? 0 : 1; }
};

// {suite, inputs, items: [{name, pass, residual}], notes, summary: {passed,
// failed}, version} plus "data" when present; see data/report.schema.json.
nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace qweyl::cli

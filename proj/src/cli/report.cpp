#include "qweyl/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace qweyl::cli {

void Report::add(std::string name, bool pass, std::string residual) {
    items.push_back({std::move(name), pass, std::move(residual)});
}

std::size_t Report::passed() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& i) { return i.pass; }));
}

std::size_t Report::failed() const { return items.size() - passed(); }

nlohmann::json to_json(const Report& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : r.items) items.push_back({{"name", it.name}, {"pass", it.pass}, {"residual", it.residual}});
    nlohmann::json out = {{"suite", r.suite},
                          {"inputs", r.inputs},
                          {"items", items},
                          {"notes", r.notes},
                          {"summary", {{"passed", r.passed()}, {"failed", r.failed()}}},
                          {"version", kEngineVersion}};
    if (!r.data.is_null()) out["data"] = r.data;
    return out;
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << r.suite;
    if (!r.inputs.empty()) out << "  " << r.inputs.dump();
    out << "\n";
    std::size_t width = 0;
    for (const auto& it : r.items) width = std::max(width, it.name.size());
    for (const auto& it : r.items) {
        out << (it.pass ? "PASS  " : "FAIL  ") << it.name;
        if (it.residual != "0" && !it.residual.empty())
            out << std::string(width - it.name.size() + 2, ' ') << it.residual;
        out << "\n";
    }
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    out << "passed " << r.passed() << ", failed " << r.failed() << "\n";
    return out.str();
}

}  // namespace qweyl::cli

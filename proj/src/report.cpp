#include "stunted/report.hpp"

#include <sstream>

namespace stunted {

bool Report::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass)
            return false;
    return true;
}

void Report::add(const std::string& claim, const std::string& ref, bool pass) {
    verdicts.push_back({claim, ref, pass});
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["verdicts"] = nlohmann::json::array();
    for (const auto& v : verdicts)
        j["verdicts"].push_back({{"claim", v.claim}, {"paper_ref", v.ref}, {"pass", v.pass}});
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    if (!inputs.empty()) {
        os << "inputs:\n";
        for (auto it = inputs.begin(); it != inputs.end(); ++it)
            os << "  " << it.key() << " = " << it.value().dump() << "\n";
    }
    if (!results.empty()) {
        os << "results:\n";
        for (auto it = results.begin(); it != results.end(); ++it)
            os << "  " << it.key() << " = " << it.value().dump() << "\n";
    }
    if (!verdicts.empty()) {
        os << "verdicts:\n";
        for (const auto& v : verdicts)
            os << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.claim << " (" << v.ref
               << ")\n";
    }
    os << "elapsed_ms: " << elapsed_ms << "\n";
    return os.str();
}

}  // namespace stunted

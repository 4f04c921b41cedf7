#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace stunted {

// One checked claim; ref names the mathematical statement being exercised so
// a CI failure identifies it directly.
struct Verdict {
    std::string claim;
    std::string ref;
    bool pass;
};

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<Verdict> verdicts;
    long long elapsed_ms = 0;

    bool all_pass() const;
    void add(const std::string& claim, const std::string& ref, bool pass);

    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace stunted

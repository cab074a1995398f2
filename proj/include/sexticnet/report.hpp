#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sexticnet {

// Structured run report: command echo, seed/prime, a results tree and a list
// of named pass/fail checks.  Rendering is deterministic for fixed content;
// nothing time- or environment-dependent is ever stored.
class Report {
public:
    Report(std::string command, uint64_t seed) : command_(std::move(command)), seed_(seed) {}

    void echo_input(const std::string& key, const std::string& value) { inputs_.emplace_back(key, value); }
    void set_prime(uint64_t p) { prime_ = p; }

    nlohmann::ordered_json& results() { return results_; }

    void add_check(const std::string& name, bool pass, const std::string& detail = "") {
        checks_.push_back({name, pass, detail});
    }

    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

    std::string render_text() const;
    std::string render_json() const;

private:
    struct CheckLine {
        std::string name;
        bool pass;
        std::string detail;
    };

    std::string command_;
    uint64_t seed_;
    std::optional<uint64_t> prime_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    nlohmann::ordered_json results_ = nlohmann::ordered_json::object();
    std::vector<CheckLine> checks_;
};

}  // namespace sexticnet

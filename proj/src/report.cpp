#include "sexticnet/report.hpp"

#include <sstream>

namespace sexticnet {

namespace {

void render_tree(std::ostream& out, const nlohmann::ordered_json& node, const std::string& prefix) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            render_tree(out, value, prefix.empty() ? key : prefix + "." + key);
        }
    } else if (node.is_array()) {
        int i = 0;
        for (const auto& value : node) {
            render_tree(out, value, prefix + "[" + std::to_string(i++) + "]");
        }
    } else if (node.is_string()) {
        out << prefix << ": " << node.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << node.dump() << "\n";
    }
}

}  // namespace

std::string Report::render_text() const {
    std::ostringstream out;
    out << "command: " << command_ << "\n";
    out << "seed: " << seed_ << "\n";
    if (prime_) out << "prime: " << *prime_ << "\n";
    for (const auto& [k, v] : inputs_) out << "input " << k << ": " << v << "\n";
    render_tree(out, results_, "");
    for (const auto& c : checks_) {
        out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "status: " << (all_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string Report::render_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = command_;
    j["seed"] = seed_;
    if (prime_) j["prime"] = *prime_;
    else j["prime"] = nullptr;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs_) in[k] = v;
    j["inputs"] = in;
    j["results"] = results_;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json line;
        line["name"] = c.name;
        line["pass"] = c.pass;
        line["detail"] = c.detail;
        checks.push_back(line);
    }
    j["checks"] = checks;
    j["status"] = all_pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

}  // namespace sexticnet

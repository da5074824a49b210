#include "operadkit/reports.hpp"

namespace operadkit {

void Report::add(const std::string& id, bool pass, const std::string& detail) {
    checks.push_back({id, pass, detail});
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const Check* Report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string Report::text() const {
    std::string out;
    for (const auto& c : checks) {
        out += "CHECK " + c.id + (c.pass ? " PASS" : " FAIL");
        if (!c.detail.empty()) out += " " + c.detail;
        out += "\n";
    }
    return out;
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.id, c.pass, c.detail});
}

}  // namespace operadkit

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace operadkit {

struct Check {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(const std::string& id, bool pass, const std::string& detail = "");
    bool ok() const;
    const Check* find(const std::string& id) const;
    // one line per check: "CHECK <id> PASS|FAIL <detail>"
    std::string text() const;
    void merge(const Report& other, const std::string& prefix = "");
};

}  // namespace operadkit

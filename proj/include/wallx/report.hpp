#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wallx {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::vector<CheckLine> lines;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        lines.push_back({name, pass, witness});
    }
    void merge(const Report& o) { lines.insert(lines.end(), o.lines.begin(), o.lines.end()); }

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }

    void print(std::ostream& os) const {
        for (const auto& l : lines) {
            os << "CHECK " << l.name << (l.pass ? " PASS" : " FAIL");
            if (!l.witness.empty()) os << " " << l.witness;
            os << "\n";
        }
    }
};

} // namespace wallx

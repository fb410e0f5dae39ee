#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace ydn {

// Result of a verification suite: one named pass/fail entry per checked
// identity or property.
struct SuiteReport {
    struct Entry {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    std::vector<Entry> entries;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        entries.push_back({name, pass, detail});
    }

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& e : entries)
            if (!e.pass) ++n;
        return n;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& e : entries) {
            os << (e.pass ? "PASS" : "FAIL") << "  " << e.name;
            if (!e.pass && !e.detail.empty()) os << "  (" << e.detail << ")";
            os << "\n";
        }
        return os.str();
    }
};

} // namespace ydn

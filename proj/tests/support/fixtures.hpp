#pragma once

// Fixed instances shared across the suite.

#include <string>
#include <vector>

#include <ifps/ifps.hpp>

namespace testsupport {

inline std::vector<std::string> u_ids(int n) {
    std::vector<std::string> ids;
    for (int i = 1; i <= n; ++i)
        ids.push_back("u" + std::to_string(i));
    return ids;
}

inline std::vector<std::string> x_ids(int n) {
    std::vector<std::string> ids;
    for (int i = 1; i <= n; ++i)
        ids.push_back("x" + std::to_string(i));
    return ids;
}

// Candidate-selection scenario: five candidates scored on four criteria.
// Mirrors data/hiring.ifps.json.
inline ifps::IFPSSet hiring_example() {
    ifps::IFPSSet::EntryMap entries;
    entries.emplace("x1", ifps::IFPSSet::Entry{{0.7, 0.3}, {"u1", "u2", "u4"}});
    entries.emplace("x2", ifps::IFPSSet::Entry{{0.2, 0.5}, {"u1", "u2", "u3", "u4", "u5"}});
    entries.emplace("x3", ifps::IFPSSet::Entry{{0.5, 0.5}, {"u1", "u2", "u4"}});
    entries.emplace("x4", ifps::IFPSSet::Entry{{0.6, 0.3}, {"u2", "u3"}});
    return ifps::IFPSSet::make(u_ids(5), x_ids(4), std::move(entries));
}

// Exercises an absent parameter, an empty support and a full support in
// one set; the complement identities fail classically on it.
inline ifps::IFPSSet mixed_example() {
    ifps::IFPSSet::EntryMap entries;
    entries.emplace("x2", ifps::IFPSSet::Entry{{0.2, 0.5}, {"u2", "u4"}});
    entries.emplace("x3", ifps::IFPSSet::Entry{{0.5, 0.5}, {}});
    entries.emplace("x4", ifps::IFPSSet::Entry{{0.6, 0.3}, {"u1", "u2", "u3", "u4", "u5"}});
    return ifps::IFPSSet::make(u_ids(5), x_ids(4), std::move(entries));
}

} // namespace testsupport

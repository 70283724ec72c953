#pragma once

// Independent recomputation paths used to cross-check the library: a dense
// brute-force reduction, plain modulo-mapped generators, and bit-exact
// structural comparison.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <ifps/ifps.hpp>

namespace testsupport {

// Visits every (parameter, element) pair with a linear membership search,
// unlike the library's sparse per-entry accumulation.
inline std::map<std::string, ifps::DegreePair> brute_force_reduce(const ifps::IFPSSet& k) {
    std::map<std::string, ifps::DegreePair> out;
    const double n = static_cast<double>(k.universe().size());
    for (const auto& u : k.universe()) {
        double alpha = 0.0, beta = 0.0;
        for (const auto& x : k.parameters()) {
            ifps::IFPSSet::Entry e = k.at(x);
            if (std::find(e.support.begin(), e.support.end(), u) != e.support.end()) {
                alpha += e.degrees.alpha;
                beta += e.degrees.beta;
            }
        }
        out[u] = ifps::DegreePair{alpha / n, beta / n};
    }
    return out;
}

inline bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

// Exact structural identity, stricter than ifps::equal: degrees must match
// bit for bit.
inline bool identical(const ifps::IFPSSet& a, const ifps::IFPSSet& b) {
    if (a.universe() != b.universe() || a.parameters() != b.parameters())
        return false;
    if (a.entries().size() != b.entries().size())
        return false;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    for (; ia != a.entries().end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.support != ib->second.support)
            return false;
        if (!same_bits(ia->second.degrees.alpha, ib->second.degrees.alpha) ||
            !same_bits(ia->second.degrees.beta, ib->second.degrees.beta))
            return false;
    }
    return true;
}

// Valid degree pair on the 0.05 grid.
inline ifps::DegreePair random_grid_pair(std::mt19937_64& eng) {
    int i = static_cast<int>(eng() % 21);
    int j = static_cast<int>(eng() % static_cast<std::uint64_t>(21 - i));
    return ifps::DegreePair{i / 20.0, j / 20.0};
}

inline ifps::IntuitionisticFuzzySet random_ifs(std::mt19937_64& eng,
                                               const std::vector<std::string>& ground) {
    ifps::IntuitionisticFuzzySet::DegreeMap degrees;
    for (const auto& id : ground)
        degrees.emplace(id, random_grid_pair(eng));
    return ifps::IntuitionisticFuzzySet::make(ground, std::move(degrees));
}

} // namespace testsupport

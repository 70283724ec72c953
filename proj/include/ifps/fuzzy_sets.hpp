#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degree.hpp"
#include "errors.hpp"

namespace ifps {
namespace detail {

// Ids are opaque strings ordered lexicographically; every ground set is kept
// sorted so iteration order is canonical.
inline std::vector<std::string> sorted_unique_ids(std::vector<std::string> ids, const char* what) {
    std::sort(ids.begin(), ids.end());
    auto dup = std::adjacent_find(ids.begin(), ids.end());
    if (dup != ids.end())
        throw domain_error(std::string("duplicate ") + what + " id \"" + *dup + "\"");
    return ids;
}

inline bool contains_id(const std::vector<std::string>& sorted_ids, const std::string& id) {
    return std::binary_search(sorted_ids.begin(), sorted_ids.end(), id);
}

inline void require_same_ground(const std::vector<std::string>& a,
                                const std::vector<std::string>& b,
                                const char* what) {
    if (a != b)
        throw domain_error(std::string(what) + " mismatch: operands are not over the same ground set");
}

} // namespace detail

// Fuzzy set over a finite ground set. Sparse: absent keys read as 0.
class FuzzySet {
public:
    using ValueMap = std::map<std::string, double>;

    static FuzzySet make(std::vector<std::string> ground, ValueMap values) {
        for (const auto& [id, mu] : values)
            if (!degree_in_unit(mu))
                throw domain_error("membership value out of [0, 1] for \"" + id + "\"");
        return make_unchecked(std::move(ground), std::move(values));
    }

    // Structural checks only; used for computed values that may leave [0, 1].
    static FuzzySet make_unchecked(std::vector<std::string> ground, ValueMap values) {
        FuzzySet f;
        f.ground_ = detail::sorted_unique_ids(std::move(ground), "ground");
        for (auto& [id, mu] : values) {
            if (!detail::contains_id(f.ground_, id))
                throw domain_error("membership key \"" + id + "\" is not in the ground set");
            if (mu != 0.0)
                f.values_.emplace(id, mu);
        }
        return f;
    }

    const std::vector<std::string>& ground() const { return ground_; }
    const ValueMap& values() const { return values_; }

    double at(const std::string& id) const {
        if (!detail::contains_id(ground_, id))
            throw domain_error("\"" + id + "\" is not in the ground set");
        auto it = values_.find(id);
        return it == values_.end() ? 0.0 : it->second;
    }

private:
    FuzzySet() = default;
    std::vector<std::string> ground_;
    ValueMap values_;
};

// Intuitionistic fuzzy set: per element a (membership, non-membership) pair
// with alpha + beta <= 1. Sparse: absent keys read as the default (0, 1).
class IntuitionisticFuzzySet {
public:
    using DegreeMap = std::map<std::string, DegreePair>;

    static IntuitionisticFuzzySet make(std::vector<std::string> ground, DegreeMap degrees) {
        for (const auto& [id, p] : degrees)
            if (!valid_degree_pair(p))
                throw domain_error("invalid degree pair for \"" + id + "\": alpha and beta must lie in [0, 1] with alpha + beta <= 1");
        return make_unchecked(std::move(ground), std::move(degrees));
    }

    // Structural checks only. Reduction results keep out-of-range degrees
    // literal, so they bypass the range validation.
    static IntuitionisticFuzzySet make_unchecked(std::vector<std::string> ground, DegreeMap degrees) {
        IntuitionisticFuzzySet s;
        s.ground_ = detail::sorted_unique_ids(std::move(ground), "ground");
        for (auto& [id, p] : degrees) {
            if (!detail::contains_id(s.ground_, id))
                throw domain_error("degree key \"" + id + "\" is not in the ground set");
            if (!p.is_default())
                s.degrees_.emplace(id, p);
        }
        return s;
    }

    const std::vector<std::string>& ground() const { return ground_; }
    const DegreeMap& degrees() const { return degrees_; }

    DegreePair at(const std::string& id) const {
        if (!detail::contains_id(ground_, id))
            throw domain_error("\"" + id + "\" is not in the ground set");
        auto it = degrees_.find(id);
        return it == degrees_.end() ? DegreePair{} : it->second;
    }

private:
    IntuitionisticFuzzySet() = default;
    std::vector<std::string> ground_;
    DegreeMap degrees_;
};

inline bool equal(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
    detail::require_same_ground(a.ground(), b.ground(), "ground set");
    for (const auto& id : a.ground())
        if (!degrees_equal(a.at(id), b.at(id)))
            return false;
    return true;
}

inline bool is_subset(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
    detail::require_same_ground(a.ground(), b.ground(), "ground set");
    for (const auto& id : a.ground()) {
        DegreePair pa = a.at(id), pb = b.at(id);
        if (pa.alpha > pb.alpha + degree_tolerance) return false;
        if (pa.beta < pb.beta - degree_tolerance) return false;
    }
    return true;
}

inline IntuitionisticFuzzySet complement(const IntuitionisticFuzzySet& a) {
    IntuitionisticFuzzySet::DegreeMap out;
    for (const auto& id : a.ground()) {
        DegreePair p = a.at(id);
        out.emplace(id, DegreePair{p.beta, p.alpha});
    }
    return IntuitionisticFuzzySet::make(a.ground(), std::move(out));
}

namespace detail {

template <typename Combine>
IntuitionisticFuzzySet combine_pointwise(const IntuitionisticFuzzySet& a,
                                         const IntuitionisticFuzzySet& b,
                                         Combine combine) {
    require_same_ground(a.ground(), b.ground(), "ground set");
    IntuitionisticFuzzySet::DegreeMap out;
    for (const auto& id : a.ground())
        out.emplace(id, combine(a.at(id), b.at(id)));
    return IntuitionisticFuzzySet::make(a.ground(), std::move(out));
}

} // namespace detail

inline IntuitionisticFuzzySet union_of(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
    return detail::combine_pointwise(a, b, [](DegreePair x, DegreePair y) {
        return DegreePair{std::max(x.alpha, y.alpha), std::min(x.beta, y.beta)};
    });
}

inline IntuitionisticFuzzySet intersection_of(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
    return detail::combine_pointwise(a, b, [](DegreePair x, DegreePair y) {
        return DegreePair{std::min(x.alpha, y.alpha), std::max(x.beta, y.beta)};
    });
}

inline IntuitionisticFuzzySet algebraic_sum(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
    return detail::combine_pointwise(a, b, [](DegreePair x, DegreePair y) {
        return DegreePair{x.alpha + y.alpha - x.alpha * y.alpha, x.beta * y.beta};
    });
}

inline IntuitionisticFuzzySet algebraic_product(const IntuitionisticFuzzySet& a, const IntuitionisticFuzzySet& b) {
    return detail::combine_pointwise(a, b, [](DegreePair x, DegreePair y) {
        return DegreePair{x.alpha * y.alpha, x.beta + y.beta - x.beta * y.beta};
    });
}

} // namespace ifps

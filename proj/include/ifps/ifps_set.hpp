#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "degree.hpp"
#include "errors.hpp"
#include "fuzzy_sets.hpp"

namespace ifps {

// Soft set over a universe U whose parameters carry intuitionistic degrees:
// each parameter x maps to (alpha(x), beta(x)) and an approximate subset
// f(x) of U. Sparse: absent parameters read as (0, 1) with empty support,
// and an entry that is exactly that default is never stored. Degrees that
// are exactly (0, 1) force an empty support ("fully non-member parameters
// approximate nothing"); make() rejects inputs that violate this, and the
// operations clear the support when their result degrees land on (0, 1).
class IFPSSet {
public:
    struct Entry {
        DegreePair degrees;
        std::vector<std::string> support; // sorted subset of the universe
    };
    using EntryMap = std::map<std::string, Entry>;

    static IFPSSet make(std::vector<std::string> universe,
                        std::vector<std::string> parameters,
                        EntryMap entries) {
        IFPSSet s;
        s.universe_ = detail::sorted_unique_ids(std::move(universe), "universe");
        s.parameters_ = detail::sorted_unique_ids(std::move(parameters), "parameter");
        for (auto& [x, e] : entries) {
            if (!detail::contains_id(s.parameters_, x))
                throw domain_error("entry parameter \"" + x + "\" is not in the parameter set");
            if (!valid_degree_pair(e.degrees))
                throw domain_error("entry \"" + x + "\": alpha and beta must lie in [0, 1] with alpha + beta <= 1");
            e.support = detail::sorted_unique_ids(std::move(e.support), "support");
            for (const auto& u : e.support)
                if (!detail::contains_id(s.universe_, u))
                    throw domain_error("entry \"" + x + "\": support element \"" + u + "\" is not in the universe");
            if (e.degrees.is_default() && !e.support.empty())
                throw domain_error("entry \"" + x + "\": degrees (0, 1) require an empty support");
            if (!(e.degrees.is_default() && e.support.empty()))
                s.entries_.emplace(x, std::move(e));
        }
        return s;
    }

    const std::vector<std::string>& universe() const { return universe_; }
    const std::vector<std::string>& parameters() const { return parameters_; }
    const EntryMap& entries() const { return entries_; }

    Entry at(const std::string& parameter) const {
        if (!detail::contains_id(parameters_, parameter))
            throw domain_error("\"" + parameter + "\" is not in the parameter set");
        auto it = entries_.find(parameter);
        return it == entries_.end() ? Entry{} : it->second;
    }

private:
    IFPSSet() = default;
    std::vector<std::string> universe_;
    std::vector<std::string> parameters_;
    EntryMap entries_;
};

inline IFPSSet empty_ifps(std::vector<std::string> universe, std::vector<std::string> parameters) {
    if (universe.empty()) throw domain_error("empty universe");
    if (parameters.empty()) throw domain_error("empty parameter set");
    return IFPSSet::make(std::move(universe), std::move(parameters), {});
}

inline IFPSSet universal_ifps(std::vector<std::string> universe, std::vector<std::string> parameters) {
    if (universe.empty()) throw domain_error("empty universe");
    if (parameters.empty()) throw domain_error("empty parameter set");
    IFPSSet skeleton = IFPSSet::make(universe, std::move(parameters), {});
    IFPSSet::EntryMap entries;
    for (const auto& x : skeleton.parameters())
        entries.emplace(x, IFPSSet::Entry{DegreePair{1.0, 0.0}, skeleton.universe()});
    return IFPSSet::make(skeleton.universe(), skeleton.parameters(), std::move(entries));
}

// Embed a fuzzy parametrization: mu over the parameter set becomes degrees
// (mu, 1 - mu). approx maps parameters to supports; absent keys mean empty.
inline IFPSSet from_fp_soft(const FuzzySet& mu,
                            const std::map<std::string, std::vector<std::string>>& approx,
                            std::vector<std::string> universe) {
    for (const auto& [x, support] : approx) {
        if (mu.at(x) == 0.0 && !support.empty())
            throw domain_error("\"" + x + "\" has membership 0 but a nonempty support");
    }
    IFPSSet::EntryMap entries;
    for (const auto& x : mu.ground()) {
        double m = mu.at(x);
        IFPSSet::Entry e;
        e.degrees = DegreePair{m, 1.0 - m};
        if (auto it = approx.find(x); it != approx.end())
            e.support = it->second;
        entries.emplace(x, std::move(e));
    }
    return IFPSSet::make(std::move(universe), mu.ground(), std::move(entries));
}

inline bool equal(const IFPSSet& k, const IFPSSet& l) {
    detail::require_same_ground(k.universe(), l.universe(), "universe");
    detail::require_same_ground(k.parameters(), l.parameters(), "parameter set");
    for (const auto& x : k.parameters()) {
        IFPSSet::Entry ek = k.at(x), el = l.at(x);
        if (!degrees_equal(ek.degrees, el.degrees) || ek.support != el.support)
            return false;
    }
    return true;
}

inline bool is_subset(const IFPSSet& k, const IFPSSet& l) {
    detail::require_same_ground(k.universe(), l.universe(), "universe");
    detail::require_same_ground(k.parameters(), l.parameters(), "parameter set");
    for (const auto& x : k.parameters()) {
        IFPSSet::Entry ek = k.at(x), el = l.at(x);
        if (ek.degrees.alpha > el.degrees.alpha + degree_tolerance) return false;
        if (ek.degrees.beta < el.degrees.beta - degree_tolerance) return false;
        if (!std::includes(el.support.begin(), el.support.end(),
                           ek.support.begin(), ek.support.end()))
            return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::string> support_union(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<std::string> support_intersection(const std::vector<std::string>& a,
                                                     const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename DegreeOp, typename SupportOp>
IFPSSet combine(const IFPSSet& k, const IFPSSet& l, DegreeOp dop, SupportOp sop) {
    require_same_ground(k.universe(), l.universe(), "universe");
    require_same_ground(k.parameters(), l.parameters(), "parameter set");
    IFPSSet::EntryMap out;
    for (const auto& x : k.parameters()) {
        IFPSSet::Entry ek = k.at(x), el = l.at(x);
        IFPSSet::Entry e;
        e.degrees = dop(ek.degrees, el.degrees);
        e.support = sop(ek.support, el.support);
        if (e.degrees.is_default())
            e.support.clear();
        out.emplace(x, std::move(e));
    }
    return IFPSSet::make(k.universe(), k.parameters(), std::move(out));
}

inline DegreePair degree_max_min(DegreePair a, DegreePair b) {
    return {std::max(a.alpha, b.alpha), std::min(a.beta, b.beta)};
}

inline DegreePair degree_min_max(DegreePair a, DegreePair b) {
    return {std::min(a.alpha, b.alpha), std::max(a.beta, b.beta)};
}

inline DegreePair degree_sum(DegreePair a, DegreePair b) {
    return {quantize_degree(a.alpha + b.alpha - a.alpha * b.alpha),
            quantize_degree(a.beta * b.beta)};
}

inline DegreePair degree_product(DegreePair a, DegreePair b) {
    return {quantize_degree(a.alpha * b.alpha),
            quantize_degree(a.beta + b.beta - a.beta * b.beta)};
}

} // namespace detail

// Degrees swap, supports complement in U. A parameter whose complement
// degrees land on (0, 1) loses its support (see class comment), so the one
// corner (1, 0) with partial support does not round-trip through two
// complements.
inline IFPSSet complement(const IFPSSet& k) {
    IFPSSet::EntryMap out;
    for (const auto& x : k.parameters()) {
        IFPSSet::Entry e = k.at(x);
        IFPSSet::Entry c;
        c.degrees = DegreePair{e.degrees.beta, e.degrees.alpha};
        c.support.reserve(k.universe().size() - e.support.size());
        std::set_difference(k.universe().begin(), k.universe().end(),
                            e.support.begin(), e.support.end(),
                            std::back_inserter(c.support));
        if (c.degrees.is_default())
            c.support.clear();
        out.emplace(x, std::move(c));
    }
    return IFPSSet::make(k.universe(), k.parameters(), std::move(out));
}

inline IFPSSet union_of(const IFPSSet& k, const IFPSSet& l) {
    return detail::combine(k, l, detail::degree_max_min, detail::support_union);
}

inline IFPSSet intersection_of(const IFPSSet& k, const IFPSSet& l) {
    return detail::combine(k, l, detail::degree_min_max, detail::support_intersection);
}

inline IFPSSet or_sum(const IFPSSet& k, const IFPSSet& l) {
    return detail::combine(k, l, detail::degree_sum, detail::support_union);
}

inline IFPSSet and_sum(const IFPSSet& k, const IFPSSet& l) {
    return detail::combine(k, l, detail::degree_sum, detail::support_intersection);
}

inline IFPSSet or_product(const IFPSSet& k, const IFPSSet& l) {
    return detail::combine(k, l, detail::degree_product, detail::support_union);
}

inline IFPSSet and_product(const IFPSSet& k, const IFPSSet& l) {
    return detail::combine(k, l, detail::degree_product, detail::support_intersection);
}

// One-line rendering for diagnostics and counterexample reports.
inline std::string describe(const IFPSSet& k) {
    std::ostringstream os;
    os << "|U|=" << k.universe().size() << " |E|=" << k.parameters().size() << " {";
    bool first = true;
    for (const auto& [x, e] : k.entries()) {
        if (!first) os << ", ";
        first = false;
        os << x << ":(" << e.degrees.alpha << "," << e.degrees.beta << ",{";
        for (std::size_t i = 0; i < e.support.size(); ++i)
            os << (i ? "," : "") << e.support[i];
        os << "})";
    }
    os << "}";
    return os.str();
}

} // namespace ifps

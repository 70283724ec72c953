#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ifps_set.hpp"

namespace ifps {

// Reduced degrees that left their expected range are reported, not clamped.
struct RangeWarning {
    std::string element;
    double alpha = 0.0;
    double beta = 0.0;
    std::string note;
};

struct ReducedIntuitionistic {
    IntuitionisticFuzzySet set;
    std::vector<RangeWarning> warnings;
};

// Collapse the parameter dimension: each element u averages the degrees of
// the parameters whose approximate set contains u, divided by |U| (not by
// the number of contributing parameters). With more parameters than
// elements the averages can leave [0, 1]; the literal values are kept and
// flagged.
inline ReducedIntuitionistic reduce_intuitionistic(const IFPSSet& k) {
    if (k.universe().empty())
        throw domain_error("empty universe");
    std::map<std::string, double> alpha_sum, beta_sum;
    for (const auto& [x, e] : k.entries()) {
        for (const auto& u : e.support) {
            alpha_sum[u] += e.degrees.alpha;
            beta_sum[u] += e.degrees.beta;
        }
    }
    const double n = static_cast<double>(k.universe().size());
    IntuitionisticFuzzySet::DegreeMap degrees;
    std::vector<RangeWarning> warnings;
    for (const auto& u : k.universe()) {
        DegreePair p{alpha_sum[u] / n, beta_sum[u] / n};
        if (!valid_degree_pair(p)) {
            std::string note;
            if (!degree_in_unit(p.alpha)) note = "alpha outside [0, 1]";
            if (!degree_in_unit(p.beta)) note += note.empty() ? "beta outside [0, 1]" : "; beta outside [0, 1]";
            if (note.empty()) note = "alpha + beta exceeds 1";
            warnings.push_back({u, p.alpha, p.beta, std::move(note)});
        }
        degrees.emplace(u, p);
    }
    return {IntuitionisticFuzzySet::make_unchecked(k.universe(), std::move(degrees)),
            std::move(warnings)};
}

// Second stage: mu(u) = alpha(u) * (1 - beta(u)), kept literal even when the
// input degrees were out of range.
inline FuzzySet reduce_fuzzy(const IntuitionisticFuzzySet& reduced) {
    FuzzySet::ValueMap values;
    for (const auto& u : reduced.ground()) {
        DegreePair p = reduced.at(u);
        values.emplace(u, p.alpha * (1.0 - p.beta));
    }
    return FuzzySet::make_unchecked(reduced.ground(), std::move(values));
}

} // namespace ifps

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "reduction.hpp"

namespace ifps {

struct ScoredAlternative {
    std::string id;
    double score = 0.0;
};

// Full ranking plus the explicit argmax set: the descending order hides
// ties, the argmax does not.
struct RankedDecision {
    std::vector<ScoredAlternative> ranking; // score descending, id ascending on ties
    std::vector<std::string> argmax;        // every id within tolerance of the top score
    std::vector<RangeWarning> warnings;
};

inline RankedDecision rank(const FuzzySet& scores) {
    RankedDecision d;
    d.ranking.reserve(scores.ground().size());
    for (const auto& u : scores.ground())
        d.ranking.push_back({u, scores.at(u)});
    std::stable_sort(d.ranking.begin(), d.ranking.end(),
                     [](const ScoredAlternative& a, const ScoredAlternative& b) {
                         return a.score > b.score;
                     });
    if (!d.ranking.empty()) {
        const double top = d.ranking.front().score;
        for (const auto& s : d.ranking)
            if (s.score >= top - degree_tolerance)
                d.argmax.push_back(s.id);
        std::sort(d.argmax.begin(), d.argmax.end());
    }
    return d;
}

// The whole pipeline: reduce twice, then rank. Range warnings from the
// reduction ride along.
inline RankedDecision decide(const IFPSSet& k) {
    ReducedIntuitionistic reduced = reduce_intuitionistic(k);
    RankedDecision d = rank(reduce_fuzzy(reduced.set));
    d.warnings = std::move(reduced.warnings);
    return d;
}

enum class GroupOp { or_sum, and_sum, or_product, and_product };

// Left fold of one commutative, associative operation over the group's
// sets; the order of the list does not affect the result.
inline IFPSSet aggregate_group(const std::vector<IFPSSet>& sets, GroupOp op) {
    if (sets.empty())
        throw domain_error("empty group: nothing to aggregate");
    IFPSSet acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) {
        switch (op) {
        case GroupOp::or_sum: acc = or_sum(acc, sets[i]); break;
        case GroupOp::and_sum: acc = and_sum(acc, sets[i]); break;
        case GroupOp::or_product: acc = or_product(acc, sets[i]); break;
        case GroupOp::and_product: acc = and_product(acc, sets[i]); break;
        }
    }
    return acc;
}

} // namespace ifps

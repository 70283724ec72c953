#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ifps_set.hpp"

namespace ifps {

namespace detail {

inline std::vector<std::string> numbered_ids(const char* prefix, std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        ids.push_back(prefix + std::to_string(i));
    return ids;
}

// All degree pairs on the 0.05 grid with alpha + beta <= 1, in a fixed
// order so index draws are reproducible.
inline const std::vector<std::pair<int, int>>& degree_grid() {
    static const std::vector<std::pair<int, int>> grid = [] {
        std::vector<std::pair<int, int>> g;
        for (int i = 0; i <= 20; ++i)
            for (int j = 0; j + i <= 20; ++j)
                g.emplace_back(i, j);
        return g;
    }();
    return grid;
}

} // namespace detail

// Deterministic random instance. Same seed, same set, on every platform:
// raw engine draws are mapped by modulo rather than through distribution
// objects, whose output is implementation-defined.
//
// Degrees come from the 0.05 grid filtered to alpha + beta <= 1; supports
// are uniform random subsets except at the two extremes: (0, 1) forces an
// empty support (the definition requires it) and (1, 0) forces the full
// universe (keeps the sample closed under complement).
inline IFPSSet gen_ifps(std::uint64_t seed, std::size_t universe_size, std::size_t param_count) {
    if (universe_size < 1 || universe_size > 6)
        throw domain_error("universe_size must be between 1 and 6");
    if (param_count < 1 || param_count > 5)
        throw domain_error("param_count must be between 1 and 5");
    std::vector<std::string> universe = detail::numbered_ids("u", universe_size);
    std::vector<std::string> params = detail::numbered_ids("x", param_count);
    std::mt19937_64 eng(seed);
    const auto& grid = detail::degree_grid();
    IFPSSet::EntryMap entries;
    for (const auto& x : params) {
        auto [i, j] = grid[eng() % grid.size()];
        IFPSSet::Entry e;
        e.degrees = DegreePair{i / 20.0, j / 20.0};
        if (i == 0 && j == 20) {
            // forced empty
        } else if (i == 20 && j == 0) {
            e.support = universe;
        } else {
            for (const auto& u : universe)
                if (eng() & 1u)
                    e.support.push_back(u);
        }
        entries.emplace(x, std::move(e));
    }
    return IFPSSet::make(std::move(universe), std::move(params), std::move(entries));
}

struct LawCounterexample {
    std::string law;
    std::uint64_t trial = 0;
    std::string detail;
};

struct LawResult {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::optional<LawCounterexample> first_failure;
};

struct LawReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<LawResult> laws;

    bool all_passed() const {
        for (const auto& r : laws)
            if (r.failures != 0)
                return false;
        return true;
    }
};

namespace detail {

struct TrialContext {
    IFPSSet k, l, m;
    IFPSSet empty, universal;
};

using LawCheck = std::function<std::optional<std::string>(const TrialContext&)>;

struct Law {
    std::string name;
    LawCheck check;
};

inline std::optional<std::string> expect(bool ok, const std::string& detail) {
    if (ok) return std::nullopt;
    return detail;
}

inline std::optional<std::string> expect_equal(const IFPSSet& a, const IFPSSet& b) {
    if (equal(a, b)) return std::nullopt;
    return describe(a) + " differs from " + describe(b);
}

inline std::string operands(const TrialContext& c) {
    return "K=" + describe(c.k) + " L=" + describe(c.l) + " M=" + describe(c.m);
}

// Fixed instance on which the classical complement identities fail: the
// union with the complement is not universal and the intersection is not
// empty. Kept as a pinned witness, not a universally quantified law.
inline const IFPSSet& complement_law_witness() {
    static const IFPSSet w = [] {
        IFPSSet::EntryMap entries;
        entries.emplace("x2", IFPSSet::Entry{DegreePair{0.2, 0.5}, {"u2", "u4"}});
        entries.emplace("x3", IFPSSet::Entry{DegreePair{0.5, 0.5}, {}});
        entries.emplace("x4", IFPSSet::Entry{DegreePair{0.6, 0.3},
                                             {"u1", "u2", "u3", "u4", "u5"}});
        return IFPSSet::make({"u1", "u2", "u3", "u4", "u5"},
                             {"x1", "x2", "x3", "x4"}, std::move(entries));
    }();
    return w;
}

inline const std::vector<Law>& law_suite() {
    static const std::vector<Law> suite = [] {
        std::vector<Law> laws;
        auto add = [&laws](std::string name, LawCheck check) {
            laws.push_back({std::move(name), std::move(check)});
        };

        add("subset_reflexive", [](const TrialContext& c) {
            return expect(is_subset(c.k, c.k), describe(c.k));
        });
        add("subset_empty_lower_bound", [](const TrialContext& c) {
            return expect(is_subset(c.empty, c.k), describe(c.k));
        });
        add("subset_universal_upper_bound", [](const TrialContext& c) {
            return expect(is_subset(c.k, c.universal), describe(c.k));
        });
        add("subset_transitive", [](const TrialContext& c) {
            IFPSSet b = union_of(c.k, c.l), d = union_of(b, c.m);
            return expect(is_subset(c.k, b) && is_subset(b, d) && is_subset(c.k, d),
                          operands(c));
        });
        add("mutual_subset_matches_equality", [](const TrialContext& c) {
            auto check = [](const IFPSSet& a, const IFPSSet& b) {
                return (is_subset(a, b) && is_subset(b, a)) == equal(a, b);
            };
            return expect(check(c.k, c.l) && check(c.k, c.k) && check(c.k, union_of(c.k, c.l)),
                          operands(c));
        });
        add("equality_transitive", [](const TrialContext& c) {
            IFPSSet b = union_of(c.k, c.empty), d = intersection_of(c.k, c.universal);
            return expect(equal(c.k, b) && equal(b, d) && equal(c.k, d), describe(c.k));
        });

        add("complement_involution", [](const TrialContext& c) {
            return expect_equal(complement(complement(c.k)), c.k);
        });
        add("complement_of_empty_is_universal", [](const TrialContext& c) {
            return expect_equal(complement(c.empty), c.universal);
        });
        add("complement_of_universal_is_empty", [](const TrialContext& c) {
            return expect_equal(complement(c.universal), c.empty);
        });

        add("union_idempotent", [](const TrialContext& c) {
            return expect_equal(union_of(c.k, c.k), c.k);
        });
        add("union_identity_empty", [](const TrialContext& c) {
            return expect_equal(union_of(c.k, c.empty), c.k);
        });
        add("union_absorbing_universal", [](const TrialContext& c) {
            return expect_equal(union_of(c.k, c.universal), c.universal);
        });
        add("union_commutative", [](const TrialContext& c) {
            return expect_equal(union_of(c.k, c.l), union_of(c.l, c.k));
        });
        add("union_associative", [](const TrialContext& c) {
            return expect_equal(union_of(union_of(c.k, c.l), c.m),
                                union_of(c.k, union_of(c.l, c.m)));
        });

        add("intersection_idempotent", [](const TrialContext& c) {
            return expect_equal(intersection_of(c.k, c.k), c.k);
        });
        add("intersection_identity_universal", [](const TrialContext& c) {
            return expect_equal(intersection_of(c.k, c.universal), c.k);
        });
        add("intersection_absorbing_empty", [](const TrialContext& c) {
            return expect_equal(intersection_of(c.k, c.empty), c.empty);
        });
        add("intersection_commutative", [](const TrialContext& c) {
            return expect_equal(intersection_of(c.k, c.l), intersection_of(c.l, c.k));
        });
        add("intersection_associative", [](const TrialContext& c) {
            return expect_equal(intersection_of(intersection_of(c.k, c.l), c.m),
                                intersection_of(c.k, intersection_of(c.l, c.m)));
        });

        add("union_distributes_over_intersection", [](const TrialContext& c) {
            return expect_equal(union_of(c.k, intersection_of(c.l, c.m)),
                                intersection_of(union_of(c.k, c.l), union_of(c.k, c.m)));
        });
        add("intersection_distributes_over_union", [](const TrialContext& c) {
            return expect_equal(intersection_of(c.k, union_of(c.l, c.m)),
                                union_of(intersection_of(c.k, c.l), intersection_of(c.k, c.m)));
        });
        add("demorgan_union", [](const TrialContext& c) {
            return expect_equal(complement(union_of(c.k, c.l)),
                                intersection_of(complement(c.k), complement(c.l)));
        });
        add("demorgan_intersection", [](const TrialContext& c) {
            return expect_equal(complement(intersection_of(c.k, c.l)),
                                union_of(complement(c.k), complement(c.l)));
        });

        add("or_sum_identity_empty", [](const TrialContext& c) {
            return expect_equal(or_sum(c.k, c.empty), c.k);
        });
        add("or_sum_absorbing_universal", [](const TrialContext& c) {
            return expect_equal(or_sum(c.k, c.universal), c.universal);
        });
        add("or_sum_commutative", [](const TrialContext& c) {
            return expect_equal(or_sum(c.k, c.l), or_sum(c.l, c.k));
        });
        add("or_sum_associative", [](const TrialContext& c) {
            return expect_equal(or_sum(or_sum(c.k, c.l), c.m),
                                or_sum(c.k, or_sum(c.l, c.m)));
        });
        add("and_sum_commutative", [](const TrialContext& c) {
            return expect_equal(and_sum(c.k, c.l), and_sum(c.l, c.k));
        });
        add("and_sum_associative", [](const TrialContext& c) {
            return expect_equal(and_sum(and_sum(c.k, c.l), c.m),
                                and_sum(c.k, and_sum(c.l, c.m)));
        });

        add("or_product_commutative", [](const TrialContext& c) {
            return expect_equal(or_product(c.k, c.l), or_product(c.l, c.k));
        });
        add("or_product_associative", [](const TrialContext& c) {
            return expect_equal(or_product(or_product(c.k, c.l), c.m),
                                or_product(c.k, or_product(c.l, c.m)));
        });
        add("and_product_commutative", [](const TrialContext& c) {
            return expect_equal(and_product(c.k, c.l), and_product(c.l, c.k));
        });
        add("and_product_associative", [](const TrialContext& c) {
            return expect_equal(and_product(and_product(c.k, c.l), c.m),
                                and_product(c.k, and_product(c.l, c.m)));
        });
        add("and_product_identity_universal", [](const TrialContext& c) {
            return expect_equal(and_product(c.k, c.universal), c.k);
        });
        add("and_product_absorbing_empty", [](const TrialContext& c) {
            return expect_equal(and_product(c.k, c.empty), c.empty);
        });

        add("complement_laws_fail_on_witness", [](const TrialContext&) {
            const IFPSSet& w = complement_law_witness();
            IFPSSet w_universal = universal_ifps(w.universe(), w.parameters());
            IFPSSet w_empty = empty_ifps(w.universe(), w.parameters());
            bool union_not_universal = !equal(union_of(w, complement(w)), w_universal);
            bool intersection_not_empty = !equal(intersection_of(w, complement(w)), w_empty);
            return expect(union_not_universal && intersection_not_empty, describe(w));
        });

        return laws;
    }();
    return suite;
}

} // namespace detail

// Evaluate every law on `trials` fresh instances. Trial t draws its sizes
// and three operand seeds from a stream derived from (seed, t), so reports
// are reproducible and independent of evaluation order.
inline LawReport run_suite(std::uint64_t trials, std::uint64_t seed) {
    const auto& suite = detail::law_suite();
    LawReport report;
    report.trials = trials;
    report.seed = seed;
    report.laws.reserve(suite.size());
    for (const auto& law : suite)
        report.laws.push_back({law.name, 0, 0, std::nullopt});

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 eng(seed * 0x9E3779B97F4A7C15ULL + t);
        std::size_t universe_size = 1 + eng() % 6;
        std::size_t param_count = 1 + eng() % 5;
        detail::TrialContext ctx{
            gen_ifps(eng(), universe_size, param_count),
            gen_ifps(eng(), universe_size, param_count),
            gen_ifps(eng(), universe_size, param_count),
            empty_ifps(detail::numbered_ids("u", universe_size), detail::numbered_ids("x", param_count)),
            universal_ifps(detail::numbered_ids("u", universe_size), detail::numbered_ids("x", param_count)),
        };
        for (std::size_t i = 0; i < suite.size(); ++i) {
            LawResult& r = report.laws[i];
            ++r.instances;
            if (auto failure = suite[i].check(ctx)) {
                ++r.failures;
                if (!r.first_failure)
                    r.first_failure = LawCounterexample{r.name, t, *failure};
            }
        }
    }
    return report;
}

} // namespace ifps

#include <catch2/catch_amalgamated.hpp>

#include <ifps/ifps.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using ifps::DegreePair;
using ifps::IFPSSet;
using testsupport::u_ids;
using testsupport::x_ids;

namespace {

bool close(double a, double b) { return ifps::degree_close(a, b); }

} // namespace

TEST_CASE("reduced degrees of the hiring example match the hand-computed table", "[reduction]") {
    ifps::ReducedIntuitionistic r = ifps::reduce_intuitionistic(testsupport::hiring_example());
    CHECK(r.warnings.empty());

    // Per element: (sum of alpha over parameters whose support contains it,
    // same for beta), divided by |U| = 5.
    CHECK(close(r.set.at("u1").alpha, 0.28));
    CHECK(close(r.set.at("u1").beta, 0.26));
    CHECK(close(r.set.at("u2").alpha, 0.40));
    CHECK(close(r.set.at("u2").beta, 0.32));
    CHECK(close(r.set.at("u3").alpha, 0.16));
    CHECK(close(r.set.at("u3").beta, 0.16));
    // Known erratum in the published version of this example: u4 is listed
    // there as (0.28, 0.32), which double-counts x4 even though x4's
    // support {u2, u3} does not contain u4. The formula gives (0.28, 0.26),
    // the same as u1; the winning alternative is unaffected either way.
    CHECK(close(r.set.at("u4").alpha, 0.28));
    CHECK(close(r.set.at("u4").beta, 0.26));
    CHECK(close(r.set.at("u5").alpha, 0.04));
    CHECK(close(r.set.at("u5").beta, 0.10));
}

TEST_CASE("final scores of the hiring example match the hand-computed table", "[reduction]") {
    ifps::ReducedIntuitionistic r = ifps::reduce_intuitionistic(testsupport::hiring_example());
    ifps::FuzzySet scores = ifps::reduce_fuzzy(r.set);

    // mu(u) = alpha(u) * (1 - beta(u))
    CHECK(close(scores.at("u1"), 0.2072));
    CHECK(close(scores.at("u2"), 0.2720));
    CHECK(close(scores.at("u3"), 0.1344));
    CHECK(close(scores.at("u4"), 0.2072));
    CHECK(close(scores.at("u5"), 0.0360));
}

TEST_CASE("degenerate reductions", "[reduction]") {
    ifps::ReducedIntuitionistic none = ifps::reduce_intuitionistic(ifps::empty_ifps(u_ids(3), x_ids(2)));
    for (const auto& u : u_ids(3)) {
        CHECK(none.set.at(u).alpha == 0.0);
        CHECK(none.set.at(u).beta == 0.0);
        CHECK(ifps::reduce_fuzzy(none.set).at(u) == 0.0);
    }

    // universal: every parameter contributes (1, 0) to every element
    ifps::ReducedIntuitionistic all = ifps::reduce_intuitionistic(ifps::universal_ifps(u_ids(4), x_ids(2)));
    for (const auto& u : u_ids(4)) {
        CHECK(close(all.set.at(u).alpha, 0.5));
        CHECK(all.set.at(u).beta == 0.0);
    }

    // zero membership stays zero through the second stage
    IFPSSet::EntryMap entries;
    entries.emplace("x1", IFPSSet::Entry{DegreePair{0.0, 0.4}, {"u1"}});
    IFPSSet k = IFPSSet::make(u_ids(2), x_ids(1), std::move(entries));
    CHECK(ifps::reduce_fuzzy(ifps::reduce_intuitionistic(k).set).at("u1") == 0.0);
}

TEST_CASE("more parameters than elements can push degrees out of range", "[reduction]") {
    IFPSSet::EntryMap entries;
    for (const auto& x : x_ids(3))
        entries.emplace(x, IFPSSet::Entry{DegreePair{0.5, 0.4}, {"u1"}});
    IFPSSet k = IFPSSet::make({"u1"}, x_ids(3), std::move(entries));

    ifps::ReducedIntuitionistic r = ifps::reduce_intuitionistic(k);
    CHECK(close(r.set.at("u1").alpha, 1.5)); // kept literal, not clamped
    CHECK(close(r.set.at("u1").beta, 1.2));
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].element == "u1");
    CHECK(close(r.warnings[0].alpha, 1.5));
    CHECK(close(r.warnings[0].beta, 1.2));
    CHECK(r.warnings[0].note.find("alpha") != std::string::npos);
    CHECK(r.warnings[0].note.find("beta") != std::string::npos);

    // second stage also stays literal
    CHECK(close(ifps::reduce_fuzzy(r.set).at("u1"), 1.5 * (1.0 - 1.2)));
}

TEST_CASE("a pair can violate only the alpha+beta bound", "[reduction]") {
    IFPSSet::EntryMap entries;
    for (const auto& x : x_ids(3))
        entries.emplace(x, IFPSSet::Entry{DegreePair{0.6, 0.4}, {"u1"}});
    IFPSSet k = IFPSSet::make(u_ids(2), x_ids(3), std::move(entries));

    ifps::ReducedIntuitionistic r = ifps::reduce_intuitionistic(k);
    CHECK(close(r.set.at("u1").alpha, 0.9));
    CHECK(close(r.set.at("u1").beta, 0.6));
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].note == "alpha + beta exceeds 1");
    CHECK(r.warnings.at(0).element == "u1");
    CHECK(r.set.at("u2").alpha == 0.0);
}

TEST_CASE("no warnings when parameters do not outnumber elements", "[reduction]") {
    std::mt19937_64 eng(81);
    for (int t = 0; t < 150; ++t) {
        std::size_t us = 1 + eng() % 6;
        std::size_t pc = 1 + eng() % std::min<std::size_t>(us, 5);
        IFPSSet k = ifps::gen_ifps(eng(), us, pc);
        ifps::ReducedIntuitionistic r = ifps::reduce_intuitionistic(k);
        CHECK(r.warnings.empty());
        for (const auto& u : k.universe())
            CHECK(ifps::valid_degree_pair(r.set.at(u)));
    }
}

TEST_CASE("reduction agrees with the dense brute-force oracle", "[reduction]") {
    std::mt19937_64 eng(82);
    for (int t = 0; t < 200; ++t) {
        std::size_t us = 1 + eng() % 6, pc = 1 + eng() % 5;
        IFPSSet k = ifps::gen_ifps(eng(), us, pc);
        auto expected = testsupport::brute_force_reduce(k);
        ifps::ReducedIntuitionistic r = ifps::reduce_intuitionistic(k);
        for (const auto& u : k.universe()) {
            CHECK(close(r.set.at(u).alpha, expected[u].alpha));
            CHECK(close(r.set.at(u).beta, expected[u].beta));
        }
    }
}

TEST_CASE("growing a set never shrinks its reduced membership", "[reduction]") {
    std::mt19937_64 eng(83);
    for (int t = 0; t < 100; ++t) {
        std::size_t us = 1 + eng() % 6, pc = 1 + eng() % 5;
        IFPSSet k = ifps::gen_ifps(eng(), us, pc);
        IFPSSet bigger = ifps::union_of(k, ifps::gen_ifps(eng(), us, pc));
        ifps::ReducedIntuitionistic rk = ifps::reduce_intuitionistic(k);
        ifps::ReducedIntuitionistic rb = ifps::reduce_intuitionistic(bigger);
        for (const auto& u : k.universe())
            CHECK(rk.set.at(u).alpha <= rb.set.at(u).alpha + ifps::degree_tolerance);
    }
}

TEST_CASE("reduction rejects an empty universe", "[reduction]") {
    IFPSSet k = IFPSSet::make({}, x_ids(1), {});
    CHECK_THROWS_AS(ifps::reduce_intuitionistic(k), ifps::domain_error);
}

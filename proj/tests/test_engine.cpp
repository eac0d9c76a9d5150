#include <doctest.h>

#include "cosmetic/dedekind.hpp"
#include "cosmetic/engine.hpp"
#include "oracles.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

using namespace cosmetic;

namespace {

using Key = std::tuple<std::uint64_t, std::int64_t, std::uint64_t>;  // p, residue (-1 = any), gap

std::set<Key> keys(const std::vector<CandidateFamily>& families) {
    std::set<Key> out;
    for (const auto& f : families) {
        out.insert({f.p, f.q_residue ? static_cast<std::int64_t>(*f.q_residue) : -1, f.gap});
    }
    return out;
}

const ObstructionVerdict* verdict(const CandidateFamily& f, const std::string& name) {
    for (const auto& v : f.verdicts) {
        if (v.filter_name == name) {
            return &v;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("classify_candidates per p") {
    CHECK(surviving(classify_candidates(7)).empty());
    CHECK(keys(surviving(classify_candidates(5))) == std::set<Key>{{5, 2, 1}});
    CHECK(keys(surviving(classify_candidates(2))) == std::set<Key>{{2, 1, 2}, {2, 1, 4}});
    for (std::uint64_t p : {3u, 4u, 6u, 7u, 8u}) {
        CHECK(surviving(classify_candidates(p)).empty());
    }
    std::set<Key> p1;
    for (std::uint64_t g = 1; g <= 8; ++g) {
        p1.insert({1, -1, g});
    }
    CHECK(keys(surviving(classify_candidates(1))) == p1);
    CHECK_THROWS_AS(classify_candidates(0), std::invalid_argument);
}

TEST_CASE("p = 7 exclusion carries the Dedekind values") {
    const auto families = classify_candidates(7);
    bool saw_five = false;
    bool saw_one = false;
    for (const auto& f : families) {
        if (f.q_residue == 5u) {
            const auto* d = verdict(f, "dedekind");
            REQUIRE(d != nullptr);
            CHECK_FALSE(d->passed);
            CHECK(d->witness->find("-1/14") != std::string::npos);
            CHECK(d->witness->find("-5/14") != std::string::npos);
            CHECK(verdict(f, "congruence")->passed);
            saw_five = true;
        }
        if (f.q_residue == 1u) {
            const auto* d = verdict(f, "dedekind");
            CHECK(d->witness->find("5/14") != std::string::npos);
            CHECK(d->witness->find("1/14") != std::string::npos);
            saw_one = true;
        }
    }
    CHECK(saw_five);
    CHECK(saw_one);
}

TEST_CASE("large p fails the distance bound") {
    const auto families = classify_candidates(9);
    REQUIRE(families.size() == 1);
    CHECK_FALSE(families[0].surviving);
    CHECK(families[0].verdicts[0].filter_name == "distance");
    CHECK_FALSE(families[0].verdicts[0].passed);
}

TEST_CASE("distance filter can be disabled") {
    ClassifyOptions options;
    options.distance_filter = false;
    options.max_gap = 3;
    const auto families = classify_candidates(9, options);
    CHECK(families.size() == 27);
    for (const auto& f : families) {
        CHECK(f.beyond_exceptional_bound);
        CHECK(verdict(f, "distance") == nullptr);
    }
    // 9/q ~ 9/(q+2) survives only when q = q' u^2 mod 9 and s(q,9) = s(q+2,9).
    for (const auto& f : surviving(families)) {
        const std::int64_t q = static_cast<std::int64_t>(*f.q_residue);
        CHECK(oracle::congruent_by_search(9, q, q + static_cast<std::int64_t>(f.gap)));
        CHECK(oracle::dedekind(q, 9) == oracle::dedekind(q + static_cast<std::int64_t>(f.gap), 9));
    }
}

TEST_CASE("surviving families re-verified from definitions") {
    for (std::uint64_t p = 1; p <= 8; ++p) {
        const auto families = classify_candidates(p);
        CHECK(cross_check(families).empty());
        for (const auto& f : surviving(families)) {
            const std::int64_t q = static_cast<std::int64_t>(f.q_residue.value_or(0));
            const std::int64_t q2 = q + static_cast<std::int64_t>(f.gap);
            const auto ip = static_cast<std::int64_t>(p);
            CHECK(f.p * f.gap <= 8);
            CHECK(std::gcd(q, ip) == 1);
            CHECK(std::gcd(q2, ip) == 1);
            CHECK(oracle::congruent_by_search(ip, q, q2));
            CHECK(oracle::dedekind(q, ip) == oracle::dedekind(q2, ip));
        }
    }
}

TEST_CASE("cross_check flags a tampered verdict") {
    auto families = classify_candidates(7);
    for (auto& f : families) {
        if (f.q_residue == 5u) {
            for (auto& v : f.verdicts) {
                if (v.filter_name == "dedekind") {
                    v.passed = true;
                }
            }
            f.surviving = true;
        }
    }
    CHECK_FALSE(cross_check(families).empty());
}

TEST_CASE("s(q, 2) vanishes for odd q") {
    for (long q = -99; q <= 99; q += 2) {
        CHECK(dedekind_sum_fast(q, 2) == Rational(0));
        CHECK(dedekind_sum_direct(q, 2) == Rational(0));
    }
}

TEST_CASE("replicate_theorem") {
    const auto table = replicate_theorem();
    REQUIRE(table.entries.size() == 5);

    const std::set<Key> p1_g1 = {{1, -1, 1}};
    CHECK(keys(table.entry(GeometryClass::reducible).families) == p1_g1);
    CHECK(keys(table.entry(GeometryClass::seifert_toroidal).families) == p1_g1);

    std::set<Key> small = {{5, 2, 1}, {2, 1, 2}, {2, 1, 4}};
    for (std::uint64_t g = 1; g <= 8; ++g) {
        small.insert({1, -1, g});
    }
    CHECK(keys(table.entry(GeometryClass::small_seifert_infinite).families) == small);

    CHECK(keys(table.entry(GeometryClass::toroidal_irreducible_non_seifert).families) ==
          std::set<Key>{{1, -1, 1}, {1, -1, 2}, {1, -1, 3}});

    const auto& finite = table.entry(GeometryClass::finite_pi1);
    CHECK(finite.families.empty());
    REQUIRE(finite.cited_axiom.has_value());
    CHECK_FALSE(finite.cited_axiom->passed);
    CHECK(finite.cited_axiom->witness->find("cited, not computed") != std::string::npos);
}

TEST_CASE("summaries read like the case list") {
    const auto table = replicate_theorem();
    std::vector<std::string> lines;
    for (const auto& s : summarize(table.entry(GeometryClass::small_seifert_infinite).families)) {
        lines.push_back(describe(s));
    }
    CHECK(lines == std::vector<std::string>{"p = 1, |q' - q| <= 8", "p = 2, q = 1 mod 2, q' - q in {2,4}",
                                            "p = 5, q = 2 mod 5, q' = q + 1"});
    const auto toroidal = summarize(table.entry(GeometryClass::toroidal_irreducible_non_seifert).families);
    REQUIRE(toroidal.size() == 1);
    CHECK(describe(toroidal[0]) == "p = 1, |q' - q| <= 3");
}

TEST_CASE("FilterSet parsing") {
    const auto all = FilterSet::parse("all");
    CHECK((all.congruence && all.dedekind && all.distance));
    const auto some = FilterSet::parse("congruence,distance");
    CHECK(some.congruence);
    CHECK_FALSE(some.dedekind);
    CHECK(some.distance);
    CHECK(some.to_string() == "congruence,distance");
    CHECK_THROWS_AS(FilterSet::parse("parity"), std::invalid_argument);
    CHECK_THROWS_AS(FilterSet::parse(""), std::invalid_argument);
}

TEST_CASE("enumerate_pairs examples") {
    EnumerationRequest seven;
    seven.p_min = seven.p_max = 7;
    seven.q_min = 1;
    seven.q_max = 20;
    std::size_t survivors = 0;
    for (const auto& r : enumerate_pairs(seven)) {
        survivors += r.surviving ? 1 : 0;
    }
    CHECK(survivors == 0);

    EnumerationRequest five;
    five.p_min = five.p_max = 5;
    five.q_min = 1;
    five.q_max = 30;
    std::vector<std::pair<long, std::uint64_t>> got;
    for (const auto& r : enumerate_pairs(five)) {
        if (r.surviving) {
            got.emplace_back(r.q.get_si(), r.gap);
        }
    }
    CHECK(got == std::vector<std::pair<long, std::uint64_t>>{{2, 1}, {7, 1}, {12, 1}, {17, 1}, {22, 1}, {27, 1}});

    EnumerationRequest one;
    one.p_min = one.p_max = 1;
    one.q_min = 1;
    one.q_max = 3;
    one.filters = FilterSet::parse("distance");
    one.max_gap = 12;
    for (const auto& r : enumerate_pairs(one)) {
        CHECK(r.surviving == (r.gap <= 8));
    }
}

TEST_CASE("enumerate_pairs ordering is independent of jobs") {
    EnumerationRequest request;
    request.p_min = 1;
    request.p_max = 8;
    request.q_min = -50;
    request.q_max = 120;
    const auto serial = enumerate_pairs(request);
    request.jobs = 5;
    const auto parallel = enumerate_pairs(request);
    CHECK(serial == parallel);
    CHECK(serial.size() == 8 * 171 * 8);
    for (std::size_t i = 1; i < serial.size(); ++i) {
        const auto& a = serial[i - 1];
        const auto& b = serial[i];
        CHECK(std::tie(a.p, a.q, a.gap) < std::tie(b.p, b.q, b.gap));
    }
}

TEST_CASE("enumerate_pairs rejects bad ranges") {
    EnumerationRequest r;
    r.p_min = 0;
    CHECK_THROWS_AS(enumerate_pairs(r), std::invalid_argument);
    r.p_min = 3;
    r.p_max = 2;
    CHECK_THROWS_AS(enumerate_pairs(r), std::invalid_argument);
    r.p_max = 4;
    r.q_min = 10;
    r.q_max = 9;
    CHECK_THROWS_AS(enumerate_pairs(r), std::invalid_argument);
    r.q_max = parse_integer("1000000000000");
    CHECK_THROWS_AS(enumerate_pairs(r), std::invalid_argument);
}

// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "forid/dispatch.hpp"
#include "support/probes.hpp"

using namespace forid;
using forid::testing::recording_probe;

namespace {

using fp_pair = type_sequence<float, double>;
using ind_quad = type_sequence<std::uint8_t, std::uint16_t, std::uint32_t, std::uint64_t>;

} // namespace

TEST_CASE("index_of finds the first occurrence or nothing") {
    CHECK(index_of(fp_pair::tags, type_tag{"f64"}) == 1);
    CHECK(index_of(fp_pair::tags, type_tag{"f32"}) == 0);
    CHECK_FALSE(index_of(fp_pair::tags, type_tag{"u8"}).has_value());
}

TEST_CASE("one-dimensional dispatch selects by position") {
    std::vector<std::vector<type_tag>> log;
    recording_probe probe{&log};

    SUBCASE("id 1 selects the second type") {
        dispatch_stats stats;
        for_id<fp_pair>(stats, probe, 1);
        REQUIRE(log.size() == 1);
        CHECK(log[0] == std::vector<type_tag>{type_tag{"f64"}});
        CHECK(stats.comparisons == 2);
        CHECK(stats.resolved == std::vector<type_tag>{type_tag{"f64"}});
    }
    SUBCASE("id 0 matches immediately") {
        dispatch_stats stats;
        for_id<fp_pair>(stats, probe, 0);
        REQUIRE(log.size() == 1);
        CHECK(log[0] == std::vector<type_tag>{type_tag{"f32"}});
        CHECK(stats.comparisons == 1);
    }
    SUBCASE("an out-of-range id exhausts the scan and throws") {
        dispatch_stats stats;
        CHECK_THROWS_AS(for_id<fp_pair>(stats, probe, 10), invalid_id_error);
        CHECK(log.empty());
        CHECK(stats.comparisons == 2);
        CHECK(stats.resolved.empty());
        try {
            for_id<fp_pair>(probe, 10);
        } catch (const invalid_id_error& error) {
            CHECK(error.dimension() == 1);
            CHECK(error.id() == 10);
            CHECK(error.sequence_length() == 2);
        }
    }
}

TEST_CASE("two-dimensional dispatch resolves dimension by dimension") {
    std::vector<std::vector<type_tag>> log;
    recording_probe probe{&log};

    SUBCASE("(1, 2) picks (f64, u32) in 2 + 3 comparisons") {
        dispatch_stats stats;
        for_id<fp_pair, ind_quad>(stats, probe, 1, 2);
        REQUIRE(log.size() == 1);
        CHECK(log[0] == std::vector<type_tag>{type_tag{"f64"}, type_tag{"u32"}});
        CHECK(stats.comparisons == 5);
        CHECK(stats.resolved == std::vector<type_tag>{type_tag{"f64"}, type_tag{"u32"}});
    }
    SUBCASE("singleton sequences cost one comparison each") {
        dispatch_stats stats;
        recording_probe p{&log};
        for_id<type_sequence<float>, type_sequence<std::uint8_t>>(stats, p, 0, 0);
        REQUIRE(log.size() == 1);
        CHECK(log[0] == std::vector<type_tag>{type_tag{"f32"}, type_tag{"u8"}});
        CHECK(stats.comparisons == 2);
    }
    SUBCASE("a failure in dimension 2 reports it and counts the exhausted scan") {
        using ind_pair = type_sequence<std::uint8_t, std::uint16_t>;
        dispatch_stats stats;
        try {
            for_id<fp_pair, ind_pair>(stats, probe, 0, 5);
            FAIL("expected invalid_id_error");
        } catch (const invalid_id_error& error) {
            CHECK(error.dimension() == 2);
            CHECK(error.id() == 5);
            CHECK(error.sequence_length() == 2);
        }
        CHECK(stats.comparisons == 3); // 1 in dim 1, then 2 exhausting dim 2
        CHECK(stats.resolved.empty());
        CHECK(log.empty());
    }
}

TEST_CASE("dispatch without a stats sink still selects correctly") {
    std::vector<std::vector<type_tag>> log;
    recording_probe probe{&log};
    for_id<fp_pair, ind_quad>(probe, 1, 3);
    REQUIRE(log.size() == 1);
    CHECK(log[0] == std::vector<type_tag>{type_tag{"f64"}, type_tag{"u64"}});
}

TEST_CASE("repeated dispatch is deterministic") {
    std::vector<std::vector<type_tag>> log;
    recording_probe probe{&log};
    dispatch_stats first, second;
    for_id<fp_pair, ind_quad>(first, probe, 1, 2);
    for_id<fp_pair, ind_quad>(second, probe, 1, 2);
    REQUIRE(log.size() == 2);
    CHECK(log[0] == log[1]);
    CHECK(first.comparisons == second.comparisons);
    CHECK(first.resolved == second.resolved);
}

TEST_CASE("every member of the product is reachable exactly once per id vector") {
    std::set<std::string> seen;
    std::size_t calls = 0;
    forid::testing::enumerate_valid<fp_pair, ind_quad>(
        [&](const forid::testing::dispatch_observation& obs) {
            REQUIRE(obs.invocations.size() == 1);
            seen.insert(forid::testing::flatten(obs.invocations[0]));
            ++calls;
        });
    CHECK(calls == fp_pair::size * ind_quad::size);
    CHECK(seen.size() == fp_pair::size * ind_quad::size);
}

TEST_CASE("instance_count multiplies sequence lengths") {
    CHECK(instance_count({6, 6, 6, 6, 6, 6}) == 46656);
    CHECK(instance_count({1, 1, 1}) == 1);
    CHECK(instance_count({2, 4}) == 8);
    CHECK_THROWS_AS(instance_count({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(instance_count({std::uint64_t{1} << 32, std::uint64_t{1} << 32, 2}),
                    std::overflow_error);
}

TEST_CASE("instance_count(2, 4) equals the enumerated product") {
    // enumerate the Cartesian product of the demo's two sequences
    std::size_t combinations = 0;
    for (std::size_t i = 0; i < fp_pair::size; ++i)
        for (std::size_t j = 0; j < ind_quad::size; ++j)
            ++combinations;
    CHECK(instance_count({fp_pair::size, ind_quad::size}) == combinations);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s2det/error.hpp"
#include "s2det/json_io.hpp"
#include "s2det/sign_table.hpp"

using namespace s2det;

TEST_CASE("width-1 table") {
    const auto table = build_sign_table(1);
    CHECK(table.size() == 1);
    CHECK(table.consistent());
    CHECK(table.connected());
    CHECK(table.orbit_count() == 1);
    CHECK(table.sign(twin_star_partition(1)) == 1);
}

TEST_CASE("width-2 table is the frozen twelve-entry table") {
    const auto table = build_sign_table(2);
    REQUIRE(table.size() == 12);
    CHECK(table.consistent());
    CHECK(table.connected());
    // Frozen from an independent breadth-first propagation (flip from seed
    // -1 at the twin-star partition); uniqueness forces these values.
    const std::vector<std::pair<std::vector<std::uint8_t>, int>> expected = {
        {{1, 1, 2, 2, 1, 2}, -1}, {{1, 1, 2, 2, 2, 1}, +1}, {{1, 2, 1, 1, 2, 2}, +1},
        {{1, 2, 1, 2, 2, 1}, -1}, {{1, 2, 2, 1, 2, 1}, -1}, {{1, 2, 2, 2, 1, 1}, +1},
        {{2, 1, 1, 1, 2, 2}, -1}, {{2, 1, 1, 2, 1, 2}, +1}, {{2, 1, 2, 1, 1, 2}, +1},
        {{2, 1, 2, 2, 1, 1}, -1}, {{2, 2, 1, 1, 1, 2}, -1}, {{2, 2, 1, 1, 2, 1}, +1},
    };
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::vector<std::uint8_t>(table.colors_at(i).begin(), table.colors_at(i).end()) ==
              expected[i].first);
        CHECK(table.sign_at(i) == expected[i].second);
    }
}

TEST_CASE("seed signs and the involution-example sign") {
    const auto table2 = build_sign_table(2);
    CHECK(epsilon(table2, twin_star_partition(2)) == -1);
    // One involution step away from the -1 seed.
    CHECK(epsilon(table2, EdgePartition(2, {2, 1, 2, 1, 1, 2})) == +1);

    const auto table3 = build_sign_table(3);
    CHECK(table3.size() == 66240);
    CHECK(table3.consistent());
    CHECK(table3.connected());
    CHECK(table3.orbit_count() == 1);
    CHECK(epsilon(table3, twin_star_partition(3)) == +1);
}

TEST_CASE("sign flips under every involution (width 2 exhaustive, width 3 sampled)") {
    const auto table2 = build_sign_table(2);
    for (std::size_t i = 0; i < table2.size(); ++i) {
        const auto p = table2.partition_at(i);
        for (int x = 1; x <= 4; ++x)
            for (int y = x + 1; y <= 4; ++y)
                for (int z = y + 1; z <= 4; ++z)
                    CHECK(table2.sign(involution(p, x, y, z)) == -table2.sign_at(i));
    }
    const auto table3 = build_sign_table(3);
    for (std::size_t i = 0; i < table3.size(); i += 1013) {
        const auto p = table3.partition_at(i);
        for (int x = 1; x <= 6; ++x)
            for (int y = x + 1; y <= 6; ++y)
                for (int z = y + 1; z <= 6; ++z)
                    CHECK(table3.sign(involution(p, x, y, z)) == -table3.sign_at(i));
    }
}

TEST_CASE("unknown partitions and width mismatches are domain errors") {
    const auto table = build_sign_table(2);
    // Class 2 = {(2,3),(2,4),(3,4)} is a triangle, so this is not in the family.
    CHECK_THROWS_AS(table.sign(EdgePartition(2, {1, 1, 1, 2, 2, 2})), DomainError);
    CHECK_THROWS_AS(table.sign(twin_star_partition(3)), DomainError);
}

TEST_CASE("construction is deterministic") {
    const auto a = build_sign_table(2);
    const auto b = build_sign_table(2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.sign_at(i) == b.sign_at(i));
        CHECK(std::vector<std::uint8_t>(a.colors_at(i).begin(), a.colors_at(i).end()) ==
              std::vector<std::uint8_t>(b.colors_at(i).begin(), b.colors_at(i).end()));
    }
}

TEST_CASE("sign table JSON round trip") {
    const auto table = build_sign_table(2);
    const auto j = sign_table_to_json(table);
    CHECK(j.at("d") == 2);
    CHECK(j.at("consistent") == true);
    CHECK(j.at("connected") == true);
    CHECK(j.at("entries").size() == 12);
    const auto back = sign_table_from_json(j);
    CHECK(back.size() == table.size());
    CHECK(back.consistent() == table.consistent());
    CHECK(back.connected() == table.connected());
    CHECK(back.orbit_count() == table.orbit_count());
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(back.sign_at(i) == table.sign_at(i));
    CHECK(back.sign(twin_star_partition(2)) == -1);
}

TEST_CASE("from_parts validates its input") {
    CHECK_THROWS_AS(SignTable::from_parts(1, {1}, {2}, true, true, 1), FormatError);   // bad sign
    CHECK_THROWS_AS(SignTable::from_parts(1, {1, 1}, {1}, true, true, 1), FormatError); // size
    // Unsorted / duplicate entries.
    CHECK_THROWS_AS(
        SignTable::from_parts(2, {1, 1, 2, 2, 2, 1, 1, 1, 2, 2, 1, 2}, {1, -1}, true, true, 1),
        FormatError);
    CHECK_THROWS_AS(
        SignTable::from_parts(2, {1, 1, 2, 2, 1, 2, 1, 1, 2, 2, 1, 2}, {1, 1}, true, true, 1),
        FormatError);
}

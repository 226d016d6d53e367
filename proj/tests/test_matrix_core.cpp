#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "s2det/error.hpp"
#include "s2det/json_io.hpp"
#include "s2det/s2_matrix.hpp"

#include <random>
#include <set>

using namespace s2det;

namespace {

S2Matrix from_ints(int d, const std::vector<std::vector<int>>& rows) {
    S2Matrix A(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < A.cols(); ++c) A.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return A;
}

} // namespace

TEST_CASE("unit matrix at width 2") {
    CHECK(s2_identity(2) == from_ints(2, {{1, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 1}}));
}

TEST_CASE("unit matrix at width 3 matches the displayed 3x15 matrix") {
    CHECK(s2_identity(3) == from_ints(3, {{1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                                          {0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0},
                                          {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1}}));
}

TEST_CASE("diagonal row: closed form, examples, unit-matrix agreement") {
    CHECK(diagonal_row(3, Edge{1, 2}) == 1);
    CHECK(diagonal_row(3, Edge{2, 5}) == 3);
    CHECK(diagonal_row(3, Edge{5, 6}) == 3);
    for (int d = 1; d <= 4; ++d) {
        const auto unit = s2_identity(d);
        for (const auto e : all_edges(d)) {
            const int k = diagonal_row(d, e);
            for (int r = 0; r < d; ++r)
                CHECK(unit.at(r, e) == ((r == k - 1) ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(diagonal_row(2, Edge{1, 5}), DomainError);
}

TEST_CASE("diagonal indicator set") {
    const auto di1 = diagonal_indicator(1);
    REQUIRE(di1.triples.size() == 1);
    CHECK(di1.triples[0] == std::array<int, 3>{1, 2, 1});

    const auto di3 = diagonal_indicator(3);
    const std::vector<std::array<int, 3>> expected = {
        {1, 2, 1}, {1, 3, 1}, {1, 4, 2}, {1, 5, 1}, {1, 6, 3}, {2, 3, 2}, {2, 4, 1}, {2, 5, 3},
        {2, 6, 1}, {3, 4, 2}, {3, 5, 2}, {3, 6, 3}, {4, 5, 3}, {4, 6, 2}, {5, 6, 3},
    };
    CHECK(di3.triples == expected);

    // The projection (i,j,k) -> (i,j) is a bijection onto the edge set.
    for (int d = 1; d <= 4; ++d) {
        std::set<std::pair<int, int>> projected;
        for (const auto& t : diagonal_indicator(d).triples) projected.insert({t[0], t[1]});
        CHECK(static_cast<int>(projected.size()) == edge_count(d));
    }
}

TEST_CASE("diagonal family of the unit matrix") {
    for (int d = 1; d <= 4; ++d) {
        const auto family = s2_diagonal(s2_identity(d));
        REQUIRE(static_cast<int>(family.size()) == edge_count(d));
        Rat product(1);
        for (const auto& v : family) {
            CHECK(v == 1);
            product *= v;
        }
        CHECK(product == 1);
        CHECK(s2_diagonal_values(s2_identity(d)) == std::vector<Rat>{Rat(1)});
    }
}

TEST_CASE("diagonal family of the worked example is positional") {
    const auto B = oracle::fixture_b();
    const auto family = s2_diagonal(B);
    const auto edges = all_edges(3);
    for (int c = 0; c < B.cols(); ++c)
        CHECK(family[static_cast<std::size_t>(c)] ==
              B.at(diagonal_row(3, edges[static_cast<std::size_t>(c)]) - 1, c));
    // Collapsed to a set: 0, 1, and the entries at positions (2,4,1),
    // (3,6,3), (5,6,3).
    const std::set<Rat> values(family.begin(), family.end());
    CHECK(values == std::set<Rat>{Rat(0), Rat(1), oracle::symbol("d"), oracle::symbol("l"),
                                  oracle::symbol("n")});
    const auto sorted = s2_diagonal_values(B);
    CHECK(sorted.size() == 5);
}

TEST_CASE("triangularity predicates on the worked examples") {
    const auto A = oracle::fixture_upper();
    CHECK(is_s2_upper(A));
    CHECK_FALSE(is_s2_lower(A));
    const auto B = oracle::fixture_not_triangular();
    CHECK_FALSE(is_s2_upper(B));
    CHECK_FALSE(is_s2_lower(B));
    for (int d = 1; d <= 4; ++d) {
        CHECK(is_s2_upper(s2_identity(d)));
        CHECK(is_s2_lower(s2_identity(d)));
    }
}

TEST_CASE("upper and lower together means support exactly on the diagonal row") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> value(-5, 5);
    const int d = 3;
    S2Matrix A(d);
    const auto edges = all_edges(d);
    for (int c = 0; c < A.cols(); ++c)
        A.at(diagonal_row(d, edges[static_cast<std::size_t>(c)]) - 1, c) = value(rng);
    CHECK(is_s2_upper(A));
    CHECK(is_s2_lower(A));
    A.at(0, edge_index(d, Edge{1, 4})) = 1; // above the diagonal row (which is 2)
    CHECK(is_s2_upper(A));
    CHECK_FALSE(is_s2_lower(A));
    A.at(2, edge_index(d, Edge{1, 2})) = 1; // below the diagonal row (which is 1)
    CHECK_FALSE(is_s2_upper(A));
}

TEST_CASE("partition <-> basis matrix bijection") {
    for (int d = 1; d <= 4; ++d)
        CHECK(basis_matrix_from_partition(twin_star_partition(d)) == s2_identity(d));
    for (const auto& p : enumerate_partitions(2)) {
        const auto A = basis_matrix_from_partition(p);
        CHECK(partition_from_basis_matrix(A) == p);
        // Diagonal family entries are 1 exactly where p colors like the
        // twin-star partition.
        const auto family = s2_diagonal(A);
        const auto stars = twin_star_partition(2);
        for (int c = 0; c < A.cols(); ++c)
            CHECK(family[static_cast<std::size_t>(c)] ==
                  ((p.color_at(c) == stars.color_at(c)) ? 1 : 0));
    }
    for (const auto& p : enumerate_partitions(3))
        CHECK(partition_from_basis_matrix(basis_matrix_from_partition(p)) == p);
}

TEST_CASE("non-basis matrices are rejected") {
    // Columns e_1 + e_2 (all-ones rows pattern): two nonzero entries.
    CHECK_THROWS_AS(partition_from_basis_matrix(
                        from_ints(2, {{1, 1, 1, 1, 1, 1}, {1, 0, 1, 1, 0, 1}})),
                    DomainError);
    // A scaled basis vector is not a standard basis vector.
    CHECK_THROWS_AS(partition_from_basis_matrix(
                        from_ints(2, {{2, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 1}})),
                    DomainError);
    // A zero column has no support.
    CHECK_THROWS_AS(partition_from_basis_matrix(
                        from_ints(2, {{0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 1}})),
                    DomainError);
}

TEST_CASE("matrix JSON: entries form, columns form, rational strings") {
    const auto B = oracle::fixture_b();
    const auto j = matrix_to_json(B);
    CHECK(j.at("d") == 3);
    CHECK(matrix_from_json(j) == B);

    // Column-keyed form.
    nlohmann::json columns = nlohmann::json::object();
    for (const auto e : all_edges(3)) {
        nlohmann::json column = nlohmann::json::array();
        for (int r = 0; r < 3; ++r) column.push_back(rat_to_string(B.at(r, e)));
        columns[edge_label(e)] = std::move(column);
    }
    CHECK(matrix_from_json(nlohmann::json{{"d", 3}, {"columns", columns}}) == B);

    // Rationals survive the round trip.
    S2Matrix Q(2);
    Q.at(0, 0) = rat_from_string("-3/7");
    Q.at(1, 5) = rat_from_string("22/6"); // canonicalizes to 11/3
    CHECK(rat_to_string(Q.at(1, 5)) == "11/3");
    CHECK(matrix_from_json(matrix_to_json(Q)) == Q);

    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"d", 2}}), FormatError);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"entries", nlohmann::json::array()}}),
                    FormatError);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json{{"d", 2}, {"entries", {{1, 2}, {3, 4}}}}),
        FormatError); // wrong row length
    CHECK_THROWS_AS(rat_from_string("1/0"), FormatError);
    CHECK_THROWS_AS(rat_from_string("x"), FormatError);
    CHECK_THROWS_AS(rat_from_string("1.5"), FormatError);
    CHECK(rat_from_string("-0/9") == 0);
}

TEST_CASE("apply computes A x") {
    const auto unit = s2_identity(2);
    std::vector<Rat> x(6);
    for (int c = 0; c < 6; ++c) x[static_cast<std::size_t>(c)] = c + 1;
    // Row 1 collects the class-1 columns (1,2),(1,3),(2,4); row 2 the rest.
    const auto y = apply(unit, x);
    CHECK(y == std::vector<Rat>{Rat(1 + 2 + 5), Rat(3 + 4 + 6)});
    CHECK_THROWS_AS(apply(unit, std::vector<Rat>(5)), DomainError);
}

// Test-side oracles and fixtures: independent routes (cofactor expansion,
// bitmask brute force, DFS connectivity) plus the worked example matrices
// with their symbols instantiated as fixed distinct rationals.
#pragma once

#include "s2det/partition.hpp"
#include "s2det/rational.hpp"
#include "s2det/s2_matrix.hpp"
#include "s2det/square_matrix.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using s2det::Edge;
using s2det::Rat;

// Determinant by recursive cofactor expansion along the first row.
inline Rat cofactor_determinant(const s2det::SquareMatrix& m) {
    const int n = m.order();
    if (n == 1) return m.at(0, 0);
    Rat det(0);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        s2det::SquareMatrix minor(n - 1);
        for (int r = 1; r < n; ++r)
            for (int cc = 0, mc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor.at(r - 1, mc++) = m.at(r, cc);
            }
        const Rat term = m.at(0, c) * cofactor_determinant(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

// DFS reachability: true when the edge set connects all 2d vertices.
inline bool spans(const std::vector<Edge>& edges, int vertex_count) {
    if (vertex_count == 1) return true;
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(vertex_count) + 1);
    for (const auto& e : edges) {
        adjacency[static_cast<std::size_t>(e.i)].push_back(e.j);
        adjacency[static_cast<std::size_t>(e.j)].push_back(e.i);
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const int w : adjacency[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertex_count;
}

// All 12 homogeneous cycle-free color vectors of K_4 by bitmask brute force
// (colors from bits, acyclicity by triangle scan: a 3-edge class on 4
// vertices is acyclic iff it is not one of the four triangles).
inline std::vector<std::vector<std::uint8_t>> brute_force_width2() {
    const auto edges = s2det::all_edges(2);
    std::vector<std::vector<std::uint8_t>> out;
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<std::uint8_t> colors(6);
        int ones = 0;
        for (int c = 0; c < 6; ++c) {
            const bool one = (mask >> c) & 1u;
            colors[static_cast<std::size_t>(c)] = one ? 1 : 2;
            ones += one ? 1 : 0;
        }
        if (ones != 3) continue;
        bool triangle = false;
        for (int x = 1; x <= 4 && !triangle; ++x)
            for (int y = x + 1; y <= 4 && !triangle; ++y)
                for (int z = y + 1; z <= 4 && !triangle; ++z)
                    for (int k = 1; k <= 2; ++k) {
                        const auto color_of = [&](Edge e) {
                            return colors[static_cast<std::size_t>(s2det::edge_index(2, e))];
                        };
                        if (color_of({x, y}) == k && color_of({x, z}) == k && color_of({y, z}) == k)
                            triangle = true;
                    }
        if (!triangle) out.push_back(std::move(colors));
    }
    return out;
}

// Fixed distinct values for the worked examples' symbols.
inline const std::map<std::string, Rat>& symbol_values() {
    static const std::map<std::string, Rat> values = {
        {"a", Rat(2)},  {"b", Rat(3)},  {"c", Rat(5)},  {"d", Rat(7)},  {"e", Rat(11)},
        {"f", Rat(13)}, {"g", Rat(17)}, {"h", Rat(19)}, {"k", Rat(23)}, {"l", Rat(29)},
        {"m", Rat(31)}, {"n", Rat(37)}, {"p", Rat(41)}, {"q", Rat(43)}, {"z", Rat(47)},
    };
    return values;
}

inline Rat symbol(const std::string& name) { return symbol_values().at(name); }

// Builds a width-d matrix from whitespace-separated rows of "0", "1", or
// symbol names.
inline s2det::S2Matrix matrix_from_rows(int d, const std::vector<std::string>& rows) {
    s2det::S2Matrix A(d);
    if (rows.size() != static_cast<std::size_t>(d)) throw std::logic_error("row count");
    for (int r = 0; r < d; ++r) {
        std::istringstream in(rows[static_cast<std::size_t>(r)]);
        std::string token;
        for (int c = 0; c < A.cols(); ++c) {
            if (!(in >> token)) throw std::logic_error("short row in fixture");
            if (token == "0")
                A.at(r, c) = 0;
            else if (token == "1")
                A.at(r, c) = 1;
            else
                A.at(r, c) = symbol(token);
        }
    }
    return A;
}

// The 3 x 15 example used for the diagonal and the leg submatrices
// (columns (1,2) .. (5,6) in dictionary order).
inline s2det::S2Matrix fixture_b() {
    return matrix_from_rows(3, {
                                   "1 1 0 1 b c d 0 1 0 0 0 0 0 m",
                                   "a 0 0 0 0 1 e 0 0 1 1 0 0 1 0",
                                   "0 0 1 0 1 0 f 1 0 0 0 l 1 0 n",
                               });
}

// The boxed-diagonal upper-triangular example.
inline s2det::S2Matrix fixture_upper() {
    return matrix_from_rows(3, {
                                   "a b c e 0 f 1 h 1 0 l 0 0 0 0",
                                   "0 0 0 0 0 g 0 0 0 k 1 m n 1 p",
                                   "0 0 0 0 0 0 0 1 0 0 0 1 1 0 1",
                               });
}

// fixture_upper with one extra entry z at column (1,3), row 3: neither
// upper nor lower.
inline s2det::S2Matrix fixture_not_triangular() {
    auto B = fixture_upper();
    B.at(2, s2det::edge_index(3, Edge{1, 3})) = symbol("z");
    return B;
}

// The left operand of the worked LIM product.
inline s2det::S2Matrix fixture_lim_left() {
    return matrix_from_rows(3, {
                                   "a b c e 0 f g 0 1 h 0 0 0 0 l",
                                   "a 0 m 0 0 1 q 0 e 1 1 0 k 1 0",
                                   "0 0 1 0 1 0 f 1 0 0 0 l 1 z n",
                               });
}

// The homogeneous cycle-free 4-partition of K_8 drawn with one tree per
// color (7 edges each).
inline s2det::EdgePartition figure_k8_partition() {
    const std::vector<std::vector<Edge>> classes = {
        {{1, 2}, {1, 3}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {2, 8}},
        {{2, 3}, {3, 4}, {3, 5}, {3, 7}, {1, 4}, {4, 6}, {4, 8}},
        {{5, 6}, {2, 5}, {4, 5}, {5, 7}, {1, 6}, {3, 6}, {6, 8}},
        {{7, 8}, {2, 7}, {4, 7}, {6, 7}, {1, 8}, {3, 8}, {5, 8}},
    };
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(s2det::edge_count(4)), 0);
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (const auto& e : classes[k])
            colors[static_cast<std::size_t>(s2det::edge_index(4, e))] =
                static_cast<std::uint8_t>(k + 1);
    return s2det::EdgePartition(4, std::move(colors));
}

} // namespace oracle

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace s2det {

// An edge (i, j) of the complete graph K_{2d}, always stored with
// 1 <= i < j <= 2d. At width d the edges double as column labels of the
// d x d(2d-1) matrices, ordered by the dictionary order:
// (1,2) < (1,3) < ... < (1,2d) < (2,3) < ... < (2d-1,2d).
struct Edge {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Number of edges of K_{2d}, i.e. d(2d-1) columns.
constexpr int edge_count(int d) { return d * (2 * d - 1); }

// 0-based dictionary-order column index of e at width d. Throws DomainError
// when e is not an edge of K_{2d}.
int edge_index(int d, Edge e);

// Inverse of edge_index.
Edge edge_at(int d, int index);

// All edges of K_{2d} in dictionary order.
std::vector<Edge> all_edges(int d);

// "(1,2)" style label used by the column-keyed JSON form.
std::string edge_label(Edge e);
Edge edge_from_label(const std::string& label, int d);

} // namespace s2det

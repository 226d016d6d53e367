#pragma once

#include "s2det/edge.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace s2det {

// Default cap on backtracking nodes (one unit per edge-color assignment
// explored). Width 3 needs ~455k nodes; width 4 runs into the billions and
// is stopped by this guard with a BudgetError.
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

// A total coloring of the edges of K_{2d} with colors 1..d, stored as the
// color vector in dictionary order. Class k is the subgraph with vertex set
// 1..2d and the edges of color k. Immutable after construction.
class EdgePartition {
public:
    EdgePartition(int d, std::vector<std::uint8_t> colors);

    int d() const { return d_; }
    const std::vector<std::uint8_t>& colors() const { return colors_; }

    // Color of one edge / of the column at a dictionary-order index.
    int color(Edge e) const;
    int color_at(int column) const { return colors_[static_cast<std::size_t>(column)]; }

    // Edge lists per color; result[k-1] is class k in dictionary order.
    std::vector<std::vector<Edge>> classes() const;

    // True when every class has exactly 2d-1 edges.
    bool homogeneous() const;

    // Lexicographic on (d, color vector); the canonical enumeration order.
    friend auto operator<=>(const EdgePartition&, const EdgePartition&) = default;

private:
    int d_ = 0;
    std::vector<std::uint8_t> colors_;
};

// True iff every color class is an acyclic edge set on vertices 1..2d.
// Together with homogeneity this makes every class a spanning tree.
bool is_cycle_free(const EdgePartition& p);

// The twin star with center edge (2b-1, 2b): d-1 left legs at vertex 2b-1,
// d-1 right legs at vertex 2b. `left` and `right` are ordered by leg number,
// i.e. by the natural order of the outer endpoint.
struct TwinStar {
    int d = 0;
    int b = 0;
    std::vector<Edge> left;
    Edge center;
    std::vector<Edge> right;
};

TwinStar twin_star(int d, int b);

enum class LegRole { Left, Center, Right };

struct LegLocation {
    int star = 0; // 1..d
    LegRole role = LegRole::Center;
    int leg = 0; // 1 for the center, 1..d-1 for legs
};

// Locates e inside the unique twin star containing it.
LegLocation leg_locate(int d, Edge e);

// The distinguished partition (TS_d(1,2), ..., TS_d(2d-1,2d)) whose matrix
// form is the multiplicative unit of the LIM algebra. Homogeneous and
// cycle-free for every d.
EdgePartition twin_star_partition(int d);

enum class EnumerateMode {
    All,                  // every coloring; permitted only for d <= 2
    HomogeneousCycleFree, // exactly the spanning-tree partitions
};

// Streams color vectors in strictly increasing lexicographic order.
// Backtracking over edges in dictionary order with per-color cardinality and
// acyclicity pruning; assignments are counted against `node_budget` and a
// BudgetError is thrown when it is exhausted.
void for_each_partition(int d, EnumerateMode mode, std::uint64_t node_budget,
                        const std::function<void(const std::vector<std::uint8_t>&)>& yield);

// Materialized form of for_each_partition. Deterministic; the output is
// duplicate-free, canonically ordered, and (in HomogeneousCycleFree mode)
// exactly the homogeneous cycle-free family.
std::vector<EdgePartition> enumerate_partitions(
    int d, EnumerateMode mode = EnumerateMode::HomogeneousCycleFree,
    std::uint64_t node_budget = kDefaultNodeBudget);

// The unique homogeneous cycle-free partition other than p that agrees with
// p outside the triangle (x, y, z). The search tries rearrangements of the
// triangle's color multiset (homogeneity forces the multiset); with
// `exhaustive_scan` it instead scans all d^3 recolorings and filters, as an
// independent route for verification. Throws DomainError if the number of
// survivors is not exactly one, which would signal an implementation bug.
EdgePartition involution(const EdgePartition& p, int x, int y, int z,
                         bool exhaustive_scan = false);

namespace detail {
// Lean involution on a raw color vector; preconditions unchecked. Used by
// the sign-table BFS where every input is already a validated table entry.
std::vector<std::uint8_t> involution_colors(int d, const std::vector<std::uint8_t>& colors, int x,
                                            int y, int z);
} // namespace detail

} // namespace s2det

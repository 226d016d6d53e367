#include "s2det/partition.hpp"

#include "s2det/error.hpp"

#include <algorithm>
#include <array>

namespace s2det {

namespace {

// Union-find over vertices 1..n without path compression, so a union can be
// undone by restoring one parent pointer (used by the enumeration).
struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) {
        for (int v = 0; v <= n; ++v) parent[static_cast<std::size_t>(v)] = v;
    }

    int find(int v) const {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    }

    // Returns the reparented root, or -1 if the union would close a cycle.
    int unite(int a, int b) {
        const int ra = find(a), rb = find(b);
        if (ra == rb) return -1;
        parent[static_cast<std::size_t>(ra)] = rb;
        return ra;
    }

    void undo(int reparented_root) { parent[static_cast<std::size_t>(reparented_root)] = reparented_root; }
};

bool class_is_acyclic(int d, const std::vector<std::uint8_t>& colors, int color) {
    UnionFind uf(2 * d);
    const auto edges = all_edges(d);
    for (std::size_t c = 0; c < edges.size(); ++c) {
        if (colors[c] != color) continue;
        if (uf.unite(edges[c].i, edges[c].j) < 0) return false;
    }
    return true;
}

} // namespace

EdgePartition::EdgePartition(int d, std::vector<std::uint8_t> colors)
    : d_(d), colors_(std::move(colors)) {
    if (d < 1) throw FormatError("partition width must be >= 1, got " + std::to_string(d));
    if (colors_.size() != static_cast<std::size_t>(edge_count(d)))
        throw FormatError("partition color vector must have " + std::to_string(edge_count(d)) +
                          " entries at width " + std::to_string(d) + ", got " +
                          std::to_string(colors_.size()));
    for (const auto c : colors_)
        if (c < 1 || c > d)
            throw FormatError("partition color " + std::to_string(int(c)) +
                              " out of range 1.." + std::to_string(d));
}

int EdgePartition::color(Edge e) const { return colors_[static_cast<std::size_t>(edge_index(d_, e))]; }

std::vector<std::vector<Edge>> EdgePartition::classes() const {
    std::vector<std::vector<Edge>> out(static_cast<std::size_t>(d_));
    const auto edges = all_edges(d_);
    for (std::size_t c = 0; c < edges.size(); ++c) out[colors_[c] - 1].push_back(edges[c]);
    return out;
}

bool EdgePartition::homogeneous() const {
    std::vector<int> count(static_cast<std::size_t>(d_) + 1, 0);
    for (const auto c : colors_) ++count[c];
    for (int k = 1; k <= d_; ++k)
        if (count[static_cast<std::size_t>(k)] != 2 * d_ - 1) return false;
    return true;
}

bool is_cycle_free(const EdgePartition& p) {
    for (int k = 1; k <= p.d(); ++k)
        if (!class_is_acyclic(p.d(), p.colors(), k)) return false;
    return true;
}

TwinStar twin_star(int d, int b) {
    if (d < 1) throw DomainError("width must be >= 1, got " + std::to_string(d));
    if (b < 1 || b > d)
        throw DomainError("star index " + std::to_string(b) + " out of range 1.." + std::to_string(d));
    TwinStar ts;
    ts.d = d;
    ts.b = b;
    ts.center = Edge{2 * b - 1, 2 * b};
    // Left legs attach to 2b-1: outer endpoints 2a (a < b) then 2c-1 (c > b);
    // both runs are ascending, and all evens precede all odds here, so the
    // list is already in leg-number order. Same for the right legs at 2b.
    for (int a = 1; a < b; ++a) ts.left.push_back(Edge{2 * a, 2 * b - 1});
    for (int c = b + 1; c <= d; ++c) ts.left.push_back(Edge{2 * b - 1, 2 * c - 1});
    for (int a = 1; a < b; ++a) ts.right.push_back(Edge{2 * a - 1, 2 * b});
    for (int c = b + 1; c <= d; ++c) ts.right.push_back(Edge{2 * b, 2 * c});
    return ts;
}

LegLocation leg_locate(int d, Edge e) {
    (void)edge_index(d, e); // validates
    // The star containing (i,j) is ceil(i/2) when i+j is even, ceil(j/2)
    // when odd: exactly the row of the nonzero entry in the unit matrix.
    const int b = ((e.i + e.j) % 2 == 0) ? (e.i + 1) / 2 : (e.j + 1) / 2;
    const int odd_center = 2 * b - 1, even_center = 2 * b;
    if (e.i == odd_center && e.j == even_center) return {b, LegRole::Center, 1};
    if (e.i == odd_center || e.j == odd_center) {
        const int outer = (e.i == odd_center) ? e.j : e.i;
        // Outer endpoints of left legs: 2, 4, ..., 2(b-1), then 2b+1, 2b+3, ...
        const int leg = (outer % 2 == 0) ? outer / 2 : b + (outer - (2 * b + 1)) / 2;
        return {b, LegRole::Left, leg};
    }
    const int outer = (e.i == even_center) ? e.j : e.i;
    // Outer endpoints of right legs: 1, 3, ..., 2b-3, then 2b+2, 2b+4, ...
    const int leg = (outer % 2 == 1) ? (outer + 1) / 2 : b + (outer - (2 * b + 2)) / 2;
    return {b, LegRole::Right, leg};
}

EdgePartition twin_star_partition(int d) {
    if (d < 1) throw DomainError("width must be >= 1, got " + std::to_string(d));
    std::vector<std::uint8_t> colors;
    colors.reserve(static_cast<std::size_t>(edge_count(d)));
    for (const auto e : all_edges(d))
        colors.push_back(static_cast<std::uint8_t>(leg_locate(d, e).star));
    return EdgePartition(d, std::move(colors));
}

void for_each_partition(int d, EnumerateMode mode, std::uint64_t node_budget,
                        const std::function<void(const std::vector<std::uint8_t>&)>& yield) {
    if (d < 1) throw DomainError("width must be >= 1, got " + std::to_string(d));
    const int m = edge_count(d);
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(m), 1);
    std::uint64_t nodes = 0;

    if (mode == EnumerateMode::All) {
        if (d > 2)
            throw DomainError("mode=all is limited to d <= 2 (d^(d(2d-1)) colorings), got d=" +
                              std::to_string(d));
        // Plain odometer in lexicographic order.
        const auto step = [&]() -> bool {
            for (int c = m - 1; c >= 0; --c) {
                if (colors[static_cast<std::size_t>(c)] < d) {
                    ++colors[static_cast<std::size_t>(c)];
                    std::fill(colors.begin() + c + 1, colors.end(), std::uint8_t{1});
                    return true;
                }
            }
            return false;
        };
        do {
            if (++nodes > node_budget) throw BudgetError(d, node_budget);
            yield(colors);
        } while (step());
        return;
    }

    const auto edges = all_edges(d);
    std::vector<UnionFind> uf(static_cast<std::size_t>(d), UnionFind(2 * d));
    std::vector<int> count(static_cast<std::size_t>(d), 0);
    const int tree_size = 2 * d - 1;

    // Colors are tried in ascending order at each edge, so leaves appear in
    // strictly increasing lexicographic order of the color vector.
    const std::function<void(int)> rec = [&](int c) {
        if (c == m) {
            yield(colors);
            return;
        }
        const Edge e = edges[static_cast<std::size_t>(c)];
        for (int k = 0; k < d; ++k) {
            if (count[static_cast<std::size_t>(k)] == tree_size) continue;
            const int reparented = uf[static_cast<std::size_t>(k)].unite(e.i, e.j);
            if (reparented < 0) continue;
            if (++nodes > node_budget) throw BudgetError(d, node_budget);
            ++count[static_cast<std::size_t>(k)];
            colors[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(k + 1);
            rec(c + 1);
            --count[static_cast<std::size_t>(k)];
            uf[static_cast<std::size_t>(k)].undo(reparented);
        }
    };
    rec(0);
}

std::vector<EdgePartition> enumerate_partitions(int d, EnumerateMode mode,
                                                std::uint64_t node_budget) {
    std::vector<EdgePartition> out;
    for_each_partition(d, mode, node_budget,
                       [&](const std::vector<std::uint8_t>& colors) { out.emplace_back(d, colors); });
    return out;
}

namespace detail {

std::vector<std::uint8_t> involution_colors(int d, const std::vector<std::uint8_t>& colors, int x,
                                            int y, int z) {
    const std::array<int, 3> cols = {edge_index(d, Edge{x, y}), edge_index(d, Edge{x, z}),
                                     edge_index(d, Edge{y, z})};
    std::array<std::uint8_t, 3> base = {colors[static_cast<std::size_t>(cols[0])],
                                        colors[static_cast<std::size_t>(cols[1])],
                                        colors[static_cast<std::size_t>(cols[2])]};

    std::array<std::uint8_t, 3> perm = base;
    std::sort(perm.begin(), perm.end());

    std::vector<std::uint8_t> candidate = colors;
    std::vector<std::uint8_t> survivor;
    int survivors = 0;
    do {
        if (perm == base) continue;
        for (int t = 0; t < 3; ++t)
            candidate[static_cast<std::size_t>(cols[static_cast<std::size_t>(t)])] =
                perm[static_cast<std::size_t>(t)];
        // Homogeneity is preserved by construction (same multiset); only the
        // touched classes can have gained a cycle.
        bool ok = true;
        for (int t = 0; t < 3 && ok; ++t) {
            const int k = perm[static_cast<std::size_t>(t)];
            if (t > 0 && k == perm[static_cast<std::size_t>(t - 1)]) continue;
            ok = class_is_acyclic(d, candidate, k);
        }
        if (ok) {
            ++survivors;
            survivor = candidate;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (survivors != 1)
        throw DomainError("triangle involution at (" + std::to_string(x) + "," + std::to_string(y) +
                          "," + std::to_string(z) + ") found " + std::to_string(survivors) +
                          " alternative recolorings instead of exactly one");
    return survivor;
}

} // namespace detail

EdgePartition involution(const EdgePartition& p, int x, int y, int z, bool exhaustive_scan) {
    const int d = p.d();
    if (!(1 <= x && x < y && y < z && z <= 2 * d))
        throw DomainError("triangle vertices must satisfy 1 <= x < y < z <= " + std::to_string(2 * d));
    if (!p.homogeneous()) throw DomainError("involution requires a homogeneous partition");
    if (!is_cycle_free(p)) throw DomainError("involution requires a cycle-free partition");

    if (!exhaustive_scan) return EdgePartition(d, detail::involution_colors(d, p.colors(), x, y, z));

    // Independent route: scan all d^3 recolorings of the triangle and filter
    // on homogeneity (which forces the original multiset) and acyclicity.
    const std::array<int, 3> cols = {edge_index(d, Edge{x, y}), edge_index(d, Edge{x, z}),
                                     edge_index(d, Edge{y, z})};
    std::vector<std::uint8_t> candidate = p.colors();
    std::vector<std::uint8_t> survivor;
    int survivors = 0;
    for (int c0 = 1; c0 <= d; ++c0)
        for (int c1 = 1; c1 <= d; ++c1)
            for (int c2 = 1; c2 <= d; ++c2) {
                candidate[static_cast<std::size_t>(cols[0])] = static_cast<std::uint8_t>(c0);
                candidate[static_cast<std::size_t>(cols[1])] = static_cast<std::uint8_t>(c1);
                candidate[static_cast<std::size_t>(cols[2])] = static_cast<std::uint8_t>(c2);
                if (candidate == p.colors()) continue;
                EdgePartition q(d, candidate);
                if (!q.homogeneous() || !is_cycle_free(q)) continue;
                ++survivors;
                survivor = candidate;
            }
    if (survivors != 1)
        throw DomainError("triangle involution at (" + std::to_string(x) + "," + std::to_string(y) +
                          "," + std::to_string(z) + ") found " + std::to_string(survivors) +
                          " alternative recolorings instead of exactly one");
    return EdgePartition(d, std::move(survivor));
}

} // namespace s2det

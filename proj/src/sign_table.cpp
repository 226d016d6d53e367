#include "s2det/sign_table.hpp"

#include "s2det/error.hpp"

#include <algorithm>
#include <cstring>
#include <deque>

namespace s2det {

namespace {

int seed_sign(int d) { return (d % 2 == 1) ? 1 : -1; } // (-1)^(d+1)

} // namespace

SignTable SignTable::build(int d, std::uint64_t node_budget) {
    SignTable table;
    table.d_ = d;
    table.columns_ = edge_count(d);

    for_each_partition(d, EnumerateMode::HomogeneousCycleFree, node_budget,
                       [&](const std::vector<std::uint8_t>& colors) {
                           table.colors_.insert(table.colors_.end(), colors.begin(), colors.end());
                       });
    const std::size_t count = table.colors_.size() / static_cast<std::size_t>(table.columns_);
    table.signs_.assign(count, 0);

    std::vector<int> triangle_x, triangle_y, triangle_z;
    for (int x = 1; x <= 2 * d; ++x)
        for (int y = x + 1; y <= 2 * d; ++y)
            for (int z = y + 1; z <= 2 * d; ++z) {
                triangle_x.push_back(x);
                triangle_y.push_back(y);
                triangle_z.push_back(z);
            }

    const auto seed_index = table.find(twin_star_partition(d).colors());
    if (!seed_index)
        throw DomainError("twin-star partition missing from enumeration at d=" + std::to_string(d));

    std::vector<std::uint8_t> scratch;
    const auto bfs_from = [&](std::size_t start, int start_sign) {
        table.signs_[start] = static_cast<std::int8_t>(start_sign);
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t p = queue.front();
            queue.pop_front();
            const int propagated = -table.signs_[p];
            scratch.assign(table.colors_at(p).begin(), table.colors_at(p).end());
            for (std::size_t t = 0; t < triangle_x.size(); ++t) {
                const auto image = detail::involution_colors(d, scratch, triangle_x[t],
                                                             triangle_y[t], triangle_z[t]);
                const auto q = table.find(image);
                if (!q)
                    throw DomainError("involution image escaped the enumerated family at d=" +
                                      std::to_string(d));
                if (table.signs_[*q] == 0) {
                    table.signs_[*q] = static_cast<std::int8_t>(propagated);
                    queue.push_back(*q);
                } else if (table.signs_[*q] != propagated) {
                    table.consistent_ = false;
                }
            }
        }
    };

    table.orbit_count_ = 1;
    bfs_from(*seed_index, seed_sign(d));
    for (std::size_t i = 0; i < count; ++i) {
        if (table.signs_[i] != 0) continue;
        ++table.orbit_count_;
        bfs_from(i, +1);
    }
    table.connected_ = (table.orbit_count_ == 1);
    return table;
}

SignTable SignTable::from_parts(int d, std::vector<std::uint8_t> flat_colors,
                                std::vector<std::int8_t> signs, bool consistent, bool connected,
                                int orbit_count) {
    if (d < 1) throw FormatError("sign table width must be >= 1");
    const std::size_t columns = static_cast<std::size_t>(edge_count(d));
    if (flat_colors.size() != signs.size() * columns)
        throw FormatError("sign table entry sizes do not match width " + std::to_string(d));
    for (const auto s : signs)
        if (s != 1 && s != -1) throw FormatError("sign table signs must be +1 or -1");
    for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
        const auto* a = flat_colors.data() + i * columns;
        if (std::lexicographical_compare(a + columns, a + 2 * columns, a, a + columns) ||
            std::equal(a, a + columns, a + columns))
            throw FormatError("sign table entries must be strictly increasing in canonical order");
    }
    SignTable table;
    table.d_ = d;
    table.columns_ = static_cast<int>(columns);
    table.colors_ = std::move(flat_colors);
    table.signs_ = std::move(signs);
    for (const auto c : table.colors_)
        if (c < 1 || c > d) throw FormatError("sign table color out of range 1.." + std::to_string(d));
    table.consistent_ = consistent;
    table.connected_ = connected;
    table.orbit_count_ = orbit_count;
    return table;
}

std::span<const std::uint8_t> SignTable::colors_at(std::size_t index) const {
    return {colors_.data() + index * static_cast<std::size_t>(columns_),
            static_cast<std::size_t>(columns_)};
}

EdgePartition SignTable::partition_at(std::size_t index) const {
    const auto span = colors_at(index);
    return EdgePartition(d_, std::vector<std::uint8_t>(span.begin(), span.end()));
}

std::optional<std::size_t> SignTable::find(std::span<const std::uint8_t> colors) const {
    if (colors.size() != static_cast<std::size_t>(columns_)) return std::nullopt;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const int cmp = std::memcmp(colors_.data() + mid * static_cast<std::size_t>(columns_),
                                    colors.data(), static_cast<std::size_t>(columns_));
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size() &&
        std::memcmp(colors_.data() + lo * static_cast<std::size_t>(columns_), colors.data(),
                    static_cast<std::size_t>(columns_)) == 0)
        return lo;
    return std::nullopt;
}

int SignTable::sign(const EdgePartition& p) const {
    if (p.d() != d_)
        throw DomainError("partition width " + std::to_string(p.d()) +
                          " does not match sign table width " + std::to_string(d_));
    const auto index = find(p.colors());
    if (!index)
        throw DomainError("partition is not in the sign table domain "
                          "(not homogeneous cycle-free, or outside the built family)");
    return signs_[*index];
}

SignTable build_sign_table(int d, std::uint64_t node_budget) {
    return SignTable::build(d, node_budget);
}

int epsilon(const SignTable& table, const EdgePartition& p) { return table.sign(p); }

} // namespace s2det

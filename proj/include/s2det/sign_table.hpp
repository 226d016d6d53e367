#pragma once

#include "s2det/partition.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace s2det {

// Signs for the homogeneous cycle-free family at one width, built by BFS
// over triangle involutions from the twin-star partition with seed sign
// (-1)^(d+1); every involution step negates the sign.
//
// `consistent` records that no propagation step contradicted an already
// assigned sign (no odd cycle in the reached involution graph), and
// `connected` that the seed orbit reached the whole family. Both are data,
// not errors: a false value at some width would be a genuine finding and
// must stay reportable. Unreached components, if any ever appear, are seeded
// +1 in canonical order and counted in orbit_count.
//
// Immutable after construction; safe to share across threads.
class SignTable {
public:
    static SignTable build(int d, std::uint64_t node_budget = kDefaultNodeBudget);

    // Reassembles a table from serialized parts. Entries must be canonically
    // ordered, duplicate-free color vectors with signs +1/-1.
    static SignTable from_parts(int d, std::vector<std::uint8_t> flat_colors,
                                std::vector<std::int8_t> signs, bool consistent, bool connected,
                                int orbit_count);

    int d() const { return d_; }
    std::size_t size() const { return signs_.size(); }
    bool consistent() const { return consistent_; }
    bool connected() const { return connected_; }
    int orbit_count() const { return orbit_count_; }

    // +1 or -1; DomainError when p is not in the table's domain.
    int sign(const EdgePartition& p) const;

    std::span<const std::uint8_t> colors_at(std::size_t index) const;
    int sign_at(std::size_t index) const { return signs_[index]; }
    EdgePartition partition_at(std::size_t index) const;
    std::optional<std::size_t> find(std::span<const std::uint8_t> colors) const;

private:
    SignTable() = default;

    int d_ = 0;
    int columns_ = 0;
    std::vector<std::uint8_t> colors_; // size() * columns_, canonical order
    std::vector<std::int8_t> signs_;
    bool consistent_ = true;
    bool connected_ = true;
    int orbit_count_ = 0;
};

SignTable build_sign_table(int d, std::uint64_t node_budget = kDefaultNodeBudget);

// Table lookup under the operation's own name.
int epsilon(const SignTable& table, const EdgePartition& p);

} // namespace s2det

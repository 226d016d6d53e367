#pragma once

#include "s2det/partition.hpp"
#include "s2det/rational.hpp"
#include "s2det/s2_matrix.hpp"
#include "s2det/sign_table.hpp"

namespace s2det {

struct DetResult {
    Rat value;
    std::size_t terms_evaluated = 0;
    // Copied from the sign table; when either is false the value rests on
    // the table's arbitrary seeding of unreached components and callers
    // should surface the caveat.
    bool table_consistent = true;
    bool table_connected = true;

    bool has_caveat() const { return !table_consistent || !table_connected; }
};

// The edge-indexed entry product of one partition: for every column, the
// entry in the row named by that column's color.
Rat monomial(const EdgePartition& p, const S2Matrix& A);

// The signed sum of monomials over the table's domain. Exact; linear in
// every column; zero whenever three columns forming a triangle are equal.
DetResult det_s2(const S2Matrix& A, const SignTable& table);

// Fast path for S2-triangular matrices: (-1)^(d+1) times the product of the
// S2-diagonal family. The constant is known for d <= 10; wider inputs and
// non-triangular matrices are a DomainError.
Rat det_s2_triangular(const S2Matrix& A);

} // namespace s2det

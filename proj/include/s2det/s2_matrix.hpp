#pragma once

#include "s2det/edge.hpp"
#include "s2det/partition.hpp"
#include "s2det/rational.hpp"

#include <array>
#include <vector>

namespace s2det {

// A d x d(2d-1) matrix of exact rationals. Columns are labelled by the edges
// of K_{2d} in dictionary order; column (i,j) is the vector v_{i,j} of the
// associated simple tensor. Row indices in this API are 0-based; the
// external JSON format and the documentation are 1-based.
// Immutable value type; safe to share once constructed.
class S2Matrix {
public:
    explicit S2Matrix(int d);
    S2Matrix(int d, std::vector<Rat> row_major);

    int d() const { return d_; }
    int rows() const { return d_; }
    int cols() const { return edge_count(d_); }

    const Rat& at(int row, int col) const { return entries_[idx(row, col)]; }
    Rat& at(int row, int col) { return entries_[idx(row, col)]; }
    const Rat& at(int row, Edge e) const { return at(row, edge_index(d_, e)); }
    Rat& at(int row, Edge e) { return at(row, edge_index(d_, e)); }

    std::vector<Rat> column(int col) const;
    void set_column(int col, const std::vector<Rat>& values);

    bool operator==(const S2Matrix&) const = default;

private:
    std::size_t idx(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols()) +
               static_cast<std::size_t>(col);
    }

    int d_ = 0;
    std::vector<Rat> entries_; // row-major
};

// Vector-space structure on d x d(2d-1) matrices.
S2Matrix operator+(const S2Matrix& a, const S2Matrix& b);
S2Matrix operator*(const Rat& scalar, const S2Matrix& a);

// Matrix form of the distinguished twin-star tensor: column (i,j) is the
// basis vector e_k with k = ceil(i/2) when i+j is even, ceil(j/2) when odd.
// The multiplicative unit of the LIM algebra.
S2Matrix s2_identity(int d);

// The 1-based row carrying the S2-diagonal of column e; agrees with the
// nonzero row of s2_identity(d) at that column.
int diagonal_row(int d, Edge e);

// The positions (i, j, k), 1-based, where s2_identity(d) is nonzero; one
// triple per column, in dictionary order.
struct DiagonalIndicator {
    int d = 0;
    std::vector<std::array<int, 3>> triples;
};

DiagonalIndicator diagonal_indicator(int d);

// The S2-diagonal as an indexed family: entry per column in dictionary
// order, value A[diagonal_row(col)][col]. A family rather than a set so the
// product over all d(2d-1) positions is computable; use
// s2_diagonal_values() for the collapsed set view.
std::vector<Rat> s2_diagonal(const S2Matrix& A);

// Sorted distinct values of the S2-diagonal (display parity with the set
// notation).
std::vector<Rat> s2_diagonal_values(const S2Matrix& A);

// Upper: every column is supported on rows 1..diagonal_row only.
// Lower: supported on rows diagonal_row..d only.
bool is_s2_upper(const S2Matrix& A);
bool is_s2_lower(const S2Matrix& A);

// The partition <-> basis-columns bijection: column (i,j) of the matrix is
// the basis vector picked by the color of (i,j).
S2Matrix basis_matrix_from_partition(const EdgePartition& p);

// Inverse direction; DomainError unless every column is a standard basis
// vector.
EdgePartition partition_from_basis_matrix(const S2Matrix& A);

// A applied to a coordinate vector indexed by columns in dictionary order.
std::vector<Rat> apply(const S2Matrix& A, const std::vector<Rat>& x);

} // namespace s2det

#pragma once

#include "s2det/rational.hpp"

#include <vector>

namespace s2det {

// Dense square matrix of exact rationals; the d x d building block of the
// leg algebra. 0-based indices.
class SquareMatrix {
public:
    explicit SquareMatrix(int order);
    SquareMatrix(int order, std::vector<Rat> row_major);
    static SquareMatrix identity(int order);

    int order() const { return order_; }
    const Rat& at(int row, int col) const { return entries_[idx(row, col)]; }
    Rat& at(int row, int col) { return entries_[idx(row, col)]; }

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t idx(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) +
               static_cast<std::size_t>(col);
    }

    int order_ = 0;
    std::vector<Rat> entries_;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

bool is_upper_triangular(const SquareMatrix& m);
bool is_lower_triangular(const SquareMatrix& m);

// Exact determinant by rational Gaussian elimination with row swaps.
Rat determinant(const SquareMatrix& m);

struct LuFactors {
    SquareMatrix lower; // unit lower triangular
    SquareMatrix upper; // nonsingular upper triangular
};

// Doolittle factorization without pivoting: requires every leading principal
// minor to be nonzero, and throws ZeroPivotError naming the first failing
// minor order otherwise.
LuFactors lu_decompose(const SquareMatrix& m);

} // namespace s2det

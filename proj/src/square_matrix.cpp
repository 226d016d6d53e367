#include "s2det/square_matrix.hpp"

#include "s2det/error.hpp"

#include <utility>

namespace s2det {

SquareMatrix::SquareMatrix(int order) : order_(order) {
    if (order < 1) throw FormatError("matrix order must be >= 1, got " + std::to_string(order));
    entries_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), Rat(0));
}

SquareMatrix::SquareMatrix(int order, std::vector<Rat> row_major)
    : order_(order), entries_(std::move(row_major)) {
    if (order < 1) throw FormatError("matrix order must be >= 1, got " + std::to_string(order));
    const std::size_t expected = static_cast<std::size_t>(order) * static_cast<std::size_t>(order);
    if (entries_.size() != expected)
        throw FormatError("square matrix of order " + std::to_string(order) + " needs " +
                          std::to_string(expected) + " entries, got " +
                          std::to_string(entries_.size()));
}

SquareMatrix SquareMatrix::identity(int order) {
    SquareMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = Rat(1);
    return m;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.order() != b.order())
        throw DomainError("order mismatch in matrix product: " + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()));
    const int n = a.order();
    SquareMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < n; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

bool is_upper_triangular(const SquareMatrix& m) {
    for (int i = 1; i < m.order(); ++i)
        for (int j = 0; j < i; ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

bool is_lower_triangular(const SquareMatrix& m) {
    for (int i = 0; i < m.order(); ++i)
        for (int j = i + 1; j < m.order(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

Rat determinant(const SquareMatrix& m) {
    const int n = m.order();
    SquareMatrix work = m;
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        det *= work.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (work.at(r, col) == 0) continue;
            const Rat factor = work.at(r, col) / work.at(col, col);
            for (int j = col; j < n; ++j) work.at(r, j) -= factor * work.at(col, j);
        }
    }
    return det;
}

LuFactors lu_decompose(const SquareMatrix& m) {
    const int n = m.order();
    SquareMatrix lower = SquareMatrix::identity(n);
    SquareMatrix upper(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rat sum = m.at(i, j);
            for (int k = 0; k < i; ++k) sum -= lower.at(i, k) * upper.at(k, j);
            upper.at(i, j) = sum;
        }
        // Pivot i is the ratio of consecutive leading principal minors; a
        // zero here means the minor of order i+1 vanishes.
        if (upper.at(i, i) == 0) throw ZeroPivotError("", i + 1);
        for (int r = i + 1; r < n; ++r) {
            Rat sum = m.at(r, i);
            for (int k = 0; k < i; ++k) sum -= lower.at(r, k) * upper.at(k, i);
            lower.at(r, i) = sum / upper.at(i, i);
        }
    }
    return {std::move(lower), std::move(upper)};
}

} // namespace s2det

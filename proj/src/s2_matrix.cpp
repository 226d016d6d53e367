#include "s2det/s2_matrix.hpp"

#include "s2det/error.hpp"

#include <algorithm>

namespace s2det {

S2Matrix::S2Matrix(int d) : d_(d) {
    if (d < 1) throw FormatError("matrix width must be >= 1, got " + std::to_string(d));
    entries_.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(edge_count(d)), Rat(0));
}

S2Matrix::S2Matrix(int d, std::vector<Rat> row_major) : d_(d), entries_(std::move(row_major)) {
    if (d < 1) throw FormatError("matrix width must be >= 1, got " + std::to_string(d));
    const std::size_t expected =
        static_cast<std::size_t>(d) * static_cast<std::size_t>(edge_count(d));
    if (entries_.size() != expected)
        throw FormatError("matrix at width " + std::to_string(d) + " needs " +
                          std::to_string(expected) + " entries, got " +
                          std::to_string(entries_.size()));
}

std::vector<Rat> S2Matrix::column(int col) const {
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(d_));
    for (int r = 0; r < d_; ++r) out.push_back(at(r, col));
    return out;
}

void S2Matrix::set_column(int col, const std::vector<Rat>& values) {
    if (values.size() != static_cast<std::size_t>(d_))
        throw FormatError("column needs " + std::to_string(d_) + " entries");
    for (int r = 0; r < d_; ++r) at(r, col) = values[static_cast<std::size_t>(r)];
}

S2Matrix operator+(const S2Matrix& a, const S2Matrix& b) {
    if (a.d() != b.d())
        throw DomainError("width mismatch in matrix sum: " + std::to_string(a.d()) + " vs " +
                          std::to_string(b.d()));
    S2Matrix out(a.d());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

S2Matrix operator*(const Rat& scalar, const S2Matrix& a) {
    S2Matrix out(a.d());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = scalar * a.at(r, c);
    return out;
}

S2Matrix s2_identity(int d) {
    S2Matrix unit(d);
    const auto edges = all_edges(d);
    for (int c = 0; c < unit.cols(); ++c)
        unit.at(diagonal_row(d, edges[static_cast<std::size_t>(c)]) - 1, c) = Rat(1);
    return unit;
}

int diagonal_row(int d, Edge e) {
    (void)edge_index(d, e); // validates
    return ((e.i + e.j) % 2 == 0) ? (e.i + 1) / 2 : (e.j + 1) / 2;
}

DiagonalIndicator diagonal_indicator(int d) {
    DiagonalIndicator di;
    di.d = d;
    for (const auto e : all_edges(d)) di.triples.push_back({e.i, e.j, diagonal_row(d, e)});
    return di;
}

std::vector<Rat> s2_diagonal(const S2Matrix& A) {
    std::vector<Rat> family;
    family.reserve(static_cast<std::size_t>(A.cols()));
    const auto edges = all_edges(A.d());
    for (int c = 0; c < A.cols(); ++c)
        family.push_back(A.at(diagonal_row(A.d(), edges[static_cast<std::size_t>(c)]) - 1, c));
    return family;
}

std::vector<Rat> s2_diagonal_values(const S2Matrix& A) {
    auto values = s2_diagonal(A);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

bool is_s2_upper(const S2Matrix& A) {
    const auto edges = all_edges(A.d());
    for (int c = 0; c < A.cols(); ++c) {
        const int k = diagonal_row(A.d(), edges[static_cast<std::size_t>(c)]);
        for (int r = k; r < A.d(); ++r)
            if (A.at(r, c) != 0) return false;
    }
    return true;
}

bool is_s2_lower(const S2Matrix& A) {
    const auto edges = all_edges(A.d());
    for (int c = 0; c < A.cols(); ++c) {
        const int k = diagonal_row(A.d(), edges[static_cast<std::size_t>(c)]);
        for (int r = 0; r < k - 1; ++r)
            if (A.at(r, c) != 0) return false;
    }
    return true;
}

S2Matrix basis_matrix_from_partition(const EdgePartition& p) {
    S2Matrix A(p.d());
    for (int c = 0; c < A.cols(); ++c) A.at(p.color_at(c) - 1, c) = Rat(1);
    return A;
}

EdgePartition partition_from_basis_matrix(const S2Matrix& A) {
    std::vector<std::uint8_t> colors(static_cast<std::size_t>(A.cols()));
    const auto edges = all_edges(A.d());
    for (int c = 0; c < A.cols(); ++c) {
        int support = -1;
        int nonzeros = 0;
        for (int r = 0; r < A.d(); ++r) {
            if (A.at(r, c) == 0) continue;
            ++nonzeros;
            support = r;
        }
        if (nonzeros != 1 || A.at(support, c) != 1)
            throw DomainError("column " + edge_label(edges[static_cast<std::size_t>(c)]) +
                              " is not a standard basis vector");
        colors[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(support + 1);
    }
    return EdgePartition(A.d(), std::move(colors));
}

std::vector<Rat> apply(const S2Matrix& A, const std::vector<Rat>& x) {
    if (x.size() != static_cast<std::size_t>(A.cols()))
        throw DomainError("vector length " + std::to_string(x.size()) + " does not match " +
                          std::to_string(A.cols()) + " columns");
    std::vector<Rat> out(static_cast<std::size_t>(A.d()), Rat(0));
    for (int r = 0; r < A.d(); ++r)
        for (int c = 0; c < A.cols(); ++c)
            out[static_cast<std::size_t>(r)] += A.at(r, c) * x[static_cast<std::size_t>(c)];
    return out;
}

} // namespace s2det

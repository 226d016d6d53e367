#include "s2det/leg_algebra.hpp"

#include "s2det/error.hpp"

#include <utility>

namespace s2det {

namespace {

// Column label of the leg with number n and the given role in star a.
Edge leg_edge(const TwinStar& star, LegRole role, int n) {
    switch (role) {
        case LegRole::Center: return star.center;
        case LegRole::Left: return star.left[static_cast<std::size_t>(n - 1)];
        case LegRole::Right: return star.right[static_cast<std::size_t>(n - 1)];
    }
    throw DomainError("bad leg role");
}

std::vector<TwinStar> all_stars(int d) {
    std::vector<TwinStar> stars;
    stars.reserve(static_cast<std::size_t>(d));
    for (int a = 1; a <= d; ++a) stars.push_back(twin_star(d, a));
    return stars;
}

void copy_column(const S2Matrix& from, Edge e, SquareMatrix& to, int block_col) {
    const int col = edge_index(from.d(), e);
    for (int r = 0; r < from.d(); ++r) to.at(r, block_col) = from.at(r, col);
}

} // namespace

LegDecomposition leg_submatrices(const S2Matrix& A) {
    const int d = A.d();
    const auto stars = all_stars(d);
    LegDecomposition dec;
    dec.d = d;
    dec.center = SquareMatrix(d);
    dec.left.assign(static_cast<std::size_t>(d - 1), SquareMatrix(d));
    dec.right.assign(static_cast<std::size_t>(d - 1), SquareMatrix(d));
    for (int a = 1; a <= d; ++a) {
        const auto& star = stars[static_cast<std::size_t>(a - 1)];
        copy_column(A, star.center, dec.center, a - 1);
        for (int n = 1; n <= d - 1; ++n) {
            copy_column(A, leg_edge(star, LegRole::Left, n), dec.left[static_cast<std::size_t>(n - 1)],
                        a - 1);
            copy_column(A, leg_edge(star, LegRole::Right, n),
                        dec.right[static_cast<std::size_t>(n - 1)], a - 1);
        }
    }
    return dec;
}

S2Matrix assemble(const LegDecomposition& dec) {
    const int d = dec.d;
    if (d < 1 || dec.center.order() != d ||
        dec.left.size() != static_cast<std::size_t>(d - 1) ||
        dec.right.size() != static_cast<std::size_t>(d - 1))
        throw FormatError("malformed leg decomposition");
    for (const auto& blocks : {dec.left, dec.right})
        for (const auto& block : blocks)
            if (block.order() != d) throw FormatError("leg submatrix order mismatch");

    S2Matrix A(d);
    const auto stars = all_stars(d);
    for (int a = 1; a <= d; ++a) {
        const auto& star = stars[static_cast<std::size_t>(a - 1)];
        for (int r = 0; r < d; ++r) A.at(r, star.center) = dec.center.at(r, a - 1);
        for (int n = 1; n <= d - 1; ++n) {
            const Edge le = leg_edge(star, LegRole::Left, n);
            const Edge re = leg_edge(star, LegRole::Right, n);
            for (int r = 0; r < d; ++r) {
                A.at(r, le) = dec.left[static_cast<std::size_t>(n - 1)].at(r, a - 1);
                A.at(r, re) = dec.right[static_cast<std::size_t>(n - 1)].at(r, a - 1);
            }
        }
    }
    return A;
}

S2Matrix lim_multiply(const S2Matrix& A, const S2Matrix& B) {
    if (A.d() != B.d())
        throw DomainError("width mismatch in LIM product: " + std::to_string(A.d()) + " vs " +
                          std::to_string(B.d()));
    const auto da = leg_submatrices(A);
    const auto db = leg_submatrices(B);
    LegDecomposition prod;
    prod.d = A.d();
    prod.center = da.center * db.center;
    for (std::size_t n = 0; n < da.left.size(); ++n) {
        prod.left.push_back(da.left[n] * db.left[n]);
        prod.right.push_back(da.right[n] * db.right[n]);
    }
    return assemble(prod);
}

S2LuFactors s2_lu(const S2Matrix& A) {
    const auto dec = leg_submatrices(A);
    LegDecomposition lower_dec, upper_dec;
    lower_dec.d = upper_dec.d = dec.d;

    const auto factor = [](const SquareMatrix& block, const std::string& name) {
        try {
            return lu_decompose(block);
        } catch (const ZeroPivotError& e) {
            throw ZeroPivotError(name, e.order());
        }
    };

    auto center = factor(dec.center, "C");
    lower_dec.center = std::move(center.lower);
    upper_dec.center = std::move(center.upper);
    for (std::size_t n = 0; n < dec.left.size(); ++n) {
        auto left = factor(dec.left[n], "L[" + std::to_string(n + 1) + "]");
        auto right = factor(dec.right[n], "R[" + std::to_string(n + 1) + "]");
        lower_dec.left.push_back(std::move(left.lower));
        lower_dec.right.push_back(std::move(right.lower));
        upper_dec.left.push_back(std::move(left.upper));
        upper_dec.right.push_back(std::move(right.upper));
    }
    return {assemble(lower_dec), assemble(upper_dec)};
}

std::vector<CenterExpression> parametric_back_substitution(const S2Matrix& A,
                                                           const std::vector<Rat>& rhs) {
    const int d = A.d();
    const int m = A.cols();
    if (rhs.size() != static_cast<std::size_t>(d))
        throw DomainError("right-hand side needs " + std::to_string(d) + " entries, got " +
                          std::to_string(rhs.size()));
    if (!is_s2_upper(A)) throw DomainError("back substitution requires an S2-upper triangular matrix");

    std::vector<int> center_col(static_cast<std::size_t>(d) + 1);
    for (int a = 1; a <= d; ++a) {
        const Edge center{2 * a - 1, 2 * a};
        center_col[static_cast<std::size_t>(a)] = edge_index(d, center);
        if (A.at(a - 1, center_col[static_cast<std::size_t>(a)]) == 0)
            throw DomainError("zero S2-diagonal entry at center column " + edge_label(center));
    }

    // Star of each column; a column is a center exactly when its edge is
    // (2k-1, 2k) for its star k.
    const auto edges = all_edges(d);
    std::vector<int> center_of(static_cast<std::size_t>(m), 0);
    for (int c = 0; c < m; ++c) {
        const Edge e = edges[static_cast<std::size_t>(c)];
        const int k = diagonal_row(d, e);
        if (e.i == 2 * k - 1 && e.j == 2 * k) center_of[static_cast<std::size_t>(c)] = k;
    }

    std::vector<CenterExpression> expressions(static_cast<std::size_t>(d));
    for (int a = d; a >= 1; --a) {
        CenterExpression expr;
        expr.center = Edge{2 * a - 1, 2 * a};
        expr.constant = rhs[static_cast<std::size_t>(a - 1)];
        expr.coefficients.assign(static_cast<std::size_t>(m), Rat(0));
        const int row = a - 1;
        const int pivot_col = center_col[static_cast<std::size_t>(a)];
        for (int c = 0; c < m; ++c) {
            if (c == pivot_col) continue;
            const Rat& coef = A.at(row, c);
            if (coef == 0) continue;
            const int k = center_of[static_cast<std::size_t>(c)];
            if (k > 0) {
                // A later center (k > a for an S2-upper matrix): substitute
                // its already-solved expression.
                const auto& sub = expressions[static_cast<std::size_t>(k - 1)];
                expr.constant -= coef * sub.constant;
                for (int c2 = 0; c2 < m; ++c2)
                    if (sub.coefficients[static_cast<std::size_t>(c2)] != 0)
                        expr.coefficients[static_cast<std::size_t>(c2)] -=
                            coef * sub.coefficients[static_cast<std::size_t>(c2)];
            } else {
                expr.coefficients[static_cast<std::size_t>(c)] -= coef;
            }
        }
        const Rat& pivot = A.at(row, pivot_col);
        expr.constant /= pivot;
        for (auto& coef : expr.coefficients)
            if (coef != 0) coef /= pivot;
        expressions[static_cast<std::size_t>(a - 1)] = std::move(expr);
    }
    return expressions;
}

std::vector<Rat> assemble_solution(int d, const std::vector<CenterExpression>& expressions,
                                   const std::vector<Rat>& free_values) {
    const int m = edge_count(d);
    if (free_values.size() != static_cast<std::size_t>(m))
        throw DomainError("free-variable vector needs " + std::to_string(m) + " entries");
    std::vector<Rat> x = free_values;
    for (const auto& expr : expressions) {
        Rat value = expr.constant;
        for (int c = 0; c < m; ++c)
            if (expr.coefficients[static_cast<std::size_t>(c)] != 0)
                value += expr.coefficients[static_cast<std::size_t>(c)] *
                         free_values[static_cast<std::size_t>(c)];
        x[static_cast<std::size_t>(edge_index(d, expr.center))] = value;
    }
    return x;
}

} // namespace s2det

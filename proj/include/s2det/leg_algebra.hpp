#pragma once

#include "s2det/s2_matrix.hpp"
#include "s2det/square_matrix.hpp"

#include <vector>

namespace s2det {

// The 2d-1 leg submatrices of a width-d matrix: `center` collects the
// center columns (2a-1,2a) for a = 1..d, and left[n-1] / right[n-1] collect,
// per star a, the column at its left / right leg with leg number n. A matrix
// is S2-upper (lower) triangular exactly when every block here is upper
// (lower) triangular.
struct LegDecomposition {
    int d = 0;
    SquareMatrix center{1};
    std::vector<SquareMatrix> left;  // left[n-1], n = 1..d-1
    std::vector<SquareMatrix> right; // right[n-1], n = 1..d-1
};

LegDecomposition leg_submatrices(const S2Matrix& A);

// Inverse of leg_submatrices: places block column a back at the star-a edge
// with the block's role and leg number.
S2Matrix assemble(const LegDecomposition& dec);

// Leg Identifying Multiplication: blockwise ordinary matrix products on
// matching leg submatrices, reassembled. The unit is s2_identity(d).
S2Matrix lim_multiply(const S2Matrix& A, const S2Matrix& B);

struct S2LuFactors {
    S2Matrix lower; // S2-lower triangular, S2-diagonal all ones
    S2Matrix upper; // S2-upper triangular
};

// Factorizes A = lower (.) upper by running the classic no-pivot LU on each
// leg submatrix. Requires every block to have nonzero leading principal
// minors; ZeroPivotError names the offending block ("C", "L[n]", "R[n]")
// and minor order.
S2LuFactors s2_lu(const S2Matrix& A);

// One solved center variable of the parametric system A x = rhs for an
// S2-upper A: x^{center} = constant + sum coefficients[col] * x^{edge(col)}
// where only non-center columns carry nonzero coefficients.
struct CenterExpression {
    Edge center;
    Rat constant;
    std::vector<Rat> coefficients; // per column, dictionary order
};

// Solves rows d down to 1, eliminating each center variable in turn and
// substituting previously solved centers, so every returned expression is
// affine in the non-center free variables alone. Requires is_s2_upper(A)
// and a nonzero S2-diagonal entry at every center column (those are the
// entries divided by); the error names the offending center edge.
// The result, with any assignment of free variables, satisfies A x = rhs
// identically.
std::vector<CenterExpression> parametric_back_substitution(const S2Matrix& A,
                                                           const std::vector<Rat>& rhs);

// Builds the full dictionary-order solution vector from an assignment of
// the free (non-center) coordinates; entries of `free_values` at center
// columns are ignored and replaced by the solved expressions.
std::vector<Rat> assemble_solution(int d, const std::vector<CenterExpression>& expressions,
                                   const std::vector<Rat>& free_values);

} // namespace s2det

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace s2det {

// Error split mirrors the CLI exit-code contract: DomainError -> exit 1,
// FormatError (bad input representation, I/O) -> exit 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Partition enumeration ran past its node budget. The budget is the guard
// against widths whose partition family is too large to walk (d >= 4).
class BudgetError : public DomainError {
public:
    BudgetError(int d, std::uint64_t budget)
        : DomainError("enumeration node budget exceeded at width d=" + std::to_string(d) +
                      " (budget " + std::to_string(budget) +
                      "; set S2DET_NODE_BUDGET to raise)"),
          budget_(budget) {}

    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

// A leading principal minor that must be nonzero vanished during an
// LU factorization. `block` names the leg submatrix ("C", "L[1]", "R[2]", ...)
// when raised by s2_lu; it is empty when raised on a plain square matrix.
class ZeroPivotError : public DomainError {
public:
    ZeroPivotError(std::string block, int order)
        : DomainError(block.empty()
                          ? "zero leading principal minor of order " + std::to_string(order)
                          : "zero leading principal minor of order " + std::to_string(order) +
                                " in leg submatrix " + block),
          block_(std::move(block)),
          order_(order) {}

    const std::string& block() const { return block_; }
    int order() const { return order_; }

private:
    std::string block_;
    int order_;
};

} // namespace s2det

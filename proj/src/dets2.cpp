#include "s2det/dets2.hpp"

#include "s2det/error.hpp"

#include <cstdint>
#include <limits>

namespace s2det {

Rat monomial(const EdgePartition& p, const S2Matrix& A) {
    if (p.d() != A.d())
        throw DomainError("partition width " + std::to_string(p.d()) +
                          " does not match matrix width " + std::to_string(A.d()));
    Rat product(1);
    for (int c = 0; c < A.cols(); ++c) {
        const Rat& factor = A.at(p.color_at(c) - 1, c);
        if (factor == 0) return Rat(0);
        product *= factor;
    }
    return product;
}

DetResult det_s2(const S2Matrix& A, const SignTable& table) {
    if (A.d() != table.d())
        throw DomainError("matrix width " + std::to_string(A.d()) +
                          " does not match sign table width " + std::to_string(table.d()));
    const int d = A.d();
    const std::size_t m = static_cast<std::size_t>(A.cols());

    // Clear denominators per column: the sum is linear in every column, so
    // scaling column c by the lcm of its denominators scales the result by
    // the product of the scales. Integer arithmetic from here on.
    std::vector<mpz_class> scaled(static_cast<std::size_t>(d) * m);
    mpz_class scale(1);
    mpz_class column_lcm, tmp;
    for (std::size_t c = 0; c < m; ++c) {
        column_lcm = 1;
        for (int r = 0; r < d; ++r)
            mpz_lcm(column_lcm.get_mpz_t(), column_lcm.get_mpz_t(),
                    A.at(r, static_cast<int>(c)).get_den().get_mpz_t());
        for (int r = 0; r < d; ++r) {
            const Rat& entry = A.at(r, static_cast<int>(c));
            mpz_divexact(tmp.get_mpz_t(), column_lcm.get_mpz_t(), entry.get_den().get_mpz_t());
            scaled[static_cast<std::size_t>(r) * m + c] = entry.get_num() * tmp;
        }
        scale *= column_lcm;
    }

    // Walk the table in canonical order keeping a stack of column-prefix
    // partial products; consecutive color vectors share long prefixes, and a
    // zero factor at column z kills every later vector sharing columns 0..z.
    mpz_class accumulator(0);
    std::vector<mpz_class> partial(m + 1);
    partial[0] = 1;
    std::span<const std::uint8_t> previous{};
    std::size_t zero_col = std::numeric_limits<std::size_t>::max();
    bool have_zero = false;

    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const auto u = table.colors_at(idx);
        std::size_t first = 0;
        if (!previous.empty())
            while (first < m && u[first] == previous[first]) ++first;
        previous = u;
        if (have_zero && first > zero_col) continue;

        have_zero = false;
        std::size_t c = first;
        for (; c < m; ++c) {
            partial[c + 1] = partial[c] * scaled[static_cast<std::size_t>(u[c] - 1) * m + c];
            if (partial[c + 1] == 0) {
                have_zero = true;
                zero_col = c;
                break;
            }
        }
        if (have_zero) continue;
        if (table.sign_at(idx) > 0)
            accumulator += partial[m];
        else
            accumulator -= partial[m];
    }

    DetResult result;
    result.value = Rat(accumulator, scale);
    result.value.canonicalize();
    result.terms_evaluated = table.size();
    result.table_consistent = table.consistent();
    result.table_connected = table.connected();
    return result;
}

Rat det_s2_triangular(const S2Matrix& A) {
    if (!is_s2_upper(A) && !is_s2_lower(A))
        throw DomainError("matrix is not S2-triangular; the product rule does not apply");
    if (A.d() > 10)
        throw DomainError("the unit determinant constant is only established for d <= 10, got d=" +
                          std::to_string(A.d()));
    Rat product((A.d() % 2 == 1) ? 1 : -1); // (-1)^(d+1) at width d
    for (const auto& entry : s2_diagonal(A)) {
        if (entry == 0) return Rat(0);
        product *= entry;
    }
    return product;
}

} // namespace s2det

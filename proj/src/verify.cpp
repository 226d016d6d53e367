#include "s2det/verify.hpp"

#include "s2det/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace s2det::verify {

namespace {

// Acyclicity by component counting over an adjacency DFS; the enumeration
// itself uses incremental union-find, so this is a separate route.
bool acyclic_dfs(const std::vector<Edge>& edges, int vertex_count) {
    std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(vertex_count) + 1);
    for (const auto& e : edges) {
        adjacency[static_cast<std::size_t>(e.i)].push_back(e.j);
        adjacency[static_cast<std::size_t>(e.j)].push_back(e.i);
    }
    std::vector<char> seen(static_cast<std::size_t>(vertex_count) + 1, 0);
    int components = 0;
    std::vector<int> stack;
    for (int v = 1; v <= vertex_count; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        ++components;
        stack.push_back(v);
        seen[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const int w : adjacency[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    // A graph is a forest exactly when |E| = |V| - #components.
    return static_cast<int>(edges.size()) == vertex_count - components;
}

bool classes_all_acyclic(int d, const std::vector<int>& coloring) {
    const auto edges = all_edges(d);
    for (int k = 1; k <= d; ++k) {
        std::vector<Edge> cls;
        for (std::size_t c = 0; c < edges.size(); ++c)
            if (coloring[c] == k) cls.push_back(edges[c]);
        if (!acyclic_dfs(cls, 2 * d)) return false;
    }
    return true;
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, false, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, false, std::move(detail)};
}

CheckResult skip(std::string name, std::string detail) {
    return {std::move(name), false, true, std::move(detail)};
}

int unit_sign(int d) { return (d % 2 == 1) ? 1 : -1; } // (-1)^(d+1)

std::string rat_str(const Rat& r) { return rat_to_string(r); }

} // namespace

std::uint64_t oracle_count_all_colorings(int d) {
    if (d > 2) throw DomainError("full color-vector scan is limited to d <= 2");
    const int m = edge_count(d);
    std::vector<int> coloring(static_cast<std::size_t>(m), 1);
    std::uint64_t count = 0;
    while (true) {
        std::vector<int> class_sizes(static_cast<std::size_t>(d) + 1, 0);
        for (const int c : coloring) ++class_sizes[static_cast<std::size_t>(c)];
        bool homogeneous = true;
        for (int k = 1; k <= d; ++k)
            if (class_sizes[static_cast<std::size_t>(k)] != 2 * d - 1) homogeneous = false;
        if (homogeneous && classes_all_acyclic(d, coloring)) ++count;

        int pos = m - 1;
        while (pos >= 0 && coloring[static_cast<std::size_t>(pos)] == d) {
            coloring[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++coloring[static_cast<std::size_t>(pos)];
    }
    return count;
}

std::uint64_t oracle_count_multinomial(int d) {
    const int m = edge_count(d);
    const int tree_size = 2 * d - 1;
    const auto edges = all_edges(d);
    std::vector<int> coloring(static_cast<std::size_t>(m), 0);

    // Choose the class-k edge set as a combination of the still-uncolored
    // columns, check it is a forest, recurse for class k+1. The chosen and
    // available index lists are per level; deeper levels get their own.
    std::uint64_t count = 0;
    const std::function<void(int)> assign_class = [&](int k) {
        if (k > d) {
            ++count;
            return;
        }
        std::vector<int> avail;
        for (int c = 0; c < m; ++c)
            if (coloring[static_cast<std::size_t>(c)] == 0) avail.push_back(c);
        std::vector<int> chosen;
        const std::function<void(std::size_t)> combos = [&](std::size_t from) {
            if (static_cast<int>(chosen.size()) == tree_size) {
                std::vector<Edge> cls;
                for (const int c : chosen) cls.push_back(edges[static_cast<std::size_t>(c)]);
                if (!acyclic_dfs(cls, 2 * d)) return;
                for (const int c : chosen) coloring[static_cast<std::size_t>(c)] = k;
                assign_class(k + 1);
                for (const int c : chosen) coloring[static_cast<std::size_t>(c)] = 0;
                return;
            }
            const std::size_t needed = static_cast<std::size_t>(tree_size) - chosen.size();
            for (std::size_t i = from; i + needed <= avail.size(); ++i) {
                chosen.push_back(avail[i]);
                combos(i + 1);
                chosen.pop_back();
            }
        };
        combos(0);
    };
    assign_class(1);
    return count;
}

Rat random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 3);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Rat random_nonzero_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    Rat r((coin(rng) ? 1 : -1) * num(rng), den(rng));
    r.canonicalize();
    return r;
}

S2Matrix random_matrix(int d, std::mt19937_64& rng) {
    S2Matrix A(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < A.cols(); ++c) A.at(r, c) = random_rational(rng);
    return A;
}

S2Matrix random_s2_triangular(int d, bool upper, std::mt19937_64& rng) {
    S2Matrix A(d);
    const auto edges = all_edges(d);
    for (int c = 0; c < A.cols(); ++c) {
        const int k = diagonal_row(d, edges[static_cast<std::size_t>(c)]);
        const int lo = upper ? 0 : k - 1;
        const int hi = upper ? k : d;
        for (int r = lo; r < hi; ++r) A.at(r, c) = random_rational(rng);
    }
    return A;
}

S2Matrix random_s2_upper_nonzero_diagonal(int d, std::mt19937_64& rng) {
    S2Matrix A = random_s2_triangular(d, true, rng);
    const auto edges = all_edges(d);
    for (int c = 0; c < A.cols(); ++c)
        A.at(diagonal_row(d, edges[static_cast<std::size_t>(c)]) - 1, c) =
            random_nonzero_rational(rng);
    return A;
}

CheckResult check_enumeration_count(int d, std::uint64_t node_budget, bool best_effort) {
    const std::string name = "enumeration_count_vs_oracle";
    std::uint64_t enumerated = 0;
    try {
        for_each_partition(d, EnumerateMode::HomogeneousCycleFree, node_budget,
                           [&](const std::vector<std::uint8_t>&) { ++enumerated; });
    } catch (const BudgetError& e) {
        if (best_effort) return skip(name, std::string("enumeration skipped: ") + e.what());
        throw;
    }
    std::ostringstream detail;
    detail << "enumerated " << enumerated;
    bool ok = true;
    if (d <= 2) {
        const auto scan = oracle_count_all_colorings(d);
        detail << ", full-scan oracle " << scan;
        ok = ok && scan == enumerated;
    }
    if (d <= 3) {
        const auto multinomial = oracle_count_multinomial(d);
        detail << ", multinomial oracle " << multinomial;
        ok = ok && multinomial == enumerated;
    }
    // Regression constants, frozen after the oracles first agreed.
    if (d == 2) ok = ok && enumerated == 12;
    if (d == 3) ok = ok && enumerated == 66240;
    return ok ? pass(name, detail.str()) : fail(name, detail.str());
}

CheckResult check_enumeration_well_formed(int d, std::uint64_t node_budget) {
    const std::string name = "enumeration_canonical_and_valid";
    const auto partitions = enumerate_partitions(d, EnumerateMode::HomogeneousCycleFree, node_budget);
    const auto seed_partition = twin_star_partition(d);
    bool contains_seed = false;
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (i > 0 && !(partitions[i - 1] < partitions[i]))
            return fail(name, "output is not strictly increasing at index " + std::to_string(i));
        if (!partitions[i].homogeneous() || !is_cycle_free(partitions[i]))
            return fail(name, "invalid partition at index " + std::to_string(i));
        if (partitions[i] == seed_partition) contains_seed = true;
    }
    if (!contains_seed) return fail(name, "twin-star partition missing");
    return pass(name, std::to_string(partitions.size()) + " partitions, sorted, valid, seed present");
}

CheckResult check_sign_table_facts(const SignTable& table) {
    const std::string name = "sign_table_facts";
    const int d = table.d();
    std::ostringstream detail;
    detail << "consistent=" << (table.consistent() ? "true" : "false")
           << " connected=" << (table.connected() ? "true" : "false")
           << " orbits=" << table.orbit_count() << " size=" << table.size()
           << " seed_sign=" << table.sign(twin_star_partition(d));
    const bool ok = table.consistent() && table.connected() &&
                    table.sign(twin_star_partition(d)) == unit_sign(d);
    return ok ? pass(name, detail.str()) : fail(name, detail.str());
}

CheckResult check_involution_sign_flip(const SignTable& table) {
    const std::string name = "involution_sign_flip_exhaustive";
    const int d = table.d();
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto p = table.partition_at(i);
        for (int x = 1; x <= 2 * d; ++x)
            for (int y = x + 1; y <= 2 * d; ++y)
                for (int z = y + 1; z <= 2 * d; ++z) {
                    const auto q = involution(p, x, y, z);
                    if (q == p) return fail(name, "involution returned its own input");
                    if (table.sign(q) != -table.sign_at(i))
                        return fail(name, "sign did not flip at entry " + std::to_string(i));
                    if (involution(q, x, y, z) != p)
                        return fail(name, "involution is not self-inverse at entry " +
                                              std::to_string(i));
                    ++pairs;
                }
    }
    return pass(name, std::to_string(pairs) + " (partition, triangle) pairs checked");
}

CheckResult check_det_unit(const SignTable& table) {
    const std::string name = "det_of_unit_full_sum";
    const auto result = det_s2(s2_identity(table.d()), table);
    const Rat expected(unit_sign(table.d()));
    std::ostringstream detail;
    detail << "det = " << rat_str(result.value) << " over " << result.terms_evaluated << " terms";
    return result.value == expected ? pass(name, detail.str()) : fail(name, detail.str());
}

CheckResult check_vanishing(const SignTable& table, unsigned trials, std::uint64_t seed) {
    const std::string name = "vanishing_on_equal_triangle_columns";
    const int d = table.d();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> vertex(1, 2 * d);
    for (unsigned t = 0; t < trials; ++t) {
        S2Matrix A = random_matrix(d, rng);
        int x = vertex(rng), y = vertex(rng), z = vertex(rng);
        while (y == x) y = vertex(rng);
        while (z == x || z == y) z = vertex(rng);
        int v[3] = {x, y, z};
        std::sort(v, v + 3);
        std::vector<Rat> shared;
        for (int r = 0; r < d; ++r) shared.push_back(random_rational(rng));
        A.set_column(edge_index(d, Edge{v[0], v[1]}), shared);
        A.set_column(edge_index(d, Edge{v[0], v[2]}), shared);
        A.set_column(edge_index(d, Edge{v[1], v[2]}), shared);
        if (det_s2(A, table).value != 0)
            return fail(name, "nonzero determinant at trial " + std::to_string(t));
    }
    return pass(name, std::to_string(trials) + " random matrices with an equalized triangle");
}

CheckResult check_triangular_product_rule(const SignTable& table, unsigned trials,
                                          std::uint64_t seed) {
    const std::string name = "triangular_determinant_product_rule";
    const int d = table.d();
    std::mt19937_64 rng(seed);
    for (const bool upper : {true, false}) {
        for (unsigned t = 0; t < trials; ++t) {
            const S2Matrix A = random_s2_triangular(d, upper, rng);
            Rat formula(unit_sign(d));
            for (const auto& entry : s2_diagonal(A)) formula *= entry;
            const Rat full = det_s2(A, table).value;
            const Rat fast = det_s2_triangular(A);
            if (full != formula || fast != formula)
                return fail(name, std::string(upper ? "upper" : "lower") + " trial " +
                                      std::to_string(t) + ": sum " + rat_str(full) + ", fast " +
                                      rat_str(fast) + ", formula " + rat_str(formula));
        }
    }
    return pass(name, std::to_string(trials) + " upper and " + std::to_string(trials) +
                          " lower triangular matrices, sum == fast == unit-sign * diagonal product");
}

CheckResult check_upper_monomials_vanish(const SignTable& table, std::uint64_t seed) {
    const std::string name = "upper_triangular_monomials_vanish";
    const int d = table.d();
    std::mt19937_64 rng(seed);
    const S2Matrix A = random_s2_triangular(d, true, rng);
    const auto seed_partition = twin_star_partition(d);
    Rat diag_product(1);
    for (const auto& entry : s2_diagonal(A)) diag_product *= entry;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto p = table.partition_at(i);
        const Rat value = monomial(p, A);
        if (p == seed_partition) {
            if (value != diag_product)
                return fail(name, "twin-star monomial does not equal the diagonal product");
        } else if (value != 0) {
            return fail(name, "nonzero monomial at entry " + std::to_string(i));
        }
    }
    return pass(name, std::to_string(table.size()) + " monomials of a random upper matrix");
}

CheckResult check_multilinearity(const SignTable& table, unsigned trials, std::uint64_t seed) {
    const std::string name = "column_multilinearity";
    const int d = table.d();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> column(0, edge_count(d) - 1);
    for (unsigned t = 0; t < trials; ++t) {
        S2Matrix A = random_matrix(d, rng);
        const int c = column(rng);
        const Rat alpha = random_rational(rng);
        const Rat beta = random_rational(rng);
        std::vector<Rat> u, w, combined;
        for (int r = 0; r < d; ++r) {
            u.push_back(random_rational(rng));
            w.push_back(random_rational(rng));
            combined.push_back(alpha * u.back() + beta * w.back());
        }
        S2Matrix Au = A, Aw = A, Ac = A;
        Au.set_column(c, u);
        Aw.set_column(c, w);
        Ac.set_column(c, combined);
        if (det_s2(Ac, table).value !=
            alpha * det_s2(Au, table).value + beta * det_s2(Aw, table).value)
            return fail(name, "linearity failed at trial " + std::to_string(t) + ", column " +
                                  std::to_string(c));
    }
    return pass(name, std::to_string(trials) + " random linearity probes");
}

CheckResult check_lim_unit(int d, unsigned trials, std::uint64_t seed) {
    const std::string name = "lim_unit_two_sided";
    std::mt19937_64 rng(seed);
    const S2Matrix unit = s2_identity(d);
    for (unsigned t = 0; t < trials; ++t) {
        const S2Matrix A = random_matrix(d, rng);
        if (!(lim_multiply(unit, A) == A) || !(lim_multiply(A, unit) == A))
            return fail(name, "unit law failed at trial " + std::to_string(t));
    }
    return pass(name, std::to_string(trials) + " random matrices, unit absorbed on both sides");
}

CheckResult check_lim_associativity_bilinearity(int d, unsigned trials, std::uint64_t seed) {
    const std::string name = "lim_associativity_bilinearity";
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const S2Matrix A = random_matrix(d, rng);
        const S2Matrix B = random_matrix(d, rng);
        const S2Matrix C = random_matrix(d, rng);
        if (!(lim_multiply(lim_multiply(A, B), C) == lim_multiply(A, lim_multiply(B, C))))
            return fail(name, "associativity failed at trial " + std::to_string(t));
        const Rat alpha = random_rational(rng);
        const Rat beta = random_rational(rng);
        const S2Matrix left_combo = lim_multiply(alpha * A + beta * B, C);
        const S2Matrix left_split = alpha * lim_multiply(A, C) + beta * lim_multiply(B, C);
        const S2Matrix right_combo = lim_multiply(C, alpha * A + beta * B);
        const S2Matrix right_split = alpha * lim_multiply(C, A) + beta * lim_multiply(C, B);
        if (!(left_combo == left_split) || !(right_combo == right_split))
            return fail(name, "bilinearity failed at trial " + std::to_string(t));
    }
    return pass(name, std::to_string(trials) + " random triples");
}

CheckResult check_lim_closed_form_d2(unsigned trials, std::uint64_t seed) {
    const std::string name = "lim_matches_width2_closed_form";
    std::mt19937_64 rng(seed);
    const int d = 2;
    // Column order (1,2) (1,3) (1,4) (2,3) (2,4) (3,4); the closed form
    // pairs (1,2)<->(3,4), (1,3)<->(2,3), (2,4)<->(1,4) and multiplies the
    // 2x2 groupings.
    const auto col = [&](Edge e) { return edge_index(d, e); };
    for (unsigned t = 0; t < trials; ++t) {
        const S2Matrix A = random_matrix(d, rng);
        const S2Matrix B = random_matrix(d, rng);
        const auto a = [&](Edge e) { return A.at(0, col(e)); };
        const auto b = [&](Edge e) { return A.at(1, col(e)); };
        const auto c = [&](Edge e) { return B.at(0, col(e)); };
        const auto dd = [&](Edge e) { return B.at(1, col(e)); };
        S2Matrix expected(d);
        const Edge e12{1, 2}, e13{1, 3}, e14{1, 4}, e23{2, 3}, e24{2, 4}, e34{3, 4};
        expected.at(0, col(e12)) = a(e12) * c(e12) + a(e34) * dd(e12);
        expected.at(1, col(e12)) = b(e12) * c(e12) + b(e34) * dd(e12);
        expected.at(0, col(e13)) = a(e13) * c(e13) + a(e23) * dd(e13);
        expected.at(1, col(e13)) = b(e13) * c(e13) + b(e23) * dd(e13);
        expected.at(0, col(e14)) = a(e24) * c(e14) + a(e14) * dd(e14);
        expected.at(1, col(e14)) = b(e24) * c(e14) + b(e14) * dd(e14);
        expected.at(0, col(e23)) = a(e13) * c(e23) + a(e23) * dd(e23);
        expected.at(1, col(e23)) = b(e13) * c(e23) + b(e23) * dd(e23);
        expected.at(0, col(e24)) = a(e24) * c(e24) + a(e14) * dd(e24);
        expected.at(1, col(e24)) = b(e24) * c(e24) + b(e14) * dd(e24);
        expected.at(0, col(e34)) = a(e12) * c(e34) + a(e34) * dd(e34);
        expected.at(1, col(e34)) = b(e12) * c(e34) + b(e34) * dd(e34);
        if (!(lim_multiply(A, B) == expected))
            return fail(name, "entrywise mismatch at trial " + std::to_string(t));
    }
    return pass(name, std::to_string(trials) + " random products against the closed form");
}

CheckResult check_lim_triangular_closure(int d, unsigned trials, std::uint64_t seed) {
    const std::string name = "lim_triangular_closure";
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const S2Matrix upper_product = lim_multiply(random_s2_triangular(d, true, rng),
                                                    random_s2_triangular(d, true, rng));
        const S2Matrix lower_product = lim_multiply(random_s2_triangular(d, false, rng),
                                                    random_s2_triangular(d, false, rng));
        if (!is_s2_upper(upper_product) || !is_s2_lower(lower_product))
            return fail(name, "closure failed at trial " + std::to_string(t));
    }
    return pass(name, std::to_string(trials) + " upper and lower product pairs");
}

CheckResult check_s2_lu_roundtrip(int d, unsigned trials, std::uint64_t seed) {
    const std::string name = "s2_lu_roundtrip";
    std::mt19937_64 rng(seed);
    unsigned regenerated = 0;
    for (unsigned t = 0; t < trials; ++t) {
        for (unsigned attempt = 0;; ++attempt) {
            if (attempt > 200) return fail(name, "could not sample a feasible matrix");
            const S2Matrix A = random_matrix(d, rng);
            S2LuFactors factors{S2Matrix(1), S2Matrix(1)};
            try {
                factors = s2_lu(A);
            } catch (const ZeroPivotError&) {
                ++regenerated;
                continue;
            }
            if (!is_s2_lower(factors.lower) || !is_s2_upper(factors.upper))
                return fail(name, "factor triangularity failed at trial " + std::to_string(t));
            for (const auto& entry : s2_diagonal(factors.lower))
                if (entry != 1)
                    return fail(name, "lower factor diagonal is not all ones at trial " +
                                          std::to_string(t));
            if (!(lim_multiply(factors.lower, factors.upper) == A))
                return fail(name, "reconstruction failed at trial " + std::to_string(t));
            break;
        }
    }
    return pass(name, std::to_string(trials) + " random factorizations (" +
                          std::to_string(regenerated) + " resampled on zero minors)");
}

CheckResult check_s2_lu_shape_d2(unsigned trials, std::uint64_t seed) {
    const std::string name = "s2_lu_width2_closed_form";
    std::mt19937_64 rng(seed);
    const int d = 2;
    const auto col = [&](Edge e) { return edge_index(d, e); };
    const Edge e12{1, 2}, e13{1, 3}, e14{1, 4}, e23{2, 3}, e24{2, 4}, e34{3, 4};
    for (unsigned t = 0; t < trials; ++t) {
        S2Matrix A(d);
        // The three leg blocks are ((a12,a34),(b12,b34)), ((a13,a23),(b13,b23)),
        // ((a24,a14),(b24,b14)); resample until each has a nonzero determinant.
        while (true) {
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < A.cols(); ++c) A.at(r, c) = random_nonzero_rational(rng);
            // Explicit Rat return type: gmpxx expression templates must not
            // escape the statement that builds them.
            const auto block_det = [&](Edge p, Edge q) -> Rat {
                return A.at(0, col(p)) * A.at(1, col(q)) - A.at(0, col(q)) * A.at(1, col(p));
            };
            if (block_det(e12, e34) != 0 && block_det(e13, e23) != 0 && block_det(e24, e14) != 0)
                break;
        }
        const auto factors = s2_lu(A);
        const auto a = [&](Edge e) { return A.at(0, col(e)); };
        const auto b = [&](Edge e) { return A.at(1, col(e)); };
        S2Matrix lower(d), upper(d);
        lower.at(0, col(e12)) = 1;
        lower.at(0, col(e13)) = 1;
        lower.at(0, col(e24)) = 1;
        lower.at(1, col(e12)) = b(e12) / a(e12);
        lower.at(1, col(e13)) = b(e13) / a(e13);
        lower.at(1, col(e14)) = 1;
        lower.at(1, col(e23)) = 1;
        lower.at(1, col(e24)) = b(e24) / a(e24);
        lower.at(1, col(e34)) = 1;
        upper.at(0, col(e12)) = a(e12);
        upper.at(0, col(e13)) = a(e13);
        upper.at(0, col(e14)) = a(e14);
        upper.at(0, col(e23)) = a(e23);
        upper.at(0, col(e24)) = a(e24);
        upper.at(0, col(e34)) = a(e34);
        upper.at(1, col(e14)) = b(e14) - (b(e24) / a(e24)) * a(e14);
        upper.at(1, col(e23)) = b(e23) - (b(e13) / a(e13)) * a(e23);
        upper.at(1, col(e34)) = b(e34) - (b(e12) / a(e12)) * a(e34);
        if (!(factors.lower == lower) || !(factors.upper == upper))
            return fail(name, "closed-form factors mismatch at trial " + std::to_string(t));
    }
    return pass(name, std::to_string(trials) + " random instances against the closed-form factors");
}

CheckResult check_back_substitution(int d, unsigned trials, std::uint64_t seed) {
    const std::string name = "back_substitution_residual";
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const S2Matrix A = random_s2_upper_nonzero_diagonal(d, rng);
        std::vector<Rat> rhs;
        for (int r = 0; r < d; ++r) rhs.push_back(random_rational(rng));
        const auto expressions = parametric_back_substitution(A, rhs);
        std::vector<Rat> free_values;
        for (int c = 0; c < A.cols(); ++c) free_values.push_back(random_rational(rng));
        for (const auto& expr : expressions)
            for (int a = 1; a <= d; ++a)
                if (expr.coefficients[static_cast<std::size_t>(
                        edge_index(d, Edge{2 * a - 1, 2 * a}))] != 0)
                    return fail(name, "expression references a center variable at trial " +
                                          std::to_string(t));
        const auto x = assemble_solution(d, expressions, free_values);
        if (apply(A, x) != rhs) return fail(name, "residual nonzero at trial " + std::to_string(t));
    }
    return pass(name, std::to_string(trials) + " random systems solved exactly");
}

CheckResult check_back_substitution_row_pattern_d3(std::uint64_t seed) {
    const std::string name = "back_substitution_row3_pattern";
    const int d = 3;
    std::mt19937_64 rng(seed);
    // The width-3 upper-triangular example with boxed diagonal: symbols
    // instantiated with random nonzero rationals, literal 0/1 kept.
    const char* rows[3] = {"a b c e 0 f 1 h 1 0 l 0 0 0 0", "0 0 0 0 0 g 0 0 0 k 1 m n 1 p",
                           "0 0 0 0 0 0 0 1 0 0 0 1 1 0 1"};
    S2Matrix A(d);
    for (int r = 0; r < d; ++r) {
        std::istringstream in(rows[r]);
        std::string token;
        for (int c = 0; c < A.cols(); ++c) {
            in >> token;
            if (token == "0")
                A.at(r, c) = 0;
            else if (token == "1")
                A.at(r, c) = 1;
            else
                A.at(r, c) = random_nonzero_rational(rng);
        }
    }
    if (!is_s2_upper(A)) return fail(name, "example matrix is not S2-upper");
    std::vector<Rat> rhs{random_rational(rng), random_rational(rng), random_rational(rng)};
    const auto expressions = parametric_back_substitution(A, rhs);
    const auto& row3 = expressions[2];
    bool ok = row3.center == Edge{5, 6} && row3.constant == rhs[2];
    for (int c = 0; c < A.cols(); ++c) {
        const Edge e = edge_at(d, c);
        const Rat& coef = row3.coefficients[static_cast<std::size_t>(c)];
        const bool in_pattern = (e == Edge{2, 5}) || (e == Edge{3, 6}) || (e == Edge{4, 5});
        ok = ok && (in_pattern ? coef == -1 : coef == 0);
    }
    return ok ? pass(name, "x(5,6) = b3 - x(2,5) - x(3,6) - x(4,5) reproduced")
              : fail(name, "row-3 expression deviates from the expected pattern");
}

std::vector<CheckResult> run_suite(int d, const SuiteOptions& options) {
    if (d < 1) throw DomainError("width must be >= 1, got " + std::to_string(d));
    std::vector<CheckResult> results;
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(d) * 1000003;

    results.push_back(check_enumeration_count(d, options.node_budget, options.best_effort));

    bool have_table = false;
    SignTable table = SignTable::from_parts(1, {1}, {1}, true, true, 1); // placeholder
    if (!results.back().skipped) {
        results.push_back(check_enumeration_well_formed(d, options.node_budget));
        table = SignTable::build(d, options.node_budget);
        have_table = true;
    } else {
        results.push_back(skip("enumeration_canonical_and_valid", "enumeration over budget"));
    }

    if (have_table) {
        results.push_back(check_sign_table_facts(table));
        results.push_back(check_involution_sign_flip(table));
        results.push_back(check_det_unit(table));
        results.push_back(check_vanishing(table, options.vanishing_trials, seed + 1));
        results.push_back(check_triangular_product_rule(table, options.triangular_trials, seed + 2));
        results.push_back(check_upper_monomials_vanish(table, seed + 3));
        results.push_back(check_multilinearity(table, options.linearity_trials, seed + 4));
    } else {
        for (const char* name :
             {"sign_table_facts", "involution_sign_flip_exhaustive", "det_of_unit_full_sum",
              "vanishing_on_equal_triangle_columns", "triangular_determinant_product_rule",
              "upper_triangular_monomials_vanish", "column_multilinearity"})
            results.push_back(skip(name, "enumeration over budget"));
    }

    results.push_back(check_lim_unit(d, options.algebra_trials, seed + 5));
    results.push_back(check_lim_associativity_bilinearity(d, options.algebra_trials, seed + 6));
    if (d == 2) results.push_back(check_lim_closed_form_d2(options.algebra_trials, seed + 7));
    results.push_back(check_lim_triangular_closure(d, options.algebra_trials, seed + 8));
    results.push_back(check_s2_lu_roundtrip(d, options.lu_trials, seed + 9));
    if (d == 2) results.push_back(check_s2_lu_shape_d2(options.lu_trials, seed + 10));
    results.push_back(check_back_substitution(d, options.solve_trials, seed + 11));
    if (d == 3) results.push_back(check_back_substitution_row_pattern_d3(seed + 12));
    return results;
}

} // namespace s2det::verify

#pragma once

#include "s2det/dets2.hpp"
#include "s2det/leg_algebra.hpp"
#include "s2det/partition.hpp"
#include "s2det/s2_matrix.hpp"
#include "s2det/sign_table.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace s2det::verify {

// Machine verification of the library's theorems at one width: every check
// re-derives a claimed fact along an independent route (brute-force
// counting oracles, closed forms, residual substitution) and compares
// exactly. Used by the `verify` CLI command and the acceptance suite.

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct SuiteOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    bool best_effort = false; // d = 4: report enumeration-bound checks as skipped on BudgetError
    unsigned vanishing_trials = 1000;
    unsigned triangular_trials = 100;
    unsigned linearity_trials = 200;
    unsigned algebra_trials = 100;
    unsigned lu_trials = 100;
    unsigned solve_trials = 100;
    std::uint64_t seed = 0x5eedbead;
};

// Counting oracles, deliberately on different algorithms than the
// enumeration they check: full color-vector scan (d <= 2) and
// class-by-class combination generation, both with a DFS acyclicity test
// instead of union-find.
std::uint64_t oracle_count_all_colorings(int d);
std::uint64_t oracle_count_multinomial(int d);

// Deterministic random inputs with small numerators/denominators.
Rat random_rational(std::mt19937_64& rng);
Rat random_nonzero_rational(std::mt19937_64& rng);
S2Matrix random_matrix(int d, std::mt19937_64& rng);
S2Matrix random_s2_triangular(int d, bool upper, std::mt19937_64& rng);
S2Matrix random_s2_upper_nonzero_diagonal(int d, std::mt19937_64& rng);

// Individual checks. Every result carries a deterministic detail string.
CheckResult check_enumeration_count(int d, std::uint64_t node_budget, bool best_effort);
CheckResult check_enumeration_well_formed(int d, std::uint64_t node_budget);
CheckResult check_sign_table_facts(const SignTable& table);
CheckResult check_involution_sign_flip(const SignTable& table);
CheckResult check_det_unit(const SignTable& table);
CheckResult check_vanishing(const SignTable& table, unsigned trials, std::uint64_t seed);
CheckResult check_triangular_product_rule(const SignTable& table, unsigned trials,
                                          std::uint64_t seed);
CheckResult check_upper_monomials_vanish(const SignTable& table, std::uint64_t seed);
CheckResult check_multilinearity(const SignTable& table, unsigned trials, std::uint64_t seed);
CheckResult check_lim_unit(int d, unsigned trials, std::uint64_t seed);
CheckResult check_lim_associativity_bilinearity(int d, unsigned trials, std::uint64_t seed);
CheckResult check_lim_closed_form_d2(unsigned trials, std::uint64_t seed);
CheckResult check_lim_triangular_closure(int d, unsigned trials, std::uint64_t seed);
CheckResult check_s2_lu_roundtrip(int d, unsigned trials, std::uint64_t seed);
CheckResult check_s2_lu_shape_d2(unsigned trials, std::uint64_t seed);
CheckResult check_back_substitution(int d, unsigned trials, std::uint64_t seed);
CheckResult check_back_substitution_row_pattern_d3(std::uint64_t seed);

// The full ordered suite for one width.
std::vector<CheckResult> run_suite(int d, const SuiteOptions& options = {});

} // namespace s2det::verify

// s2det: command-line access to the S2-determinant toolkit. Every command
// reads/writes the JSON formats documented in the README, prints a single
// JSON payload on stdout, and reports diagnostics on stderr.
// Exit codes: 0 success, 1 domain error, 2 I/O or format error.

#include "s2det/dets2.hpp"
#include "s2det/error.hpp"
#include "s2det/json_io.hpp"
#include "s2det/leg_algebra.hpp"
#include "s2det/partition.hpp"
#include "s2det/s2_matrix.hpp"
#include "s2det/sign_table.hpp"
#include "s2det/square_matrix.hpp"
#include "s2det/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

std::uint64_t node_budget_from_env() {
    const char* raw = std::getenv("S2DET_NODE_BUDGET");
    if (raw == nullptr || *raw == '\0') return s2det::kDefaultNodeBudget;
    try {
        const long long value = std::stoll(raw);
        if (value <= 0) throw std::invalid_argument("non-positive");
        return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
        throw s2det::FormatError("S2DET_NODE_BUDGET must be a positive integer, got \"" +
                                 std::string(raw) + "\"");
    }
}

// Single-shot payload emission keeps stdout free of partial JSON on failure.
void emit(const json& payload, const std::optional<std::string>& out_path) {
    const std::string text = payload.dump(2) + "\n";
    if (out_path) s2det::save_json_file(*out_path, payload);
    std::cout << text;
}

struct EnumArgs {
    int d = 0;
    bool count_only = false;
    std::string mode = "hcf";
    std::optional<std::string> out;
};

void run_enum(const EnumArgs& args) {
    const auto mode = [&] {
        if (args.mode == "hcf") return s2det::EnumerateMode::HomogeneousCycleFree;
        if (args.mode == "all") return s2det::EnumerateMode::All;
        throw s2det::FormatError("--mode must be hcf or all, got \"" + args.mode + "\"");
    }();
    const auto budget = node_budget_from_env();
    if (args.count_only) {
        std::uint64_t count = 0;
        s2det::for_each_partition(args.d, mode, budget,
                                  [&](const std::vector<std::uint8_t>&) { ++count; });
        emit(json{{"count", count}}, args.out);
        return;
    }
    json partitions = json::array();
    s2det::for_each_partition(args.d, mode, budget, [&](const std::vector<std::uint8_t>& colors) {
        json vec = json::array();
        for (const auto c : colors) vec.push_back(static_cast<int>(c));
        partitions.push_back(std::move(vec));
    });
    emit(json{{"d", args.d}, {"count", partitions.size()}, {"partitions", std::move(partitions)}},
         args.out);
}

struct DetArgs {
    std::string matrix_file;
    bool fast = false;
    std::optional<std::string> signs_file;
    std::optional<std::string> out;
};

void run_det(const DetArgs& args) {
    const auto A = s2det::matrix_from_json(s2det::load_json_file(args.matrix_file));
    if (args.fast) {
        emit(json{{"det", s2det::rat_to_string(s2det::det_s2_triangular(A))}}, args.out);
        return;
    }
    const auto table = args.signs_file
                           ? s2det::sign_table_from_json(s2det::load_json_file(*args.signs_file))
                           : s2det::build_sign_table(A.d(), node_budget_from_env());
    const auto result = s2det::det_s2(A, table);
    json payload{{"det", s2det::rat_to_string(result.value)}};
    if (result.has_caveat()) {
        std::string caveat;
        if (!result.table_consistent) caveat += "sign table is inconsistent";
        if (!result.table_connected) {
            if (!caveat.empty()) caveat += "; ";
            caveat += "sign table is disconnected (unreached components seeded +1)";
        }
        payload["caveat"] = caveat;
    }
    emit(payload, args.out);
}

void run_signs(int d, const std::optional<std::string>& out) {
    const auto table = s2det::build_sign_table(d, node_budget_from_env());
    emit(s2det::sign_table_to_json(table), out);
}

void run_diag(const std::string& matrix_file, const std::optional<std::string>& out) {
    const auto A = s2det::matrix_from_json(s2det::load_json_file(matrix_file));
    const auto family = s2det::s2_diagonal(A);
    const auto edges = s2det::all_edges(A.d());
    json family_json = json::array();
    for (std::size_t c = 0; c < family.size(); ++c)
        family_json.push_back(json{{"edge", s2det::edge_label(edges[c])},
                                   {"value", s2det::rat_to_string(family[c])}});
    json values = json::array();
    for (const auto& v : s2det::s2_diagonal_values(A)) values.push_back(s2det::rat_to_string(v));
    emit(json{{"d", A.d()}, {"family", std::move(family_json)}, {"value_set", std::move(values)}},
         out);
}

void run_check(const std::string& matrix_file, const std::optional<std::string>& out) {
    const auto A = s2det::matrix_from_json(s2det::load_json_file(matrix_file));
    emit(json{{"upper", s2det::is_s2_upper(A)}, {"lower", s2det::is_s2_lower(A)}}, out);
}

void run_lim(const std::string& a_file, const std::string& b_file,
             const std::optional<std::string>& out) {
    const auto A = s2det::matrix_from_json(s2det::load_json_file(a_file));
    const auto B = s2det::matrix_from_json(s2det::load_json_file(b_file));
    emit(s2det::matrix_to_json(s2det::lim_multiply(A, B)), out);
}

void run_legs(const std::string& matrix_file, const std::optional<std::string>& out) {
    const auto A = s2det::matrix_from_json(s2det::load_json_file(matrix_file));
    emit(s2det::leg_decomposition_to_json(s2det::leg_submatrices(A)), out);
}

void run_lu(const std::string& matrix_file, const std::optional<std::string>& out) {
    const auto A = s2det::matrix_from_json(s2det::load_json_file(matrix_file));
    const auto factors = s2det::s2_lu(A);
    emit(json{{"L", s2det::matrix_to_json(factors.lower)},
              {"U", s2det::matrix_to_json(factors.upper)}},
         out);
}

void run_solve(const std::string& matrix_file, const std::string& rhs_file,
               const std::optional<std::string>& out) {
    const auto A = s2det::matrix_from_json(s2det::load_json_file(matrix_file));
    const auto rhs_json = s2det::load_json_file(rhs_file);
    if (!rhs_json.is_array())
        throw s2det::FormatError("right-hand side file must hold a JSON array of rationals");
    std::vector<s2det::Rat> rhs;
    for (const auto& item : rhs_json) {
        if (item.is_string())
            rhs.push_back(s2det::rat_from_string(item.get<std::string>()));
        else if (item.is_number_integer())
            rhs.push_back(s2det::Rat(static_cast<long>(item.get<long long>())));
        else
            throw s2det::FormatError("right-hand side entries must be rational strings");
    }
    const auto expressions = s2det::parametric_back_substitution(A, rhs);
    json solutions = json::array();
    for (const auto& expr : expressions) {
        json coefficients = json::object();
        for (int c = 0; c < A.cols(); ++c)
            if (expr.coefficients[static_cast<std::size_t>(c)] != 0)
                coefficients[s2det::edge_label(s2det::edge_at(A.d(), c))] =
                    s2det::rat_to_string(expr.coefficients[static_cast<std::size_t>(c)]);
        solutions.push_back(json{{"center", s2det::edge_label(expr.center)},
                                 {"constant", s2det::rat_to_string(expr.constant)},
                                 {"coefficients", std::move(coefficients)}});
    }
    emit(json{{"d", A.d()}, {"solutions", std::move(solutions)}}, out);
}

void run_verify(int d, bool best_effort, const std::optional<std::string>& out) {
    const auto budget = node_budget_from_env();
    if (d >= 5) throw s2det::BudgetError(d, budget);
    if (d == 4 && !best_effort)
        throw s2det::DomainError("verify supports d <= 3; pass --best-effort to attempt d = 4");
    s2det::verify::SuiteOptions options;
    options.node_budget = budget;
    options.best_effort = best_effort;
    const auto results = s2det::verify::run_suite(d, options);
    json checks = json::array();
    bool all_pass = true;
    for (const auto& check : results) {
        std::cerr << (check.skipped ? "[skip] " : check.pass ? "[pass] " : "[FAIL] ") << check.name
                  << ": " << check.detail << "\n";
        checks.push_back(json{{"name", check.name},
                              {"pass", check.pass},
                              {"skipped", check.skipped},
                              {"detail", check.detail}});
        if (!check.skipped && !check.pass) all_pass = false;
    }
    emit(json{{"d", d}, {"checks", std::move(checks)}, {"all_pass", all_pass}}, out);
    if (!all_pass) std::exit(1);
}

void run_identity(int d, const std::optional<std::string>& out) {
    emit(s2det::matrix_to_json(s2det::s2_identity(d)), out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact S2-determinant toolkit: edge partitions, sign tables, det, LIM, S2-LU"};
    app.require_subcommand(1);

    EnumArgs enum_args;
    auto* cmd_enum = app.add_subcommand("enum", "enumerate edge partitions of K_{2d}");
    cmd_enum->add_option("--d", enum_args.d, "width d")->required();
    cmd_enum->add_flag("--count-only", enum_args.count_only, "print only the count");
    cmd_enum->add_option("--mode", enum_args.mode, "hcf (default) or all");
    std::string enum_out;
    cmd_enum->add_option("--out", enum_out, "also write the payload to this file");

    DetArgs det_args;
    auto* cmd_det = app.add_subcommand("det", "S2-determinant of a matrix file");
    cmd_det->add_option("matrix", det_args.matrix_file, "matrix JSON file")->required();
    cmd_det->add_flag("--fast", det_args.fast, "use the S2-triangular product rule");
    std::string det_signs, det_out;
    cmd_det->add_option("--signs", det_signs, "precomputed sign-table JSON file");
    cmd_det->add_option("--out", det_out, "also write the payload to this file");

    int signs_d = 0;
    std::string signs_out;
    auto* cmd_signs = app.add_subcommand("signs", "build and print the sign table");
    cmd_signs->add_option("--d", signs_d, "width d")->required();
    cmd_signs->add_option("--out", signs_out, "also write the payload to this file");

    std::string diag_matrix, diag_out;
    auto* cmd_diag = app.add_subcommand("diag", "S2-diagonal family and value set");
    cmd_diag->add_option("matrix", diag_matrix, "matrix JSON file")->required();
    cmd_diag->add_option("--out", diag_out, "also write the payload to this file");

    std::string check_matrix, check_out;
    auto* cmd_check = app.add_subcommand("check", "S2-upper / S2-lower triangularity flags");
    cmd_check->add_option("matrix", check_matrix, "matrix JSON file")->required();
    cmd_check->add_option("--out", check_out, "also write the payload to this file");

    std::string lim_a, lim_b, lim_out;
    auto* cmd_lim = app.add_subcommand("lim", "Leg Identifying Multiplication of two matrices");
    cmd_lim->add_option("a", lim_a, "left matrix JSON file")->required();
    cmd_lim->add_option("b", lim_b, "right matrix JSON file")->required();
    cmd_lim->add_option("--out", lim_out, "also write the payload to this file");

    std::string legs_matrix, legs_out;
    auto* cmd_legs = app.add_subcommand("legs", "leg submatrices of a matrix");
    cmd_legs->add_option("matrix", legs_matrix, "matrix JSON file")->required();
    cmd_legs->add_option("--out", legs_out, "also write the payload to this file");

    std::string lu_matrix, lu_out;
    auto* cmd_lu = app.add_subcommand("lu", "S2-LU factorization");
    cmd_lu->add_option("matrix", lu_matrix, "matrix JSON file")->required();
    cmd_lu->add_option("--out", lu_out, "also write the payload to this file");

    std::string solve_matrix, solve_rhs, solve_out;
    auto* cmd_solve = app.add_subcommand("solve", "parametric back substitution for A x = b");
    cmd_solve->add_option("matrix", solve_matrix, "S2-upper matrix JSON file")->required();
    cmd_solve->add_option("--rhs", solve_rhs, "JSON array of d rational strings")->required();
    cmd_solve->add_option("--out", solve_out, "also write the payload to this file");

    int verify_d = 0;
    bool verify_best_effort = false;
    std::string verify_out;
    auto* cmd_verify = app.add_subcommand("verify", "run the theorem suite for one width");
    cmd_verify->add_option("--d", verify_d, "width d")->required();
    cmd_verify->add_flag("--best-effort", verify_best_effort,
                         "attempt d = 4, reporting enumeration-bound checks as skipped");
    cmd_verify->add_option("--out", verify_out, "also write the payload to this file");

    int identity_d = 0;
    std::string identity_out;
    auto* cmd_identity = app.add_subcommand("identity", "matrix form of the twin-star unit");
    cmd_identity->add_option("--d", identity_d, "width d")->required();
    cmd_identity->add_option("--out", identity_out, "also write the payload to this file");

    CLI11_PARSE(app, argc, argv);

    const auto opt = [](const std::string& s) {
        return s.empty() ? std::optional<std::string>{} : std::optional<std::string>{s};
    };

    try {
        if (cmd_enum->parsed()) {
            enum_args.out = opt(enum_out);
            run_enum(enum_args);
        } else if (cmd_det->parsed()) {
            det_args.signs_file = opt(det_signs);
            det_args.out = opt(det_out);
            run_det(det_args);
        } else if (cmd_signs->parsed()) {
            run_signs(signs_d, opt(signs_out));
        } else if (cmd_diag->parsed()) {
            run_diag(diag_matrix, opt(diag_out));
        } else if (cmd_check->parsed()) {
            run_check(check_matrix, opt(check_out));
        } else if (cmd_lim->parsed()) {
            run_lim(lim_a, lim_b, opt(lim_out));
        } else if (cmd_legs->parsed()) {
            run_legs(legs_matrix, opt(legs_out));
        } else if (cmd_lu->parsed()) {
            run_lu(lu_matrix, opt(lu_out));
        } else if (cmd_solve->parsed()) {
            run_solve(solve_matrix, solve_rhs, opt(solve_out));
        } else if (cmd_verify->parsed()) {
            run_verify(verify_d, verify_best_effort, opt(verify_out));
        } else if (cmd_identity->parsed()) {
            run_identity(identity_d, opt(identity_out));
        }
    } catch (const s2det::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const s2det::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#pragma once

#include "s2det/leg_algebra.hpp"
#include "s2det/partition.hpp"
#include "s2det/s2_matrix.hpp"
#include "s2det/sign_table.hpp"
#include "s2det/square_matrix.hpp"

#include <json.hpp>

#include <string>

namespace s2det {

// External formats. Rationals travel as canonical strings ("5", "-3/7") so
// no JSON consumer can lose precision; row and column indexing is 1-based
// on the wire. All from_json functions throw FormatError on malformed
// input.

// {"d": 2, "colors": [1,1,2,2,1,2]} -- dictionary order, colors 1-based.
nlohmann::json partition_to_json(const EdgePartition& p);
EdgePartition partition_from_json(const nlohmann::json& j);

// {"d": 3, "entries": [[row1...], [row2...], [row3...]]} with d(2d-1)
// rational strings per row in dictionary column order. A column-keyed form
// {"d": 3, "columns": {"(1,2)": ["1","0","0"], ...}} is also accepted.
nlohmann::json matrix_to_json(const S2Matrix& A);
S2Matrix matrix_from_json(const nlohmann::json& j);

// {"order": 3, "entries": [[...], [...], [...]]}.
nlohmann::json square_to_json(const SquareMatrix& m);
SquareMatrix square_from_json(const nlohmann::json& j);

// {"d": 2, "entries": [{"colors": [...], "sign": -1}, ...],
//  "consistent": true, "connected": true, "orbit_count": 1}.
nlohmann::json sign_table_to_json(const SignTable& table);
SignTable sign_table_from_json(const nlohmann::json& j);

// {"d": 3, "C": <square>, "L": [<square>...], "R": [<square>...]}.
nlohmann::json leg_decomposition_to_json(const LegDecomposition& dec);
LegDecomposition leg_decomposition_from_json(const nlohmann::json& j);

// File helpers; FormatError on I/O or parse failure.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace s2det

#include "s2det/json_io.hpp"

#include "s2det/error.hpp"

#include <fstream>
#include <sstream>

namespace s2det {

namespace {

int require_width(const nlohmann::json& j, const char* key = "d") {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw FormatError(std::string("missing integer \"") + key + "\" field");
    const int d = j.at(key).get<int>();
    if (d < 1) throw FormatError(std::string("\"") + key + "\" must be >= 1");
    return d;
}

Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    throw FormatError("rational entries must be strings like \"-3/7\" (or plain integers)");
}

std::vector<Rat> row_from_json(const nlohmann::json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw FormatError("expected an array of " + std::to_string(expected) + " rational entries");
    std::vector<Rat> row;
    row.reserve(expected);
    for (const auto& item : j) row.push_back(rat_from_json(item));
    return row;
}

} // namespace

nlohmann::json partition_to_json(const EdgePartition& p) {
    nlohmann::json j;
    j["d"] = p.d();
    j["colors"] = nlohmann::json::array();
    for (const auto c : p.colors()) j["colors"].push_back(static_cast<int>(c));
    return j;
}

EdgePartition partition_from_json(const nlohmann::json& j) {
    const int d = require_width(j);
    if (!j.contains("colors") || !j.at("colors").is_array())
        throw FormatError("missing \"colors\" array");
    std::vector<std::uint8_t> colors;
    colors.reserve(j.at("colors").size());
    for (const auto& item : j.at("colors")) {
        if (!item.is_number_integer()) throw FormatError("colors must be integers");
        const int c = item.get<int>();
        if (c < 1 || c > 255) throw FormatError("color out of range: " + std::to_string(c));
        colors.push_back(static_cast<std::uint8_t>(c));
    }
    return EdgePartition(d, std::move(colors));
}

nlohmann::json matrix_to_json(const S2Matrix& A) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < A.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < A.cols(); ++c) row.push_back(rat_to_string(A.at(r, c)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"d", A.d()}, {"entries", std::move(rows)}};
}

S2Matrix matrix_from_json(const nlohmann::json& j) {
    const int d = require_width(j);
    const std::size_t m = static_cast<std::size_t>(edge_count(d));

    if (j.contains("entries")) {
        const auto& rows = j.at("entries");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d))
            throw FormatError("\"entries\" must hold " + std::to_string(d) + " rows");
        std::vector<Rat> flat;
        flat.reserve(static_cast<std::size_t>(d) * m);
        for (const auto& row : rows) {
            auto parsed = row_from_json(row, m);
            flat.insert(flat.end(), std::make_move_iterator(parsed.begin()),
                        std::make_move_iterator(parsed.end()));
        }
        return S2Matrix(d, std::move(flat));
    }

    if (j.contains("columns")) {
        const auto& columns = j.at("columns");
        if (!columns.is_object()) throw FormatError("\"columns\" must be an object keyed by edges");
        if (columns.size() != m)
            throw FormatError("\"columns\" must hold all " + std::to_string(m) + " edges, got " +
                              std::to_string(columns.size()));
        S2Matrix A(d);
        for (const auto& [label, value] : columns.items()) {
            const Edge e = edge_from_label(label, d);
            const auto column = row_from_json(value, static_cast<std::size_t>(d));
            A.set_column(edge_index(d, e), column);
        }
        return A;
    }

    throw FormatError("matrix needs an \"entries\" or \"columns\" field");
}

nlohmann::json square_to_json(const SquareMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.order(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.order(); ++c) row.push_back(rat_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"order", m.order()}, {"entries", std::move(rows)}};
}

SquareMatrix square_from_json(const nlohmann::json& j) {
    const int order = require_width(j, "order");
    if (!j.contains("entries") || !j.at("entries").is_array() ||
        j.at("entries").size() != static_cast<std::size_t>(order))
        throw FormatError("\"entries\" must hold " + std::to_string(order) + " rows");
    std::vector<Rat> flat;
    flat.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    for (const auto& row : j.at("entries")) {
        auto parsed = row_from_json(row, static_cast<std::size_t>(order));
        flat.insert(flat.end(), std::make_move_iterator(parsed.begin()),
                    std::make_move_iterator(parsed.end()));
    }
    return SquareMatrix(order, std::move(flat));
}

nlohmann::json sign_table_to_json(const SignTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
        nlohmann::json colors = nlohmann::json::array();
        for (const auto c : table.colors_at(i)) colors.push_back(static_cast<int>(c));
        entries.push_back(nlohmann::json{{"colors", std::move(colors)}, {"sign", table.sign_at(i)}});
    }
    return nlohmann::json{{"d", table.d()},
                          {"entries", std::move(entries)},
                          {"consistent", table.consistent()},
                          {"connected", table.connected()},
                          {"orbit_count", table.orbit_count()}};
}

SignTable sign_table_from_json(const nlohmann::json& j) {
    const int d = require_width(j);
    if (!j.contains("entries") || !j.at("entries").is_array())
        throw FormatError("missing \"entries\" array");
    if (!j.contains("consistent") || !j.at("consistent").is_boolean() || !j.contains("connected") ||
        !j.at("connected").is_boolean())
        throw FormatError("missing \"consistent\"/\"connected\" booleans");
    const std::size_t m = static_cast<std::size_t>(edge_count(d));
    std::vector<std::uint8_t> flat_colors;
    std::vector<std::int8_t> signs;
    for (const auto& entry : j.at("entries")) {
        if (!entry.is_object() || !entry.contains("colors") || !entry.contains("sign"))
            throw FormatError("sign table entries need \"colors\" and \"sign\"");
        const auto& colors = entry.at("colors");
        if (!colors.is_array() || colors.size() != m)
            throw FormatError("sign table colors must have " + std::to_string(m) + " entries");
        for (const auto& c : colors) {
            if (!c.is_number_integer()) throw FormatError("colors must be integers");
            const int value = c.get<int>();
            if (value < 1 || value > d) throw FormatError("color out of range");
            flat_colors.push_back(static_cast<std::uint8_t>(value));
        }
        if (!entry.at("sign").is_number_integer()) throw FormatError("sign must be +1 or -1");
        signs.push_back(static_cast<std::int8_t>(entry.at("sign").get<int>()));
    }
    const bool connected = j.at("connected").get<bool>();
    const int orbit_count =
        j.contains("orbit_count") && j.at("orbit_count").is_number_integer()
            ? j.at("orbit_count").get<int>()
            : (connected ? 1 : 0);
    return SignTable::from_parts(d, std::move(flat_colors), std::move(signs),
                                 j.at("consistent").get<bool>(), connected, orbit_count);
}

nlohmann::json leg_decomposition_to_json(const LegDecomposition& dec) {
    nlohmann::json left = nlohmann::json::array();
    nlohmann::json right = nlohmann::json::array();
    for (const auto& block : dec.left) left.push_back(square_to_json(block));
    for (const auto& block : dec.right) right.push_back(square_to_json(block));
    return nlohmann::json{{"d", dec.d},
                          {"C", square_to_json(dec.center)},
                          {"L", std::move(left)},
                          {"R", std::move(right)}};
}

LegDecomposition leg_decomposition_from_json(const nlohmann::json& j) {
    const int d = require_width(j);
    if (!j.contains("C") || !j.contains("L") || !j.contains("R") || !j.at("L").is_array() ||
        !j.at("R").is_array())
        throw FormatError("leg decomposition needs \"C\", \"L\", and \"R\" fields");
    LegDecomposition dec;
    dec.d = d;
    dec.center = square_from_json(j.at("C"));
    for (const auto& block : j.at("L")) dec.left.push_back(square_from_json(block));
    for (const auto& block : j.at("R")) dec.right.push_back(square_from_json(block));
    if (dec.center.order() != d || dec.left.size() != static_cast<std::size_t>(d - 1) ||
        dec.right.size() != static_cast<std::size_t>(d - 1))
        throw FormatError("leg decomposition block counts do not match width " + std::to_string(d));
    for (const auto& blocks : {dec.left, dec.right})
        for (const auto& block : blocks)
            if (block.order() != d) throw FormatError("leg submatrix order mismatch");
    return dec;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("invalid JSON in " + path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << "\n";
    if (!out) throw FormatError("write failed: " + path);
}

} // namespace s2det

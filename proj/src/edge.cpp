#include "s2det/edge.hpp"

#include "s2det/error.hpp"

namespace s2det {

namespace {

void require_valid(int d, Edge e) {
    if (d < 1) throw DomainError("width must be >= 1, got " + std::to_string(d));
    if (!(1 <= e.i && e.i < e.j && e.j <= 2 * d))
        throw DomainError("not an edge of K_" + std::to_string(2 * d) + ": " + edge_label(e));
}

} // namespace

int edge_index(int d, Edge e) {
    require_valid(d, e);
    const int n = 2 * d;
    // (i-1) rows of pairs precede row i; row i holds n-i pairs.
    return (e.i - 1) * n - e.i * (e.i - 1) / 2 + (e.j - e.i - 1);
}

Edge edge_at(int d, int index) {
    const int n = 2 * d;
    if (index < 0 || index >= edge_count(d))
        throw DomainError("column index " + std::to_string(index) + " out of range for width " +
                          std::to_string(d));
    int i = 1;
    int remaining = index;
    while (remaining >= n - i) {
        remaining -= n - i;
        ++i;
    }
    return Edge{i, i + 1 + remaining};
}

std::vector<Edge> all_edges(int d) {
    if (d < 1) throw DomainError("width must be >= 1, got " + std::to_string(d));
    std::vector<Edge> edges;
    edges.reserve(edge_count(d));
    const int n = 2 * d;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back(Edge{i, j});
    return edges;
}

std::string edge_label(Edge e) {
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

Edge edge_from_label(const std::string& label, int d) {
    const auto bad = [&] { return FormatError("not an edge label: \"" + label + "\""); };
    if (label.size() < 5 || label.front() != '(' || label.back() != ')') throw bad();
    const auto comma = label.find(',');
    if (comma == std::string::npos) throw bad();
    int i = 0, j = 0;
    try {
        std::size_t used = 0;
        i = std::stoi(label.substr(1, comma - 1), &used);
        if (used != comma - 1) throw bad();
        j = std::stoi(label.substr(comma + 1, label.size() - comma - 2), &used);
        if (used != label.size() - comma - 2) throw bad();
    } catch (const std::logic_error&) {
        throw bad();
    }
    Edge e{i, j};
    if (!(1 <= e.i && e.i < e.j && e.j <= 2 * d))
        throw FormatError("edge " + label + " is not an edge of K_" + std::to_string(2 * d));
    return e;
}

} // namespace s2det

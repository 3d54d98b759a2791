#include "tempocol/tg_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace tempocol {

namespace {

struct Line {
    int number;
    std::string text;
};

// Significant lines only: comments and blank lines are dropped here.
std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++number;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        out.push_back({number, line});
    }
    return out;
}

std::vector<long long> parse_ints(const Line& line) {
    std::istringstream in(line.text);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            long long value = std::stoll(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError(line.number, "expected an integer, got '" + tok + "'");
        }
    }
    return out;
}

void expect_header(const std::vector<Line>& lines, const char* magic) {
    if (lines.empty())
        throw ParseError(1, std::string("missing '") + magic + " 1' header");
    std::istringstream in(lines[0].text);
    std::string word, version, extra;
    in >> word >> version;
    if (word != magic || version != "1" || (in >> extra))
        throw ParseError(lines[0].number, std::string("expected '") + magic + " 1' header");
}

} // namespace

TemporalGraph parse_temporal_graph(const std::string& text, std::vector<std::string>* warnings) {
    std::vector<Line> lines = significant_lines(text);
    expect_header(lines, "tg");
    if (lines.size() < 2)
        throw ParseError(lines[0].number, "missing '<n> <T>' line");

    std::vector<long long> dims = parse_ints(lines[1]);
    if (dims.size() != 2)
        throw ParseError(lines[1].number, "expected exactly '<n> <T>'");
    if (dims[0] < 1 || dims[0] > 1'000'000)
        throw ParseError(lines[1].number, "vertex count out of range");
    if (dims[1] < 0 || dims[1] > 1'000'000'000)
        throw ParseError(lines[1].number, "lifetime out of range");

    TemporalGraph g;
    g.n = static_cast<int>(dims[0]);
    g.lifetime = static_cast<int>(dims[1]);

    std::map<VertexPair, int> seen; // pair -> first line
    int max_label = 0;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        std::vector<long long> row = parse_ints(lines[i]);
        if (row.size() < 3)
            throw ParseError(lines[i].number, "edge line needs '<u> <v>' and at least one label");
        TimeEdge e;
        e.u = static_cast<int>(row[0]);
        e.v = static_cast<int>(row[1]);
        if (row[0] < 0 || row[1] >= g.n || row[0] >= row[1])
            throw ParseError(lines[i].number, "edge endpoints must satisfy 0 <= u < v < n");
        auto [it, fresh] = seen.emplace(VertexPair{e.u, e.v}, lines[i].number);
        if (!fresh)
            throw ParseError(lines[i].number,
                             "duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                 "), first seen on line " + std::to_string(it->second));
        long long prev = 0;
        for (std::size_t j = 2; j < row.size(); ++j) {
            if (row[j] < 1 || row[j] > g.lifetime)
                throw ParseError(lines[i].number, "label outside [1, lifetime]");
            if (row[j] <= prev)
                throw ParseError(lines[i].number, "labels must be strictly increasing");
            prev = row[j];
            e.labels.push_back(static_cast<int>(row[j]));
        }
        max_label = std::max(max_label, static_cast<int>(prev));
        g.edges.push_back(std::move(e));
    }

    std::sort(g.edges.begin(), g.edges.end(), [](const TimeEdge& a, const TimeEdge& b) {
        return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
    });
    if (warnings && !g.edges.empty() && max_label < g.lifetime)
        warnings->push_back("lifetime declared as " + std::to_string(g.lifetime) +
                            " but the largest label is " + std::to_string(max_label));
    validate_graph(g);
    return g;
}

std::string serialize_temporal_graph(const TemporalGraph& g) {
    validate_graph(g);
    std::ostringstream out;
    out << "tg 1\n" << g.n << ' ' << g.lifetime << '\n';
    for (const TimeEdge& e : g.edges) {
        out << e.u << ' ' << e.v;
        for (int t : e.labels)
            out << ' ' << t;
        out << '\n';
    }
    return out.str();
}

TemporalColoring parse_temporal_coloring(const std::string& text) {
    std::vector<Line> lines = significant_lines(text);
    expect_header(lines, "tc");
    if (lines.size() < 2)
        throw ParseError(lines[0].number, "missing '<n> <T> <k>' line");

    std::vector<long long> dims = parse_ints(lines[1]);
    if (dims.size() != 3)
        throw ParseError(lines[1].number, "expected exactly '<n> <T> <k>'");
    if (dims[0] < 1 || dims[0] > 1'000'000)
        throw ParseError(lines[1].number, "vertex count out of range");
    if (dims[1] < 0 || dims[1] > 1'000'000)
        throw ParseError(lines[1].number, "lifetime out of range");
    if (dims[2] < 1 || dims[2] > 1'000'000'000)
        throw ParseError(lines[1].number, "color count out of range");

    TemporalColoring col;
    col.n = static_cast<int>(dims[0]);
    col.lifetime = static_cast<int>(dims[1]);
    col.k = static_cast<int>(dims[2]);

    if (lines.size() != 2 + static_cast<std::size_t>(col.lifetime))
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(col.lifetime) + " color rows, got " +
                             std::to_string(lines.size() - 2));
    for (int t = 0; t < col.lifetime; ++t) {
        const Line& line = lines[2 + t];
        std::vector<long long> row = parse_ints(line);
        if (row.size() != static_cast<std::size_t>(col.n))
            throw ParseError(line.number, "expected " + std::to_string(col.n) + " colors");
        for (long long c : row) {
            if (c < 1 || c > col.k)
                throw ParseError(line.number, "color outside [1, k]");
            col.cells.push_back(static_cast<int>(c));
        }
    }
    return col;
}

std::string serialize_temporal_coloring(const TemporalColoring& col) {
    validate_coloring(col);
    std::ostringstream out;
    out << "tc 1\n" << col.n << ' ' << col.lifetime << ' ' << col.k << '\n';
    for (int t = 1; t <= col.lifetime; ++t) {
        for (int v = 0; v < col.n; ++v)
            out << (v ? " " : "") << col.at(t, v);
        out << '\n';
    }
    return out.str();
}

} // namespace tempocol

#include "doctest.h"

#include <string>
#include <vector>

#include "tempocol/errors.hpp"
#include "tempocol/reductions.hpp"
#include "tempocol/tg_io.hpp"
#include "support.hpp"

using namespace tempocol;
using support::coloring_from_rows;
using support::make_graph;

TEST_CASE("graph parsing basics") {
    TemporalGraph g = parse_temporal_graph("tg 1\n2 1\n0 1 1\n");
    CHECK(g.n == 2);
    CHECK(g.lifetime == 1);
    CHECK(g.edges == std::vector<TimeEdge>{{0, 1, {1}}});

    CHECK(serialize_temporal_graph(g) == "tg 1\n2 1\n0 1 1\n");
}

TEST_CASE("comments and blank lines are skipped") {
    std::string text = "# generated\n\ntg 1\n# dims\n3 2\n\n0 2 1 2\n# done\n";
    TemporalGraph g = parse_temporal_graph(text);
    CHECK(g.n == 3);
    CHECK(g.lifetime == 2);
    CHECK(g.edges.size() == 1);
}

TEST_CASE("edges are sorted in canonical form") {
    TemporalGraph g = parse_temporal_graph("tg 1\n3 1\n1 2 1\n0 1 1\n");
    CHECK(serialize_temporal_graph(g) == "tg 1\n3 1\n0 1 1\n1 2 1\n");
}

static int error_line(const std::string& text) {
    try {
        parse_temporal_graph(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("tg 2\n2 1\n0 1 1\n") == 1);
    CHECK(error_line("hello\n") == 1);
    CHECK(error_line("tg 1\n2\n") == 2);
    CHECK(error_line("tg 1\n2 1\n0 1 1\n0 1 1\n") == 4);      // duplicate edge
    CHECK(error_line("tg 1\n# pad\n2 1\n0 2 1\n") == 4);      // vertex out of range
    CHECK(error_line("tg 1\n2 2\n0 1 3\n") == 3);             // label beyond lifetime
    CHECK(error_line("tg 1\n2 2\n0 1 0\n") == 3);             // label below 1
    CHECK(error_line("tg 1\n2 2\n0 1 2 1\n") == 3);           // labels out of order
    CHECK(error_line("tg 1\n2 2\n0 1\n") == 3);               // no labels
    CHECK(error_line("tg 1\n2 1\n1 0 1\n") == 3);             // u >= v
    CHECK(error_line("tg 1\n2 1\n0 1 1 x\n") == 3);           // trailing junk
    CHECK(error_line("tg 1\n") == 1);                         // missing dimensions
}

TEST_CASE("duplicate edge error names the first occurrence") {
    try {
        parse_temporal_graph("tg 1\n2 2\n0 1 1\n0 1 2\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("loose lifetime parses with a warning") {
    std::vector<std::string> warnings;
    TemporalGraph g = parse_temporal_graph("tg 1\n2 5\n0 1 1 2\n", &warnings);
    CHECK(g.lifetime == 5);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("largest label") != std::string::npos);

    warnings.clear();
    parse_temporal_graph("tg 1\n2 2\n0 1 1 2\n", &warnings);
    CHECK(warnings.empty());
}

TEST_CASE("graph round trip on random instances") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = static_cast<int>(seed % 8) + 1;
        int lifetime = static_cast<int>(seed % 20) + 1;
        double p = seed % 2 == 0 ? 0.3 : 0.6;
        TemporalGraph g = random_instance(n, lifetime, p, seed);
        std::vector<std::string> warnings;
        CHECK(parse_temporal_graph(serialize_temporal_graph(g), &warnings) == g);
    }
}

TEST_CASE("seeded generation is pinned") {
    CHECK(serialize_temporal_graph(random_instance(3, 4, 0.5, 42)) ==
          "tg 1\n3 4\n0 1 4\n0 2 2 4\n1 2 1 2 3\n");
}

TEST_CASE("coloring round trip") {
    TemporalColoring col = coloring_from_rows(2, {{1, 1, 2}, {1, 2, 1}});
    std::string text = serialize_temporal_coloring(col);
    CHECK(text == "tc 1\n3 2 2\n1 1 2\n1 2 1\n");
    CHECK(parse_temporal_coloring(text) == col);
}

static int coloring_error_line(const std::string& text) {
    try {
        parse_temporal_coloring(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

TEST_CASE("coloring parse errors") {
    CHECK(coloring_error_line("tc 2\n1 1 1\n1\n") == 1);
    CHECK(coloring_error_line("tc 1\n1 1\n1\n") == 2);
    CHECK(coloring_error_line("tc 1\n2 1 2\n1 3\n") == 3);   // color above k
    CHECK(coloring_error_line("tc 1\n2 1 2\n0 1\n") == 3);   // color below 1
    CHECK(coloring_error_line("tc 1\n2 1 2\n1\n") == 3);     // short row
    CHECK(coloring_error_line("tc 1\n2 1 2\n1 2 1\n") == 3); // long row
    CHECK(coloring_error_line("tc 1\n2 2 2\n1 2\n") == 3);   // missing row
    CHECK(coloring_error_line("tc 1\n2 1 2\n1 2\n2 1\n") == 4); // extra row
}

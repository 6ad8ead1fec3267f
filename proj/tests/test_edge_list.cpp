#include "doctest.h"

#include <fstream>
#include <sstream>

#include "testutil.hpp"
#include "tmatch/edge_list.hpp"

using namespace tmatch;
using namespace testutil;

TEST_CASE("whitespace edge lists parse one triple per data line") {
    std::istringstream in(
        "# SNAP style comment\n"
        "12 34 1082040961\n"
        "\n"
        "% KONECT style comment\n"
        "34 12 1082040999\n");
    auto triples = parse_edge_list(in);
    REQUIRE(triples.size() == 2);
    CHECK(triples[0].src == "12");
    CHECK(triples[0].dst == "34");
    CHECK(triples[0].time == 1082040961);
    CHECK(triples[1].time == 1082040999);
}

TEST_CASE("a 4th numeric column is the KONECT timestamp, weight ignored") {
    std::istringstream in("5 7 1 1082040961\n");
    auto triples = parse_edge_list(in);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0].src == "5");
    CHECK(triples[0].dst == "7");
    CHECK(triples[0].time == 1082040961);
}

TEST_CASE("csv variant with optional header") {
    std::istringstream in("src,dst,time\na,b,10\nb,c,20\n");
    auto triples = parse_edge_list(in, EdgeListFormat::kCsv);
    REQUIRE(triples.size() == 2);
    CHECK(triples[0].src == "a");
    CHECK(triples[1].time == 20);
}

TEST_CASE("autodetect picks csv when the first data line has commas") {
    std::istringstream in("# comment first\nx,y,5\n");
    auto triples = parse_edge_list(in);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0].src == "x");
    CHECK(triples[0].time == 5);
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("short line") {
        std::istringstream in("1 2 3\n4 5\n");
        CHECK_THROWS_WITH_AS(parse_edge_list(in), doctest::Contains("line 2"), ParseError);
    }
    SUBCASE("non-integer time") {
        std::istringstream in("1 2 soon\n");
        try {
            parse_edge_list(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(std::string(e.what()).find("non-integer time") != std::string::npos);
        }
    }
    SUBCASE("float time rejected") {
        std::istringstream in("1 2 3.5\n");
        CHECK_THROWS_AS(parse_edge_list(in), ParseError);
    }
}

TEST_CASE("empty file is an empty sequence, not an error") {
    std::istringstream in("");
    CHECK(parse_edge_list(in).empty());
    std::istringstream only_comments("# nothing\n% here\n");
    CHECK(parse_edge_list(only_comments).empty());
}

TEST_CASE("duplicate lines stay distinct temporal edges") {
    std::istringstream in("a b 5\na b 5\n");
    auto g = build_graph(parse_edge_list(in));
    CHECK(g.edge_count() == 2);
    CHECK(g.pair_edges(0, 1).size() == 2);
}

TEST_CASE("negative times are valid (abstract ticks)") {
    std::istringstream in("a b -5\na c 0\n");
    auto triples = parse_edge_list(in);
    REQUIRE(triples.size() == 2);
    CHECK(triples[0].time == -5);
}

TEST_CASE("round-trip through the canonical format preserves the edge sequence") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_graph(rng, 9, 70, 50);
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        auto g2 = build_graph(parse_edge_list(in));
        REQUIRE(g2.edge_count() == g.edge_count());
        REQUIRE(g2.node_count() == g.node_count());
        for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
            CHECK(g.label(g.edge(i).src) == g2.label(g2.edge(i).src));
            CHECK(g.label(g.edge(i).dst) == g2.label(g2.edge(i).dst));
            CHECK(g.edge(i).time == g2.edge(i).time);
        }
    }
}

TEST_CASE("arbitrary junk either parses or raises ParseError") {
    std::mt19937_64 rng(113);
    const std::string alphabet = "ab1 ,\t#%-.\r389xyz";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const std::size_t len = rng() % 120;
        for (std::size_t i = 0; i < len; ++i) {
            text += alphabet[pick(rng)];
            if (rng() % 12 == 0) text += '\n';
        }
        std::istringstream in(text);
        try {
            auto triples = parse_edge_list(in);
            build_graph(std::move(triples));
        } catch (const ParseError&) {
            // fine: rejected with a diagnostic
        }
    }
    CHECK(true);  // surviving without a crash is the property
    std::mt19937_64 rng2(117);
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const std::size_t len = rng2() % 80;
        for (std::size_t i = 0; i < len; ++i) {
            text += alphabet[rng2() % alphabet.size()];
            if (rng2() % 10 == 0) text += rng2() % 2 ? '\n' : '/';
        }
        try {
            (void)parse_motif(text);
        } catch (const ParseError&) {
        }
    }
    CHECK(true);
}

TEST_CASE("load_dataset reads files and reports counts") {
    auto dir = std::filesystem::temp_directory_path() / "tmatch_test_ingest";
    std::filesystem::create_directories(dir);
    const auto path = dir / "tiny.txt";
    {
        std::ofstream f(path);
        f << "# three edges\na b 1\nb c 2\nc a 3\n";
    }
    std::ostringstream log;
    auto g = load_dataset(path, EdgeListFormat::kAuto, &log);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(log.str().find("3 nodes") != std::string::npos);
    CHECK_THROWS_AS(load_dataset(dir / "missing.txt"), ParseError);
    std::filesystem::remove_all(dir);
}

#include "vrsp/error.hpp"
#include "vrsp/io.hpp"
#include "vrsp/quotient.hpp"

#include "testing.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace vrsp;
using vrsp::testing::fixture;
using vrsp::testing::fixture_path;

namespace {

std::size_t count_edges(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t pos = dot.find(" -> "); pos != std::string::npos; pos = dot.find(" -> ", pos + 1))
    ++n;
  return n;
}

ErrorCode parse_code(const std::string& text) {
  try {
    io::parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::empty_set; // sentinel: parsed fine
}

} // namespace

TEST(ParseGraph, FixturesAreCanonical) {
  for (const char* name : {"fig1.json", "fig2.json", "fig2_g1.json", "fig2_g2.json", "fig3.json", "fig3_g1.json",
                           "fig3_g2.json"}) {
    std::string text = io::read_file(fixture_path(name));
    EXPECT_EQ(io::emit_graph(io::parse_graph(text)), text) << name;
  }
}

TEST(ParseGraph, Fig1Counts) {
  Graph g = fixture("fig1.json");
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.arc_count(), 17u);
  EXPECT_EQ(g.name(), "fig1");
}

TEST(ParseGraph, DanglingArcNamesTheArc) {
  std::string text = R"({"vertices":["u"],"arcs":[{"id":"bad-arc","tail":"u","head":"v","action":"a","weight":"1"}]})";
  try {
    io::parse_graph(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_graph);
    EXPECT_NE(std::string(e.what()).find("bad-arc"), std::string::npos);
  }
}

TEST(ParseGraph, ErrorCategories) {
  EXPECT_EQ(parse_code("{"), ErrorCode::parse_error);
  EXPECT_EQ(parse_code("[]"), ErrorCode::schema_error);
  EXPECT_EQ(parse_code(R"({"arcs":[]})"), ErrorCode::schema_error);
  EXPECT_EQ(parse_code(R"({"vertices":[1],"arcs":[]})"), ErrorCode::schema_error);
  EXPECT_EQ(parse_code(R"({"vertices":["u","v"],"arcs":[{"id":"x","tail":"u","head":"v","action":"a","weight":1}]})"),
            ErrorCode::schema_error);
  EXPECT_EQ(parse_code(R"({"vertices":["u","v"],"arcs":[{"id":"x","tail":"u","head":"v","action":"a","weight":"1/0"}]})"),
            ErrorCode::schema_error);
  EXPECT_EQ(parse_code(R"({"vertices":["u","v"],"arcs":[{"id":"x","tail":"u","head":"v","action":"a","weight":"1"},)"
                       R"({"id":"y","tail":"v","head":"u","action":"a","weight":"1"}]})"),
            ErrorCode::invalid_graph);
}

TEST(ParseGraph, MalformedJsonReportsPosition) {
  try {
    io::parse_graph("{\n  \"vertices\": [\n  oops\n]}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ParseGraph, RationalWeightsRoundTrip) {
  std::string text = R"({"name":"w","vertices":["u","v"],"arcs":[{"id":"x","tail":"u","head":"v","action":"a","weight":"6/4"}]})";
  Graph g = io::parse_graph(text);
  EXPECT_EQ(g.arcs()[0].label.weight, Weight(3, 2));
  EXPECT_NE(io::emit_graph(g).find("\"3/2\""), std::string::npos);
  EXPECT_EQ(io::parse_graph(io::emit_graph(g)), g);
}

TEST(EmitGraph, RandomRoundTrip) {
  vrsp::testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = vrsp::testing::random_dag(rng, {.max_vertices = 8, .max_arcs = 14, .weights = {1, 2, -3}});
    std::string text = io::emit_graph(g);
    EXPECT_EQ(io::parse_graph(text), g);
    EXPECT_EQ(io::emit_graph(io::parse_graph(text)), text);
  }
}

TEST(EmitDot, SingleArc) {
  Graph g = vrsp::testing::make_graph("one", {"u", "v"}, {{"u", "v", "a"}});
  std::string dot = io::emit_dot(g);
  EXPECT_NE(dot.find(R"("u" -> "v" [label="a,1"])"), std::string::npos) << dot;
  EXPECT_EQ(count_edges(dot), 1u);
}

TEST(EmitDot, Fig1) {
  Graph g = fixture("fig1.json");
  std::string dot = io::emit_dot(g);
  EXPECT_EQ(count_edges(dot), 17u);
  EXPECT_EQ(dot, io::emit_dot(io::parse_graph(io::emit_graph(g))));
}

TEST(EmitDot, ContractedRowsRenderAsChain) {
  Graph q = contract_family(fixture("fig1.json"), vrsp::testing::family_fixture("fig1.rows"), "y");
  std::string dot = io::emit_dot(q);
  std::size_t nodes = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);)
    if (line.find(" -> ") == std::string::npos && line.ends_with(";"))
      ++nodes;
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(count_edges(dot), 2u);
}

TEST(EmitDot, QuotesAwkwardIds) {
  Graph g = vrsp::testing::make_graph("q\"", {"a\"b", "c\\d"}, {{"a\"b", "c\\d", "x"}});
  std::string dot = io::emit_dot(g);
  EXPECT_NE(dot.find(R"("a\"b" -> "c\\d")"), std::string::npos) << dot;
}

TEST(Family, ParseAndEmit) {
  VertexFamily f = io::parse_family("# comment\n u1, u2 \n\nu3\n");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], (std::set<VertexId>{"u1", "u2"}));
  EXPECT_EQ(io::parse_family(io::emit_family(f)), f);
  EXPECT_THROW(io::parse_family("u1,,u2\n"), Error);
  EXPECT_THROW(io::parse_family("u1,u1\n"), Error);
  EXPECT_THROW(io::parse_family("u1\nu1\n"), Error);
  EXPECT_THROW(io::parse_family("u1,\n"), Error);
}

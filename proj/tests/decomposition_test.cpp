#include "vrsp/decomposition.hpp"
#include "vrsp/error.hpp"
#include "vrsp/isomorphism.hpp"
#include "vrsp/products.hpp"

#include "testing.hpp"

#include <gtest/gtest.h>

using namespace vrsp;
using vrsp::testing::family_fixture;
using vrsp::testing::fixture;
using vrsp::testing::path;

namespace {

std::set<LabelPair> labels(std::initializer_list<const char*> actions) {
  std::set<LabelPair> out;
  for (const char* a : actions)
    out.emplace(a, 1);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::parse_error;
}

} // namespace

TEST(VerifyDecomposition, Fig1Accepted) {
  Graph g = fixture("fig1.json");
  auto report = verify_decomposition(g, family_fixture("fig1.rows"), family_fixture("fig1.cols"));
  for (Condition c : all_conditions)
    EXPECT_EQ(report.conditions.at(c).status, Status::pass) << to_string(c) << ": " << report.conditions.at(c).witness;
  ASSERT_TRUE(report.accepted());
  EXPECT_EQ(report.row_count, 3u);
  EXPECT_EQ(report.column_count, 4u);
  ASSERT_TRUE(report.factors);
  EXPECT_TRUE(isomorphic(report.factors->first, path({"a", "a"})));
  EXPECT_TRUE(isomorphic(report.factors->second, path({"b", "b", "c"})));
}

TEST(VerifyDecomposition, Fig2Rejected) {
  auto report = verify_decomposition(fixture("fig2.json"), family_fixture("fig2.rows"), family_fixture("fig2.cols"));
  EXPECT_FALSE(report.accepted());
  auto failed = report.failed();
  EXPECT_TRUE(failed.contains(Condition::C1));
  EXPECT_TRUE(failed.contains(Condition::C3));
  // G/cols has three vertices while each row has two, so C6 fails as well.
  EXPECT_EQ(failed, (std::set<Condition>{Condition::C1, Condition::C3, Condition::C6}));
  EXPECT_EQ(report.conditions.at(Condition::FINAL).status, Status::not_evaluated);
  EXPECT_NE(report.conditions.at(Condition::C1).witness.find("a2"), std::string::npos);
  EXPECT_FALSE(report.factors);
}

TEST(VerifyDecomposition, Fig3Rejected) {
  auto report = verify_decomposition(fixture("fig3.json"), family_fixture("fig3.rows"), family_fixture("fig3.cols"));
  EXPECT_FALSE(report.accepted());
  auto failed = report.failed();
  EXPECT_TRUE(failed.contains(Condition::C4));
  // G/cols carries parallel b and c arcs, unlike either single-arc row.
  EXPECT_EQ(failed, (std::set<Condition>{Condition::C4, Condition::C6}));
}

TEST(VerifyDecomposition, SharedLabelsFailC7) {
  // a 2x2 grid whose four arcs all carry the same label
  Graph g = vrsp::testing::make_graph("sq", {"p", "q", "r", "s"},
                                      {{"p", "q", "a"}, {"r", "s", "a"}, {"p", "r", "a"}, {"q", "s", "a"}});
  auto report = verify_decomposition(g, VertexFamily({{"p", "q"}, {"r", "s"}}), VertexFamily({{"p", "r"}, {"q", "s"}}));
  EXPECT_EQ(report.failed(), std::set<Condition>{Condition::C7});
  EXPECT_EQ(report.conditions.at(Condition::FINAL).status, Status::not_evaluated);
}

TEST(VerifyDecomposition, CyclicQuotientIsAC6Failure) {
  Graph g = vrsp::testing::make_graph("p", {"u", "v", "w"}, {{"u", "v", "a"}, {"v", "w", "b"}});
  auto report = verify_decomposition(g, VertexFamily({{"u", "w"}, {"v"}}), VertexFamily({{"u", "v", "w"}}));
  EXPECT_EQ(report.conditions.at(Condition::C6).status, Status::fail);
  EXPECT_NE(report.conditions.at(Condition::C6).witness.find("cycle"), std::string::npos);
}

TEST(VerifyDecomposition, Preconditions) {
  Graph two = vrsp::testing::make_graph("two", {"a", "b"}, {});
  EXPECT_EQ(code_of([&] { verify_decomposition(two, VertexFamily({{"a"}}), VertexFamily({{"b"}})); }),
            ErrorCode::not_connected);
  Graph g = fixture("fig3.json");
  EXPECT_EQ(code_of([&] { verify_decomposition(g, VertexFamily({{"zz"}}), VertexFamily({{"u1"}})); }),
            ErrorCode::unknown_vertex);
}

TEST(LayersFromLabelSplit, Fig1) {
  Graph g = fixture("fig1.json");
  auto layers = layers_from_label_split(g, labels({"a"}));
  ASSERT_EQ(layers.rows.size(), 3u);
  ASSERT_EQ(layers.cols.size(), 4u);
  for (const auto& s : layers.rows.sets())
    EXPECT_EQ(s.size(), 4u);
  for (const auto& s : layers.cols.sets())
    EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(layers.rows, family_fixture("fig1.rows"));
  EXPECT_TRUE(verify_decomposition(g, layers.rows, layers.cols).accepted());
}

TEST(LayersFromLabelSplit, Fig1WrongSplit) {
  Graph g = fixture("fig1.json");
  auto layers = layers_from_label_split(g, labels({"b"}));
  auto report = verify_decomposition(g, layers.rows, layers.cols);
  EXPECT_FALSE(report.accepted());
  EXPECT_TRUE(report.failed().contains(Condition::C6));
}

TEST(LayersFromLabelSplit, Degenerate) {
  Graph g = fixture("fig1.json");
  EXPECT_EQ(code_of([&] { layers_from_label_split(g, label_set(g)); }), ErrorCode::degenerate_split);
  EXPECT_EQ(code_of([&] { layers_from_label_split(g, {}); }), ErrorCode::degenerate_split);
  EXPECT_EQ(code_of([&] { layers_from_label_split(g, labels({"z"})); }), ErrorCode::degenerate_split);
}

TEST(FindDecompositions, Fig1) {
  auto found = find_decompositions(fixture("fig1.json"));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].left_labels, labels({"a"}));
  EXPECT_EQ(found[0].right_labels, labels({"b", "c"}));
  EXPECT_TRUE(isomorphic(found[0].first, path({"a", "a"})));
  EXPECT_TRUE(isomorphic(found[0].second, path({"b", "b", "c"})));
}

TEST(FindDecompositions, SingleArcHasNoSplit) {
  EXPECT_TRUE(find_decompositions(path({"a"})).empty());
}

TEST(FindDecompositions, SquareOfTwoLabels) {
  auto found = find_decompositions(cartesian(path({"a"}, "y"), path({"b"}, "x")));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].left_labels, labels({"a"}));
  EXPECT_TRUE(isomorphic(found[0].first, path({"a"})));
  EXPECT_TRUE(isomorphic(found[0].second, path({"b"})));
}

TEST(FindDecompositions, Errors) {
  Graph two = vrsp::testing::make_graph("two", {"a", "b"}, {});
  EXPECT_EQ(code_of([&] { find_decompositions(two); }), ErrorCode::not_connected);
  EXPECT_EQ(code_of([&] { find_decompositions(fixture("fig1.json"), {.max_labels = 2}); }),
            ErrorCode::label_budget_exceeded);
}

TEST(PrimeFactors, ThreeFactorProduct) {
  Graph g = cartesian(cartesian(path({"a"}, "p"), path({"b", "b"}, "q")), path({"c"}, "r"));
  auto found = find_decompositions(g);
  EXPECT_EQ(found.size(), 3u);
  auto primes = prime_factors(g);
  ASSERT_EQ(primes.size(), 3u);
  std::multiset<std::size_t> sizes;
  for (const Graph& f : primes)
    sizes.insert(f.vertex_count());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 2, 3}));
}

TEST(DecompositionProperties, SynthesisRoundTrip) {
  vrsp::testing::Rng rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    Graph h1 = vrsp::testing::random_dag(
        rng, {.min_vertices = 2, .max_vertices = 4, .max_arcs = 5, .actions = {"a", "b"}, .connected = true});
    Graph h2 = vrsp::testing::random_dag(
        rng, {.min_vertices = 2, .max_vertices = 4, .max_arcs = 5, .actions = {"c", "d"}, .connected = true});
    Graph g = cartesian(h1, h2);
    auto found = find_decompositions(g);
    bool recovered = false;
    for (const auto& d : found) {
      EXPECT_EQ(d.report.row_count * d.report.column_count, g.vertex_count());
      EXPECT_EQ(d.report.conditions.at(Condition::FINAL).status, Status::pass);
      EXPECT_TRUE(isomorphic(g, vrsp::vrsp(d.first, d.second).graph));
      recovered |= (isomorphic(d.first, h1) && isomorphic(d.second, h2)) ||
                   (isomorphic(d.first, h2) && isomorphic(d.second, h1));
    }
    EXPECT_TRUE(recovered) << "trial " << trial;
  }
}

TEST(DecompositionProperties, LayerSplitsArePartitions) {
  vrsp::testing::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = vrsp::testing::random_dag(rng, {.min_vertices = 2, .max_vertices = 8, .max_arcs = 12, .connected = true});
    auto all = label_set(g);
    if (all.size() < 2)
      continue;
    std::set<LabelPair> left{*all.begin()};
    auto layers = layers_from_label_split(g, left);
    for (const VertexFamily* fam : {&layers.rows, &layers.cols}) {
      std::size_t total = 0;
      for (const auto& s : fam->sets())
        total += s.size();
      EXPECT_EQ(total, g.vertex_count());
      EXPECT_EQ(fam->covered().size(), g.vertex_count());
    }
    // soundness: whenever the hypotheses hold, the conclusion does too
    auto report = verify_decomposition(g, layers.rows, layers.cols);
    bool hypotheses = report.failed().empty();
    if (hypotheses)
      EXPECT_EQ(report.conditions.at(Condition::FINAL).status, Status::pass);
  }
}

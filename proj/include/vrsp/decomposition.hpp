#pragma once

#include "vrsp/graph.hpp"
#include "vrsp/quotient.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vrsp {

// Hypotheses of the Cartesian decomposition check, plus the conclusion.
//   C1  every vertex and arc lies in some row or column subgraph
//   C2  the rows cover V(G)          C3  the columns cover V(G)
//   C4  rows pairwise isomorphic     C5  columns pairwise isomorphic
//   C6  G/rows ≅ every column and G/cols ≅ every row
//   C7  row labels and column labels are disjoint
//   FINAL  G ≅ (G/rows) ⧅ (G/cols); evaluated only if C1..C7 hold
enum class Condition { C1, C2, C3, C4, C5, C6, C7, FINAL };

inline constexpr std::array<Condition, 8> all_conditions{Condition::C1, Condition::C2, Condition::C3,
                                                         Condition::C4, Condition::C5, Condition::C6,
                                                         Condition::C7, Condition::FINAL};

std::string_view to_string(Condition c);

enum class Status { pass, fail, not_evaluated };

std::string_view to_string(Status s);

struct ConditionResult {
  Status status = Status::not_evaluated;
  std::string witness;
};

struct DecompositionReport {
  std::map<Condition, ConditionResult> conditions;
  /// (G/rows, G/cols), present iff accepted().
  std::optional<std::pair<Graph, Graph>> factors;
  std::size_t row_count = 0;   // m
  std::size_t column_count = 0; // n

  bool accepted() const;
  std::set<Condition> failed() const;
};

/// Checks every hypothesis for the given row and column layer families and,
/// when all hold, builds the factors and confirms G ≅ G1 ⧅ G2.
///
/// Throws Error(not_connected) for an empty or disconnected `g`, and the
/// family errors of VertexFamily::check_against. Contraction failures are
/// reported as a C6 failure, not thrown.
DecompositionReport verify_decomposition(const Graph& g, const VertexFamily& rows, const VertexFamily& cols);

struct LayerFamilies {
  VertexFamily rows;
  VertexFamily cols;
};

/// rows: components of the arcs NOT labelled from `left_labels`;
/// cols: components of the arcs labelled from `left_labels`.
/// Throws Error(degenerate_split) unless `left_labels` is a non-empty proper
/// subset of label_set(g).
LayerFamilies layers_from_label_split(const Graph& g, const std::set<LabelPair>& left_labels);

struct Decomposition {
  std::set<LabelPair> left_labels;
  std::set<LabelPair> right_labels;
  Graph first;  // carries left_labels
  Graph second; // carries right_labels
  DecompositionReport report;
};

inline constexpr std::size_t default_max_labels = 20;

struct SearchOptions {
  std::size_t max_labels = default_max_labels;
};

/// Tries every unordered label bipartition (the smallest label always on the
/// left) and returns the accepted ones ordered by their left label set.
/// Throws Error(not_connected) and Error(label_budget_exceeded).
std::vector<Decomposition> find_decompositions(const Graph& g, const SearchOptions& options = {});

/// Splits `g` along the first accepted bipartition and recurses into both
/// factors until none decomposes further.
std::vector<Graph> prime_factors(const Graph& g, const SearchOptions& options = {});

} // namespace vrsp

#include "vrsp/decomposition.hpp"

#include "vrsp/error.hpp"
#include "vrsp/isomorphism.hpp"
#include "vrsp/products.hpp"

#include <algorithm>

namespace vrsp {

std::string_view to_string(Condition c) {
  switch (c) {
  case Condition::C1: return "C1";
  case Condition::C2: return "C2";
  case Condition::C3: return "C3";
  case Condition::C4: return "C4";
  case Condition::C5: return "C5";
  case Condition::C6: return "C6";
  case Condition::C7: return "C7";
  case Condition::FINAL: return "FINAL";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::not_evaluated: return "not_evaluated";
  }
  return "?";
}

bool DecompositionReport::accepted() const {
  for (Condition c : all_conditions) {
    auto it = conditions.find(c);
    if (it == conditions.end() || it->second.status != Status::pass)
      return false;
  }
  return true;
}

std::set<Condition> DecompositionReport::failed() const {
  std::set<Condition> out;
  for (const auto& [c, r] : conditions)
    if (r.status == Status::fail)
      out.insert(c);
  return out;
}

namespace {

constexpr std::size_t max_listed = 5;

std::string list_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < max_listed; ++i) {
    if (i)
      out += ", ";
    out += ids[i];
  }
  if (ids.size() > max_listed)
    out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

ConditionResult passed(std::string witness = {}) {
  return {Status::pass, std::move(witness)};
}

ConditionResult failed(std::string witness) {
  return {Status::fail, std::move(witness)};
}

// A prefix no vertex of `g` starts with, so minted ids never collide.
std::string fresh_prefix(const Graph& g, std::string prefix) {
  auto clashes = [&] {
    return std::any_of(g.vertices().begin(), g.vertices().end(),
                       [&](const VertexId& v) { return v.starts_with(prefix); });
  };
  while (clashes())
    prefix += "~";
  return prefix;
}

ConditionResult cover(const Graph& g, const VertexFamily& family, std::string_view what) {
  std::set<VertexId> covered = family.covered();
  std::vector<std::string> missing;
  for (const VertexId& v : g.vertices())
    if (!covered.contains(v))
      missing.push_back(v);
  if (missing.empty())
    return passed("every vertex lies in a " + std::string(what) + " set");
  return failed("vertices in no " + std::string(what) + " set: " + list_ids(missing));
}

// Index of the family member holding each vertex, if any.
std::map<VertexId, std::size_t> owners(const VertexFamily& family) {
  std::map<VertexId, std::size_t> out;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const VertexId& v : family[i])
      out.emplace(v, i);
  return out;
}

ConditionResult union_cover(const Graph& g, const VertexFamily& rows, const VertexFamily& cols) {
  auto row_of = owners(rows);
  auto col_of = owners(cols);
  std::vector<std::string> loose_vertices;
  for (const VertexId& v : g.vertices())
    if (!row_of.contains(v) && !col_of.contains(v))
      loose_vertices.push_back(v);

  auto same = [](const std::map<VertexId, std::size_t>& owner, const Arc& a) {
    auto t = owner.find(a.tail);
    auto h = owner.find(a.head);
    return t != owner.end() && h != owner.end() && t->second == h->second;
  };
  std::vector<std::string> loose_arcs;
  for (const Arc& a : g.arcs())
    if (!same(row_of, a) && !same(col_of, a))
      loose_arcs.push_back(a.id + " (" + a.tail + " -> " + a.head + ", " + a.label.to_string() + ")");

  if (loose_vertices.empty() && loose_arcs.empty())
    return passed("every vertex and arc lies in a row or column subgraph");
  std::string witness;
  if (!loose_arcs.empty())
    witness = "arcs in no row or column subgraph: " + list_ids(loose_arcs);
  if (!loose_vertices.empty()) {
    if (!witness.empty())
      witness += "; ";
    witness += "vertices in no row or column subgraph: " + list_ids(loose_vertices);
  }
  return failed(witness);
}

ConditionResult uniform(const std::vector<Graph>& layers, std::string_view what) {
  for (std::size_t i = 1; i < layers.size(); ++i)
    if (!isomorphic(layers.front(), layers[i]))
      return failed(std::string(what) + " #1 and " + std::string(what) + " #" + std::to_string(i + 1) +
                    " are not isomorphic");
  return passed("all " + std::to_string(layers.size()) + " " + std::string(what) + " subgraphs are isomorphic");
}

std::set<LabelPair> labels_of(const std::vector<Graph>& layers) {
  std::set<LabelPair> out;
  for (const Graph& l : layers) {
    auto s = label_set(l);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::string label_list(const std::set<LabelPair>& labels) {
  std::vector<std::string> names;
  for (const LabelPair& l : labels)
    names.push_back("(" + l.to_string() + ")");
  return list_ids(names);
}

} // namespace

DecompositionReport verify_decomposition(const Graph& g, const VertexFamily& rows, const VertexFamily& cols) {
  if (g.empty())
    throw Error(ErrorCode::not_connected, "cannot decompose the empty graph");
  if (!is_weakly_connected(g))
    throw Error(ErrorCode::not_connected, "graph '" + g.name() + "' is not weakly connected");
  if (rows.empty() || cols.empty())
    throw Error(ErrorCode::invalid_family, "row and column families must be non-empty");
  rows.check_against(g);
  cols.check_against(g);

  DecompositionReport report;
  report.row_count = rows.size();
  report.column_count = cols.size();
  auto& cond = report.conditions;

  std::vector<Graph> row_graphs, col_graphs;
  for (const auto& s : rows.sets())
    row_graphs.push_back(induced_subgraph(g, s));
  for (const auto& s : cols.sets())
    col_graphs.push_back(induced_subgraph(g, s));

  cond[Condition::C1] = union_cover(g, rows, cols);
  cond[Condition::C2] = cover(g, rows, "row");
  cond[Condition::C3] = cover(g, cols, "column");
  cond[Condition::C4] = uniform(row_graphs, "row");
  cond[Condition::C5] = uniform(col_graphs, "column");

  std::optional<Graph> by_rows, by_cols;
  try {
    by_rows = contract_family(g, rows, fresh_prefix(g, "y~")).renamed(g.name() + "/rows");
    by_cols = contract_family(g, cols, fresh_prefix(g, "x~")).renamed(g.name() + "/cols");
  } catch (const Error& e) {
    std::string witness = e.what();
    if (!e.details().empty() && e.code() == ErrorCode::cycle_created)
      witness += " [" + list_ids(e.details()) + "]";
    cond[Condition::C6] = failed(witness);
  }
  if (by_rows && by_cols) {
    std::string bad;
    for (std::size_t j = 0; j < col_graphs.size() && bad.empty(); ++j)
      if (!isomorphic(*by_rows, col_graphs[j]))
        bad = "G/rows is not isomorphic to column #" + std::to_string(j + 1);
    for (std::size_t i = 0; i < row_graphs.size() && bad.empty(); ++i)
      if (!isomorphic(*by_cols, row_graphs[i]))
        bad = "G/cols is not isomorphic to row #" + std::to_string(i + 1);
    cond[Condition::C6] = bad.empty() ? passed("G/rows matches every column; G/cols matches every row") : failed(bad);
  }

  std::set<LabelPair> row_labels = labels_of(row_graphs);
  std::set<LabelPair> col_labels = labels_of(col_graphs);
  std::set<LabelPair> shared;
  std::set_intersection(row_labels.begin(), row_labels.end(), col_labels.begin(), col_labels.end(),
                        std::inserter(shared, shared.end()));
  cond[Condition::C7] = shared.empty() ? passed("row and column labels are disjoint")
                                       : failed("labels on both rows and columns: " + label_list(shared));

  bool hypotheses = std::all_of(all_conditions.begin(), all_conditions.end() - 1,
                                [&](Condition c) { return cond[c].status == Status::pass; });
  if (!hypotheses) {
    cond[Condition::FINAL] = {Status::not_evaluated, "some hypothesis failed"};
    return report;
  }

  SyncProduct product = vrsp(*by_rows, *by_cols);
  if (auto iso = find_isomorphism(g, product.graph)) {
    cond[Condition::FINAL] = passed("G is isomorphic to G/rows vrsp G/cols (" +
                                    std::to_string(product.graph.vertex_count()) + " vertices, " +
                                    std::to_string(product.graph.arc_count()) + " arcs)");
    report.factors.emplace(std::move(*by_rows), std::move(*by_cols));
  } else {
    cond[Condition::FINAL] = failed("G (" + std::to_string(g.vertex_count()) + " vertices, " +
                                    std::to_string(g.arc_count()) + " arcs) is not isomorphic to G/rows vrsp G/cols (" +
                                    std::to_string(product.graph.vertex_count()) + " vertices, " +
                                    std::to_string(product.graph.arc_count()) + " arcs)");
  }
  return report;
}

LayerFamilies layers_from_label_split(const Graph& g, const std::set<LabelPair>& left_labels) {
  std::set<LabelPair> all = label_set(g);
  for (const LabelPair& l : left_labels)
    if (!all.contains(l))
      throw Error(ErrorCode::degenerate_split, "label (" + l.to_string() + ") does not occur in the graph");
  std::set<LabelPair> right;
  std::set_difference(all.begin(), all.end(), left_labels.begin(), left_labels.end(),
                      std::inserter(right, right.end()));
  if (left_labels.empty() || right.empty())
    throw Error(ErrorCode::degenerate_split, "both sides of a label split must be non-empty");

  return LayerFamilies{VertexFamily(weak_components(spanning_subgraph_by_labels(g, right))),
                       VertexFamily(weak_components(spanning_subgraph_by_labels(g, left_labels)))};
}

std::vector<Decomposition> find_decompositions(const Graph& g, const SearchOptions& options) {
  if (g.empty())
    throw Error(ErrorCode::not_connected, "cannot decompose the empty graph");
  if (!is_weakly_connected(g))
    throw Error(ErrorCode::not_connected, "graph '" + g.name() + "' is not weakly connected");
  std::set<LabelPair> all = label_set(g);
  if (all.size() > options.max_labels)
    throw Error(ErrorCode::label_budget_exceeded, "graph has " + std::to_string(all.size()) +
                                                      " distinct labels; the search cap is " +
                                                      std::to_string(options.max_labels));
  std::vector<Decomposition> out;
  if (all.size() < 2)
    return out;

  const std::vector<LabelPair> labels(all.begin(), all.end());
  const std::size_t rest = labels.size() - 1;
  const std::uint64_t full = (std::uint64_t{1} << rest) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    std::set<LabelPair> left{labels.front()};
    std::set<LabelPair> right;
    for (std::size_t i = 0; i < rest; ++i)
      (mask >> i & 1 ? left : right).insert(labels[i + 1]);

    LayerFamilies layers = layers_from_label_split(g, left);
    DecompositionReport report = verify_decomposition(g, layers.rows, layers.cols);
    if (!report.accepted())
      continue;
    Graph first = report.factors->first;
    Graph second = report.factors->second;
    out.push_back(Decomposition{std::move(left), std::move(right), std::move(first), std::move(second),
                                std::move(report)});
  }
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    return std::lexicographical_compare(a.left_labels.begin(), a.left_labels.end(), b.left_labels.begin(),
                                        b.left_labels.end());
  });
  return out;
}

std::vector<Graph> prime_factors(const Graph& g, const SearchOptions& options) {
  auto found = find_decompositions(g, options);
  if (found.empty())
    return {g};
  std::vector<Graph> out = prime_factors(found.front().first, options);
  auto more = prime_factors(found.front().second, options);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

} // namespace vrsp

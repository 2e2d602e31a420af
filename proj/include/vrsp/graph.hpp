#pragma once

#include "vrsp/label.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace vrsp {

using VertexId = std::string;
using ArcId = std::string;

struct Arc {
  ArcId id;
  VertexId tail;
  VertexId head;
  LabelPair label;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Unchecked graph contents, as read from a file or assembled by hand.
struct RawGraph {
  std::string name;
  std::vector<VertexId> vertices;
  std::vector<Arc> arcs;
};

enum class DiagnosticKind {
  duplicate_vertex,
  duplicate_arc,
  dangling_tail,
  dangling_head,
  self_loop,
  empty_action,
  cycle,
};

struct Diagnostic {
  DiagnosticKind kind;
  std::string subject;             // offending vertex or arc id
  std::vector<VertexId> witness;   // closed vertex walk for `cycle`
  std::string message;
};

/// One entry per violated invariant; empty iff `raw` is a valid labelled
/// directed acyclic multigraph.
std::vector<Diagnostic> validate(const RawGraph& raw);

/// Immutable, validated labelled directed acyclic multigraph.
///
/// Vertices are kept sorted by id and arcs sorted by arc id, so two graphs
/// with the same contents compare equal regardless of input order. Parallel
/// arcs (even with equal labels) are allowed.
class Graph {
public:
  /// The empty graph.
  Graph() = default;

  /// Throws Error(invalid_graph) carrying every diagnostic message.
  static Graph create(RawGraph raw);

  const std::string& name() const noexcept { return name_; }
  Graph renamed(std::string name) const;

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool contains(const VertexId& v) const { return index_.contains(v); }
  /// Position of `v` in vertices(); throws Error(unknown_vertex).
  std::size_t index_of(const VertexId& v) const;
  std::optional<std::size_t> find(const VertexId& v) const;

  /// Arc positions (into arcs()) leaving / entering the vertex at `index`.
  std::span<const std::size_t> out_arcs(std::size_t index) const { return out_[index]; }
  std::span<const std::size_t> in_arcs(std::size_t index) const { return in_[index]; }
  std::size_t tail_index(std::size_t arc) const { return tail_[arc]; }
  std::size_t head_index(std::size_t arc) const { return head_[arc]; }

  std::size_t in_degree(const VertexId& v) const { return in_[index_of(v)].size(); }
  std::size_t out_degree(const VertexId& v) const { return out_[index_of(v)].size(); }

  /// Vertex indices in a topological order (Kahn, smallest index first).
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  RawGraph raw() const;

  /// Same vertices and arcs; names may differ.
  bool same_structure(const Graph& other) const {
    return vertices_ == other.vertices_ && arcs_ == other.arcs_;
  }
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.name_ == b.name_ && a.same_structure(b);
  }

private:
  std::string name_;
  std::vector<VertexId> vertices_;
  std::vector<Arc> arcs_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> tail_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> topo_;
};

std::vector<Diagnostic> validate(const Graph& g);

/// Number of arcs on a longest directed path ending at `v`.
std::size_t level(const Graph& g, const VertexId& v);
/// Levels of all vertices, indexed like g.vertices().
std::vector<std::size_t> levels(const Graph& g);

std::set<VertexId> sources(const Graph& g);
std::set<LabelPair> label_set(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& vs);
Graph spanning_subgraph_by_labels(const Graph& g, const std::set<LabelPair>& keep);

/// Weakly connected components, each sorted, ordered by smallest member.
std::vector<std::set<VertexId>> weak_components(const Graph& g);
bool is_weakly_connected(const Graph& g);

} // namespace vrsp

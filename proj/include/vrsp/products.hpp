#pragma once

#include "vrsp/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

namespace vrsp {

/// Ordered vertex pair of a product; its id is "(left,right)".
struct ProductVertex {
  VertexId left;
  VertexId right;

  VertexId id() const { return "(" + left + "," + right + ")"; }
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

enum class ArcClass { synchronous, asynchronous };

std::string_view to_string(ArcClass c);

/// Result of the intermediate product or the VRSP: the graph plus the class
/// of every arc, keyed by arc id.
struct SyncProduct {
  Graph graph;
  std::unordered_map<ArcId, ArcClass> arc_class;

  ArcClass class_of(const ArcId& id) const { return arc_class.at(id); }
  std::size_t count(ArcClass c) const;
};

/// label_set(g1) ∩ label_set(g2).
std::set<LabelPair> synchronising_labels(const Graph& g1, const Graph& g2);

/// Cartesian product. A g1 arc `a` copied at x is named "L(a,x)", a g2 arc
/// `b` copied at y is named "R(y,b)". Throws Error(empty_factor).
Graph cartesian(const Graph& g1, const Graph& g2);

/// Cartesian product in which every pair of arcs carrying a shared label is
/// replaced by one diagonal arc "D(a1,a2)"; Cartesian copies of shared
/// labels are dropped.
SyncProduct intermediate(const Graph& g1, const Graph& g2);

struct VrspOptions {
  /// When set, removable vertices are processed in a pseudo-random order
  /// drawn from this seed. The result does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Vertex-removing synchronised product: the intermediate product after
/// repeatedly deleting vertices that have in-degree 0 there but not in the
/// Cartesian product, together with their outgoing arcs.
SyncProduct vrsp(const Graph& g1, const Graph& g2, const VrspOptions& options = {});

} // namespace vrsp

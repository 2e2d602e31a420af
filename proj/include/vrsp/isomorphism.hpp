#pragma once

#include "vrsp/graph.hpp"

#include <cstddef>
#include <map>
#include <optional>

namespace vrsp {

/// Vertex bijection V(g1) -> V(g2) witnessing a label-preserving
/// multigraph isomorphism.
struct IsoMapping {
  std::map<VertexId, VertexId> pairs;

  const VertexId& operator()(const VertexId& v) const { return pairs.at(v); }
  IsoMapping inverse() const;
  /// (other ∘ this): first this, then other.
  IsoMapping then(const IsoMapping& other) const;

  friend bool operator==(const IsoMapping&, const IsoMapping&) = default;
};

/// Backtracking matcher over colour-refined vertex classes. Returns a witness
/// iff g1 ≅ g2 (labels compared as full pairs, arc multiplicities counted).
std::optional<IsoMapping> find_isomorphism(const Graph& g1, const Graph& g2);

inline bool isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

/// True iff `m` is a bijection V(g1) -> V(g2) under which, for every ordered
/// vertex pair, the label multisets of the arcs between them agree.
bool is_isomorphism(const Graph& g1, const Graph& g2, const IsoMapping& m);

inline constexpr std::size_t brute_force_vertex_limit = 8;

/// Exhaustive check over all vertex bijections. Throws
/// Error(size_limit_exceeded) above brute_force_vertex_limit vertices.
bool brute_force_isomorphic(const Graph& g1, const Graph& g2);

} // namespace vrsp

#pragma once

#include "vrsp/graph.hpp"

#include <set>
#include <span>
#include <string>
#include <vector>

namespace vrsp {

/// Ordered list of pairwise disjoint, non-empty vertex sets.
class VertexFamily {
public:
  VertexFamily() = default;

  /// Throws Error(invalid_family) on an empty member set or overlapping sets.
  explicit VertexFamily(std::vector<std::set<VertexId>> sets);

  const std::vector<std::set<VertexId>>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const std::set<VertexId>& operator[](std::size_t i) const { return sets_[i]; }

  /// Union of all member sets.
  std::set<VertexId> covered() const;

  /// Throws Error(unknown_vertex) if a member is not a vertex of `host`.
  void check_against(const Graph& host) const;

  friend bool operator==(const VertexFamily&, const VertexFamily&) = default;

private:
  std::vector<std::set<VertexId>> sets_;
};

/// G/X: replaces `x` by the vertex `new_id`.
///
/// Arcs inside `x` are dropped; arcs with one end in `x` are redirected to
/// `new_id` keeping label and arc id. When redirection makes arcs coming
/// from different vertex pairs coincide (same ends, same label), they are
/// identified: the result carries, per label, as many parallel arcs as the
/// largest multiplicity found on any single original pair. Arcs that were
/// already parallel in `g` therefore stay parallel.
///
/// Throws Error(empty_set), Error(unknown_vertex), Error(id_collision) when
/// `new_id` names a vertex outside `x`, and Error(cycle_created) with a
/// witness walk in details() when the quotient is cyclic.
Graph contract(const Graph& g, const std::set<VertexId>& x, const VertexId& new_id);

/// Contracts every set of `family` in turn; set i becomes `id_prefix + (i+1)`.
Graph contract_family(const Graph& g, const VertexFamily& family, const std::string& id_prefix);

/// As above but contracting in the given permutation of set indices. Minted
/// ids stay tied to set indices, so every order yields the same graph.
Graph contract_family(const Graph& g, const VertexFamily& family, const std::string& id_prefix,
                      std::span<const std::size_t> order);

} // namespace vrsp

#include "vrsp/quotient.hpp"

#include "vrsp/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace vrsp {

VertexFamily::VertexFamily(std::vector<std::set<VertexId>> sets) : sets_(std::move(sets)) {
  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].empty())
      throw Error(ErrorCode::invalid_family, "vertex set #" + std::to_string(i + 1) + " is empty");
    for (const VertexId& v : sets_[i]) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh)
        throw Error(ErrorCode::invalid_family,
                    "vertex '" + v + "' appears in sets #" + std::to_string(it->second + 1) + " and #" +
                        std::to_string(i + 1));
    }
  }
}

std::set<VertexId> VertexFamily::covered() const {
  std::set<VertexId> out;
  for (const auto& s : sets_)
    out.insert(s.begin(), s.end());
  return out;
}

void VertexFamily::check_against(const Graph& host) const {
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (const VertexId& v : sets_[i])
      if (!host.contains(v))
        throw Error(ErrorCode::unknown_vertex,
                    "vertex set #" + std::to_string(i + 1) + " names unknown vertex '" + v + "'");
}

Graph contract(const Graph& g, const std::set<VertexId>& x, const VertexId& new_id) {
  if (x.empty())
    throw Error(ErrorCode::empty_set, "cannot contract an empty vertex set");
  for (const VertexId& v : x)
    g.index_of(v);
  if (g.contains(new_id) && !x.contains(new_id))
    throw Error(ErrorCode::id_collision, "new vertex id '" + new_id + "' already names a vertex outside the set");

  RawGraph raw;
  raw.name = g.name();
  for (const VertexId& v : g.vertices())
    if (!x.contains(v))
      raw.vertices.push_back(v);
  raw.vertices.push_back(new_id);

  auto mapped = [&](const VertexId& v) -> const VertexId& { return x.contains(v) ? new_id : v; };

  // (new tail, new head, label) -> original (tail, head) -> arcs sorted by id.
  // g.arcs() is sorted by id, so each inner list is too.
  using Target = std::tuple<VertexId, VertexId, LabelPair>;
  std::map<Target, std::map<std::pair<VertexId, VertexId>, std::vector<const Arc*>>> redirected;

  for (const Arc& a : g.arcs()) {
    bool tail_in = x.contains(a.tail);
    bool head_in = x.contains(a.head);
    if (tail_in && head_in)
      continue;
    if (!tail_in && !head_in) {
      raw.arcs.push_back(a);
      continue;
    }
    redirected[{mapped(a.tail), mapped(a.head), a.label}][{a.tail, a.head}].push_back(&a);
  }

  // Rank r of the merged class is the smallest id among the rank-r arcs of
  // the contributing pairs. This is associative, so repeated contraction is
  // independent of order.
  for (const auto& [target, by_pair] : redirected) {
    std::size_t multiplicity = 0;
    for (const auto& [pair, arcs] : by_pair)
      multiplicity = std::max(multiplicity, arcs.size());
    for (std::size_t r = 0; r < multiplicity; ++r) {
      const Arc* pick = nullptr;
      for (const auto& [pair, arcs] : by_pair)
        if (r < arcs.size() && (!pick || arcs[r]->id < pick->id))
          pick = arcs[r];
      raw.arcs.push_back(Arc{pick->id, std::get<0>(target), std::get<1>(target), pick->label});
    }
  }

  auto diagnostics = validate(raw);
  for (const Diagnostic& d : diagnostics)
    if (d.kind == DiagnosticKind::cycle)
      throw Error(ErrorCode::cycle_created, "contracting into '" + new_id + "' creates " + d.message, d.witness);
  return Graph::create(std::move(raw));
}

Graph contract_family(const Graph& g, const VertexFamily& family, const std::string& id_prefix) {
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return contract_family(g, family, id_prefix, order);
}

Graph contract_family(const Graph& g, const VertexFamily& family, const std::string& id_prefix,
                      std::span<const std::size_t> order) {
  family.check_against(g);
  std::vector<std::size_t> check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i || check.size() != family.size())
      throw Error(ErrorCode::invalid_family, "contraction order is not a permutation of the family");

  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < family.size(); ++i) {
    ids.push_back(id_prefix + std::to_string(i + 1));
    if (g.contains(ids.back()) && !family[i].contains(ids.back()))
      throw Error(ErrorCode::id_collision,
                  "minted id '" + ids.back() + "' already names a vertex outside set #" + std::to_string(i + 1));
  }

  Graph current = g;
  for (std::size_t i : order)
    current = contract(current, family[i], ids[i]);
  return current;
}

} // namespace vrsp

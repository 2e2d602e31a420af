#include "vrsp/products.hpp"

#include "vrsp/error.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

namespace vrsp {

std::string_view to_string(ArcClass c) {
  return c == ArcClass::synchronous ? "synchronous" : "asynchronous";
}

std::size_t SyncProduct::count(ArcClass c) const {
  return static_cast<std::size_t>(
      std::count_if(arc_class.begin(), arc_class.end(), [c](const auto& kv) { return kv.second == c; }));
}

namespace {

void require_factors(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty())
    throw Error(ErrorCode::empty_factor, "product factors must have at least one vertex");
}

VertexId pair_id(const VertexId& l, const VertexId& r) {
  return ProductVertex{l, r}.id();
}

RawGraph product_vertices(const Graph& g1, const Graph& g2, const std::string& kind) {
  RawGraph raw;
  raw.name = kind + "(" + g1.name() + "," + g2.name() + ")";
  raw.vertices.reserve(g1.vertex_count() * g2.vertex_count());
  for (const VertexId& u : g1.vertices())
    for (const VertexId& x : g2.vertices())
      raw.vertices.push_back(pair_id(u, x));
  return raw;
}

// Cartesian arcs whose label is not in `skip`.
void add_cartesian_arcs(RawGraph& raw, const Graph& g1, const Graph& g2, const std::set<LabelPair>& skip) {
  for (const Arc& a : g1.arcs()) {
    if (skip.contains(a.label))
      continue;
    for (const VertexId& x : g2.vertices())
      raw.arcs.push_back(Arc{"L(" + a.id + "," + x + ")", pair_id(a.tail, x), pair_id(a.head, x), a.label});
  }
  for (const Arc& b : g2.arcs()) {
    if (skip.contains(b.label))
      continue;
    for (const VertexId& y : g1.vertices())
      raw.arcs.push_back(Arc{"R(" + y + "," + b.id + ")", pair_id(y, b.tail), pair_id(y, b.head), b.label});
  }
}

Graph build(RawGraph raw) {
  // Ids that contain ',' or parentheses can in principle collide once paired.
  auto diagnostics = validate(raw);
  for (const Diagnostic& d : diagnostics)
    if (d.kind == DiagnosticKind::duplicate_vertex || d.kind == DiagnosticKind::duplicate_arc)
      throw Error(ErrorCode::id_collision, "product ids collide: " + d.message);
  return Graph::create(std::move(raw));
}

} // namespace

std::set<LabelPair> synchronising_labels(const Graph& g1, const Graph& g2) {
  std::set<LabelPair> l1 = label_set(g1);
  std::set<LabelPair> l2 = label_set(g2);
  std::set<LabelPair> out;
  std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(), std::inserter(out, out.end()));
  return out;
}

Graph cartesian(const Graph& g1, const Graph& g2) {
  require_factors(g1, g2);
  RawGraph raw = product_vertices(g1, g2, "cartesian");
  add_cartesian_arcs(raw, g1, g2, {});
  return build(std::move(raw));
}

SyncProduct intermediate(const Graph& g1, const Graph& g2) {
  require_factors(g1, g2);
  const std::set<LabelPair> shared = synchronising_labels(g1, g2);

  RawGraph raw = product_vertices(g1, g2, "intermediate");
  add_cartesian_arcs(raw, g1, g2, shared);
  const std::size_t asynchronous = raw.arcs.size();

  for (const Arc& a1 : g1.arcs()) {
    if (!shared.contains(a1.label))
      continue;
    for (const Arc& a2 : g2.arcs())
      if (a2.label == a1.label)
        raw.arcs.push_back(Arc{"D(" + a1.id + "," + a2.id + ")", pair_id(a1.tail, a2.tail),
                               pair_id(a1.head, a2.head), a1.label});
  }

  SyncProduct out;
  for (std::size_t k = 0; k < raw.arcs.size(); ++k)
    out.arc_class.emplace(raw.arcs[k].id, k < asynchronous ? ArcClass::asynchronous : ArcClass::synchronous);
  out.graph = build(std::move(raw));
  return out;
}

SyncProduct vrsp(const Graph& g1, const Graph& g2, const VrspOptions& options) {
  SyncProduct inter = intermediate(g1, g2);
  const Graph& h = inter.graph;

  // Cartesian in-degree of (u,x) is in(u) + in(x); positive iff the pair
  // has level > 0 in the Cartesian product.
  std::vector<std::size_t> cart_in(h.vertex_count());
  for (const VertexId& u : g1.vertices())
    for (const VertexId& x : g2.vertices())
      cart_in[h.index_of(pair_id(u, x))] = g1.in_degree(u) + g2.in_degree(x);

  std::vector<std::size_t> indeg(h.vertex_count());
  for (std::size_t i = 0; i < h.vertex_count(); ++i)
    indeg[i] = h.in_arcs(i).size();

  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < h.vertex_count(); ++i)
    if (indeg[i] == 0 && cart_in[i] > 0)
      work.push_back(i);

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed)
    rng.emplace(*options.shuffle_seed);

  std::vector<bool> removed(h.vertex_count(), false);
  while (!work.empty()) {
    std::size_t pick = work.size() - 1;
    if (rng)
      pick = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(*rng);
    std::size_t v = work[pick];
    work[pick] = work.back();
    work.pop_back();

    removed[v] = true;
    for (std::size_t k : h.out_arcs(v)) {
      std::size_t w = h.head_index(k);
      if (--indeg[w] == 0 && cart_in[w] > 0)
        work.push_back(w);
    }
  }

  RawGraph raw;
  raw.name = "vrsp(" + g1.name() + "," + g2.name() + ")";
  for (std::size_t i = 0; i < h.vertex_count(); ++i)
    if (!removed[i])
      raw.vertices.push_back(h.vertices()[i]);
  SyncProduct out;
  for (std::size_t k = 0; k < h.arc_count(); ++k) {
    if (removed[h.tail_index(k)])
      continue;
    const Arc& a = h.arcs()[k];
    raw.arcs.push_back(a);
    out.arc_class.emplace(a.id, inter.class_of(a.id));
  }
  out.graph = Graph::create(std::move(raw));
  return out;
}

} // namespace vrsp

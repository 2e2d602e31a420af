#include "vrsp/graph.hpp"

#include "vrsp/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace vrsp {

namespace {

std::string arc_text(const Arc& a) {
  return "arc '" + a.id + "' (" + a.tail + " -> " + a.head + ")";
}

// Returns a closed vertex walk if the arcs between known vertices contain a
// directed cycle. Self-loops are reported separately and skipped here.
std::optional<std::vector<VertexId>> find_cycle(const std::vector<VertexId>& vertices,
                                                const std::vector<Arc>& arcs) {
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    index.emplace(sorted[i], i);

  std::vector<std::vector<std::size_t>> succ(sorted.size());
  for (const Arc& a : arcs) {
    auto t = index.find(a.tail);
    auto h = index.find(a.head);
    if (t == index.end() || h == index.end() || t->second == h->second)
      continue;
    succ[t->second].push_back(h->second);
  }
  for (auto& s : succ)
    std::sort(s.begin(), s.end());

  enum : char { white, grey, black };
  std::vector<char> colour(sorted.size(), white);
  std::vector<std::size_t> parent(sorted.size(), SIZE_MAX);

  for (std::size_t root = 0; root < sorted.size(); ++root) {
    if (colour[root] != white)
      continue;
    // iterative DFS: (vertex, next successor position)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = grey;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == succ[v].size()) {
        colour[v] = black;
        stack.pop_back();
        continue;
      }
      std::size_t w = succ[v][pos++];
      if (colour[w] == grey) {
        std::vector<VertexId> walk{sorted[w]};
        std::vector<VertexId> back;
        for (std::size_t x = v; x != w; x = parent[x])
          back.push_back(sorted[x]);
        walk.insert(walk.end(), back.rbegin(), back.rend());
        walk.push_back(sorted[w]);
        return walk;
      }
      if (colour[w] == white) {
        colour[w] = grey;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

std::string join_walk(const std::vector<VertexId>& walk) {
  std::string out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i)
      out += " -> ";
    out += walk[i];
  }
  return out;
}

} // namespace

std::vector<Diagnostic> validate(const RawGraph& raw) {
  std::vector<Diagnostic> out;

  std::unordered_set<VertexId> seen_vertices;
  for (const VertexId& v : raw.vertices) {
    if (!seen_vertices.insert(v).second)
      out.push_back({DiagnosticKind::duplicate_vertex, v, {}, "duplicate vertex id '" + v + "'"});
  }

  std::unordered_set<ArcId> seen_arcs;
  for (const Arc& a : raw.arcs) {
    if (!seen_arcs.insert(a.id).second)
      out.push_back({DiagnosticKind::duplicate_arc, a.id, {}, "duplicate arc id '" + a.id + "'"});
    if (!seen_vertices.contains(a.tail))
      out.push_back({DiagnosticKind::dangling_tail, a.id, {},
                     arc_text(a) + ": tail '" + a.tail + "' is not a vertex"});
    if (!seen_vertices.contains(a.head))
      out.push_back({DiagnosticKind::dangling_head, a.id, {},
                     arc_text(a) + ": head '" + a.head + "' is not a vertex"});
    if (a.tail == a.head)
      out.push_back({DiagnosticKind::self_loop, a.id, {a.tail, a.head}, arc_text(a) + " is a self-loop"});
    if (a.label.action.empty())
      out.push_back({DiagnosticKind::empty_action, a.id, {}, arc_text(a) + " has an empty action name"});
  }

  if (auto walk = find_cycle(raw.vertices, raw.arcs)) {
    std::string subject = walk->front();
    out.push_back({DiagnosticKind::cycle, subject, *walk, "directed cycle " + join_walk(*walk)});
  }
  return out;
}

std::vector<Diagnostic> validate(const Graph& g) {
  return validate(g.raw());
}

Graph Graph::create(RawGraph raw) {
  auto diagnostics = validate(raw);
  if (!diagnostics.empty()) {
    std::vector<std::string> messages;
    for (const auto& d : diagnostics)
      messages.push_back(d.message);
    std::string summary = "invalid graph";
    if (!raw.name.empty())
      summary += " '" + raw.name + "'";
    summary += ": " + messages.front();
    if (messages.size() > 1)
      summary += " (and " + std::to_string(messages.size() - 1) + " more)";
    throw Error(ErrorCode::invalid_graph, summary, std::move(messages));
  }

  Graph g;
  g.name_ = std::move(raw.name);
  g.vertices_ = std::move(raw.vertices);
  g.arcs_ = std::move(raw.arcs);
  std::sort(g.vertices_.begin(), g.vertices_.end());
  std::sort(g.arcs_.begin(), g.arcs_.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });

  const std::size_t n = g.vertices_.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    g.index_.emplace(g.vertices_[i], i);
  g.out_.resize(n);
  g.in_.resize(n);
  g.tail_.reserve(g.arcs_.size());
  g.head_.reserve(g.arcs_.size());
  for (std::size_t k = 0; k < g.arcs_.size(); ++k) {
    std::size_t t = g.index_.at(g.arcs_[k].tail);
    std::size_t h = g.index_.at(g.arcs_[k].head);
    g.tail_.push_back(t);
    g.head_.push_back(h);
    g.out_[t].push_back(k);
    g.in_[h].push_back(k);
  }

  std::vector<std::size_t> pending(n);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<std::size_t>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = g.in_[i].size();
    if (pending[i] == 0)
      ready.push(i);
  }
  g.topo_.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    g.topo_.push_back(v);
    for (std::size_t k : g.out_[v])
      if (--pending[g.head_[k]] == 0)
        ready.push(g.head_[k]);
  }
  return g;
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::optional<std::size_t> Graph::find(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw Error(ErrorCode::unknown_vertex, "unknown vertex id '" + v + "'");
  return it->second;
}

RawGraph Graph::raw() const {
  return RawGraph{name_, vertices_, arcs_};
}

std::vector<std::size_t> levels(const Graph& g) {
  std::vector<std::size_t> lvl(g.vertex_count(), 0);
  for (std::size_t v : g.topological_order())
    for (std::size_t k : g.out_arcs(v)) {
      std::size_t h = g.head_index(k);
      lvl[h] = std::max(lvl[h], lvl[v] + 1);
    }
  return lvl;
}

std::size_t level(const Graph& g, const VertexId& v) {
  std::size_t idx = g.index_of(v);
  return levels(g)[idx];
}

std::set<VertexId> sources(const Graph& g) {
  std::set<VertexId> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.in_arcs(i).empty())
      out.insert(g.vertices()[i]);
  return out;
}

std::set<LabelPair> label_set(const Graph& g) {
  std::set<LabelPair> out;
  for (const Arc& a : g.arcs())
    out.insert(a.label);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& vs) {
  for (const VertexId& v : vs)
    g.index_of(v);
  RawGraph raw;
  raw.name = g.name();
  raw.vertices.assign(vs.begin(), vs.end());
  for (const Arc& a : g.arcs())
    if (vs.contains(a.tail) && vs.contains(a.head))
      raw.arcs.push_back(a);
  return Graph::create(std::move(raw));
}

Graph spanning_subgraph_by_labels(const Graph& g, const std::set<LabelPair>& keep) {
  RawGraph raw;
  raw.name = g.name();
  raw.vertices.assign(g.vertices().begin(), g.vertices().end());
  for (const Arc& a : g.arcs())
    if (keep.contains(a.label))
      raw.arcs.push_back(a);
  return Graph::create(std::move(raw));
}

std::vector<std::set<VertexId>> weak_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t k = 0; k < g.arc_count(); ++k) {
    std::size_t a = root(g.tail_index(k));
    std::size_t b = root(g.head_index(k));
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }

  // Vertices are sorted, so the first time a root is met its component's
  // smallest member is being visited.
  std::vector<std::set<VertexId>> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.emplace(root(i), out.size());
    if (fresh)
      out.emplace_back();
    out[it->second].insert(g.vertices()[i]);
  }
  return out;
}

bool is_weakly_connected(const Graph& g) {
  return weak_components(g).size() <= 1;
}

} // namespace vrsp

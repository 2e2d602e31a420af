#include "vrsp/isomorphism.hpp"

#include "vrsp/error.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace vrsp {

IsoMapping IsoMapping::inverse() const {
  IsoMapping out;
  for (const auto& [from, to] : pairs)
    out.pairs.emplace(to, from);
  return out;
}

IsoMapping IsoMapping::then(const IsoMapping& other) const {
  IsoMapping out;
  for (const auto& [from, to] : pairs)
    out.pairs.emplace(from, other(to));
  return out;
}

namespace {

using LabelKey = int;

struct LabelTable {
  std::map<LabelPair, LabelKey> keys;
  LabelKey key(const LabelPair& l) {
    return keys.emplace(l, static_cast<LabelKey>(keys.size())).first->second;
  }
};

// Sorted label keys on the arcs u -> v, for every pair with at least one arc.
class PairTable {
public:
  PairTable(const Graph& g, LabelTable& labels) : n_(g.vertex_count()) {
    for (std::size_t k = 0; k < g.arc_count(); ++k)
      table_[slot(g.tail_index(k), g.head_index(k))].push_back(labels.key(g.arcs()[k].label));
    for (auto& [_, v] : table_)
      std::sort(v.begin(), v.end());
  }

  const std::vector<LabelKey>& at(std::size_t u, std::size_t v) const {
    auto it = table_.find(slot(u, v));
    return it == table_.end() ? empty_ : it->second;
  }

private:
  std::size_t slot(std::size_t u, std::size_t v) const { return u * n_ + v; }
  std::size_t n_;
  std::unordered_map<std::size_t, std::vector<LabelKey>> table_;
  std::vector<LabelKey> empty_;
};

// Colour refinement run jointly on both graphs so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g1, const Graph& g2, LabelTable& labels) {
  using Signature = std::vector<long long>;
  std::array<const Graph*, 2> graphs{&g1, &g2};
  std::array<std::vector<int>, 2> colour;

  {
    std::map<Signature, int> palette;
    for (int s = 0; s < 2; ++s) {
      const Graph& g = *graphs[s];
      auto lvl = levels(g);
      colour[s].resize(g.vertex_count());
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<long long> in, out;
        for (std::size_t k : g.in_arcs(v))
          in.push_back(labels.key(g.arcs()[k].label));
        for (std::size_t k : g.out_arcs(v))
          out.push_back(labels.key(g.arcs()[k].label));
        std::sort(in.begin(), in.end());
        std::sort(out.begin(), out.end());
        Signature sig{static_cast<long long>(in.size()), static_cast<long long>(out.size()),
                      static_cast<long long>(lvl[v]), -1};
        sig.insert(sig.end(), in.begin(), in.end());
        sig.push_back(-2);
        sig.insert(sig.end(), out.begin(), out.end());
        colour[s][v] = palette.emplace(sig, static_cast<int>(palette.size())).first->second;
      }
    }
  }

  std::size_t classes = 0;
  for (;;) {
    std::map<Signature, int> palette;
    std::array<std::vector<int>, 2> next;
    for (int s = 0; s < 2; ++s) {
      const Graph& g = *graphs[s];
      next[s].resize(g.vertex_count());
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::tuple<int, int, int>> around;
        for (std::size_t k : g.in_arcs(v))
          around.emplace_back(0, labels.key(g.arcs()[k].label), colour[s][g.tail_index(k)]);
        for (std::size_t k : g.out_arcs(v))
          around.emplace_back(1, labels.key(g.arcs()[k].label), colour[s][g.head_index(k)]);
        std::sort(around.begin(), around.end());
        Signature sig{colour[s][v]};
        for (auto [d, l, c] : around) {
          sig.push_back(d);
          sig.push_back(l);
          sig.push_back(c);
        }
        next[s][v] = palette.emplace(sig, static_cast<int>(palette.size())).first->second;
      }
    }
    colour = std::move(next);
    if (palette.size() == classes)
      break;
    classes = palette.size();
  }
  return {std::move(colour[0]), std::move(colour[1])};
}

class Matcher {
public:
  Matcher(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2) {
    auto [c1, c2] = refine(g1, g2, labels_);
    colour1_ = std::move(c1);
    colour2_ = std::move(c2);
    pairs1_.emplace(g1, labels_);
    pairs2_.emplace(g2, labels_);
  }

  std::optional<IsoMapping> run() {
    const std::size_t n = g1_.vertex_count();
    std::map<int, std::size_t> hist1, hist2;
    for (int c : colour1_)
      ++hist1[c];
    for (int c : colour2_)
      ++hist2[c];
    if (hist1 != hist2)
      return std::nullopt;

    for (std::size_t w = 0; w < n; ++w)
      by_colour_[colour2_[w]].push_back(w);
    plan(hist1);

    map_.assign(n, npos);
    used_.assign(n, false);
    if (!extend(0))
      return std::nullopt;
    IsoMapping out;
    for (std::size_t v = 0; v < n; ++v)
      out.pairs.emplace(g1_.vertices()[v], g2_.vertices()[map_[v]]);
    return out;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Match order: rarest colour first, then grow along arcs so each new
  // vertex is constrained by already-mapped neighbours.
  void plan(const std::map<int, std::size_t>& hist) {
    const std::size_t n = g1_.vertex_count();
    std::vector<std::size_t> links(n, 0);
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = npos;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v])
          continue;
        if (best == npos)
          best = v;
        else if (std::make_tuple(-static_cast<long>(links[v]), hist.at(colour1_[v])) <
                 std::make_tuple(-static_cast<long>(links[best]), hist.at(colour1_[best])))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (std::size_t k : g1_.out_arcs(best))
        ++links[g1_.head_index(k)];
      for (std::size_t k : g1_.in_arcs(best))
        ++links[g1_.tail_index(k)];
    }
  }

  bool consistent(std::size_t v, std::size_t w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      std::size_t u = order_[i];
      std::size_t x = map_[u];
      if (pairs1_->at(v, u) != pairs2_->at(w, x) || pairs1_->at(u, v) != pairs2_->at(x, w))
        return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size())
      return true;
    std::size_t v = order_[depth];
    for (std::size_t w : by_colour_[colour1_[v]]) {
      if (used_[w] || !consistent(v, w, depth))
        continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1))
        return true;
      used_[w] = false;
      map_[v] = npos;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  LabelTable labels_;
  std::vector<int> colour1_, colour2_;
  std::optional<PairTable> pairs1_, pairs2_;
  std::map<int, std::vector<std::size_t>> by_colour_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

} // namespace

std::optional<IsoMapping> find_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.arc_count() != g2.arc_count())
    return std::nullopt;
  return Matcher(g1, g2).run();
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const IsoMapping& m) {
  if (g1.vertex_count() != g2.vertex_count() || m.pairs.size() != g1.vertex_count())
    return false;
  std::set<VertexId> image;
  for (const auto& [from, to] : m.pairs) {
    if (!g1.contains(from) || !g2.contains(to))
      return false;
    image.insert(to);
  }
  if (image.size() != g2.vertex_count())
    return false;

  using Key = std::pair<VertexId, VertexId>;
  std::map<Key, std::multiset<LabelPair>> lhs, rhs;
  for (const Arc& a : g1.arcs())
    lhs[{m(a.tail), m(a.head)}].insert(a.label);
  for (const Arc& a : g2.arcs())
    rhs[{a.tail, a.head}].insert(a.label);
  return lhs == rhs;
}

bool brute_force_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count() > brute_force_vertex_limit || g2.vertex_count() > brute_force_vertex_limit)
    throw Error(ErrorCode::size_limit_exceeded,
                "brute-force isomorphism is limited to " + std::to_string(brute_force_vertex_limit) + " vertices");
  if (g1.vertex_count() != g2.vertex_count())
    return false;
  const std::size_t n = g1.vertex_count();

  // Every ordered pair's label multiset, interned to an int.
  std::map<std::multiset<LabelPair>, int> interned;
  auto matrix = [&](const Graph& g) {
    std::vector<std::multiset<LabelPair>> cells(n * n);
    for (const Arc& a : g.arcs())
      cells[g.index_of(a.tail) * n + g.index_of(a.head)].insert(a.label);
    std::vector<int> out(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
      out[i] = interned.emplace(cells[i], static_cast<int>(interned.size())).first->second;
    return out;
  };
  const std::vector<int> m1 = matrix(g1);
  const std::vector<int> m2 = matrix(g2);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = m1[i * n + j] == m2[perm[i] * n + perm[j]];
    if (ok)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace vrsp

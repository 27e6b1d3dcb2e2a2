#pragma once

// Stallings core graphs of finitely generated subgroups of F_r.
//
// A LabeledGraph is a based directed graph whose edges carry generator
// indices; reading an edge backwards spells the inverse letter. Folded graphs
// are immersions into the rose and stand for subgroups: the subgroup is the
// set of labels of closed reduced paths at the basepoint.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "wml/limits.hpp"
#include "wml/words.hpp"

namespace wml {

struct Edge {
  int src = 0;
  int dst = 0;
  int label = 1;  // generator index; traversing src->dst reads x_label
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(int num_vertices, std::vector<Edge> edges, int basepoint, int rank, std::vector<int> marked = {})
      : num_vertices_(num_vertices), edges_(std::move(edges)), basepoint_(basepoint), rank_(rank),
        marked_(std::move(marked)) {
    std::sort(marked_.begin(), marked_.end());
    marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  }

  int num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  int basepoint() const { return basepoint_; }
  int rank() const { return rank_; }  // ambient rank r of F_r
  const std::vector<int>& marked() const { return marked_; }

  /// rank of pi_1 for a connected graph: E - V + 1
  int subgroup_rank() const { return static_cast<int>(edges_.size()) - num_vertices_ + 1; }

  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(num_vertices_), 0);
    for (const auto& e : edges_) {
      ++d[static_cast<std::size_t>(e.src)];
      ++d[static_cast<std::size_t>(e.dst)];
    }
    return d;
  }

  bool is_folded() const {
    std::set<std::tuple<int, int, int>> seen;  // (vertex, label, direction)
    for (const auto& e : edges_) {
      if (!seen.insert({e.src, e.label, +1}).second) return false;
      if (!seen.insert({e.dst, e.label, -1}).second) return false;
    }
    return true;
  }

  bool is_connected() const {
    if (num_vertices_ == 0) return true;
    std::vector<int> parent(static_cast<std::size_t>(num_vertices_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    int comps = num_vertices_;
    for (const auto& e : edges_) {
      int a = find(e.src), b = find(e.dst);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    }
    return comps == 1;
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int num_vertices_ = 1;
  std::vector<Edge> edges_;
  int basepoint_ = 0;
  int rank_ = 0;
  std::vector<int> marked_;
};

using SubgroupBasis = std::vector<Word>;

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      parent_[static_cast<std::size_t>(a)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
      a = parent_[static_cast<std::size_t>(a)];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;  // smaller id stays representative
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// Rebuilds g with vertices merged according to uf, ids compacted in order of
/// their smallest member, duplicate edges dropped.
inline LabeledGraph apply_identification(const LabeledGraph& g, UnionFind& uf) {
  std::vector<int> id(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = uf.find(v);
    if (id[static_cast<std::size_t>(r)] < 0) id[static_cast<std::size_t>(r)] = next++;
  }
  auto map = [&](int v) { return id[static_cast<std::size_t>(uf.find(v))]; };
  std::set<Edge> edges;
  for (const auto& e : g.edges()) edges.insert({map(e.src), map(e.dst), e.label});
  std::vector<int> marked;
  for (int m : g.marked()) marked.push_back(map(m));
  return LabeledGraph(next, {edges.begin(), edges.end()}, map(g.basepoint()), g.rank(), marked);
}

}  // namespace detail

/// Stallings folding: identifies pairs of equally labeled edges sharing a
/// source or a target until the graph is an immersion. The result does not
/// depend on the order of folds.
inline LabeledGraph fold(const LabeledGraph& g) {
  detail::UnionFind uf(g.num_vertices());
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<int, int>, int> out, in;  // (vertex, label) -> other end
    for (const auto& e : g.edges()) {
      int s = uf.find(e.src), t = uf.find(e.dst);
      auto [it, fresh] = out.try_emplace({s, e.label}, t);
      if (!fresh && uf.find(it->second) != t) changed |= uf.unite(it->second, t);
      auto [jt, fresh_in] = in.try_emplace({t, e.label}, s);
      if (!fresh_in && uf.find(jt->second) != s) changed |= uf.unite(jt->second, s);
    }
  }
  return detail::apply_identification(g, uf);
}

/// Folds one explicit pair of equally labeled edges sharing an endpoint.
/// Returns nullopt when the pair is not foldable. Used to exercise fold-order
/// independence.
inline std::optional<LabeledGraph> fold_pair(const LabeledGraph& g, std::size_t i, std::size_t j) {
  const auto& a = g.edges().at(i);
  const auto& b = g.edges().at(j);
  if (i == j || a.label != b.label) return std::nullopt;
  detail::UnionFind uf(g.num_vertices());
  if (a.src == b.src && a.dst != b.dst)
    uf.unite(a.dst, b.dst);
  else if (a.dst == b.dst && a.src != b.src)
    uf.unite(a.src, b.src);
  else
    return std::nullopt;
  return detail::apply_identification(g, uf);
}

/// Removes, repeatedly, unmarked non-basepoint vertices of degree <= 1.
inline LabeledGraph trim(const LabeledGraph& g) {
  std::vector<bool> keep_v(static_cast<std::size_t>(g.num_vertices()), true);
  std::vector<bool> keep_e(g.num_edges(), true);
  std::vector<bool> pinned(static_cast<std::size_t>(g.num_vertices()), false);
  pinned[static_cast<std::size_t>(g.basepoint())] = true;
  for (int m : g.marked()) pinned[static_cast<std::size_t>(m)] = true;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    for (std::size_t k = 0; k < g.num_edges(); ++k) {
      if (!keep_e[k]) continue;
      ++deg[static_cast<std::size_t>(g.edges()[k].src)];
      ++deg[static_cast<std::size_t>(g.edges()[k].dst)];
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (!keep_v[vi] || pinned[vi] || deg[vi] > 1) continue;
      keep_v[vi] = false;
      changed = true;
      for (std::size_t k = 0; k < g.num_edges(); ++k)
        if (keep_e[k] && (g.edges()[k].src == v || g.edges()[k].dst == v)) keep_e[k] = false;
    }
  }
  std::vector<int> id(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (keep_v[static_cast<std::size_t>(v)]) id[static_cast<std::size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < g.num_edges(); ++k)
    if (keep_e[k]) {
      const auto& e = g.edges()[k];
      edges.push_back({id[static_cast<std::size_t>(e.src)], id[static_cast<std::size_t>(e.dst)], e.label});
    }
  std::vector<int> marked;
  for (int m : g.marked()) marked.push_back(id[static_cast<std::size_t>(m)]);
  return LabeledGraph(next, edges, id[static_cast<std::size_t>(g.basepoint())], g.rank(), marked);
}

/// Appends a closed path at the basepoint spelling each word (unfolded).
inline LabeledGraph with_loops(const LabeledGraph& g, const std::vector<Word>& words) {
  int nv = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  int rank = g.rank();
  for (const auto& w : words) {
    rank = std::max(rank, w.rank());
    int cur = g.basepoint();
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? g.basepoint() : nv++;
      Letter l = w[i];
      if (l.sign() > 0)
        edges.push_back({cur, next, l.generator()});
      else
        edges.push_back({next, cur, l.generator()});
      cur = next;
    }
  }
  return LabeledGraph(nv, edges, g.basepoint(), rank, g.marked());
}

/// Folded, trimmed core graph of the subgroup generated by `generators`.
inline LabeledGraph core_graph(const std::vector<Word>& generators, int rank) {
  return trim(fold(with_loops(LabeledGraph(1, {}, 0, rank), generators)));
}

/// Breadth-first relabeling from the basepoint. At each vertex the incident
/// edges are visited by label, outgoing before incoming. Well defined on
/// folded connected graphs, where (label, direction) determines the edge.
inline LabeledGraph canonical(const LabeledGraph& g) {
  const int nv = g.num_vertices();
  std::vector<std::vector<std::tuple<int, int, int>>> adj(static_cast<std::size_t>(nv));  // (label, dir, other)
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.src)].push_back({e.label, 0, e.dst});
    adj[static_cast<std::size_t>(e.dst)].push_back({e.label, 1, e.src});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> id(static_cast<std::size_t>(nv), -1);
  std::vector<int> order;
  id[static_cast<std::size_t>(g.basepoint())] = 0;
  order.push_back(g.basepoint());
  for (std::size_t head = 0; head < order.size(); ++head)
    for (auto [label, dir, other] : adj[static_cast<std::size_t>(order[head])])
      if (id[static_cast<std::size_t>(other)] < 0) {
        id[static_cast<std::size_t>(other)] = static_cast<int>(order.size());
        order.push_back(other);
      }
  for (int v = 0; v < nv; ++v)
    if (id[static_cast<std::size_t>(v)] < 0) {
      id[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
      order.push_back(v);
    }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    edges.push_back({id[static_cast<std::size_t>(e.src)], id[static_cast<std::size_t>(e.dst)], e.label});
  std::sort(edges.begin(), edges.end());
  std::vector<int> marked;
  for (int m : g.marked()) marked.push_back(id[static_cast<std::size_t>(m)]);
  return LabeledGraph(nv, edges, 0, g.rank(), marked);
}

/// Text form used as cache key and for subgroup identity:
///
///   graph v=<V> e=<E> marked=<m1,m2,...>
///   <src> <dst> <label>        (one line per edge, BFS numbering, base = 0)
inline std::string serialize(const LabeledGraph& g) {
  LabeledGraph c = canonical(g);
  std::ostringstream os;
  os << "graph v=" << c.num_vertices() << " e=" << c.num_edges() << " marked=";
  for (std::size_t i = 0; i < c.marked().size(); ++i) os << (i ? "," : "") << c.marked()[i];
  os << '\n';
  for (const auto& e : c.edges()) os << e.src << ' ' << e.dst << ' ' << e.label << '\n';
  return os.str();
}

/// Free basis read off a BFS spanning tree: one element per non-tree edge,
/// in canonical edge order. Requires a folded connected graph.
inline SubgroupBasis extract_basis(const LabeledGraph& g) {
  const int nv = g.num_vertices();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(static_cast<std::size_t>(nv));  // (edge, dir)
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    adj[static_cast<std::size_t>(g.edges()[k].src)].push_back({k, 0});
    adj[static_cast<std::size_t>(g.edges()[k].dst)].push_back({k, 1});
  }
  std::vector<std::optional<Word>> path(static_cast<std::size_t>(nv));
  std::vector<bool> tree(g.num_edges(), false);
  std::vector<int> queue{g.basepoint()};
  path[static_cast<std::size_t>(g.basepoint())] = Word(g.rank());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (auto [k, dir] : adj[static_cast<std::size_t>(v)]) {
      const auto& e = g.edges()[k];
      int other = dir == 0 ? e.dst : e.src;
      if (path[static_cast<std::size_t>(other)]) continue;
      tree[k] = true;
      Word step = Word::from_signed({dir == 0 ? e.label : -e.label}, g.rank());
      path[static_cast<std::size_t>(other)] = *path[static_cast<std::size_t>(v)] * step;
      queue.push_back(other);
    }
  }
  SubgroupBasis basis;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (tree[k]) continue;
    const auto& e = g.edges()[k];
    const auto& ps = path[static_cast<std::size_t>(e.src)];
    const auto& pd = path[static_cast<std::size_t>(e.dst)];
    if (!ps || !pd) throw std::invalid_argument("extract_basis: graph is not connected");
    basis.push_back(*ps * Word::from_signed({e.label}, g.rank()) * pd->inverse());
  }
  return basis;
}

/// Reads w along the folded graph from the basepoint. If the path exists and
/// closes up, returns w in the coordinates of extract_basis(g) (a word over
/// a rank-|basis| alphabet); otherwise nullopt (w is not in the subgroup).
inline std::optional<Word> membership_rewrite(const LabeledGraph& g, const Word& w) {
  const int nv = g.num_vertices();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(static_cast<std::size_t>(nv));
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    adj[static_cast<std::size_t>(g.edges()[k].src)].push_back({k, 0});
    adj[static_cast<std::size_t>(g.edges()[k].dst)].push_back({k, 1});
  }
  // Same spanning tree as extract_basis.
  std::vector<bool> reached(static_cast<std::size_t>(nv), false), tree(g.num_edges(), false);
  std::vector<int> queue{g.basepoint()};
  reached[static_cast<std::size_t>(g.basepoint())] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto [k, dir] : adj[static_cast<std::size_t>(queue[head])]) {
      const auto& e = g.edges()[k];
      int other = dir == 0 ? e.dst : e.src;
      if (reached[static_cast<std::size_t>(other)]) continue;
      reached[static_cast<std::size_t>(other)] = tree[k] = true;
      queue.push_back(other);
    }
  std::vector<int> basis_index(g.num_edges(), 0);
  int b = 0;
  for (std::size_t k = 0; k < g.num_edges(); ++k)
    if (!tree[k]) basis_index[k] = ++b;

  std::map<std::pair<int, int>, std::pair<std::size_t, int>> step;  // (vertex, signed letter) -> (edge, target)
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edges()[k];
    step[{e.src, e.label}] = {k, e.dst};
    step[{e.dst, -e.label}] = {k, e.src};
  }
  Word out(b);
  int v = g.basepoint();
  for (Letter l : w) {
    auto it = step.find({v, l.value()});
    if (it == step.end()) return std::nullopt;
    auto [k, target] = it->second;
    if (!tree[k]) out.push_back(Letter(basis_index[k], l.sign()));
    v = target;
  }
  if (v != g.basepoint()) return std::nullopt;
  return out;
}

inline bool contains(const LabeledGraph& g, const Word& w) { return membership_rewrite(g, w).has_value(); }

/// Identifies every marked vertex with the basepoint and folds: the subgroup
/// generated by labels of paths between marked vertices.
inline LabeledGraph wedge_marked(const LabeledGraph& g) {
  detail::UnionFind uf(g.num_vertices());
  for (int m : g.marked()) uf.unite(g.basepoint(), m);
  LabeledGraph q = detail::apply_identification(g, uf);
  return trim(fold(q));
}

/// Subgroup generated by H and extra words: loops added at the basepoint.
inline LabeledGraph join(const LabeledGraph& h, const std::vector<Word>& words) {
  return trim(fold(with_loops(h, words)));
}

struct FringeMember {
  LabeledGraph graph;
  SubgroupBasis basis;
  std::string key;  // serialize(graph)
};

struct FringeOptions {
  int vertex_cap = 12;
  bool force = false;
};

/// All distinct subgroups obtained as folded quotients of the core graph of
/// <w>: every set partition of its vertices (restricted growth strings) is
/// applied, folded, trimmed and deduplicated by canonical form. Sorted by
/// (rank, canonical text).
inline std::vector<FringeMember> fringe(const Word& w, const FringeOptions& opt = {}) {
  if (w.is_identity()) throw std::invalid_argument("fringe of the identity is not defined");
  const LabeledGraph base = core_graph({w}, w.rank());
  const int nv = base.num_vertices();
  if (nv > opt.vertex_cap && !opt.force)
    throw ResourceLimit("fringe: core graph has " + std::to_string(nv) + " vertices, cap is " +
                        std::to_string(opt.vertex_cap));

  std::map<std::string, LabeledGraph> seen;
  std::vector<int> rgs(static_cast<std::size_t>(nv), 0), maxv(static_cast<std::size_t>(nv), 0);
  for (;;) {
    detail::UnionFind uf(nv);
    std::vector<int> first(static_cast<std::size_t>(nv), -1);
    for (int v = 0; v < nv; ++v) {
      int& f = first[static_cast<std::size_t>(rgs[static_cast<std::size_t>(v)])];
      if (f < 0)
        f = v;
      else
        uf.unite(f, v);
    }
    LabeledGraph q = trim(fold(detail::apply_identification(base, uf)));
    std::string key = serialize(q);
    seen.try_emplace(std::move(key), std::move(q));

    // next restricted growth string: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    int i = nv - 1;
    while (i > 0 && rgs[static_cast<std::size_t>(i)] > maxv[static_cast<std::size_t>(i - 1)]) --i;
    if (i <= 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    maxv[static_cast<std::size_t>(i)] =
        std::max(maxv[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int k = i + 1; k < nv; ++k) {
      rgs[static_cast<std::size_t>(k)] = 0;
      maxv[static_cast<std::size_t>(k)] = maxv[static_cast<std::size_t>(i)];
    }
  }

  std::vector<FringeMember> out;
  for (auto& [key, g] : seen) {
    LabeledGraph c = canonical(g);
    out.push_back({c, extract_basis(c), key});
  }
  std::stable_sort(out.begin(), out.end(), [](const FringeMember& a, const FringeMember& b) {
    return a.graph.subgroup_rank() < b.graph.subgroup_rank();
  });
  return out;
}

}  // namespace wml

#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace duality {

// Finite directed graph on vertices 0..n-1. Loops allowed, no parallel
// edges (set semantics). Immutable after construction.
class DiGraph {
public:
  DiGraph() = default;

  DiGraph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("DiGraph: negative vertex count");
    for (auto [u, v] : edge_list) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("DiGraph: edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                    edge_list.end());
    edges_ = std::move(edge_list);
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : edges_) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& out(int v) const { return out_.at(v); }
  const std::vector<int>& in(int v) const { return in_.at(v); }

  bool has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(u, v));
  }

  bool operator==(const DiGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_, in_;
};

// A vertex map from some source graph into a target graph; entry per
// source vertex. Whether it is a homomorphism is a separate check.
using VertexMap = std::vector<int>;

inline bool is_homomorphism(const DiGraph& g, const DiGraph& h,
                            const VertexMap& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) return false;
  for (int t : f)
    if (t < 0 || t >= h.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(f[u], f[v])) return false;
  return true;
}

namespace detail {

// Backtracking hom search over per-vertex candidate domains with
// arc-consistency pruning (digraph homomorphism as a binary CSP).
class HomSearch {
public:
  HomSearch(const DiGraph& g, const DiGraph& h,
            std::vector<std::vector<char>> dom)
      : g_(g), h_(h), dom_(std::move(dom)) {}

  std::optional<VertexMap> solve() {
    if (h_.vertex_count() == 0)
      return g_.vertex_count() == 0 ? std::optional<VertexMap>(VertexMap{})
                                    : std::nullopt;
    if (!propagate(dom_)) return std::nullopt;
    return search(dom_);
  }

private:
  const DiGraph& g_;
  const DiGraph& h_;
  std::vector<std::vector<char>> dom_;

  static int dom_size(const std::vector<char>& d) {
    return static_cast<int>(std::count(d.begin(), d.end(), 1));
  }

  // AC-3 style sweep to fixpoint: a candidate survives only if every
  // incident source edge can still be matched.
  bool propagate(std::vector<std::vector<char>>& dom) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [u, v] : g_.edges()) {
        for (int t = 0; t < h_.vertex_count(); ++t) {
          if (dom[u][t]) {
            bool ok = false;
            for (int t2 : h_.out(t))
              if (dom[v][t2]) { ok = true; break; }
            if (!ok) { dom[u][t] = 0; changed = true; }
          }
          if (dom[v][t]) {
            bool ok = false;
            for (int t2 : h_.in(t))
              if (dom[u][t2]) { ok = true; break; }
            if (!ok) { dom[v][t] = 0; changed = true; }
          }
        }
        if (dom_size(dom[u]) == 0 || dom_size(dom[v]) == 0) return false;
      }
    }
    for (const auto& d : dom)
      if (dom_size(d) == 0) return false;
    return true;
  }

  std::optional<VertexMap> search(std::vector<std::vector<char>>& dom) const {
    // Pick an undecided vertex with the fewest candidates.
    int best = -1, best_size = 0;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      int s = dom_size(dom[v]);
      if (s > 1 && (best < 0 || s < best_size)) { best = v; best_size = s; }
    }
    if (best < 0) {
      VertexMap f(g_.vertex_count());
      for (int v = 0; v < g_.vertex_count(); ++v)
        f[v] = static_cast<int>(std::find(dom[v].begin(), dom[v].end(), 1) -
                                dom[v].begin());
      return f;
    }
    for (int t = 0; t < h_.vertex_count(); ++t) {
      if (!dom[best][t]) continue;
      auto next = dom;
      std::fill(next[best].begin(), next[best].end(), 0);
      next[best][t] = 1;
      if (propagate(next)) {
        if (auto f = search(next)) return f;
      }
    }
    return std::nullopt;
  }
};

inline std::vector<std::vector<char>> full_domains(const DiGraph& g,
                                                   const DiGraph& h) {
  return std::vector<std::vector<char>>(
      g.vertex_count(), std::vector<char>(h.vertex_count(), 1));
}

}  // namespace detail

// Is there a homomorphism g -> h?  Returns a witness map if so.
inline std::optional<VertexMap> hom_exists(const DiGraph& g, const DiGraph& h) {
  detail::HomSearch s(g, h, detail::full_domains(g, h));
  return s.solve();
}

// Hom search with some source vertices pinned to fixed targets.
inline std::optional<VertexMap> hom_exists_pinned(
    const DiGraph& g, const DiGraph& h,
    const std::vector<std::pair<int, int>>& pins) {
  auto dom = detail::full_domains(g, h);
  for (auto [v, t] : pins) {
    if (v < 0 || v >= g.vertex_count() || t < 0 || t >= h.vertex_count())
      throw std::invalid_argument("hom_exists_pinned: pin out of range");
    // Pins intersect, so conflicting pins on one vertex are unsatisfiable.
    char allowed = dom[v][t];
    std::fill(dom[v].begin(), dom[v].end(), 0);
    dom[v][t] = allowed;
    if (!allowed) return std::nullopt;
  }
  detail::HomSearch s(g, h, std::move(dom));
  return s.solve();
}

// Hom search whose image avoids one target vertex entirely.
inline std::optional<VertexMap> hom_exists_avoiding(const DiGraph& g,
                                                    const DiGraph& h,
                                                    int forbidden) {
  auto dom = detail::full_domains(g, h);
  for (auto& d : dom) d[forbidden] = 0;
  detail::HomSearch s(g, h, std::move(dom));
  return s.solve();
}

// Edge-preserving bijection in both directions, by permutation search.
// Intended for small graphs.
inline bool is_isomorphic(const DiGraph& g, const DiGraph& h) {
  int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const DiGraph& x) {
    std::vector<std::pair<int, int>> d;
    for (int v = 0; v < x.vertex_count(); ++v)
      d.emplace_back(static_cast<int>(x.in(v).size()),
                     static_cast<int>(x.out(v).size()));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;

  std::vector<int> f(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](int v, int t) {
    if (g.in(v).size() != h.in(t).size() || g.out(v).size() != h.out(t).size())
      return false;
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v) != h.has_edge(f[u], t)) return false;
      if (g.has_edge(v, u) != h.has_edge(t, f[u])) return false;
    }
    return g.has_edge(v, v) == h.has_edge(t, t);
  };
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[t] || !consistent(v, t)) continue;
      f[v] = t;
      used[t] = 1;
      if (self(self, v + 1)) return true;
      used[t] = 0;
      f[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

// Component id per vertex (underlying undirected sense), ids numbered
// by first occurrence.
inline std::vector<int> connected_components(const DiGraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.out(v))
        if (comp[w] < 0) { comp[w] = next; stack.push_back(w); }
      for (int w : g.in(v))
        if (comp[w] < 0) { comp[w] = next; stack.push_back(w); }
    }
    ++next;
  }
  return comp;
}

inline int component_count(const DiGraph& g) {
  auto comp = connected_components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

// H's vertices are shifted past G's.
inline DiGraph disjoint_union(const DiGraph& g, const DiGraph& h) {
  auto es = g.edges();
  int off = g.vertex_count();
  for (auto [u, v] : h.edges()) es.emplace_back(u + off, v + off);
  return DiGraph(g.vertex_count() + h.vertex_count(), std::move(es));
}

// In-degree plus out-degree; a loop contributes 2.
inline int total_degree(const DiGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("total_degree: vertex out of range");
  return static_cast<int>(g.in(v).size() + g.out(v).size());
}

// Induced subgraph on the given vertices (kept in the given order);
// also reports the old index of each new vertex.
inline DiGraph induced_subgraph(const DiGraph& g, const std::vector<int>& keep,
                                std::vector<int>* old_index = nullptr) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) pos[keep[i]] = i;
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  if (old_index) *old_index = keep;
  return DiGraph(static_cast<int>(keep.size()), std::move(es));
}

// Text format: first line "n m", then m lines "u v".
inline std::string to_text(const DiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline DiGraph graph_from_text(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("graph text: bad header");
  if (n < 0 || m < 0) throw std::invalid_argument("graph text: bad header");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("graph text: bad edge line");
    es.emplace_back(u, v);
  }
  return DiGraph(n, std::move(es));
}

inline DiGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return graph_from_text(in);
}

}  // namespace duality

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "duality/digraph.hpp"

namespace duality {

// A word over {+,-} encoding an oriented path.
using Word = std::string;

inline bool is_word(const Word& x) {
  for (char c : x)
    if (c != '+' && c != '-') return false;
  return true;
}

inline void check_word(const Word& x) {
  if (!is_word(x)) throw std::invalid_argument("word: letters must be + or -");
}

inline Word word_concat(const Word& x, const Word& y) { return x + y; }

inline Word word_power(const Word& x, int k) {
  if (k < 0) throw std::invalid_argument("word_power: negative exponent");
  Word r;
  r.reserve(x.size() * k);
  for (int i = 0; i < k; ++i) r += x;
  return r;
}

// Swap +/- and reverse; p(x) and p(reverse_complement(x)) are the same
// path read from the other end.
inline Word reverse_complement(const Word& x) {
  Word r(x.rbegin(), x.rend());
  for (char& c : r) c = (c == '+') ? '-' : '+';
  return r;
}

// The oriented path of word x: vertices 0..k, i'th edge forward iff
// x_i = '+'. First vertex is 0, last is k.
inline DiGraph path_of_word(const Word& x) {
  check_word(x);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i] == '+')
      es.emplace_back(i, i + 1);
    else
      es.emplace_back(i + 1, i);
  }
  return DiGraph(static_cast<int>(x.size()) + 1, std::move(es));
}

// Maximal surplus of forward over backward letters over contiguous
// subwords (the empty subword counts, so the result is >= 0).
// Maximal forward-minus-backward imbalance over sub-paths of p(x).  A
// sub-path has no preferred direction, so this is the spread of the
// prefix sums; it is invariant under reverse-complement and cannot
// decrease along a path homomorphism.
inline int height(const Word& x) {
  check_word(x);
  int sum = 0, lo = 0, hi = 0;
  for (char c : x) {
    sum += (c == '+') ? 1 : -1;
    if (sum < lo) lo = sum;
    if (sum > hi) hi = sum;
  }
  return hi - lo;
}

// Boolean n x n relation over a fixed graph: R[u][v] iff some
// homomorphism maps p(x) from u to v.
struct ReachMatrix {
  int n = 0;
  std::vector<char> bits;  // row-major

  ReachMatrix() = default;
  explicit ReachMatrix(int size) : n(size), bits(size * size, 0) {}

  bool at(int u, int v) const { return bits[u * n + v] != 0; }
  void set(int u, int v, bool b = true) { bits[u * n + v] = b ? 1 : 0; }

  bool row_nonempty(int u) const {
    for (int v = 0; v < n; ++v)
      if (at(u, v)) return true;
    return false;
  }
};

// Letter-by-letter frontier propagation.
inline ReachMatrix reach_matrix(const Word& x, const DiGraph& g) {
  check_word(x);
  int n = g.vertex_count();
  ReachMatrix r(n);
  for (int v = 0; v < n; ++v) r.set(v, v);
  for (char c : x) {
    ReachMatrix next(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (!r.at(u, v)) continue;
        const auto& step = (c == '+') ? g.out(v) : g.in(v);
        for (int w : step) next.set(u, w);
      }
    r = next;
  }
  return r;
}

// Boolean product of reach relations.
inline ReachMatrix compose(const ReachMatrix& a, const ReachMatrix& b) {
  ReachMatrix r(a.n);
  for (int u = 0; u < a.n; ++u)
    for (int v = 0; v < a.n; ++v) {
      if (!a.at(u, v)) continue;
      for (int w = 0; w < a.n; ++w)
        if (b.at(v, w)) r.set(u, w);
    }
  return r;
}

// Image of a vertex set under a reach relation.
inline std::vector<char> relation_image(const std::vector<char>& set,
                                        const ReachMatrix& r) {
  std::vector<char> img(r.n, 0);
  for (int u = 0; u < r.n; ++u) {
    if (!set[u]) continue;
    for (int v = 0; v < r.n; ++v)
      if (r.at(u, v)) img[v] = 1;
  }
  return img;
}

// A concrete walk for p(x) in g, as the vertex sequence v_0..v_k, with
// optional pinned endpoints. Deterministic (smallest vertices win).
inline std::optional<std::vector<int>> embed_word(
    const DiGraph& g, const Word& x, std::optional<int> from = std::nullopt,
    std::optional<int> to = std::nullopt) {
  check_word(x);
  int n = g.vertex_count();
  int k = static_cast<int>(x.size());
  std::vector<std::vector<char>> frontier(k + 1, std::vector<char>(n, 0));
  if (from) {
    if (*from < 0 || *from >= n) return std::nullopt;
    frontier[0][*from] = 1;
  } else {
    std::fill(frontier[0].begin(), frontier[0].end(), 1);
  }
  for (int i = 1; i <= k; ++i)
    for (int v = 0; v < n; ++v) {
      if (!frontier[i - 1][v]) continue;
      const auto& step = (x[i - 1] == '+') ? g.out(v) : g.in(v);
      for (int w : step) frontier[i][w] = 1;
    }
  int last = -1;
  if (to) {
    if (*to < 0 || *to >= n || !frontier[k][*to]) return std::nullopt;
    last = *to;
  } else {
    for (int v = 0; v < n; ++v)
      if (frontier[k][v]) { last = v; break; }
    if (last < 0) return std::nullopt;
  }
  std::vector<int> walk(k + 1);
  walk[k] = last;
  for (int i = k; i > 0; --i) {
    for (int v = 0; v < n; ++v) {
      if (!frontier[i - 1][v]) continue;
      bool ok = (x[i - 1] == '+') ? g.has_edge(v, walk[i])
                                  : g.has_edge(walk[i], v);
      if (ok) { walk[i - 1] = v; break; }
    }
  }
  return walk;
}

}  // namespace duality

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "duality/digraph.hpp"

namespace testutil {

// Independent oracle: enumerate all n_h^{n_g} vertex maps.
inline std::optional<duality::VertexMap> brute_force_hom(
    const duality::DiGraph& g, const duality::DiGraph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng == 0) return duality::VertexMap{};
  if (nh == 0) return std::nullopt;
  duality::VertexMap f(ng, 0);
  while (true) {
    if (duality::is_homomorphism(g, h, f)) return f;
    int i = 0;
    while (i < ng && ++f[i] == nh) f[i++] = 0;
    if (i == ng) return std::nullopt;
  }
}

inline duality::DiGraph random_digraph(std::mt19937& rng, int max_n,
                                       double edge_prob = 0.4) {
  std::uniform_int_distribution<int> nd(0, max_n);
  std::bernoulli_distribution ed(edge_prob);
  int n = nd(rng);
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (ed(rng)) es.emplace_back(u, v);
  return duality::DiGraph(n, std::move(es));
}

inline std::string random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> ld(0, max_len);
  std::bernoulli_distribution bit(0.5);
  std::string w;
  int len = ld(rng);
  for (int i = 0; i < len; ++i) w.push_back(bit(rng) ? '+' : '-');
  return w;
}

// All words over {+,-} of length exactly len.
inline std::vector<std::string> all_words(int len) {
  std::vector<std::string> out{""};
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      next.push_back(w + "+");
      next.push_back(w + "-");
    }
    out = std::move(next);
  }
  return out;
}

// All words of length <= len, shortest first.
inline std::vector<std::string> all_words_up_to(int len) {
  std::vector<std::string> out;
  for (int l = 0; l <= len; ++l)
    for (auto& w : all_words(l)) out.push_back(std::move(w));
  return out;
}

}  // namespace testutil

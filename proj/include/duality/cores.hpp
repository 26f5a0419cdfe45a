#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "duality/digraph.hpp"

namespace duality {

// A non-bijective endomorphism of a finite graph misses some vertex, so
// we search per excluded target instead of enumerating all self-maps.
inline std::optional<VertexMap> nonsurjective_endomorphism(const DiGraph& g) {
  for (int w = 0; w < g.vertex_count(); ++w)
    if (auto f = hom_exists_avoiding(g, g, w)) return f;
  return std::nullopt;
}

inline bool is_core(const DiGraph& g) {
  return !nonsurjective_endomorphism(g).has_value();
}

// Retract down to a core: restrict to the image of a non-surjective
// endomorphism until none exists. Terminates in at most n rounds.
inline DiGraph core_of(const DiGraph& g) {
  DiGraph cur = g;
  while (auto f = nonsurjective_endomorphism(cur)) {
    std::vector<char> hit(cur.vertex_count(), 0);
    for (int t : *f) hit[t] = 1;
    std::vector<int> image;
    for (int v = 0; v < cur.vertex_count(); ++v)
      if (hit[v]) image.push_back(v);
    cur = induced_subgraph(cur, image);
  }
  return cur;
}

inline bool equivalent(const DiGraph& g, const DiGraph& h) {
  return hom_exists(g, h).has_value() && hom_exists(h, g).has_value();
}

struct AntichainResult {
  bool ok = true;
  // Offending ordered pair of indices when !ok: graphs[first] -> graphs[second].
  int first = -1;
  int second = -1;
};

inline AntichainResult is_antichain(const std::vector<DiGraph>& graphs) {
  int k = static_cast<int>(graphs.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && hom_exists(graphs[i], graphs[j]))
        return {false, i, j};
  return {};
}

}  // namespace duality

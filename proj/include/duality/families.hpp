#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "duality/automata.hpp"
#include "duality/cores.hpp"
#include "duality/digraph.hpp"
#include "duality/pathwords.hpp"

namespace duality {

// ---------------------------------------------------------------------------
// Named graphs and graph families

// P^s_k = p(+^s (-+^{s-1})^k +)
inline Word word_P(int s, int k) {
  if (s < 1 || k < 0) throw std::invalid_argument("word_P: need s >= 1, k >= 0");
  return word_power("+", s) +
         word_power("-" + word_power("+", s - 1), k) + "+";
}

inline DiGraph gen_P(int s, int k) { return path_of_word(word_P(s, k)); }

// Q_k = p((+(+-)^k)^k ++)
inline Word word_Q(int k) {
  if (k < 1) throw std::invalid_argument("word_Q: need k >= 1");
  return word_power("+" + word_power("+-", k), k) + "++";
}

inline DiGraph gen_Q(int k) { return path_of_word(word_Q(k)); }

// Transitive tournament on s+1 vertices minus the source->sink edge.
inline DiGraph gen_D(int s) {
  if (s < 1) throw std::invalid_argument("gen_D: need s >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      if (!(i == 0 && j == s)) es.emplace_back(i, j);
  return DiGraph(s + 1, std::move(es));
}

// Vertex order: x=0, y=1, b=2, c=3, a=4, r=5.  The edge y->r is needed
// for the duality to hold (exhaustively checked): without it the graph
// on edges 1->2->0->3, 1->3 maps into neither side.  It is also the
// unique single-edge repair consistent with the membership/core
// requirements on the dual.
inline DiGraph gen_G1() {
  return DiGraph(6, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {1, 5},
                     {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

// Vertex order: x=0, y=1, b=2, c=3, a=4, r=5, s=6.
inline DiGraph gen_G2() {
  return DiGraph(7, {{0, 2}, {0, 4}, {0, 3},
                     {1, 3}, {1, 5}, {1, 6}, {1, 4},
                     {2, 4}, {2, 5}, {2, 6},
                     {3, 4}, {3, 5},
                     {4, 5}, {4, 6},
                     {5, 6}});
}

// ---------------------------------------------------------------------------
// Binary trees and the tree gadget t(x,y,s,z)

// Full binary tree: every node is a leaf or has two children.
struct BinaryTree {
  std::shared_ptr<const BinaryTree> left, right;

  bool is_leaf() const { return !left; }
  int leaves() const {
    return is_leaf() ? 1 : left->leaves() + right->leaves();
  }
};

using TreePtr = std::shared_ptr<const BinaryTree>;

inline TreePtr tree_leaf() { return std::make_shared<BinaryTree>(); }

inline TreePtr tree_node(TreePtr left, TreePtr right) {
  if (!left || !right) throw std::invalid_argument("tree_node: null child");
  auto t = std::make_shared<BinaryTree>();
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

// Balanced-parenthesis form: "()" is a leaf, "(LR)" an inner node.
inline TreePtr parse_tree(const std::string& text) {
  size_t pos = 0;
  auto rec = [&](auto&& self) -> TreePtr {
    if (pos >= text.size() || text[pos] != '(')
      throw std::invalid_argument("parse_tree: expected '('");
    ++pos;
    if (pos < text.size() && text[pos] == ')') { ++pos; return tree_leaf(); }
    TreePtr l = self(self);
    TreePtr r = self(self);
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("parse_tree: expected ')'");
    ++pos;
    return tree_node(std::move(l), std::move(r));
  };
  TreePtr t = rec(rec);
  if (pos != text.size())
    throw std::invalid_argument("parse_tree: trailing characters");
  return t;
}

inline std::string tree_to_string(const BinaryTree& t) {
  if (t.is_leaf()) return "()";
  return "(" + tree_to_string(*t.left) + tree_to_string(*t.right) + ")";
}

// All trees of the family with at most max_leaves leaves, smallest first.
inline std::vector<TreePtr> enumerate_trees(int max_leaves) {
  std::vector<std::vector<TreePtr>> by_leaves(max_leaves + 1);
  if (max_leaves >= 1) by_leaves[1].push_back(tree_leaf());
  for (int n = 2; n <= max_leaves; ++n)
    for (int l = 1; l < n; ++l)
      for (const auto& lt : by_leaves[l])
        for (const auto& rt : by_leaves[n - l])
          by_leaves[n].push_back(tree_node(lt, rt));
  std::vector<TreePtr> all;
  for (auto& bucket : by_leaves)
    for (auto& t : bucket) all.push_back(std::move(t));
  return all;
}

namespace detail {

// Incremental construction shared by the plain gadget builder and the
// witness reconstruction (which additionally records a target image per
// new vertex).
struct GadgetBuilder {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> image;  // used only when building a witness

  int add_vertex(int img) {
    image.push_back(img);
    return n++;
  }

  // Attach p(word) starting at vertex a; if b >= 0 the last path vertex
  // is b, otherwise fresh vertices are created all the way.
  // imgs, when given, is the embedded walk v_0..v_k for the word.
  void attach_path(const Word& word, int a, int b,
                   const std::vector<int>* imgs) {
    int prev = a;
    int k = static_cast<int>(word.size());
    for (int i = 1; i <= k; ++i) {
      int cur = (i == k && b >= 0) ? b : add_vertex(imgs ? (*imgs)[i] : -1);
      if (word[i - 1] == '+')
        edges.emplace_back(prev, cur);
      else
        edges.emplace_back(cur, prev);
      prev = cur;
    }
  }

  DiGraph graph() const { return DiGraph(n, edges); }
};

}  // namespace detail

// t(x,y,s,z): replace left/right tree edges by p(x)/p(y) run from parent
// to child, attach p(s) from every leaf and p(z) from the root.
inline DiGraph gadget(const BinaryTree& t, const Word& x, const Word& y,
                      const Word& s, const Word& z) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("gadget: x and y must be nonempty");
  check_word(x); check_word(y); check_word(s); check_word(z);
  detail::GadgetBuilder b;
  auto rec = [&](auto&& self, const BinaryTree& node) -> int {
    int v = b.add_vertex(-1);
    if (node.is_leaf()) {
      b.attach_path(s, v, -1, nullptr);
    } else {
      int l = self(self, *node.left);
      b.attach_path(x, v, l, nullptr);
      int r = self(self, *node.right);
      b.attach_path(y, v, r, nullptr);
    }
    return v;
  };
  int root = rec(rec, t);
  b.attach_path(z, root, -1, nullptr);
  return b.graph();
}

// ---------------------------------------------------------------------------
// Family descriptors and the membership decider

struct FamilyDescriptor;
using FamilyPtr = std::shared_ptr<const FamilyDescriptor>;

// Finite description of a (possibly infinite) family of graphs.
struct FamilyDescriptor {
  enum class Kind { ExplicitList, PathPower, QFamily, TreeFamily, Append,
                    CombineLeft };

  Kind kind;
  std::vector<DiGraph> graphs;  // ExplicitList
  bool truncated = false;       // ExplicitList cut down from an infinite family
  int s = 0;                    // PathPower
  int k_max = 0;                // QFamily (truncated decider)
  Word x, y, s_word, z;         // TreeFamily
  FamilyPtr inner, second;      // Append; CombineLeft uses both

  static FamilyPtr explicit_list(std::vector<DiGraph> gs) {
    auto f = std::make_shared<FamilyDescriptor>();
    f->kind = Kind::ExplicitList;
    f->graphs = std::move(gs);
    return f;
  }
  static FamilyPtr path_power(int s) {
    if (s < 1) throw std::invalid_argument("path_power: need s >= 1");
    auto f = std::make_shared<FamilyDescriptor>();
    f->kind = Kind::PathPower;
    f->s = s;
    return f;
  }
  static FamilyPtr q_family(int k_max) {
    if (k_max < 1) throw std::invalid_argument("q_family: need k_max >= 1");
    auto f = std::make_shared<FamilyDescriptor>();
    f->kind = Kind::QFamily;
    f->k_max = k_max;
    return f;
  }
  static FamilyPtr tree_family(Word x, Word y, Word s, Word z) {
    if (x.empty() || y.empty())
      throw std::invalid_argument("tree_family: x and y must be nonempty");
    check_word(x); check_word(y); check_word(s); check_word(z);
    auto f = std::make_shared<FamilyDescriptor>();
    f->kind = Kind::TreeFamily;
    f->x = std::move(x);
    f->y = std::move(y);
    f->s_word = std::move(s);
    f->z = std::move(z);
    return f;
  }
  static FamilyPtr append(FamilyPtr inner) {
    auto f = std::make_shared<FamilyDescriptor>();
    f->kind = Kind::Append;
    f->inner = std::move(inner);
    return f;
  }
  static FamilyPtr combine_left(FamilyPtr a, FamilyPtr b) {
    auto f = std::make_shared<FamilyDescriptor>();
    f->kind = Kind::CombineLeft;
    f->inner = std::move(a);
    f->second = std::move(b);
    return f;
  }

  // Whether the membership decider is exact or a truncation.
  bool exact() const {
    switch (kind) {
      case Kind::ExplicitList: return !truncated;
      case Kind::QFamily: return false;
      case Kind::Append: return inner->exact();
      case Kind::CombineLeft: return inner->exact() && second->exact();
      default: return true;
    }
  }
};

// A family member together with a homomorphism into the probed graph.
struct Witness {
  DiGraph member;
  VertexMap hom;
};

// Append transform of a single graph: one new out-edge from every sink.
inline DiGraph append_graph(const DiGraph& g) {
  auto es = g.edges();
  int n = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out(v).empty()) es.emplace_back(v, n++);
  return DiGraph(n, std::move(es));
}

// Append transform of a dual: a new universal sink.
inline DiGraph append_dual(const DiGraph& d) {
  auto es = d.edges();
  int n = d.vertex_count();
  for (int v = 0; v < d.vertex_count(); ++v) es.emplace_back(v, n);
  return DiGraph(n + 1, std::move(es));
}

namespace detail {

// Least-fixpoint data for TreeFamily membership: cost[v] >= 1 iff some
// gadget root can map to v (ignoring the z path); the value is the
// minimal number of tree leaves needed, so witness trees come out small.
struct TreeFixpoint {
  std::vector<int> cost;                      // 0 = not derivable
  std::vector<std::pair<int, int>> children;  // node rule (w1,w2), or (-1,-1)
  int rounds = 0;                             // rounds until the set saturates
};

inline TreeFixpoint tree_fixpoint(const DiGraph& g, const ReachMatrix& rx,
                                  const ReachMatrix& ry,
                                  const ReachMatrix& rs) {
  int n = g.vertex_count();
  TreeFixpoint fp;
  fp.cost.assign(n, 0);
  fp.children.assign(n, {-1, -1});
  for (int v = 0; v < n; ++v)
    if (rs.row_nonempty(v)) fp.cost[v] = 1;

  // Phase 1: derivable set. Each round adds a vertex, so it saturates
  // within n rounds.
  std::vector<char> in_set(n, 0);
  for (int v = 0; v < n; ++v) in_set[v] = fp.cost[v] > 0;
  for (bool changed = true; changed;) {
    changed = false;
    ++fp.rounds;
    for (int v = 0; v < n; ++v) {
      if (in_set[v]) continue;
      bool left = false, right = false;
      for (int w = 0; w < n; ++w) {
        left |= (in_set[w] && rx.at(v, w));
        right |= (in_set[w] && ry.at(v, w));
      }
      if (left && right) { in_set[v] = 1; changed = true; }
    }
  }

  // Phase 2: minimal leaf counts over the derivable set, relaxed to a
  // fixpoint. Recorded children always have strictly smaller cost, so
  // derivations unwind into finite trees.
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      int best = 0;
      std::pair<int, int> kids{-1, -1};
      for (int w1 = 0; w1 < n; ++w1) {
        if (!fp.cost[w1] || !rx.at(v, w1)) continue;
        for (int w2 = 0; w2 < n; ++w2) {
          if (!fp.cost[w2] || !ry.at(v, w2)) continue;
          int c = fp.cost[w1] + fp.cost[w2];
          if (best == 0 || c < best) { best = c; kids = {w1, w2}; }
        }
      }
      if (best > 0 && (fp.cost[v] == 0 || best < fp.cost[v])) {
        fp.cost[v] = best;
        fp.children[v] = kids;
        changed = true;
      }
    }
  }
  return fp;
}

// Rebuild a concrete gadget member plus its homomorphism from the
// fixpoint derivation rooted at root_v.
inline Witness tree_witness(const DiGraph& g, const TreeFixpoint& fp,
                            int root_v, const Word& x, const Word& y,
                            const Word& s, const Word& z) {
  GadgetBuilder b;
  auto rec = [&](auto&& self, int v) -> int {
    int node = b.add_vertex(v);
    auto [w1, w2] = fp.children[v];
    if (fp.cost[v] == 1) {  // base rule: v can be a leaf
      auto walk = embed_word(g, s, v);
      b.attach_path(s, node, -1, &*walk);
    } else {
      int l = self(self, w1);
      auto wx = embed_word(g, x, v, w1);
      b.attach_path(x, node, l, &*wx);
      int r = self(self, w2);
      auto wy = embed_word(g, y, v, w2);
      b.attach_path(y, node, r, &*wy);
    }
    return node;
  };
  int root = rec(rec, root_v);
  auto wz = embed_word(g, z, root_v);
  b.attach_path(z, root, -1, &*wz);
  return {b.graph(), b.image};
}

// Subgraph induced by the non-sink vertices, with old indices reported.
inline DiGraph nonsink_subgraph(const DiGraph& g, std::vector<int>* old_idx) {
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.out(v).empty()) keep.push_back(v);
  return induced_subgraph(g, keep, old_idx);
}

}  // namespace detail

// Does some member of F map into g?  Exact for every descriptor except
// QFamily, which probes k <= k_max only. Returns a concrete member and
// homomorphism on success.
inline std::optional<Witness> family_hits(const FamilyDescriptor& f,
                                          const DiGraph& g) {
  using Kind = FamilyDescriptor::Kind;
  switch (f.kind) {
    case Kind::ExplicitList: {
      for (const auto& member : f.graphs)
        if (auto hom = hom_exists(member, g)) return Witness{member, *hom};
      return std::nullopt;
    }
    case Kind::PathPower: {
      Nfa pattern = family_nfa(word_power("+", f.s),
                               "-" + word_power("+", f.s - 1), "+");
      auto word = intersect_nonempty(pattern, nfa_of_graph(g));
      if (!word) return std::nullopt;
      auto walk = embed_word(g, *word);
      return Witness{path_of_word(*word), *walk};
    }
    case Kind::QFamily: {
      Nfa a = nfa_of_graph(g);
      for (int k = 1; k <= f.k_max; ++k) {
        Word w = word_Q(k);
        if (accepts(a, w)) {
          auto walk = embed_word(g, w);
          return Witness{path_of_word(w), *walk};
        }
      }
      return std::nullopt;
    }
    case Kind::TreeFamily: {
      auto rx = reach_matrix(f.x, g);
      auto ry = reach_matrix(f.y, g);
      auto rs = reach_matrix(f.s_word, g);
      auto rz = reach_matrix(f.z, g);
      auto fp = detail::tree_fixpoint(g, rx, ry, rs);
      int root = -1, best = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (fp.cost[v] > 0 && rz.row_nonempty(v) &&
            (root < 0 || fp.cost[v] < best)) {
          root = v;
          best = fp.cost[v];
        }
      if (root < 0) return std::nullopt;
      return detail::tree_witness(g, fp, root, f.x, f.y, f.s_word, f.z);
    }
    case Kind::Append: {
      std::vector<int> old_idx;
      DiGraph core_part = detail::nonsink_subgraph(g, &old_idx);
      auto hit = family_hits(*f.inner, core_part);
      if (!hit) return std::nullopt;
      // Lift the witness: extend each appended vertex along an out-edge
      // of its sink's image in g.
      DiGraph member = append_graph(hit->member);
      VertexMap hom(member.vertex_count(), -1);
      for (int v = 0; v < hit->member.vertex_count(); ++v)
        hom[v] = old_idx[hit->hom[v]];
      int fresh = hit->member.vertex_count();
      for (int v = 0; v < hit->member.vertex_count(); ++v)
        if (hit->member.out(v).empty())
          hom[fresh++] = g.out(hom[v]).front();
      return Witness{std::move(member), std::move(hom)};
    }
    case Kind::CombineLeft: {
      auto h1 = family_hits(*f.inner, g);
      if (!h1) return std::nullopt;
      auto h2 = family_hits(*f.second, g);
      if (!h2) return std::nullopt;
      DiGraph member = disjoint_union(h1->member, h2->member);
      VertexMap hom = h1->hom;
      hom.insert(hom.end(), h2->hom.begin(), h2->hom.end());
      return Witness{std::move(member), std::move(hom)};
    }
  }
  throw std::logic_error("family_hits: unknown kind");
}

// ---------------------------------------------------------------------------
// Constructive dual homomorphisms

struct PairKind {
  enum class Tag { Ds, G1, G2 };
  Tag tag;
  int s = 0;  // for Ds

  static PairKind ds(int s) { return {Tag::Ds, s}; }
  static PairKind g1() { return {Tag::G1, 0}; }
  static PairKind g2() { return {Tag::G2, 0}; }
};

// Either a family member mapping into the probed graph, or a certified
// homomorphism of the probed graph into the dual.
struct PhiResult {
  bool left;
  Witness witness;  // valid when left
  DiGraph dual;     // valid when !left
  VertexMap phi;    // valid when !left
};

namespace detail {

// Level sets for the tree-pair constructions: ends[i] holds the
// possible images of the last vertex of the directed path p(+^i).
inline std::vector<std::vector<char>> path_end_sets(const DiGraph& g,
                                                    int max_len) {
  std::vector<std::vector<char>> ends(max_len + 1);
  ends[0].assign(g.vertex_count(), 1);
  for (int i = 1; i <= max_len; ++i) {
    ends[i].assign(g.vertex_count(), 0);
    for (auto [u, v] : g.edges())
      if (ends[i - 1][u]) ends[i][v] = 1;
  }
  return ends;
}

inline FamilyPtr tree_family_of(PairKind::Tag tag) {
  return tag == PairKind::Tag::G1
             ? FamilyDescriptor::tree_family("+-", "-+", "--", "++")
             : FamilyDescriptor::tree_family("+--", "-+-", "--", "+++");
}

// The numbered assignment steps from the constructive proofs for the
// tree pairs. Returns the candidate map into G1 resp. G2.
inline VertexMap tree_pair_phi(PairKind::Tag tag, const DiGraph& g,
                               const std::vector<std::vector<char>>& ends) {
  constexpr int X = 0, Y = 1, B = 2, C = 3, A = 4, R = 5, S = 6;
  bool g2 = (tag == PairKind::Tag::G2);
  int n = g.vertex_count();
  int levels = g2 ? 5 : 4;
  std::vector<int> level(n, -1);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < levels; ++i)
      if (ends[i][v] && !ends[i + 1][v]) level[v] = i;

  VertexMap phi(n, -1);
  // Step 1: roots of embeddable gadgets (z = empty) inside level 1.
  FamilyPtr fam = tree_family_of(tag);
  auto fp = tree_fixpoint(g, reach_matrix(fam->x, g), reach_matrix(fam->y, g),
                          reach_matrix(fam->s_word, g));
  for (int v = 0; v < n; ++v)
    if (level[v] == 1 && fp.cost[v] > 0) phi[v] = A;
  // Step 2.
  if (!g2) {
    for (int u = 0; u < n; ++u) {
      if (level[u] != 1 || phi[u] >= 0) continue;
      bool hit = false;
      for (int v : g.out(u)) {
        if (level[v] == 3) { hit = true; break; }
        for (int w : g.in(v))
          if (phi[w] == A && level[w] == 1) { hit = true; break; }
        if (hit) break;
      }
      if (hit) phi[u] = B;
    }
  } else {
    auto long_tail = reach_matrix("+----", g);
    auto short_tail = reach_matrix("+--", g);
    for (int u = 0; u < n; ++u) {
      if (level[u] != 1 || phi[u] >= 0) continue;
      bool hit = long_tail.row_nonempty(u);
      for (int v = 0; v < n && !hit; ++v)
        if (phi[v] == A && level[v] == 1 && short_tail.at(u, v)) hit = true;
      if (hit) phi[u] = B;
    }
  }
  // Step 3.
  for (int u = 0; u < n; ++u)
    if (level[u] == 1 && phi[u] < 0) phi[u] = C;
  // Step 4.
  for (int u = 0; u < n; ++u) {
    if (level[u] != 0) continue;
    for (int v : g.out(u))
      if (phi[v] == B) { phi[u] = X; break; }
  }
  // Step 5.
  for (int u = 0; u < n; ++u)
    if (level[u] == 0 && phi[u] < 0) phi[u] = Y;
  // Step 6.
  for (int u = 0; u < n; ++u) {
    if (level[u] != 2) continue;
    bool blocked = false;
    for (int v : g.in(u))
      if (level[v] == 1 && phi[v] == A) { blocked = true; break; }
    if (!blocked) phi[u] = A;
  }
  if (!g2) {
    // Step 7: everything left goes to r.
    for (int u = 0; u < n; ++u)
      if (phi[u] < 0) phi[u] = R;
  } else {
    // Step 7: rest of level 2 goes to r.
    for (int u = 0; u < n; ++u)
      if (level[u] == 2 && phi[u] < 0) phi[u] = R;
    // Step 8: level 3 goes to r unless fed by an r at level 2.
    for (int u = 0; u < n; ++u) {
      if (level[u] != 3) continue;
      bool blocked = false;
      for (int v : g.in(u))
        if (level[v] == 2 && phi[v] == R) { blocked = true; break; }
      if (!blocked) phi[u] = R;
    }
    // Step 9.
    for (int u = 0; u < n; ++u)
      if (phi[u] < 0) phi[u] = S;
  }
  return phi;
}

}  // namespace detail

// The constructive side of the duality theorems: returns exactly one
// branch, and certifies whichever object it returns.
inline PhiResult phi_to_dual(const PairKind& kind, const DiGraph& g) {
  if (kind.tag == PairKind::Tag::Ds) {
    int s = kind.s;
    if (s < 1) throw std::invalid_argument("phi_to_dual: need s >= 1");
    // Type-i vertices: possible images of the last vertex of
    // p(+(+^{s-1}-)^k +^i). The k-loop saturates as a fixpoint.
    ReachMatrix loop_rel = reach_matrix(word_power("+", s - 1) + "-", g);
    std::vector<char> base(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) base[v] = 1;  // ends of p(+)
    std::vector<char> closure = base;
    for (bool changed = true; changed;) {
      changed = false;
      auto img = relation_image(closure, loop_rel);
      for (int v = 0; v < g.vertex_count(); ++v)
        if (img[v] && !closure[v]) { closure[v] = 1; changed = true; }
    }
    std::vector<std::vector<char>> type(s + 1);
    type[0] = closure;
    ReachMatrix fwd = reach_matrix("+", g);
    for (int i = 1; i <= s; ++i) type[i] = relation_image(type[i - 1], fwd);

    bool has_type_s = false;
    for (char c : type[s]) has_type_s |= (c != 0);
    if (has_type_s) {
      auto hit = family_hits(*FamilyDescriptor::path_power(s), g);
      if (!hit)
        throw std::logic_error("phi_to_dual: type-s vertex without witness");
      return {true, std::move(*hit), {}, {}};
    }
    DiGraph dual = gen_D(s);
    VertexMap phi(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!type[0][v]) { phi[v] = 0; continue; }
      for (int i = 1; i <= s; ++i)
        if (type[i - 1][v] && !type[i][v]) phi[v] = i;
    }
    if (!is_homomorphism(g, dual, phi))
      throw std::logic_error("phi_to_dual: constructed map is not a hom");
    return {false, {}, std::move(dual), std::move(phi)};
  }

  bool g2 = (kind.tag == PairKind::Tag::G2);
  int levels = g2 ? 5 : 4;
  DiGraph dual = g2 ? gen_G2() : gen_G1();
  auto ends = detail::path_end_sets(g, levels);
  bool long_path = false;
  for (char c : ends[levels]) long_path |= (c != 0);
  if (long_path) {
    // The directed path of `levels` edges is itself a family member.
    Word w = word_power("+", levels);
    auto walk = embed_word(g, w);
    return {true, Witness{path_of_word(w), *walk}, {}, {}};
  }
  VertexMap phi = detail::tree_pair_phi(kind.tag, g, ends);
  if (is_homomorphism(g, dual, phi))
    return {false, {}, std::move(dual), std::move(phi)};
  // The assignment can only fail when some family member maps in; hand
  // back that witness instead.
  FamilyPtr fam = detail::tree_family_of(kind.tag);
  auto full = std::make_shared<FamilyDescriptor>(*fam);
  full->z = g2 ? "+++" : "++";
  auto hit = family_hits(*full, g);
  if (!hit)
    throw std::logic_error("phi_to_dual: neither branch applies");
  return {true, std::move(*hit), {}, {}};
}

// ---------------------------------------------------------------------------
// Duality-preserving transformations

struct DualityPairSpec {
  FamilyPtr family;
  std::vector<DiGraph> duals;
};

// One application of the append transform to both sides.
inline DualityPairSpec append_pair(const FamilyPtr& family,
                                   const std::vector<DiGraph>& duals) {
  DualityPairSpec out;
  out.family = FamilyDescriptor::append(family);
  for (const auto& d : duals) out.duals.push_back(append_dual(d));
  return out;
}

// Reduced combination of two duality pairs: duals are pooled, and the
// left side keeps cross-dominated members alone while pairing the rest
// into disjoint unions. The classification runs on the supplied finite
// truncations, so the resulting left side is an explicit (truncated)
// list.
inline DualityPairSpec combine_pairs(const DualityPairSpec& p1,
                                     const std::vector<DiGraph>& trunc1,
                                     const DualityPairSpec& p2,
                                     const std::vector<DiGraph>& trunc2) {
  auto classify = [](const std::vector<DiGraph>& own,
                     const std::vector<DiGraph>& other) {
    std::vector<DiGraph> dominated, rest;
    for (const auto& a : own) {
      bool dom = false;
      for (const auto& b : other)
        if (hom_exists(b, a)) { dom = true; break; }
      (dom ? dominated : rest).push_back(a);
    }
    return std::make_pair(dominated, rest);
  };
  auto [dom1, rest1] = classify(trunc1, trunc2);
  auto [dom2, rest2] = classify(trunc2, trunc1);

  std::vector<DiGraph> left = dom1;
  // Drop members equivalent to one already kept (duplicates across the
  // two dominated sets).
  for (const auto& a : dom2) {
    bool dup = false;
    for (const auto& b : left)
      if (equivalent(a, b)) { dup = true; break; }
    if (!dup) left.push_back(a);
  }
  for (const auto& a1 : rest1)
    for (const auto& a2 : rest2) left.push_back(disjoint_union(a1, a2));

  DualityPairSpec out;
  auto combined = std::make_shared<FamilyDescriptor>();
  combined->kind = FamilyDescriptor::Kind::ExplicitList;
  combined->graphs = std::move(left);
  // A finite cut of an infinite input family makes the result evidence,
  // not a certificate.
  combined->truncated =
      p1.family->kind != FamilyDescriptor::Kind::ExplicitList ||
      p2.family->kind != FamilyDescriptor::Kind::ExplicitList ||
      p1.family->truncated || p2.family->truncated;
  out.family = std::move(combined);
  out.duals = p1.duals;
  out.duals.insert(out.duals.end(), p2.duals.begin(), p2.duals.end());
  return out;
}

// ---------------------------------------------------------------------------
// The sparse-witness construction (graphs with a cycle cannot sit in an
// antichain with a finite dual)

struct SparseWitness {
  DiGraph y;
  VertexMap g_hom;  // the canonical homomorphism Y -> A
};

namespace detail {

inline bool edge_on_cycle(const DiGraph& a, int x, int y) {
  if (x == y) return true;                       // loop
  if (a.has_edge(y, x)) return true;             // two-cycle
  // x and y stay connected (undirected) after removing one (x,y) copy.
  std::vector<char> seen(a.vertex_count(), 0);
  std::vector<int> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int dir = 0; dir < 2; ++dir) {
      const auto& nb = dir ? a.in(v) : a.out(v);
      for (int w : nb) {
        if (dir == 0 && v == x && w == y) continue;  // the removed edge
        if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
      }
    }
  }
  return seen[y] != 0;
}

}  // namespace detail

// Y from the no-cycles-in-antichains proof: one copy of A' (edge (x,y)
// redirected through a fresh vertex x') per tournament edge, with the
// copies of x and x' identified with the tournament endpoints.
inline SparseWitness sparse_witness_Y(const DiGraph& a, int x, int y,
                                      const DiGraph& tournament) {
  if (!a.has_edge(x, y))
    throw std::invalid_argument("sparse_witness_Y: (x,y) is not an edge");
  if (!detail::edge_on_cycle(a, x, y))
    throw std::invalid_argument("sparse_witness_Y: edge not on a cycle");
  int nt = tournament.vertex_count();
  for (int u = 0; u < nt; ++u) {
    if (tournament.has_edge(u, u))
      throw std::invalid_argument("sparse_witness_Y: tournament has a loop");
    for (int v = u + 1; v < nt; ++v)
      if (tournament.has_edge(u, v) == tournament.has_edge(v, u))
        throw std::invalid_argument(
            "sparse_witness_Y: not a tournament (need exactly one arc "
            "between each pair)");
  }

  int na = a.vertex_count();
  int xprime = na;  // index of x' within a copy of A'
  std::vector<std::pair<int, int>> es;
  int next = nt;
  for (auto [u, v] : tournament.edges()) {
    // Vertex placement for this copy of A': x -> u, x' -> v, others fresh.
    std::vector<int> place(na + 1, -1);
    place[x] = u;
    place[xprime] = v;
    for (int w = 0; w < na; ++w)
      if (place[w] < 0) place[w] = next++;
    for (auto [p, q] : a.edges())
      if (!(p == x && q == y)) es.emplace_back(place[p], place[q]);
    es.emplace_back(place[xprime], place[y]);
  }
  DiGraph graph_y(next, std::move(es));

  VertexMap g_hom(next, -1);
  for (int u = 0; u < nt; ++u) g_hom[u] = x;
  next = nt;
  for (auto [u, v] : tournament.edges()) {
    (void)u; (void)v;
    for (int w = 0; w < na; ++w)
      if (w != x) g_hom[next++] = w;
  }
  return {std::move(graph_y), std::move(g_hom)};
}

// The transitive tournament, handy as the default X above.
inline DiGraph transitive_tournament(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return DiGraph(n, std::move(es));
}

}  // namespace duality

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "duality/digraph.hpp"
#include "duality/families.hpp"
#include "duality/pathwords.hpp"
#include "duality/verify.hpp"
#include "test_util.hpp"

using namespace duality;

TEST_CASE("construction collapses duplicate edges and keeps loops") {
  DiGraph g(3, {{0, 1}, {0, 1}, {1, 1}, {2, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 1));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(DiGraph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(DiGraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_NOTHROW(DiGraph(0, {}));
}

TEST_CASE("hom_exists: identity case") {
  DiGraph g = gen_G1();
  auto f = hom_exists(g, g);
  REQUIRE(f);
  CHECK(is_homomorphism(g, g, *f));
}

TEST_CASE("hom_exists: directed 4-path does not map into D_3") {
  CHECK_FALSE(hom_exists(path_of_word("++++"), gen_D(3)));
}

TEST_CASE("hom_exists: a loop absorbs everything") {
  DiGraph loop(1, {{0, 0}});
  CHECK(hom_exists(DiGraph(0, {}), loop));
  CHECK(hom_exists(gen_G2(), loop));
  CHECK(hom_exists(path_of_word("+-+-"), loop));
}

TEST_CASE("hom_exists: p(+-) into p(+) folds the path onto the edge") {
  auto f = hom_exists(path_of_word("+-"), path_of_word("+"));
  REQUIRE(f);
  // 0 -> a, 1 -> b, 2 -> a where (a,b) is the single edge; the only hom.
  CHECK(*f == VertexMap{0, 1, 0});
}

TEST_CASE("hom to the empty graph only from the empty graph") {
  DiGraph empty(0, {});
  CHECK(hom_exists(empty, empty));
  CHECK_FALSE(hom_exists(DiGraph(1, {}), empty));
}

TEST_CASE("hom_exists agrees with brute force on small pairs") {
  for (int ng = 0; ng <= 3; ++ng)
    for (int nh = 0; nh <= 3; ++nh) {
      if (ng * nh > 9) continue;
      std::uint64_t tg = std::uint64_t{1} << (ng * ng);
      std::uint64_t th = std::uint64_t{1} << (nh * nh);
      for (std::uint64_t mg = 0; mg < tg; ++mg)
        for (std::uint64_t mh = 0; mh < th; ++mh) {
          DiGraph g = digraph_from_mask(ng, mg);
          DiGraph h = digraph_from_mask(nh, mh);
          auto fast = hom_exists(g, h);
          auto slow = testutil::brute_force_hom(g, h);
          REQUIRE(fast.has_value() == slow.has_value());
          if (fast) CHECK(is_homomorphism(g, h, *fast));
        }
    }
}

TEST_CASE("hom_exists agrees with brute force on random larger pairs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    DiGraph g = testutil::random_digraph(rng, 4);
    DiGraph h = testutil::random_digraph(rng, 3);
    auto fast = hom_exists(g, h);
    auto slow = testutil::brute_force_hom(g, h);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(is_homomorphism(g, h, *fast));
  }
}

TEST_CASE("hom relation is reflexive and composes") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    DiGraph a = testutil::random_digraph(rng, 3);
    DiGraph b = testutil::random_digraph(rng, 3);
    DiGraph c = testutil::random_digraph(rng, 3);
    CHECK(hom_exists(a, a));
    auto fab = hom_exists(a, b);
    auto fbc = hom_exists(b, c);
    if (fab && fbc) {
      VertexMap composed(a.vertex_count());
      for (int v = 0; v < a.vertex_count(); ++v)
        composed[v] = (*fbc)[(*fab)[v]];
      CHECK(is_homomorphism(a, c, composed));
      CHECK(hom_exists(a, c));
    }
  }
}

TEST_CASE("is_homomorphism rejects out-of-range and bad maps") {
  DiGraph g = path_of_word("+");
  CHECK(is_homomorphism(g, g, {0, 1}));
  CHECK_FALSE(is_homomorphism(g, g, {0, 0}));  // constant to loopless vertex
  CHECK_FALSE(is_homomorphism(g, g, {0, 5}));
  CHECK_FALSE(is_homomorphism(g, g, {0}));
}

TEST_CASE("is_isomorphic") {
  DiGraph g = gen_G2();
  CHECK(is_isomorphic(g, g));
  CHECK(is_isomorphic(path_of_word("++-"), path_of_word("+--")));
  CHECK_FALSE(is_isomorphic(path_of_word("++"), path_of_word("+-")));
  CHECK_FALSE(is_isomorphic(DiGraph(1, {}), DiGraph(1, {{0, 0}})));
}

TEST_CASE("connected components") {
  CHECK(component_count(path_of_word("+")) == 1);
  CHECK(component_count(disjoint_union(path_of_word("+"), path_of_word("+"))) ==
        2);
  CHECK(component_count(gen_G2()) == 1);
  CHECK(component_count(DiGraph(0, {})) == 0);
  CHECK(component_count(disjoint_union(gen_D(1), gen_D(2))) == 3);
}

TEST_CASE("disjoint_union shifts the second graph") {
  DiGraph empty(0, {});
  DiGraph g = gen_G1();
  CHECK(disjoint_union(empty, g) == g);
  DiGraph u = disjoint_union(path_of_word("+"), path_of_word("+"));
  CHECK(u.vertex_count() == 4);
  CHECK(u.edge_count() == 2);
  CHECK(u.has_edge(2, 3));
}

TEST_CASE("total_degree") {
  CHECK(total_degree(DiGraph(1, {}), 0) == 0);
  CHECK(total_degree(path_of_word("++"), 1) == 2);
  CHECK(total_degree(DiGraph(1, {{0, 0}}), 0) == 2);  // loop counts twice
  // Vertex a of G_1 meets the arcs y->a, b->a, c->a and a->r.
  CHECK(total_degree(gen_G1(), 4) == 4);
  CHECK_THROWS_AS(total_degree(gen_G1(), 6), std::invalid_argument);
}

TEST_CASE("text format round trip") {
  DiGraph g = gen_G2();
  CHECK(graph_from_text(to_text(g)) == g);
  DiGraph parsed = graph_from_text("2 3\n0 1\n0 1\n1 1\n");
  CHECK(parsed.edge_count() == 2);  // duplicate line collapses
  CHECK(parsed.has_edge(1, 1));
  CHECK_THROWS_AS(graph_from_text("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_text("2 1\n0\n"), std::invalid_argument);
}

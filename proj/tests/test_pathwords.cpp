#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "duality/digraph.hpp"
#include "duality/families.hpp"
#include "duality/pathwords.hpp"
#include "test_util.hpp"

using namespace duality;

namespace {

// Oracle: height by explicit enumeration of all contiguous subwords,
// counted in whichever traversal direction gives the larger imbalance.
int height_oracle(const Word& x) {
  int best = 0;
  int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int j = i; j < n; ++j) {
      sum += (x[j] == '+') ? 1 : -1;
      best = std::max(best, sum < 0 ? -sum : sum);
    }
  }
  return best;
}

bool path_maps_into(const Word& x, const DiGraph& g) {
  ReachMatrix r = reach_matrix(x, g);
  for (int u = 0; u < r.n; ++u)
    if (r.row_nonempty(u)) return true;
  return g.vertex_count() > 0 && x.empty();
}

}  // namespace

TEST_CASE("path_of_word construction") {
  DiGraph eps = path_of_word("");
  CHECK(eps.vertex_count() == 1);
  CHECK(eps.edge_count() == 0);

  DiGraph plus = path_of_word("+");
  CHECK(plus.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  DiGraph p = path_of_word("++-");
  CHECK(p.vertex_count() == 4);
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 2}});

  CHECK_THROWS_AS(path_of_word("+x"), std::invalid_argument);
}

TEST_CASE("word algebra") {
  CHECK(word_power("+-", 0) == "");
  CHECK(word_power("+-", 2) == "+-+-");
  CHECK(word_concat("++", "-") == "++-");
  CHECK_THROWS_AS(word_power("+", -1), std::invalid_argument);
  CHECK(word_Q(3).size() == 23);
  CHECK(word_Q(1) == "++-++");
}

TEST_CASE("height") {
  CHECK(height("") == 0);
  CHECK(height(word_power("+", 5)) == 5);
  CHECK(height("+-") == 1);
  CHECK(height("---") == 3);  // sub-paths carry no preferred direction
  CHECK(height("+") == height("-"));
  for (int k = 1; k <= 4; ++k) CHECK(height(word_Q(k)) == k + 2);
}

TEST_CASE("height matches the subword oracle on random words") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    Word w = testutil::random_word(rng, 20);
    CHECK(height(w) == height_oracle(w));
  }
}

TEST_CASE("height is monotone under path homomorphisms") {
  auto words = testutil::all_words_up_to(7);
  for (const auto& x : words)
    for (const auto& y : words) {
      if (path_maps_into(x, path_of_word(y)))
        CHECK(height(x) <= height(y));
    }
}

TEST_CASE("reach_matrix basics") {
  DiGraph g = gen_G1();
  ReachMatrix id = reach_matrix("", g);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(id.at(u, v) == (u == v));

  ReachMatrix adj = reach_matrix("+", g);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(adj.at(u, v) == g.has_edge(u, v));

  CHECK(reach_matrix("+++", gen_D(3)).at(0, 3));  // the Hamiltonian path
}

TEST_CASE("reach_matrix composes along concatenation") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    DiGraph g = testutil::random_digraph(rng, 5);
    Word x = testutil::random_word(rng, 5);
    Word y = testutil::random_word(rng, 5);
    ReachMatrix joint = reach_matrix(x + y, g);
    ReachMatrix split = compose(reach_matrix(x, g), reach_matrix(y, g));
    CHECK(joint.bits == split.bits);
  }
}

TEST_CASE("reach_matrix endpoints agree with the pinned solver") {
  std::vector<DiGraph> graphs = {gen_D(3),
                                 gen_G1(),
                                 DiGraph(1, {{0, 0}}),
                                 DiGraph(3, {{0, 1}, {1, 2}, {2, 0}}),
                                 DiGraph(2, {{0, 1}, {1, 0}}),
                                 DiGraph(4, {{0, 1}, {2, 1}, {2, 3}})};
  for (const auto& g : graphs) {
    for (const auto& x : testutil::all_words_up_to(8)) {
      ReachMatrix r = reach_matrix(x, g);
      DiGraph p = path_of_word(x);
      int last = p.vertex_count() - 1;
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v) {
          bool pinned =
              hom_exists_pinned(p, g, {{0, u}, {last, v}}).has_value();
          CHECK(r.at(u, v) == pinned);
        }
    }
  }
}

TEST_CASE("paths equal their reversed complements") {
  for (const auto& x : testutil::all_words_up_to(8))
    CHECK(is_isomorphic(path_of_word(x), path_of_word(reverse_complement(x))));
}

TEST_CASE("embed_word returns a concrete walk") {
  DiGraph g = gen_D(3);
  auto walk = embed_word(g, "+++");
  REQUIRE(walk);
  CHECK(*walk == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(embed_word(g, "++++"));

  auto pinned = embed_word(g, "++", 1, 3);
  REQUIRE(pinned);
  CHECK(pinned->front() == 1);
  CHECK(pinned->back() == 3);
  for (size_t i = 0; i + 1 < pinned->size(); ++i)
    CHECK(g.has_edge((*pinned)[i], (*pinned)[i + 1]));
  CHECK_FALSE(embed_word(g, "+", 0, 3));  // the deleted tournament edge
}

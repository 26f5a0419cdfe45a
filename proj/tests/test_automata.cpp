#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "duality/automata.hpp"
#include "duality/families.hpp"
#include "duality/pathwords.hpp"
#include "test_util.hpp"

using namespace duality;

namespace {

bool path_maps_into(const Word& x, const DiGraph& g) {
  ReachMatrix r = reach_matrix(x, g);
  for (int u = 0; u < r.n; ++u)
    if (r.row_nonempty(u)) return true;
  return false;
}

Nfa p3_pattern() { return family_nfa("+++", "-++", "+"); }

}  // namespace

TEST_CASE("nfa_of_graph on a single loop accepts every word") {
  Nfa a = nfa_of_graph(DiGraph(1, {{0, 0}}));
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) CHECK(accepts(a, testutil::random_word(rng, 12)));
}

TEST_CASE("nfa_of_graph on a single edge") {
  Nfa a = nfa_of_graph(path_of_word("+"));
  CHECK(accepts(a, "+"));
  CHECK(accepts(a, "-"));
  CHECK(accepts(a, ""));
  CHECK_FALSE(accepts(a, "++"));
  CHECK(accepts(a, "+-"));
}

TEST_CASE("nfa_of_graph on D_3 sees the Hamiltonian path but no 4-walk") {
  Nfa a = nfa_of_graph(gen_D(3));
  CHECK(accepts(a, "+++"));
  CHECK_FALSE(accepts(a, "++++"));
}

TEST_CASE("empty word acceptance needs an initial accepting state") {
  Nfa a = nfa_of_graph(path_of_word("+"));
  CHECK(accepts(a, ""));
  Nfa none = nfa_of_graph(DiGraph(0, {}));
  CHECK_FALSE(accepts(none, ""));
}

TEST_CASE("graph automaton accepts exactly the embeddable path words") {
  std::mt19937 rng(31);
  auto words = testutil::all_words_up_to(10);
  for (int i = 0; i < 12; ++i) {
    DiGraph g = testutil::random_digraph(rng, 5);
    Nfa a = nfa_of_graph(g);
    for (const auto& x : words)
      CHECK(accepts(a, x) == path_maps_into(x, g));
  }
}

TEST_CASE("family_nfa basics") {
  CHECK_THROWS_AS(family_nfa("", "", ""), std::invalid_argument);
  Nfa plus = family_nfa("+", "+", "");
  CHECK_FALSE(accepts(plus, ""));
  for (int k = 1; k <= 6; ++k) CHECK(accepts(plus, word_power("+", k)));
  CHECK_FALSE(accepts(plus, "+-"));
}

TEST_CASE("family_nfa matches the P^3 family exactly") {
  Nfa a = p3_pattern();
  for (int k = 0; k <= 10; ++k) CHECK(accepts(a, word_P(3, k)));

  // Random single-symbol perturbations must fall outside the family.
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> kd(0, 8);
  int checked = 0;
  while (checked < 1000) {
    Word w = word_P(3, kd(rng));
    std::uniform_int_distribution<int> pos(0, static_cast<int>(w.size()) - 1);
    int p = pos(rng);
    std::uniform_int_distribution<int> op(0, 2);
    switch (op(rng)) {
      case 0: w[p] = (w[p] == '+') ? '-' : '+'; break;
      case 1: w.erase(w.begin() + p); break;
      default: w.insert(w.begin() + p, '-'); break;
    }
    bool in_family = false;
    for (int k = 0; k <= 12 && !in_family; ++k) in_family = (w == word_P(3, k));
    if (in_family) continue;
    CHECK_FALSE(accepts(a, w));
    ++checked;
  }
}

TEST_CASE("family_nfa covers the type-i auxiliary pattern") {
  // +(+^{s-1}-)^k +^i for s = 3, i = 2
  Nfa a = family_nfa("+", "++-", "++");
  for (int k = 0; k <= 5; ++k)
    CHECK(accepts(a, "+" + word_power("++-", k) + "++"));
  CHECK_FALSE(accepts(a, "+"));
  CHECK_FALSE(accepts(a, "+++-"));
}

TEST_CASE("intersect_nonempty: trivial and empty cases") {
  Nfa all = nfa_of_graph(DiGraph(1, {{0, 0}}));
  auto w = intersect_nonempty(all, all);
  REQUIRE(w);
  CHECK(w->empty());

  CHECK_FALSE(intersect_nonempty(p3_pattern(), nfa_of_graph(gen_D(3))));
}

TEST_CASE("intersect_nonempty finds a shortest common word") {
  // A graph containing P^3_1 as a subgraph is hit by the family.
  DiGraph host = gen_P(3, 1);
  auto w = intersect_nonempty(p3_pattern(), nfa_of_graph(host));
  REQUIRE(w);
  CHECK(accepts(p3_pattern(), *w));
  CHECK(accepts(nfa_of_graph(host), *w));
  CHECK(hom_exists(path_of_word(*w), host));
  CHECK(*w == word_P(3, 1));  // nothing shorter fits an antichain member
}

TEST_CASE("product witnesses agree with a search over short words") {
  std::mt19937 rng(41);
  auto words = testutil::all_words_up_to(8);
  for (int i = 0; i < 20; ++i) {
    DiGraph g = testutil::random_digraph(rng, 4);
    DiGraph h = testutil::random_digraph(rng, 4);
    auto w = intersect_nonempty(nfa_of_graph(g), nfa_of_graph(h));
    std::optional<Word> brute;
    for (const auto& x : words)
      if (path_maps_into(x, g) && path_maps_into(x, h)) { brute = x; break; }
    if (brute) {
      REQUIRE(w);
      CHECK(w->size() == brute->size());  // same shortest length
    } else if (w) {
      CHECK(w->size() > 8);
    }
  }
}

TEST_CASE("nfa text form") {
  std::string text = to_text(nfa_of_graph(path_of_word("+")));
  CHECK(text == "2 2\n0 + 1\n1 - 0\ninitial 0 1\naccepting 0 1\n");
}

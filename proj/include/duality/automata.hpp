#pragma once

#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "duality/digraph.hpp"
#include "duality/pathwords.hpp"

namespace duality {

// Nondeterministic finite automaton over {+,-}. No epsilon transitions;
// multiple initial states allowed.
struct Nfa {
  struct Transition {
    int from;
    char letter;  // '+' or '-'
    int to;
  };

  int states = 0;
  std::vector<Transition> transitions;
  std::vector<char> initial;    // membership mask, size == states
  std::vector<char> accepting;  // membership mask, size == states

  void check() const {
    if (static_cast<int>(initial.size()) != states ||
        static_cast<int>(accepting.size()) != states)
      throw std::invalid_argument("Nfa: state-set masks have wrong size");
    for (const auto& t : transitions) {
      if (t.from < 0 || t.from >= states || t.to < 0 || t.to >= states)
        throw std::invalid_argument("Nfa: transition references bad state");
      if (t.letter != '+' && t.letter != '-')
        throw std::invalid_argument("Nfa: bad letter");
    }
  }
};

// The automaton recognizing {x : p(x) -> G}: states are vertices, every
// state both initial and accepting, each edge (u,v) contributes a
// '+' transition u->v and a '-' transition v->u.
inline Nfa nfa_of_graph(const DiGraph& g) {
  Nfa a;
  a.states = g.vertex_count();
  a.initial.assign(a.states, 1);
  a.accepting.assign(a.states, 1);
  for (auto [u, v] : g.edges()) {
    a.transitions.push_back({u, '+', v});
    a.transitions.push_back({v, '-', u});
  }
  return a;
}

// Standard subset simulation.
inline bool accepts(const Nfa& a, const Word& x) {
  check_word(x);
  std::vector<char> cur = a.initial;
  for (char c : x) {
    std::vector<char> next(a.states, 0);
    for (const auto& t : a.transitions)
      if (t.letter == c && cur[t.from]) next[t.to] = 1;
    cur = std::move(next);
  }
  for (int q = 0; q < a.states; ++q)
    if (cur[q] && a.accepting[q]) return true;
  return false;
}

// Automaton for the linear loop pattern u w* t, i.e. {u w^k t : k >= 0}.
// The loop body must be nonempty.
inline Nfa family_nfa(const Word& prefix, const Word& loop,
                      const Word& suffix) {
  check_word(prefix);
  check_word(loop);
  check_word(suffix);
  if (loop.empty()) throw std::invalid_argument("family_nfa: empty loop body");

  Nfa a;
  int np = static_cast<int>(prefix.size());
  int nl = static_cast<int>(loop.size());
  int ns = static_cast<int>(suffix.size());
  // States: 0..np is the prefix chain (np = hub), then nl-1 interior
  // loop states, then ns suffix states (the last one accepting).
  a.states = np + 1 + (nl - 1) + ns;
  a.initial.assign(a.states, 0);
  a.accepting.assign(a.states, 0);
  a.initial[0] = 1;
  int hub = np;
  for (int i = 0; i < np; ++i) a.transitions.push_back({i, prefix[i], i + 1});
  int loop_base = np + 1;
  for (int i = 0; i < nl; ++i) {
    int from = (i == 0) ? hub : loop_base + i - 1;
    int to = (i == nl - 1) ? hub : loop_base + i;
    a.transitions.push_back({from, loop[i], to});
  }
  int suffix_base = np + 1 + (nl - 1);
  for (int i = 0; i < ns; ++i) {
    int from = (i == 0) ? hub : suffix_base + i - 1;
    a.transitions.push_back({from, suffix[i], suffix_base + i});
  }
  a.accepting[ns == 0 ? hub : suffix_base + ns - 1] = 1;
  return a;
}

// Shortest word in L(a) /\ L(b), by breadth-first search over the
// product state space; '+' is explored before '-' so the witness is
// deterministic.
inline std::optional<Word> intersect_nonempty(const Nfa& a, const Nfa& b) {
  auto id = [&](int qa, int qb) { return qa * b.states + qb; };
  int total = a.states * b.states;
  if (total == 0) return std::nullopt;

  // letter -> adjacency of the product graph
  std::map<char, std::vector<std::vector<int>>> step;
  for (char c : {'+', '-'}) {
    std::vector<std::vector<int>> adj(total);
    for (const auto& ta : a.transitions) {
      if (ta.letter != c) continue;
      for (const auto& tb : b.transitions) {
        if (tb.letter != c) continue;
        adj[id(ta.from, tb.from)].push_back(id(ta.to, tb.to));
      }
    }
    step[c] = std::move(adj);
  }

  std::vector<int> parent(total, -1);
  std::vector<char> via(total, 0), seen(total, 0);
  std::deque<int> queue;
  for (int qa = 0; qa < a.states; ++qa)
    for (int qb = 0; qb < b.states; ++qb)
      if (a.initial[qa] && b.initial[qb]) {
        int s = id(qa, qb);
        if (!seen[s]) { seen[s] = 1; queue.push_back(s); }
      }
  auto is_goal = [&](int s) {
    return a.accepting[s / b.states] && b.accepting[s % b.states];
  };
  for (int s : queue)
    if (is_goal(s)) return Word{};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (char c : {'+', '-'})
      for (int t : step[c][s]) {
        if (seen[t]) continue;
        seen[t] = 1;
        parent[t] = s;
        via[t] = c;
        if (is_goal(t)) {
          Word w;
          for (int cur = t; parent[cur] >= 0 || via[cur]; cur = parent[cur]) {
            w.push_back(via[cur]);
            if (parent[cur] < 0) break;
          }
          return Word(w.rbegin(), w.rend());
        }
        queue.push_back(t);
      }
  }
  return std::nullopt;
}

// Text form used by the CLI: "states transitions", transition lines,
// then the initial and accepting state lists.
inline std::string to_text(const Nfa& a) {
  std::ostringstream out;
  out << a.states << ' ' << a.transitions.size() << '\n';
  for (const auto& t : a.transitions)
    out << t.from << ' ' << t.letter << ' ' << t.to << '\n';
  out << "initial";
  for (int q = 0; q < a.states; ++q)
    if (a.initial[q]) out << ' ' << q;
  out << "\naccepting";
  for (int q = 0; q < a.states; ++q)
    if (a.accepting[q]) out << ' ' << q;
  out << '\n';
  return out.str();
}

}  // namespace duality

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "duality/cores.hpp"
#include "duality/digraph.hpp"
#include "duality/families.hpp"

namespace duality {

// ---------------------------------------------------------------------------
// Exhaustive enumeration of labeled digraphs

// Bit u*n+v of the mask encodes the edge (u,v).
inline DiGraph digraph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (mask >> (u * n + v) & 1) es.emplace_back(u, v);
  return DiGraph(n, std::move(es));
}

inline std::uint64_t mask_of_digraph(const DiGraph& g) {
  std::uint64_t mask = 0;
  int n = g.vertex_count();
  for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << (u * n + v);
  return mask;
}

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::uint64_t permute_mask(int n, std::uint64_t mask,
                                  const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (mask >> (u * n + v) & 1)
        out |= std::uint64_t{1} << (perm[u] * n + perm[v]);
  return out;
}

}  // namespace detail

// Minimal adjacency mask over all relabelings; the class representative.
inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
  auto perms = detail::all_permutations(n);
  std::uint64_t best = mask;
  for (const auto& p : perms) best = std::min(best, detail::permute_mask(n, mask, p));
  return best;
}

// Is this mask its own class representative? Cheaper than canonical_mask
// when the answer is usually no.
inline bool is_canonical_mask(int n, std::uint64_t mask,
                              const std::vector<std::vector<int>>& perms) {
  for (const auto& p : perms)
    if (detail::permute_mask(n, mask, p) < mask) return false;
  return true;
}

// All labeled digraphs on n vertices (loops included); with dedup, one
// representative per isomorphism class. Intended for n <= 5.
inline void for_each_digraph(int n, bool dedup,
                             const std::function<void(std::uint64_t,
                                                      const DiGraph&)>& fn) {
  if (n < 0 || n > 5)
    throw std::invalid_argument("for_each_digraph: need 0 <= n <= 5");
  auto perms = detail::all_permutations(n);
  std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (dedup && !is_canonical_mask(n, mask, perms)) continue;
    fn(mask, digraph_from_mask(n, mask));
  }
}

inline std::vector<DiGraph> enumerate_digraphs(int n, bool dedup) {
  std::vector<DiGraph> out;
  for_each_digraph(n, dedup,
                   [&](std::uint64_t, const DiGraph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Duality verification

enum class Verdict : std::uint8_t { Left, Right, Both, Neither, Skipped };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Left: return "LEFT";
    case Verdict::Right: return "RIGHT";
    case Verdict::Both: return "BOTH";
    case Verdict::Neither: return "NEITHER";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

struct Violation {
  int n = 0;
  std::uint64_t mask = 0;
  Verdict verdict = Verdict::Both;
};

struct DualityReport {
  std::string pair_id;
  int n_max = 0;
  bool dedup = false;
  bool exact = true;  // false when the left-side decider is truncated

  struct PerN {
    std::uint64_t graphs = 0, left_hits = 0, right_hits = 0;
  };
  std::vector<PerN> per_n;  // index = vertex count

  std::vector<Violation> violations;  // first few kept in full
  std::uint64_t violation_count = 0;

  std::string left_sample, right_sample;  // formatted witness samples
  double wall_seconds = 0;

  bool ok() const { return violation_count == 0; }

  // Canonical text form; timing is excluded so reports are reproducible
  // byte for byte.
  std::string to_text() const {
    std::ostringstream out;
    out << "pair " << pair_id << '\n';
    out << "kind " << (exact ? "certificate" : "evidence") << '\n';
    out << "n_max " << n_max << (dedup ? " dedup" : "") << '\n';
    for (int n = 0; n < static_cast<int>(per_n.size()); ++n)
      out << "n " << n << " graphs " << per_n[n].graphs << " left "
          << per_n[n].left_hits << " right " << per_n[n].right_hits << '\n';
    out << "violations " << violation_count << '\n';
    for (const auto& v : violations)
      out << "violation " << v.n << ':' << v.mask << ' '
          << verdict_name(v.verdict) << '\n';
    if (!left_sample.empty()) out << "left_witness_sample\n" << left_sample;
    if (!right_sample.empty()) out << "right_witness_sample\n" << right_sample;
    out << (violation_count == 0 ? "RESULT ok\n" : "RESULT violated\n");
    return out.str();
  }
};

struct VerifyOptions {
  bool dedup = false;
  int jobs = 1;
  std::size_t max_kept_violations = 32;
  // Called for every graph, in enumeration order (even with jobs > 1).
  std::function<void(int n, std::uint64_t mask, Verdict)> on_verdict;
};

inline int resolve_jobs(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("DUALITY_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

// Check the duality condition "one side, never both" for every graph up
// to n_max vertices.
inline DualityReport verify_duality(const FamilyDescriptor& family,
                                    const std::vector<DiGraph>& duals,
                                    int n_max,
                                    const VerifyOptions& opts = {}) {
  if (n_max < 0 || n_max > 5)
    throw std::invalid_argument("verify_duality: need 0 <= n_max <= 5");
  auto start = std::chrono::steady_clock::now();

  DualityReport report;
  report.n_max = n_max;
  report.dedup = opts.dedup;
  report.exact = family.exact();
  report.per_n.resize(n_max + 1);

  int jobs = std::max(1, opts.jobs);

  for (int n = 0; n <= n_max; ++n) {
    auto perms = detail::all_permutations(n);
    std::uint64_t total = std::uint64_t{1} << (n * n);

    auto judge = [&](std::uint64_t mask) -> Verdict {
      if (opts.dedup && !is_canonical_mask(n, mask, perms))
        return Verdict::Skipped;
      DiGraph g = digraph_from_mask(n, mask);
      bool left = family_hits(family, g).has_value();
      bool right = false;
      for (const auto& d : duals)
        if (hom_exists(g, d)) { right = true; break; }
      if (left && right) return Verdict::Both;
      if (left) return Verdict::Left;
      if (right) return Verdict::Right;
      return Verdict::Neither;
    };

    std::vector<Verdict> verdicts(total);
    if (jobs == 1 || total < 1024) {
      for (std::uint64_t mask = 0; mask < total; ++mask)
        verdicts[mask] = judge(mask);
    } else {
      // Contiguous chunks per worker; results land in a shared array
      // indexed by mask, so the merge order is the enumeration order.
      std::vector<std::thread> workers;
      std::uint64_t chunk = (total + jobs - 1) / jobs;
      for (int w = 0; w < jobs; ++w) {
        std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
        workers.emplace_back([&, lo, hi] {
          for (std::uint64_t mask = lo; mask < hi; ++mask)
            verdicts[mask] = judge(mask);
        });
      }
      for (auto& t : workers) t.join();
    }

    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Verdict v = verdicts[mask];
      if (v == Verdict::Skipped) continue;
      ++report.per_n[n].graphs;
      if (v == Verdict::Left || v == Verdict::Both) ++report.per_n[n].left_hits;
      if (v == Verdict::Right || v == Verdict::Both)
        ++report.per_n[n].right_hits;
      if (v == Verdict::Both || v == Verdict::Neither) {
        ++report.violation_count;
        if (report.violations.size() < opts.max_kept_violations)
          report.violations.push_back({n, mask, v});
      }
      if (report.left_sample.empty() && v == Verdict::Left) {
        if (auto w = family_hits(family, digraph_from_mask(n, mask))) {
          std::ostringstream s;
          s << "graph " << n << ':' << mask << " member\n" << to_text(w->member);
          report.left_sample = s.str();
        }
      }
      if (opts.on_verdict) opts.on_verdict(n, mask, v);
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

// ---------------------------------------------------------------------------
// Structural bounds on the left side of a duality pair

struct StructuralReport {
  bool ok = true;
  bool antichain = true;  // degree bound applies only in this case
  int max_components = 0;
  std::size_t dual_count = 0;
  int max_total_degree = 0;
  int degree_bound = 0;

  std::string to_text() const {
    std::ostringstream out;
    out << "members_antichain " << (antichain ? "yes" : "no") << '\n';
    out << "components " << max_components << " bound " << dual_count << '\n';
    if (antichain)
      out << "total_degree " << max_total_degree << " bound " << degree_bound
          << '\n';
    out << (ok ? "RESULT ok\n" : "RESULT violated\n");
    return out.str();
  }
};

// Component-count and total-degree bounds, checked on a finite
// truncation of the left side.
inline StructuralReport check_structural_lemmas(
    const std::vector<DiGraph>& members, const std::vector<DiGraph>& duals) {
  StructuralReport r;
  r.dual_count = duals.size();
  r.antichain = is_antichain(members).ok;
  for (const auto& d : duals) r.degree_bound += d.vertex_count();
  for (const auto& m : members) {
    r.max_components = std::max(r.max_components, component_count(m));
    for (int v = 0; v < m.vertex_count(); ++v)
      r.max_total_degree = std::max(r.max_total_degree, total_degree(m, v));
  }
  if (r.max_components > static_cast<int>(r.dual_count)) r.ok = false;
  if (r.antichain && r.max_total_degree > r.degree_bound) r.ok = false;
  return r;
}

}  // namespace duality

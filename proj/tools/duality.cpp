// Command-line surface for the duality library.
//
//   hom A.g B.g                 exit 0 + witness map, or exit 1
//   core G.g                    print the core
//   antichain F1.g F2.g ...     exit 0, or exit 1 + offending pair
//   gen <spec...>               emit a named graph (P s k | Q k | D s |
//                               G1 | G2 | gadget <tree> <x> <y> <s> <z>)
//   family-member <family> G.g  exit 0 + witness, or exit 1
//   nfa G.g                     print the graph automaton
//   verify-duality <family> <dual...> --n-max N [--dedup] [--jobs J]
//   enumerate N [--dedup]
//
// Exit codes: 0 ok, 1 negative decision, 2 violation found, 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duality/automata.hpp"
#include "duality/cores.hpp"
#include "duality/families.hpp"
#include "duality/verify.hpp"

namespace {

using namespace duality;

constexpr int kExitUsage = 64;

DiGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_text(buf.str());
}

// "e" stands for the empty word in specs (a bare "" is awkward in argv).
Word parse_word(const std::string& s) {
  if (s == "e") return "";
  check_word(s);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) { out.push_back(cur); cur.clear(); }
    else cur.push_back(c);
  }
  out.push_back(cur);
  return out;
}

// P:s | Q:kmax | T1 | T2 | T:x,y,s,z | append(<spec>) | list:f1,f2,...
FamilyPtr parse_family(const std::string& spec) {
  if (spec.rfind("append(", 0) == 0 && spec.back() == ')')
    return FamilyDescriptor::append(
        parse_family(spec.substr(7, spec.size() - 8)));
  if (spec == "T1") return FamilyDescriptor::tree_family("+-", "-+", "--", "++");
  if (spec == "T2")
    return FamilyDescriptor::tree_family("+--", "-+-", "--", "+++");
  if (spec.rfind("P:", 0) == 0)
    return FamilyDescriptor::path_power(std::stoi(spec.substr(2)));
  if (spec.rfind("Q:", 0) == 0)
    return FamilyDescriptor::q_family(std::stoi(spec.substr(2)));
  if (spec.rfind("T:", 0) == 0) {
    auto parts = split(spec.substr(2), ',');
    if (parts.size() != 4)
      throw std::runtime_error("family spec T: needs four words");
    return FamilyDescriptor::tree_family(parse_word(parts[0]),
                                         parse_word(parts[1]),
                                         parse_word(parts[2]),
                                         parse_word(parts[3]));
  }
  if (spec.rfind("list:", 0) == 0) {
    std::vector<DiGraph> gs;
    for (const auto& f : split(spec.substr(5), ',')) gs.push_back(read_graph(f));
    return FamilyDescriptor::explicit_list(std::move(gs));
  }
  throw std::runtime_error("unknown family spec: " + spec);
}

// Named graph (D:s | P:s,k | Q:k | G1 | G2 | TT:n) or a file path.
DiGraph parse_graph_spec(const std::string& spec) {
  if (spec == "G1") return gen_G1();
  if (spec == "G2") return gen_G2();
  if (spec.rfind("D:", 0) == 0) return gen_D(std::stoi(spec.substr(2)));
  if (spec.rfind("Q:", 0) == 0) return gen_Q(std::stoi(spec.substr(2)));
  if (spec.rfind("TT:", 0) == 0)
    return transitive_tournament(std::stoi(spec.substr(3)));
  if (spec.rfind("P:", 0) == 0) {
    auto parts = split(spec.substr(2), ',');
    if (parts.size() != 2) throw std::runtime_error("P: needs s,k");
    return gen_P(std::stoi(parts[0]), std::stoi(parts[1]));
  }
  return read_graph(spec);
}

void print_map(const VertexMap& f) {
  for (size_t v = 0; v < f.size(); ++v)
    std::cout << v << " -> " << f[v] << '\n';
}

DiGraph run_gen(const std::vector<std::string>& args) {
  if (args.empty()) throw std::runtime_error("gen: missing graph kind");
  const std::string& kind = args[0];
  auto want = [&](size_t n) {
    if (args.size() != n + 1)
      throw std::runtime_error("gen " + kind + ": wrong argument count");
  };
  if (kind == "P") { want(2); return gen_P(std::stoi(args[1]), std::stoi(args[2])); }
  if (kind == "Q") { want(1); return gen_Q(std::stoi(args[1])); }
  if (kind == "D") { want(1); return gen_D(std::stoi(args[1])); }
  if (kind == "G1") { want(0); return gen_G1(); }
  if (kind == "G2") { want(0); return gen_G2(); }
  if (kind == "gadget") {
    want(5);
    return gadget(*parse_tree(args[1]), parse_word(args[2]), parse_word(args[3]),
                  parse_word(args[4]), parse_word(args[5]));
  }
  throw std::runtime_error("gen: unknown graph kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homomorphism dualities of directed graphs"};
  app.require_subcommand(1);

  std::string file_a, file_b, family_spec;
  std::vector<std::string> file_list, gen_args, dual_specs;
  int n_max = 3, enum_n = 0, jobs_flag = 0;
  bool dedup = false;

  auto* hom = app.add_subcommand("hom", "decide A -> B");
  hom->add_option("A", file_a)->required();
  hom->add_option("B", file_b)->required();

  auto* core = app.add_subcommand("core", "print the core of a graph");
  core->add_option("G", file_a)->required();

  auto* anti = app.add_subcommand("antichain", "check pairwise incomparability");
  anti->add_option("graphs", file_list)->required()->expected(-1);

  auto* gen = app.add_subcommand("gen", "emit a named graph");
  gen->add_option("spec", gen_args)->required()->expected(-1);

  auto* member = app.add_subcommand("family-member",
                                    "does some family member map into G?");
  member->add_option("family", family_spec)->required();
  member->add_option("G", file_a)->required();

  auto* nfa = app.add_subcommand("nfa", "print the graph automaton");
  nfa->add_option("G", file_a)->required();

  auto* verify = app.add_subcommand("verify-duality",
                                    "exhaustively check a duality pair");
  verify->add_option("family", family_spec)->required();
  verify->add_option("duals", dual_specs)->required()->expected(-1);
  verify->add_option("--n-max", n_max)->check(CLI::Range(0, 5));
  verify->add_flag("--dedup", dedup);
  verify->add_option("--jobs", jobs_flag);

  auto* enumerate = app.add_subcommand("enumerate", "list digraphs up to n");
  enumerate->add_option("n", enum_n)->required()->check(CLI::Range(0, 5));
  enumerate->add_flag("--dedup", dedup);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*hom) {
      auto f = hom_exists(read_graph(file_a), read_graph(file_b));
      if (!f) return 1;
      print_map(*f);
      return 0;
    }
    if (*core) {
      std::cout << to_text(core_of(read_graph(file_a)));
      return 0;
    }
    if (*anti) {
      std::vector<DiGraph> gs;
      for (const auto& f : file_list) gs.push_back(read_graph(f));
      AntichainResult r = is_antichain(gs);
      if (r.ok) {
        std::cout << "antichain\n";
        return 0;
      }
      std::cout << "comparable " << file_list[r.first] << " -> "
                << file_list[r.second] << '\n';
      return 1;
    }
    if (*gen) {
      std::cout << to_text(run_gen(gen_args));
      return 0;
    }
    if (*member) {
      FamilyPtr f = parse_family(family_spec);
      DiGraph g = read_graph(file_a);
      auto hit = family_hits(*f, g);
      if (!hit) return 1;
      std::cout << "member\n" << to_text(hit->member) << "hom\n";
      print_map(hit->hom);
      return 0;
    }
    if (*nfa) {
      std::cout << to_text(nfa_of_graph(read_graph(file_a)));
      return 0;
    }
    if (*verify) {
      FamilyPtr f = parse_family(family_spec);
      std::vector<DiGraph> duals;
      for (const auto& d : dual_specs) duals.push_back(parse_graph_spec(d));
      VerifyOptions opts;
      opts.dedup = dedup;
      opts.jobs = resolve_jobs(jobs_flag);
      opts.on_verdict = [](int n, std::uint64_t mask, Verdict v) {
        std::cout << "VERDICT " << n << ':' << mask << ' ' << verdict_name(v)
                  << '\n';
      };
      DualityReport report = verify_duality(*f, duals, n_max, opts);
      std::cout << report.to_text();
      return report.ok() ? 0 : 2;
    }
    if (*enumerate) {
      for (int n = 0; n <= enum_n; ++n)
        for_each_digraph(n, dedup, [&](std::uint64_t mask, const DiGraph&) {
          std::cout << n << ':' << mask << '\n';
        });
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

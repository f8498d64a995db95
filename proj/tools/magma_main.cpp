#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "magma/errors.hpp"
#include "magma/eval.hpp"
#include "magma/oracle.hpp"
#include "magma/separation.hpp"
#include "magma/sexpr.hpp"
#include "magma/suites.hpp"

namespace {

using namespace magma;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int usage() {
  std::cerr <<
      "usage:\n"
      "  magma repl   [-d <domain>] [-c <config>]\n"
      "  magma eval   [-d <domain>] [-c <config>] [-f <file>] [-e <expr>]\n"
      "  magma check  <suite>|all [--seed S] [--cases N] [--depth D] [-d <domain>]\n"
      "  magma demo   <replacement-pr|completion-not-functional|constant-class|order-antisymmetry>\n"
      "               [-d <domain>]\n"
      "  magma oracle --atoms <tag:TxV|plane:XxY|chain:N|antichain:N> --depth K\n"
      "               --suite <gate|pair|levels|functions|all>\n"
      "  magma suites\n"
      "domains: tag (default), plane, qdup\n";
  return kExitUsage;
}

struct Options {
  Domain domain = Domain::Tag;
  bool domain_set = false;
  std::string config;
  std::string file;
  std::string expr;
  std::string atoms_spec;
  unsigned depth = 0;
  std::uint64_t seed = 1;
  unsigned cases = 0;
  std::string suite;
  std::vector<std::string> positional;
};

bool parse_options(int argc, char** argv, int from, Options& opt) {
  for (int i = from; i < argc; ++i) {
    std::string a = argv[i];
    auto next = [&](const char* what) -> const char* {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << what << "\n";
        return nullptr;
      }
      return argv[++i];
    };
    if (a == "-d" || a == "--domain") {
      const char* v = next("-d");
      if (!v) return false;
      opt.domain = domain_from_name(v);
      opt.domain_set = true;
    } else if (a == "-c" || a == "--config") {
      const char* v = next("-c");
      if (!v) return false;
      opt.config = v;
    } else if (a == "-f" || a == "--file") {
      const char* v = next("-f");
      if (!v) return false;
      opt.file = v;
    } else if (a == "-e" || a == "--expr") {
      const char* v = next("-e");
      if (!v) return false;
      opt.expr = v;
    } else if (a == "--seed") {
      const char* v = next("--seed");
      if (!v) return false;
      opt.seed = std::stoull(v);
    } else if (a == "--cases") {
      const char* v = next("--cases");
      if (!v) return false;
      opt.cases = static_cast<unsigned>(std::stoul(v));
    } else if (a == "--depth") {
      const char* v = next("--depth");
      if (!v) return false;
      opt.depth = static_cast<unsigned>(std::stoul(v));
    } else if (a == "--atoms") {
      const char* v = next("--atoms");
      if (!v) return false;
      opt.atoms_spec = v;
    } else if (a == "--suite") {
      const char* v = next("--suite");
      if (!v) return false;
      opt.suite = v;
    } else if (!a.empty() && a[0] == '-') {
      std::cerr << "unknown option " << a << "\n";
      return false;
    } else {
      opt.positional.push_back(a);
    }
  }
  return true;
}

// Plain key=value lines: domain, seed0, seed1. Seeds are atom literals.
Session session_from_options(const Options& opt) {
  Domain domain = opt.domain;
  std::string seed0, seed1;
  if (!opt.config.empty()) {
    std::ifstream in(opt.config);
    if (!in) throw ParseError("cannot open config " + opt.config);
    std::string line;
    while (std::getline(in, line)) {
      auto eq = line.find('=');
      if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
      std::string key = line.substr(0, eq);
      std::string val = line.substr(eq + 1);
      if (key == "domain") domain = domain_from_name(val);
      else if (key == "seed0") seed0 = val;
      else if (key == "seed1") seed1 = val;
    }
  }
  if (seed0.empty() || seed1.empty()) return Session::make(domain);
  Evaluator ev(Session::make(domain == Domain::QDup ? Domain::Tag : domain));
  Value v0 = ev.eval_text(seed0);
  Value v1 = ev.eval_text(seed1);
  auto* a0 = std::get_if<Atom>(&v0);
  auto* a1 = std::get_if<Atom>(&v1);
  if (!a0 || !a1) throw ParseError("config seeds must be atom literals");
  return Session::make(domain, *a0, *a1);
}

int run_repl(const Options& opt) {
  Evaluator ev(session_from_options(opt));
  std::cout << "magma repl, domain " << domain_name(ev.session().domain)
            << "; :quit to leave\n";
  std::string line;
  while (true) {
    std::cout << "magma> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == ":quit" || line == ":q") break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      for (const SExpr& e : parse_all(line)) std::cout << print_value(ev.eval(e)) << "\n";
    } catch (const MagmaError& err) {
      std::cout << "error: " << err.what() << "\n";
    }
  }
  return kExitOk;
}

int run_eval(const Options& opt) {
  std::string text;
  if (!opt.expr.empty()) {
    text = opt.expr;
  } else if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) {
      std::cerr << "cannot open " << opt.file << "\n";
      return kExitUsage;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  Evaluator ev(session_from_options(opt));
  std::vector<SExpr> exprs;
  try {
    exprs = parse_all(text);
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitUsage;
  }
  for (const SExpr& e : exprs) {
    try {
      std::cout << print_value(ev.eval(e)) << "\n";
    } catch (const MagmaError& err) {
      std::cout << "error: " << err.what() << "\n";
    }
  }
  return kExitOk;
}

int run_check(const Options& opt) {
  if (opt.positional.empty()) {
    std::cerr << "check needs a suite name (or 'all'); see 'magma suites'\n";
    return kExitUsage;
  }
  SuiteContext ctx;
  ctx.seed = opt.seed;
  ctx.cases = opt.cases;
  ctx.depth = opt.depth;
  ctx.domain = opt.domain;
  ctx.domain_set = opt.domain_set;
  std::vector<std::string> names;
  if (opt.positional[0] == "all") {
    names = suite_names();
  } else {
    for (const std::string& n : opt.positional) {
      if (!has_suite(n)) {
        std::cerr << "UnknownSuite: " << n << "\n";
        return kExitUsage;
      }
      names.push_back(n);
    }
  }
  bool all_pass = true;
  for (const std::string& name : names) {
    SuiteResult r = run_suite(name, ctx);
    std::cout << format_report(r);
    if (!r.pass) all_pass = false;
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int run_demo(const Options& opt) {
  if (opt.positional.empty()) {
    std::cerr << "demo needs a name\n";
    return kExitUsage;
  }
  const std::string& name = opt.positional[0];
  Domain d = opt.domain_set ? opt.domain : Domain::Tag;
  if (d == Domain::QDup) {
    std::cerr << "demos need a pair-capable domain (tag or plane)\n";
    return kExitUsage;
  }
  Session s = Session::make(d);
  Evaluator ev(s);
  if (name == "replacement-pr") {
    Magma u = d == Domain::Tag ? pr(atom_ideal({tag_atom(0, 0), tag_atom(1, 0)}))
                               : pr(atom_ideal({plane_atom(0, 0)}));
    if (opt.positional.size() > 1) {
      Value v = ev.eval_text(opt.positional[1]);
      auto* m = std::get_if<Magma>(&v);
      if (!m) {
        std::cerr << "demo replacement-pr: the argument must evaluate to a magma\n";
        return kExitUsage;
      }
      u = *m;
    }
    ReplacementWitness w = replacement_pr_witness(u);
    std::cout << "u          = " << to_string(u) << "\n"
              << "pr(x)      = " << to_string(w.base) << "\n"
              << "pr(x1)     = " << to_string(w.part1) << "\n"
              << "pr(x2)     = " << to_string(w.part2) << "\n"
              << "offending  = " << to_string(w.offending) << "\n"
              << (verify(w) ? "verified" : "BROKEN") << ": " << w.description << "\n";
    return verify(w) ? kExitOk : kExitCheckFailed;
  }
  if (name == "completion-not-functional") {
    CompletionWitness w = completion_not_functional_demo(s);
    std::cout << "x          = " << to_string(w.input) << "\n"
              << "y  = pr(x) = " << to_string(w.image) << "\n"
              << "y1 < y     = " << to_string(w.sub_image) << "\n"
              << "<<x,y>>    = " << to_string(w.pair_full) << "\n"
              << "<<x,y1>>   = " << to_string(w.pair_sub) << "\n"
              << (verify(s, w) ? "verified" : "BROKEN") << ": " << w.description << "\n";
    return verify(s, w) ? kExitOk : kExitCheckFailed;
  }
  if (name == "constant-class") {
    // The class holding exactly one magma separates u into a single point,
    // never a magma: refutation sampling exhibits the closure failure.
    Magma y0 = pr(atom_ideal({s.a0}));
    SamplerVerdict v = refute_closure(
        d, [&](const Magma& m) { return equal(m, y0); }, 2000, opt.seed, {y0});
    std::cout << "predicate: equal to " << to_string(y0) << "\n";
    if (v.refuted)
      std::cout << "refuted: holds at " << to_string(*v.holder) << " but fails at submagma "
                << to_string(*v.violator) << "\n";
    else
      std::cout << "unrefuted after " << v.budget_used << " samples\n";
    return v.refuted ? kExitOk : kExitCheckFailed;
  }
  if (name == "order-antisymmetry") {
    // One intended pair over a two-generator input forces both <<u1,u2>>
    // and <<u2,u1>> into the relation: antisymmetry cannot survive.
    Magma z = d == Domain::Tag ? pr(atom_ideal({tag_atom(0, 0), tag_atom(1, 0)}))
                               : pr(atom_ideal({plane_atom(0, 1), plane_atom(1, 0)}));
    Relation r = mk_relation(s, {{z, z}});
    Magma u1 = pr(atom_ideal({d == Domain::Tag ? tag_atom(0, 0) : plane_atom(0, 1)}));
    Magma u2 = pr(atom_ideal({d == Domain::Tag ? tag_atom(1, 0) : plane_atom(1, 0)}));
    bool fwd = member(mk_pair(s, u1, u2).whole, r.whole());
    bool bwd = member(mk_pair(s, u2, u1).whole, r.whole());
    bool distinct = !equal(u1, u2);
    std::cout << "relation   = " << to_string(r.whole()) << "\n"
              << "u1         = " << to_string(u1) << "\n"
              << "u2         = " << to_string(u2) << "\n"
              << "<<u1,u2>> in R: " << (fwd ? "true" : "false") << "\n"
              << "<<u2,u1>> in R: " << (bwd ? "true" : "false") << "\n"
              << "u1 = u2:        " << (distinct ? "false" : "true") << "\n";
    bool shown = fwd && bwd && distinct;
    std::cout << (shown ? "antisymmetry fails as expected\n" : "demo BROKEN\n");
    return shown ? kExitOk : kExitCheckFailed;
  }
  std::cerr << "unknown demo " << name << "\n";
  return kExitUsage;
}

int run_oracle(const Options& opt) {
  if (opt.atoms_spec.empty() || opt.suite.empty()) {
    std::cerr << "oracle needs --atoms and --suite\n";
    return kExitUsage;
  }
  unsigned depth = opt.depth ? opt.depth : 2;
  FiniteUniverse u = FiniteUniverse::build(window_from_spec(opt.atoms_spec), depth);
  std::cout << "universe " << opt.atoms_spec << " depth " << depth << ":";
  for (unsigned level = 1; level <= u.depth(); ++level)
    std::cout << " level" << level << "=" << u.family_size(level);
  std::cout << "\n";
  Domain d = u.atoms().front().domain;
  std::vector<std::pair<std::string, OracleReport>> reports;
  auto want = [&](const char* name) { return opt.suite == name || opt.suite == "all"; };
  if (want("gate")) reports.emplace_back("gate", oracle_gate(u));
  if (want("pair")) reports.emplace_back("pair", oracle_pair(u, Session::make(d)));
  if (want("levels")) reports.emplace_back("levels", oracle_levels(u));
  if (want("functions")) reports.emplace_back("functions", oracle_functions(u, Session::make(d)));
  if (reports.empty()) {
    std::cerr << "UnknownSuite: " << opt.suite << "\n";
    return kExitUsage;
  }
  unsigned mismatches = 0;
  for (const auto& [name, rep] : reports) {
    for (const std::string& line : rep.lines) std::cout << line << "\n";
    std::cout << name << ": " << rep.cases << " cases, " << rep.mismatches << " mismatches\n";
    mismatches += rep.mismatches;
  }
  return mismatches == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage();
  std::string cmd = argv[1];
  Options opt;
  try {
    if (!parse_options(argc, argv, 2, opt)) return kExitUsage;
    if (cmd == "repl") return run_repl(opt);
    if (cmd == "eval") return run_eval(opt);
    if (cmd == "check") return run_check(opt);
    if (cmd == "demo") return run_demo(opt);
    if (cmd == "oracle") return run_oracle(opt);
    if (cmd == "suites") {
      for (const std::string& n : suite_names()) std::cout << n << "\n";
      return kExitOk;
    }
  } catch (const UnknownSuite& err) {
    std::cerr << "UnknownSuite: " << err.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const MagmaError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitUsage;
  }
  return usage();
}

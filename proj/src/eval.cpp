#include "magma/eval.hpp"

#include <functional>

#include "magma/errors.hpp"

namespace magma {

std::string print_value(const Value& v) {
  struct Printer {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(const Level& l) const { return to_string(l); }
    std::string operator()(const Atom& a) const { return to_string(a); }
    std::string operator()(const Magma& m) const { return to_string(m); }
    std::string operator()(const EmptyVal&) const { return "empty"; }
    std::string operator()(const Relation& r) const {
      std::string s = "(rel (";
      for (std::size_t i = 0; i < r.intended().size(); ++i) {
        if (i) s += ' ';
        s += "(" + to_string(r.intended()[i].first) + " " +
             to_string(r.intended()[i].second) + ")";
      }
      return s + "))";
    }
    std::string operator()(const ClassDescriptor& c) const {
      std::string s = "(class (roots";
      for (const Magma& r : c.roots) s += " " + to_string(r);
      return s + "))";
    }
    std::string operator()(const CountGenFun&) const { return "(cg ...)"; }
    std::string operator()(const UnionCase& c) const { return to_string(c); }
    std::string operator()(const TupleVal& t) const {
      std::string s = "(";
      for (std::size_t i = 0; i < t.items.size(); ++i) {
        if (i) s += ' ';
        s += to_string(t.items[i]);
      }
      return s + ")";
    }
    std::string operator()(const TextVal& t) const { return t.text; }
  };
  return std::visit(Printer{}, v);
}

namespace {

[[noreturn]] void eval_fail(const SExpr& e, const std::string& msg) {
  throw EvalError(msg + " in " + render(e));
}

}  // namespace

Value Evaluator::eval_text(const std::string& text) { return eval(parse_sexpr(text)); }

Value Evaluator::eval(const SExpr& e) {
  switch (e.type) {
    case SExpr::Type::Int:
      return static_cast<std::int64_t>(e.num);
    case SExpr::Type::Rat:
      eval_fail(e, "a bare rational is not a value");
    case SExpr::Type::Symbol: {
      if (e.sym == "true") return true;
      if (e.sym == "false") return false;
      if (e.sym == "empty") return EmptyVal{};
      auto it = env_.find(e.sym);
      if (it == env_.end()) eval_fail(e, "unbound name '" + e.sym + "'");
      return it->second;
    }
    case SExpr::Type::List:
      break;
  }
  if (e.items.empty()) eval_fail(e, "empty list");
  if (e.items[0].type != SExpr::Type::Symbol) eval_fail(e, "list head must be a symbol");
  try {
    return eval_head(e);
  } catch (const EvalError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const MagmaError& err) {
    eval_fail(e, err.what());
  }
}

Magma Evaluator::eval_magma(const SExpr& e) {
  Value v = eval(e);
  if (auto* m = std::get_if<Magma>(&v)) return *m;
  if (std::get_if<Atom>(&v)) eval_fail(e, "expected a magma, got an atom (wrap it in pr)");
  eval_fail(e, "expected a magma");
}

Atom Evaluator::eval_atom(const SExpr& e) {
  Value v = eval(e);
  if (auto* a = std::get_if<Atom>(&v)) return *a;
  eval_fail(e, "expected an atom");
}

std::int64_t Evaluator::eval_int(const SExpr& e) {
  Value v = eval(e);
  if (auto* n = std::get_if<std::int64_t>(&v)) return *n;
  eval_fail(e, "expected an integer");
}

Ordinal Evaluator::eval_ordinal(const SExpr& e) {
  if (e.type == SExpr::Type::Int) {
    if (e.num < 0) eval_fail(e, "ordinal notation needs a natural");
    return Ordinal{0, static_cast<std::uint32_t>(e.num)};
  }
  Value v = eval(e);
  if (auto* l = std::get_if<Level>(&v)) return *l;
  if (auto* n = std::get_if<std::int64_t>(&v)) {
    if (*n < 0) eval_fail(e, "ordinal notation needs a natural");
    return Ordinal{0, static_cast<std::uint32_t>(*n)};
  }
  eval_fail(e, "expected an ordinal notation");
}

Relation Evaluator::eval_relation(const SExpr& e) {
  Value v = eval(e);
  if (auto* r = std::get_if<Relation>(&v)) return *r;
  eval_fail(e, "expected a relation");
}

ClassDescriptor Evaluator::eval_class(const SExpr& e) {
  Value v = eval(e);
  if (auto* c = std::get_if<ClassDescriptor>(&v)) return *c;
  eval_fail(e, "expected a class descriptor");
}

Evaluator::Predicate Evaluator::eval_predicate(const SExpr& e) {
  std::string h = e.head();
  if (h == "is-pair") {
    Session s = session_;
    return {[s](const Magma& m) { return is_pair(s, m); }, {}};
  }
  if (h == "eq-to" && e.items.size() == 2) {
    Magma target = eval_magma(e.items[1]);
    return {[target](const Magma& m) { return equal(m, target); }, {target}};
  }
  if (h == "subset-of" && e.items.size() == 2) {
    Magma target = eval_magma(e.items[1]);
    return {[target](const Magma& m) { return subset(m, target); }, {target}};
  }
  if (h == "in-class" && e.items.size() == 2) {
    ClassDescriptor c = eval_class(e.items[1]);
    std::vector<Magma> hints = c.roots;
    return {[c](const Magma& m) { return class_contains(c, m); }, std::move(hints)};
  }
  eval_fail(e, "unknown predicate (expected is-pair, eq-to, subset-of or in-class)");
}

Value Evaluator::eval_head(const SExpr& e) {
  const std::string& h = e.items[0].sym;
  auto argc = e.items.size() - 1;
  auto need = [&](std::size_t n) {
    if (argc != n) eval_fail(e, h + " expects " + std::to_string(n) + " arguments");
  };

  if (h == "at") {
    if (argc != 3) eval_fail(e, "atom literal: (at <domain> <p> <q>)");
    const SExpr& dom_e = e.items[1];
    if (dom_e.type != SExpr::Type::Symbol) eval_fail(e, "atom literal domain must be a symbol");
    if (dom_e.sym == "tag") return tag_atom(eval_int(e.items[2]), eval_int(e.items[3]));
    if (dom_e.sym == "plane") return plane_atom(eval_int(e.items[2]), eval_int(e.items[3]));
    if (dom_e.sym == "qdup") {
      Rational q;
      if (e.items[2].type == SExpr::Type::Rat) q = e.items[2].rat;
      else if (e.items[2].type == SExpr::Type::Int) q = Rational(e.items[2].num, 1);
      else eval_fail(e, "qdup atom needs a rational");
      std::int64_t copy = eval_int(e.items[3]);
      if (copy != 0 && copy != 1) eval_fail(e, "qdup copy bit must be 0 or 1");
      return qdup_atom(q, static_cast<std::uint8_t>(copy));
    }
    eval_fail(e, "unknown atom domain '" + dom_e.sym + "'");
  }
  if (h == "ai") {
    if (argc < 1) eval_fail(e, "(ai <atom>...) needs at least one atom");
    std::vector<Atom> atoms;
    for (std::size_t i = 1; i < e.items.size(); ++i) atoms.push_back(eval_atom(e.items[i]));
    return atom_ideal(std::move(atoms));
  }
  if (h == "mi") {
    if (argc < 1) eval_fail(e, "(mi <magma>...) needs at least one magma");
    std::vector<Magma> gens;
    for (std::size_t i = 1; i < e.items.size(); ++i) gens.push_back(eval_magma(e.items[i]));
    return magma_ideal(std::move(gens));
  }
  if (h == "pr") {
    need(1);
    Value v = eval(e.items[1]);
    if (auto* a = std::get_if<Atom>(&v)) return pr(*a);
    if (auto* m = std::get_if<Magma>(&v)) return pr(*m);
    eval_fail(e, "pr expects an atom or a magma");
  }
  if (h == "pr^") {
    need(2);
    std::int64_t n = eval_int(e.items[1]);
    if (n < 0) eval_fail(e, "pr^ exponent must be a natural");
    Value v = eval(e.items[2]);
    if (auto* a = std::get_if<Atom>(&v)) return pr_iter(static_cast<unsigned>(n), *a);
    if (auto* m = std::get_if<Magma>(&v)) return pr_iter(static_cast<unsigned>(n), *m);
    eval_fail(e, "pr^ expects an atom or a magma");
  }
  if (h == "union") { need(2); return unite(eval_magma(e.items[1]), eval_magma(e.items[2])); }
  if (h == "inter") {
    need(2);
    auto m = intersect(eval_magma(e.items[1]), eval_magma(e.items[2]));
    if (!m) return EmptyVal{};
    return *m;
  }
  if (h == "subset?") { need(2); return subset(eval_magma(e.items[1]), eval_magma(e.items[2])); }
  if (h == "eq?") { need(2); return equal(eval_magma(e.items[1]), eval_magma(e.items[2])); }
  if (h == "in?") {
    need(2);
    Value z = eval(e.items[1]);
    Magma x = eval_magma(e.items[2]);
    if (auto* a = std::get_if<Atom>(&z)) return member(*a, x);
    if (auto* m = std::get_if<Magma>(&z)) return member(*m, x);
    eval_fail(e, "in? expects an atom or a magma on the left");
  }
  if (h == "level") { need(1); return eval_magma(e.items[1]).level(); }
  if (h == "pair") {
    need(2);
    return mk_pair(session_, eval_magma(e.items[1]), eval_magma(e.items[2])).whole;
  }
  if (h == "tuple") {
    if (argc < 2) eval_fail(e, "tuple needs arity >= 2");
    std::vector<Magma> xs;
    for (std::size_t i = 1; i < e.items.size(); ++i) xs.push_back(eval_magma(e.items[i]));
    return mk_tuple(session_, xs);
  }
  if (h == "untuple") {
    need(2);
    std::int64_t n = eval_int(e.items[1]);
    if (n < 2) eval_fail(e, "untuple arity must be >= 2");
    return TupleVal{extract_tuple(session_, eval_magma(e.items[2]), static_cast<std::size_t>(n))};
  }
  if (h == "pair?") { need(1); return is_pair(session_, eval_magma(e.items[1])); }
  if (h == "fst") { need(1); return extract_pair(session_, eval_magma(e.items[1])).first; }
  if (h == "snd") { need(1); return extract_pair(session_, eval_magma(e.items[1])).second; }
  if (h == "case=") {
    need(4);
    return union2_equality_case(eval_magma(e.items[1]), eval_magma(e.items[2]),
                                eval_magma(e.items[3]), eval_magma(e.items[4]));
  }
  if (h == "rel") {
    need(1);
    const SExpr& list = e.items[1];
    if (!list.is_list()) eval_fail(e, "rel expects ((z w) ...)");
    std::vector<std::pair<Magma, Magma>> pairs;
    for (const SExpr& it : list.items) {
      if (!it.is_list() || it.items.size() != 2) eval_fail(e, "rel pair must be (z w)");
      pairs.emplace_back(eval_magma(it.items[0]), eval_magma(it.items[1]));
    }
    return mk_relation(session_, std::move(pairs));
  }
  if (h == "prod") {
    need(2);
    return product(session_, eval_magma(e.items[1]), eval_magma(e.items[2]));
  }
  if (h == "dom") { need(1); return dom(eval_relation(e.items[1])); }
  if (h == "ran") { need(1); return ran(eval_relation(e.items[1])); }
  if (h == "slice") {
    need(2);
    auto m = slice(eval_relation(e.items[1]), eval_magma(e.items[2]));
    if (!m) return EmptyVal{};
    return *m;
  }
  if (h == "classify") {
    need(2);
    return TextVal{to_string(classify(eval_relation(e.items[1]), eval_magma(e.items[2])))};
  }
  if (h == "semifun?") { need(1); return is_semifunction(eval_relation(e.items[1])); }
  if (h == "fun?") { need(1); return is_function(eval_relation(e.items[1])); }
  if (h == "apply") {
    need(2);
    return apply(eval_relation(e.items[1]), eval_magma(e.items[2]));
  }
  if (h == "nat" || h == "nat*") {
    need(1);
    std::int64_t n = eval_int(e.items[1]);
    if (n < 0) eval_fail(e, "nat needs a natural");
    return nat(session_, static_cast<unsigned>(n),
               h == "nat" ? NatVariant::Primary : NatVariant::Alt)
        .value;
  }
  if (h == "omega") {
    need(2);
    std::int64_t q = eval_int(e.items[1]);
    std::int64_t r = eval_int(e.items[2]);
    if (q < 0 || r < 0) eval_fail(e, "omega parts must be naturals");
    return Level{static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(r)};
  }
  if (h == "ord+") { need(2); return ord_add(eval_ordinal(e.items[1]), eval_ordinal(e.items[2])); }
  if (h == "ord<") {
    need(2);
    std::int64_t m = eval_int(e.items[1]);
    std::int64_t n = eval_int(e.items[2]);
    if (m < 0 || n < 0) eval_fail(e, "ord< compares naturals");
    return ord_less(nat(session_, static_cast<unsigned>(m), NatVariant::Primary),
                    nat(session_, static_cast<unsigned>(n), NatVariant::Primary));
  }
  if (h == "cg") {
    need(2);
    const SExpr& prefix_e = e.items[1];
    const SExpr& tail_e = e.items[2];
    if (prefix_e.head() != "prefix") eval_fail(e, "cg expects (prefix <magma>...)");
    std::vector<Magma> prefix;
    for (std::size_t i = 1; i < prefix_e.items.size(); ++i)
      prefix.push_back(eval_magma(prefix_e.items[i]));
    if (tail_e.head() != "tail") eval_fail(e, "cg expects (tail <rule> ...)");
    if (tail_e.items.size() >= 2 && tail_e.items[1].is_symbol("const")) {
      if (tail_e.items.size() != 3) eval_fail(e, "(tail const <magma>)");
      return CountGenFun(session_, std::move(prefix), TailRule::Constant,
                         eval_magma(tail_e.items[2]));
    }
    if (tail_e.items.size() == 2 && tail_e.items[1].is_symbol("pr-tower"))
      return CountGenFun(session_, std::move(prefix), TailRule::PrTower);
    if (tail_e.items.size() == 2 && tail_e.items[1].is_symbol("shift"))
      return CountGenFun(session_, std::move(prefix), TailRule::Shift);
    eval_fail(e, "unknown tail rule (expected const, pr-tower or shift)");
  }
  if (h == "cg-apply") {
    need(2);
    Value f = eval(e.items[1]);
    auto* cg = std::get_if<CountGenFun>(&f);
    if (!cg) eval_fail(e, "cg-apply expects a countably generated function");
    return cg->apply(eval_magma(e.items[2]));
  }
  if (h == "cg-gen") {
    need(2);
    Value f = eval(e.items[1]);
    auto* cg = std::get_if<CountGenFun>(&f);
    if (!cg) eval_fail(e, "cg-gen expects a countably generated function");
    std::int64_t n = eval_int(e.items[2]);
    if (n < 1) eval_fail(e, "cg-gen index starts at 1");
    return cg->generator(static_cast<unsigned>(n));
  }
  if (h == "class") {
    need(1);
    const SExpr& roots_e = e.items[1];
    if (roots_e.head() != "roots") eval_fail(e, "class expects (roots <magma>...)");
    std::vector<Magma> roots;
    for (std::size_t i = 1; i < roots_e.items.size(); ++i)
      roots.push_back(eval_magma(roots_e.items[i]));
    return mk_class(std::move(roots));
  }
  if (h == "in-class?") {
    need(2);
    ClassDescriptor c = eval_class(e.items[1]);
    Value z = eval(e.items[2]);
    if (auto* a = std::get_if<Atom>(&z)) return class_contains(c, *a);
    if (auto* m = std::get_if<Magma>(&z)) return class_contains(c, *m);
    eval_fail(e, "in-class? expects an atom or a magma");
  }
  if (h == "separate") {
    need(2);
    auto m = separate(eval_class(e.items[1]), eval_magma(e.items[2]));
    if (!m) return EmptyVal{};
    return *m;
  }
  if (h == "magmatic?") {
    if (argc < 1) eval_fail(e, "(magmatic? <pred> [--budget N] [--seed S])");
    auto pred = eval_predicate(e.items[1]);
    unsigned budget = 400;
    std::uint64_t seed = 1;
    std::size_t positional = 0;
    for (std::size_t i = 2; i < e.items.size(); ++i) {
      if (e.items[i].is_symbol("--budget") && i + 1 < e.items.size()) {
        budget = static_cast<unsigned>(eval_int(e.items[++i]));
      } else if (e.items[i].is_symbol("--seed") && i + 1 < e.items.size()) {
        seed = static_cast<std::uint64_t>(eval_int(e.items[++i]));
      } else if (positional == 0) {
        budget = static_cast<unsigned>(eval_int(e.items[i]));
        ++positional;
      } else if (positional == 1) {
        seed = static_cast<std::uint64_t>(eval_int(e.items[i]));
        ++positional;
      } else {
        eval_fail(e, "(magmatic? <pred> [--budget N] [--seed S])");
      }
    }
    SamplerVerdict v = refute_closure(session_.domain, pred.fn, budget, seed, pred.hints);
    if (!v.refuted) return TextVal{"unrefuted after " + std::to_string(v.budget_used) + " samples"};
    return TextVal{"refuted: holds at " + to_string(*v.holder) + " but fails at submagma " +
                   to_string(*v.violator)};
  }
  if (h == "demo") {
    if (argc < 1) eval_fail(e, "(demo <name> ...)");
    const SExpr& name = e.items[1];
    if (name.is_symbol("replacement-pr")) {
      Magma u = argc >= 2 ? eval_magma(e.items[2])
                          : pr(atom_ideal({tag_atom(0, 0), tag_atom(1, 0)}));
      ReplacementWitness w = replacement_pr_witness(u);
      bool ok = verify(w);
      return TextVal{std::string(ok ? "verified: " : "BROKEN: ") + w.description};
    }
    if (name.is_symbol("completion-not-functional")) {
      CompletionWitness w = completion_not_functional_demo(session_);
      bool ok = verify(session_, w);
      return TextVal{std::string(ok ? "verified: " : "BROKEN: ") + w.description};
    }
    eval_fail(e, "unknown demo '" + render(name) + "'");
  }
  if (h == "rand-magma") {
    need(3);
    return random_magma(session_.domain, static_cast<unsigned>(eval_int(e.items[1])),
                        static_cast<unsigned>(eval_int(e.items[2])),
                        static_cast<std::uint64_t>(eval_int(e.items[3])));
  }
  if (h == "rand-sub") {
    need(2);
    return random_submagma(eval_magma(e.items[1]),
                           static_cast<std::uint64_t>(eval_int(e.items[2])));
  }
  if (h == "let") {
    need(2);
    if (e.items[1].type != SExpr::Type::Symbol) eval_fail(e, "let binds a symbol");
    Value v = eval(e.items[2]);
    env_.insert_or_assign(e.items[1].sym, v);
    return v;
  }
  eval_fail(e, "unknown form '" + h + "'");
}

}  // namespace magma

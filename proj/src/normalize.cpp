#include "slah/normalize.hpp"

namespace slah {

HornClause abstract_clause(const Problem& p, const HornClause& c, int& counter) {
  HornClause out = c;
  auto rewrite = [&](Atom& a) {
    const PredicateSig& sig = p.pred(a.pred);
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      Term& t = a.args[i];
      if (t.isVar || !t.value.isNum) continue;
      if (!p.arithmetic(sig.argSorts[i])) continue;
      std::string fresh = "__abs" + std::to_string(counter++);
      LinearAtom eq;
      eq.combo.emplace_back(fresh, Rat(1));
      eq.rel = Rel::Eq;
      eq.bound = t.value.num;
      out.theory.push_back(std::move(eq));
      out.varSorts[fresh] = sig.argSorts[i];
      t = Term::variable(fresh);
    }
  };
  for (auto& a : out.body) rewrite(a);
  if (out.head) rewrite(*out.head);
  return out;
}

Problem abstract_problem(Problem p) {
  int counter = 0;
  for (auto& c : p.clauses) c = abstract_clause(p, c, counter);
  return p;
}

void repair_unhoused_vars(Problem& p) {
  int counter = 0;
  std::vector<HornClause> defs;
  for (auto& c : p.clauses) {
    auto housed = c.freeAtomVars();
    for (const auto& v : c.theoryVars()) {
      if (housed.count(v)) continue;
      SortId s = c.varSorts.at(v);
      std::string name = "__sortvar" + std::to_string(counter++);
      PredId pid = static_cast<PredId>(p.preds.size());
      p.preds.push_back({name, {s}});
      p.predByName[name] = pid;
      c.body.push_back(Atom{pid, {Term::variable(v)}});
      HornClause def;
      def.head = Atom{pid, {Term::variable("x")}};
      def.varSorts["x"] = s;
      defs.push_back(std::move(def));
    }
  }
  for (auto& d : defs) p.clauses.push_back(std::move(d));
}

}  // namespace slah

#include "slah/oracle.hpp"

#include <algorithm>

namespace slah {

namespace {

struct GroundAtom {
  std::string pred;
  std::vector<Value> args;
  bool operator<(const GroundAtom& o) const {
    return std::tie(pred, args) < std::tie(o.pred, o.args);
  }
};

struct GroundClause {
  std::vector<GroundAtom> body;
  std::optional<GroundAtom> head;
};

}  // namespace

OracleResult oracle_saturate(const Problem& p, const TestPoints& tp, OracleDomains mode,
                             unsigned long long limit) {
  OracleResult res;
  std::vector<GroundClause> ground;
  unsigned long long total = 0;

  for (const HornClause& c : p.clauses) {
    std::vector<std::pair<std::string, std::vector<Value>>> domains;
    for (const auto& [var, sort] : c.varSorts) {
      if (mode == OracleDomains::FullFiniteSorts) {
        if (p.arithmetic(sort))
          throw Error("full-domain grounding needs finite variable sorts, '" + var +
                      "' ranges over an arithmetic sort");
        domains.emplace_back(var, p.memberValues(sort));
      } else {
        domains.emplace_back(var, wti_values(p, c, var, tp.fn));
      }
    }
    unsigned long long n = grounding_count(domains, limit);
    if (n > limit || (total += n) > limit)
      throw ScaleExceededError("grounding exceeds " + std::to_string(limit) + " clauses");

    for_each_grounding(domains, [&](const Grounding& g) {
      for (const LinearAtom& la : c.theory) {
        std::map<std::string, Rat> assign;
        for (const auto& [var, coeff] : la.combo) assign.emplace(var, g.at(var).num);
        if (!la.eval(assign)) return;
      }
      GroundClause gc;
      auto inst = [&](const Atom& a) {
        GroundAtom ga;
        ga.pred = p.pred(a.pred).name;
        for (const Term& t : a.args)
          ga.args.push_back(t.isVar ? g.at(t.var) : t.value);
        return ga;
      };
      for (const Atom& a : c.body) gc.body.push_back(inst(a));
      if (c.head) gc.head = inst(*c.head);
      ground.push_back(std::move(gc));
    });
  }

  // full saturation even past a refutation, so fact sets stay comparable
  std::set<GroundAtom> facts;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GroundClause& gc : ground) {
      bool fire = true;
      for (const GroundAtom& a : gc.body)
        if (!facts.count(a)) {
          fire = false;
          break;
        }
      if (!fire) continue;
      if (!gc.head) {
        res.unsat = true;
        continue;
      }
      if (facts.insert(*gc.head).second) changed = true;
    }
  }

  for (const GroundAtom& a : facts) res.facts[a.pred].insert(a.args);

  if (p.conjecture && p.conjecture->quant == Quantifier::Forall) {
    res.hasUniversal = true;
    PredId q = p.conjecture->atom.pred;
    int m = p.pred(q).arity();
    bool complete = true;
    std::vector<std::pair<std::string, std::vector<Value>>> domains;
    for (int i = 1; i <= m; ++i) {
      if (mode == OracleDomains::FullFiniteSorts) {
        SortId s = p.argSort({q, i});
        if (p.arithmetic(s)) throw Error("full-domain grounding needs finite conjecture sorts");
        domains.emplace_back("a" + std::to_string(i), p.memberValues(s));
      } else {
        domains.emplace_back("a" + std::to_string(i), tp.fn.beta.at({q, i}));
      }
    }
    if (mode == OracleDomains::TestPoints) complete = eta_complete_for(p, tp, q);
    if (complete) {
      unsigned long long n = grounding_count(domains, limit);
      if (n > limit) throw ScaleExceededError("conjecture instance set exceeds oracle limit");
      bool allIn = true;
      const auto it = res.facts.find(p.pred(q).name);
      for_each_grounding(domains, [&](const Grounding& g) {
        std::vector<Value> tup;
        for (int i = 1; i <= m; ++i) tup.push_back(g.at("a" + std::to_string(i)));
        if (it == res.facts.end() || !it->second.count(tup)) allIn = false;
      });
      res.universalHolds = allIn;
    }
  }

  return res;
}

}  // namespace slah

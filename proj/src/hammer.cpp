#include "slah/hammer.hpp"

#include <algorithm>
#include <sstream>

namespace slah {

const char* const kGoalPred = "__goal";
const char* const kGoalUnivPred = "__goal_univ";
const char* const kExpectedPred = "__expected";
const char* const kMissingPred = "__missing";

namespace {

constexpr unsigned long long kDeltaPhiCap = 10'000'000ULL;

std::string valuesKey(const std::vector<Value>& vs) {
  std::string s;
  for (const Value& v : vs) {
    s += v.str();
    s += ',';
  }
  return s;
}

DlAtom translateAtom(const Atom& a, const Problem& p) {
  DlAtom out;
  out.pred = p.pred(a.pred).name;
  for (const Term& t : a.args)
    out.args.push_back(t.isVar ? DlTerm::variable(t.var) : DlTerm::constant(t.value));
  return out;
}

struct Builder {
  const Problem& p;
  const TestPoints& tp;
  HammeredProgram out;
  std::map<std::string, std::size_t> theoryByKey;
  std::map<std::string, std::size_t> sortByKey;

  Builder(const Problem& p_, const TestPoints& tp_) : p(p_), tp(tp_) {
    for (PredId pid = 0; pid < static_cast<PredId>(p.preds.size()); ++pid)
      out.program.declare(p.pred(pid).name, p.pred(pid).arity());
  }

  DlAtom theoryAtom(const LinearAtom& la, const std::map<std::string, std::vector<Value>>& wti,
                    std::size_t clauseIdx) {
    std::ostringstream key;
    for (const auto& [var, coeff] : la.combo) key << rat_to_string(coeff) << ',';
    key << '|' << static_cast<int>(la.rel) << '|' << rat_to_string(la.bound) << '|';
    for (const auto& [var, coeff] : la.combo) key << valuesKey(wti.at(var)) << ';';

    auto it = theoryByKey.find(key.str());
    std::size_t idx;
    if (it != theoryByKey.end()) {
      idx = it->second;
    } else {
      idx = out.theoryPreds.size();
      theoryByKey.emplace(key.str(), idx);
      TheoryPredInfo info;
      info.name = "__theory" + std::to_string(idx);
      info.atom = la;
      for (const auto& [var, coeff] : la.combo) {
        info.argVars.push_back(var);
        info.argDomains.push_back(wti.at(var));
      }
      out.program.declare(info.name, static_cast<int>(info.argVars.size()));
      tabulate(info);
      out.theoryPreds.push_back(info);
    }
    (void)clauseIdx;
    DlAtom a;
    a.pred = out.theoryPreds[idx].name;
    for (const auto& [var, coeff] : la.combo) a.args.push_back(DlTerm::variable(var));
    return a;
  }

  void tabulate(const TheoryPredInfo& info) {
    std::vector<std::pair<std::string, std::vector<Value>>> domains;
    for (std::size_t i = 0; i < info.argVars.size(); ++i)
      domains.emplace_back(info.argVars[i], info.argDomains[i]);
    for_each_grounding(domains, [&](const Grounding& g) {
      std::map<std::string, Rat> assign;
      for (const auto& [var, val] : g) {
        if (!val.isNum) throw InternalError("symbolic value assigned to an arithmetic variable");
        assign.emplace(var, val.num);
      }
      if (!info.atom.eval(assign)) return;
      DlAtom f;
      f.pred = info.name;
      for (const std::string& var : info.argVars) f.args.push_back(DlTerm::constant(g.at(var)));
      out.program.addFact(std::move(f));
      ++out.stats.tfactCount;
    });
  }

  DlAtom sortAtom(const std::string& var, SortId sort, const std::vector<Value>& values) {
    std::string key = std::to_string(sort) + "|" + valuesKey(values);
    auto it = sortByKey.find(key);
    std::size_t idx;
    if (it != sortByKey.end()) {
      idx = it->second;
    } else {
      idx = out.sortPreds.size();
      sortByKey.emplace(key, idx);
      SortPredInfo info;
      info.name = "__sortfact" + std::to_string(idx);
      info.sort = sort;
      info.values = values;
      out.program.declare(info.name, 1);
      for (const Value& v : values) {
        DlAtom f;
        f.pred = info.name;
        f.args.push_back(DlTerm::constant(v));
        out.program.addFact(std::move(f));
        ++out.stats.sfactCount;
      }
      out.sortPreds.push_back(info);
    }
    DlAtom a;
    a.pred = out.sortPreds[idx].name;
    a.args.push_back(DlTerm::variable(var));
    return a;
  }

  void clause(const HornClause& c, std::size_t idx) {
    std::map<std::string, std::vector<Value>> wti;
    for (const auto& [var, sort] : c.varSorts) wti.emplace(var, wti_values(p, c, var, tp.fn));

    DlRule r;
    for (const Atom& a : c.body) r.pos.push_back(translateAtom(a, p));
    for (const LinearAtom& la : c.theory) {
      if (la.combo.empty()) {
        if (rel_eval(Rat(0), la.rel, la.bound)) continue;  // trivially true, drop atom
        return;                                            // trivially false, drop clause
      }
      r.pos.push_back(theoryAtom(la, wti, idx));
    }
    for (const auto& [var, sort] : c.varSorts) {
      bool inTheory = false;
      for (const LinearAtom& la : c.theory)
        if (la.contains(var)) inTheory = true;
      if (inTheory) continue;
      std::vector<ArgPos> db = c.dependBody(var);
      bool need = db.empty();
      if (!need && sort == kSortInt) {
        need = true;
        for (const ArgPos& pos : db)
          if (p.argSort(pos) != kSortReal) need = false;
      }
      if (need) r.pos.push_back(sortAtom(var, sort, wti.at(var)));
    }
    r.head = c.head ? translateAtom(*c.head, p) : DlAtom{kGoalPred, {}};
    if (r.pos.empty() && r.head.ground())
      out.program.addFact(std::move(r.head));
    else
      out.program.addRule(std::move(r));
  }

  void universal(Encoding enc) {
    const Conjecture& conj = *p.conjecture;
    out.hasUniversal = true;
    PredId q = conj.atom.pred;
    out.etaComplete = eta_complete_for(p, tp, q);
    if (!out.etaComplete) return;

    int m = p.pred(q).arity();
    std::vector<std::pair<std::string, std::vector<Value>>> domains;
    for (int i = 1; i <= m; ++i)
      domains.emplace_back("a" + std::to_string(i), tp.fn.beta.at({q, i}));
    unsigned long long n = grounding_count(domains, kDeltaPhiCap);
    if (n > kDeltaPhiCap)
      throw ScaleExceededError("universal conjecture expands to more than " +
                               std::to_string(kDeltaPhiCap) + " expected instances");
    out.stats.deltaPhi = n;

    std::vector<DlAtom> instances;
    for_each_grounding(domains, [&](const Grounding& g) {
      DlAtom a;
      a.pred = p.pred(q).name;
      for (int i = 1; i <= m; ++i)
        a.args.push_back(DlTerm::constant(g.at("a" + std::to_string(i))));
      instances.push_back(std::move(a));
    });

    if (enc == Encoding::Clause) {
      DlRule big;
      big.head = DlAtom{kGoalPred, {}};
      big.pos = std::move(instances);
      if (big.pos.empty())
        out.program.addFact(std::move(big.head));
      else
        out.program.addRule(std::move(big));
      return;
    }

    for (DlAtom& inst : instances) {
      inst.pred = kExpectedPred;
      out.program.addFact(std::move(inst));
    }
    DlRule miss;
    miss.head = DlAtom{kMissingPred, {}};
    DlAtom expected{kExpectedPred, {}};
    DlAtom probe{p.pred(q).name, {}};
    for (int i = 1; i <= m; ++i) {
      expected.args.push_back(DlTerm::variable("X" + std::to_string(i)));
      probe.args.push_back(DlTerm::variable("X" + std::to_string(i)));
    }
    out.program.declare(kExpectedPred, m);
    miss.pos.push_back(std::move(expected));
    miss.neg.push_back(std::move(probe));
    out.program.addRule(std::move(miss));

    DlRule done;
    done.head = DlAtom{kGoalUnivPred, {}};
    done.neg.push_back(DlAtom{kMissingPred, {}});
    out.program.addRule(std::move(done));
  }
};

}  // namespace

HammeredProgram hammer(const Problem& p, const TestPoints& tp, Encoding enc) {
  if (p.conjecture && p.conjecture->quant == Quantifier::Exists)
    throw InternalError("existential conjecture must be lowered to a clause before hammering");

  Builder b(p, tp);
  for (std::size_t i = 0; i < p.clauses.size(); ++i) b.clause(p.clauses[i], i);
  if (p.conjecture) b.universal(enc);
  return std::move(b.out);
}

}  // namespace slah

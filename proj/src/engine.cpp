#include "slah/engine.hpp"

#include <algorithm>
#include <functional>

namespace slah {

unsigned long long EvalResult::totalFacts() const {
  unsigned long long n = 0;
  for (const auto& [pred, ts] : facts) n += ts.size();
  return n;
}

std::map<std::string, int> stratify(const DatalogProgram& prog) {
  std::map<std::string, int> stratum;
  for (const auto& [pred, n] : prog.arity) stratum[pred] = 0;
  int cap = static_cast<int>(prog.arity.size()) + 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const DlRule& r : prog.rules) {
      int& h = stratum[r.head.pred];
      for (const DlAtom& a : r.pos)
        if (stratum[a.pred] > h) {
          h = stratum[a.pred];
          changed = true;
        }
      for (const DlAtom& a : r.neg)
        if (stratum[a.pred] + 1 > h) {
          h = stratum[a.pred] + 1;
          changed = true;
        }
      if (h > cap)
        throw NotStratifiableError("negation of '" + r.head.pred +
                                   "' depends on itself through a cycle");
    }
  }
  return stratum;
}

namespace {

using Tuple = std::vector<int>;
using Rel = std::set<Tuple>;
using Binding = std::map<std::string, int>;

struct Interner {
  std::map<Value, int> id;
  std::vector<Value> values;

  int intern(const Value& v) {
    auto [it, fresh] = id.emplace(v, static_cast<int>(values.size()));
    if (fresh) values.push_back(v);
    return it->second;
  }
};

struct Eval {
  const DatalogProgram& prog;
  Interner in;
  std::map<std::string, Rel> all;

  explicit Eval(const DatalogProgram& p) : prog(p) {
    // stable ids: census over every constant in the program, sorted
    std::set<Value> census;
    for (const DlAtom& f : prog.facts)
      for (const DlTerm& t : f.args) census.insert(t.value);
    auto scanAtom = [&](const DlAtom& a) {
      for (const DlTerm& t : a.args)
        if (!t.isVar) census.insert(t.value);
    };
    for (const DlRule& r : prog.rules) {
      scanAtom(r.head);
      for (const DlAtom& a : r.pos) scanAtom(a);
      for (const DlAtom& a : r.neg) scanAtom(a);
    }
    for (const Value& v : census) in.intern(v);
    for (const auto& [pred, n] : prog.arity) all[pred];
    for (const DlAtom& f : prog.facts) {
      Tuple t;
      for (const DlTerm& a : f.args) t.push_back(in.intern(a.value));
      all[f.pred].insert(std::move(t));
    }
  }

  // Extends the binding along one atom against an explicit relation.
  template <typename Fn>
  void matchInto(const DlAtom& atom, const Rel& rel, Binding& b, const Fn& k) {
    for (const Tuple& t : rel) {
      std::vector<std::pair<std::string, int>> added;
      bool ok = true;
      for (std::size_t i = 0; i < atom.args.size() && ok; ++i) {
        const DlTerm& arg = atom.args[i];
        if (!arg.isVar) {
          auto it = in.id.find(arg.value);
          ok = it != in.id.end() && it->second == t[i];
        } else {
          auto it = b.find(arg.var);
          if (it == b.end()) {
            b.emplace(arg.var, t[i]);
            added.emplace_back(arg.var, t[i]);
          } else {
            ok = it->second == t[i];
          }
        }
      }
      if (ok) k();
      for (auto& [v, c] : added) b.erase(v);
    }
  }

  Tuple groundTuple(const DlAtom& a, const Binding& b) {
    Tuple t;
    for (const DlTerm& arg : a.args)
      t.push_back(arg.isVar ? b.at(arg.var) : in.intern(arg.value));
    return t;
  }

  // Joins the rule body with atom `deltaIdx` (or none) restricted to delta,
  // remaining atoms ordered by ascending relation size.
  void fireRule(const DlRule& r, int deltaIdx, const std::map<std::string, Rel>& delta,
                std::map<std::string, Rel>& out) {
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(r.pos.size()); ++i)
      if (i != deltaIdx) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return all.at(r.pos[a].pred).size() < all.at(r.pos[b].pred).size();
    });
    if (deltaIdx >= 0) order.insert(order.begin(), deltaIdx);

    Binding b;
    std::function<void(std::size_t)> step = [&](std::size_t k) {
      if (k == order.size()) {
        for (const DlAtom& n : r.neg)
          if (all.at(n.pred).count(groundTuple(n, b))) return;
        Tuple h = groundTuple(r.head, b);
        if (!all.at(r.head.pred).count(h)) out[r.head.pred].insert(std::move(h));
        return;
      }
      int idx = order[k];
      const DlAtom& atom = r.pos[idx];
      const Rel* rel = &all.at(atom.pred);
      if (idx == deltaIdx) {
        auto it = delta.find(atom.pred);
        rel = it == delta.end() ? nullptr : &it->second;
        if (!rel) return;
      }
      matchInto(atom, *rel, b, [&] { step(k + 1); });
    };
    step(0);
  }

  EvalResult run() {
    std::map<std::string, int> stratum = stratify(prog);
    int maxS = 0;
    for (const auto& [pred, s] : stratum) maxS = std::max(maxS, s);

    for (int s = 0; s <= maxS; ++s) {
      std::vector<const DlRule*> rules;
      for (const DlRule& r : prog.rules)
        if (stratum.at(r.head.pred) == s) rules.push_back(&r);
      if (rules.empty()) continue;

      // round one: full join; afterwards only joins touching the delta
      std::map<std::string, Rel> delta;
      bool first = true;
      for (;;) {
        std::map<std::string, Rel> fresh;
        for (const DlRule* r : rules) {
          if (first) {
            fireRule(*r, -1, delta, fresh);
          } else {
            for (int i = 0; i < static_cast<int>(r->pos.size()); ++i) {
              auto it = delta.find(r->pos[i].pred);
              if (it != delta.end() && !it->second.empty()) fireRule(*r, i, delta, fresh);
            }
          }
        }
        first = false;
        bool any = false;
        for (auto& [pred, ts] : fresh)
          if (!ts.empty()) any = true;
        if (!any) break;
        for (auto& [pred, ts] : fresh)
          for (const Tuple& t : ts) all[pred].insert(t);
        delta = std::move(fresh);
      }
    }

    EvalResult res;
    for (const auto& [pred, rel] : all) {
      auto& out = res.facts[pred];
      for (const Tuple& t : rel) {
        std::vector<Value> vs;
        for (int c : t) vs.push_back(in.values[c]);
        out.insert(std::move(vs));
      }
    }
    return res;
  }
};

}  // namespace

EvalResult evaluate(const DatalogProgram& prog) { return Eval(prog).run(); }

}  // namespace slah

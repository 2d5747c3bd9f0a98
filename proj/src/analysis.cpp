#include "slah/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace slah {
namespace {

bool saturated(const Problem& p, const AvalSet& s, const ArgPos& pos) {
  if (s.top) return true;
  const Sort& srt = p.sort(p.argSort(pos));
  return srt.kind == SortKind::Finite && s.values.size() == srt.members.size();
}

void setWholeDomain(const Problem& p, AvalSet& s, const ArgPos& pos) {
  const Sort& srt = p.sort(p.argSort(pos));
  if (srt.kind == SortKind::Finite) {
    for (const auto& m : srt.members) s.values.insert(Value::member(m));
  } else {
    s.top = true;
    s.values.clear();
  }
}

// Constants assigned to var through equations of the clause's theory part.
std::vector<Rat> lambdaAssignments(const HornClause& c, const std::string& var) {
  std::vector<Rat> out;
  for (const auto& la : c.theory) {
    if (la.rel != Rel::Eq || la.combo.size() != 1) continue;
    if (la.combo[0].first != var) continue;
    out.push_back(Rat(la.bound / la.combo[0].second));
  }
  return out;
}

// One propagation step for a single clause. Returns true on change.
bool processClause(const Problem& p, const HornClause& c, AVals& av) {
  if (!c.head) return false;
  bool changed = false;
  const Atom& h = *c.head;
  for (std::size_t i = 0; i < h.args.size(); ++i) {
    ArgPos pos{h.pred, static_cast<int>(i) + 1};
    AvalSet& dst = av.table.at(pos);
    if (saturated(p, dst, pos)) continue;
    const Term& t = h.args[i];
    if (!t.isVar) {
      changed |= dst.values.insert(t.value).second;
      continue;
    }
    auto assigned = lambdaAssignments(c, t.var);
    if (!assigned.empty()) {
      for (const auto& r : assigned) changed |= dst.values.insert(Value::number(r)).second;
      continue;
    }
    auto bodyPos = c.dependBody(t.var);
    if (bodyPos.empty()) {
      setWholeDomain(p, dst, pos);
      changed = true;
      continue;
    }
    bool haveFinite = false;
    std::set<Value> acc;
    for (const auto& bp : bodyPos) {
      const AvalSet& src = av.table.at(bp);
      if (src.top) continue;
      if (!haveFinite) {
        acc = src.values;
        haveFinite = true;
      } else {
        std::set<Value> inter;
        std::set_intersection(acc.begin(), acc.end(), src.values.begin(), src.values.end(),
                              std::inserter(inter, inter.begin()));
        acc = std::move(inter);
      }
    }
    if (!haveFinite) {
      setWholeDomain(p, dst, pos);
      changed = true;
      continue;
    }
    for (const auto& v : acc) changed |= dst.values.insert(v).second;
  }
  return changed;
}

// Clause order for the one-pass mode: topological in the predicate
// dependency graph, or nothing when the graph has a cycle.
std::optional<std::vector<std::size_t>> topoClauseOrder(const Problem& p) {
  int n = static_cast<int>(p.preds.size());
  std::vector<std::set<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (const auto& c : p.clauses) {
    if (!c.head) continue;
    for (const auto& b : c.body) {
      if (b.pred == c.head->pred) return std::nullopt;  // self-recursion
      if (succ[b.pred].insert(c.head->pred).second) ++indeg[c.head->pred];
    }
  }
  std::vector<int> order, queue;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  std::vector<int> rank(n, 0);
  while (!queue.empty()) {
    int u = queue.front();
    queue.erase(queue.begin());
    order.push_back(u);
    for (int v : succ[u]) {
      rank[v] = std::max(rank[v], rank[u] + 1);
      if (--indeg[v] == 0) queue.push_back(v);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;  // cycle
  std::vector<std::size_t> idx(p.clauses.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int ra = p.clauses[a].head ? rank[p.clauses[a].head->pred] : 0;
    int rb = p.clauses[b].head ? rank[p.clauses[b].head->pred] : 0;
    return ra < rb;
  });
  return idx;
}

}  // namespace

AVals derive_values(const Problem& p, bool topoSinglePass) {
  AVals av;
  for (PredId pid = 0; pid < static_cast<PredId>(p.preds.size()); ++pid)
    for (int i = 1; i <= p.pred(pid).arity(); ++i) av.table[{pid, i}] = AvalSet{};

  if (topoSinglePass) {
    if (auto order = topoClauseOrder(p)) {
      for (std::size_t i : *order) processClause(p, p.clauses[i], av);
      return av;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : p.clauses) changed |= processClause(p, c, av);
  }
  return av;
}

namespace {

std::set<std::string> finiteVars(const HornClause& c, const AVals& av) {
  std::set<std::string> out;
  for (const Atom& a : c.body)
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (a.args[i].isVar && av.finite({a.pred, static_cast<int>(i) + 1}))
        out.insert(a.args[i].var);
  return out;
}

}  // namespace

bool is_reducible(const Problem& p, const AVals& av, std::string* why) {
  for (std::size_t ci = 0; ci < p.clauses.size(); ++ci) {
    const HornClause& c = p.clauses[ci];
    auto fin = finiteVars(c, av);
    for (const auto& la : c.theory) {
      std::vector<std::string> unbounded;
      for (const auto& [v, cf] : la.combo)
        if (!fin.count(v)) unbounded.push_back(v);
      if (unbounded.size() > 1) {
        if (why) {
          std::ostringstream os;
          os << "clause " << (ci + 1) << ", atom '" << la.str() << "': unbounded variables";
          for (const auto& v : unbounded) os << " " << v;
          *why = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

void require_reducible(const Problem& p, const AVals& av) {
  std::string why;
  if (!is_reducible(p, av, &why)) throw NotReducibleError("not reducible: " + why);
}

namespace {

struct UnionFind {
  std::map<ArgPos, ArgPos> parent;

  void add(const ArgPos& x) { parent.emplace(x, x); }
  ArgPos find(const ArgPos& x) {
    ArgPos r = x;
    while (parent.at(r) != r) r = parent.at(r);
    ArgPos c = x;
    while (parent.at(c) != c) {
      ArgPos next = parent.at(c);
      parent[c] = r;
      c = next;
    }
    return r;
  }
  void unite(const ArgPos& a, const ArgPos& b) { parent[find(a)] = find(b); }
};

}  // namespace

std::map<ArgPos, std::vector<ArgPos>> Connections::classMembers() const {
  std::map<ArgPos, std::vector<ArgPos>> out;
  for (const auto& [pos, r] : repr) out[r].push_back(pos);
  return out;
}

Connections find_connections(const Problem& p, const AVals& av) {
  UnionFind uf;
  for (const auto& [pos, s] : av.table) uf.add(pos);

  for (const auto& c : p.clauses) {
    std::map<std::string, std::vector<ArgPos>> at;
    for (const Atom* a : c.freeAtoms())
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (a->args[i].isVar) at[a->args[i].var].push_back({a->pred, static_cast<int>(i) + 1});
    for (const auto& [v, ps] : at)
      for (std::size_t i = 1; i < ps.size(); ++i) uf.unite(ps[0], ps[i]);
  }

  // Representative: least (predicate name, index) of the class.
  auto posLess = [&](const ArgPos& a, const ArgPos& b) {
    const std::string& na = p.pred(a.first).name;
    const std::string& nb = p.pred(b.first).name;
    if (na != nb) return na < nb;
    return a.second < b.second;
  };
  std::map<ArgPos, ArgPos> least;
  for (const auto& [pos, s] : av.table) {
    ArgPos root = uf.find(pos);
    auto it = least.find(root);
    if (it == least.end() || posLess(pos, it->second)) least[root] = pos;
  }
  Connections con;
  for (const auto& [pos, s] : av.table) con.repr[pos] = least.at(uf.find(pos));
  for (const auto& [root, r] : least) con.classBounds[r];  // every class present

  auto addBound = [&](const ArgPos& pos, SimpleBound b) {
    con.classBounds[con.repr.at(pos)].insert(std::move(b));
  };

  // Numeric constants sitting at a position.
  for (const auto& c : p.clauses)
    for (const Atom* a : c.freeAtoms())
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        const Term& t = a->args[i];
        if (!t.isVar && t.value.isNum)
          addBound({a->pred, static_cast<int>(i) + 1}, {Rel::Eq, t.value.num});
      }

  // Value sets of finite positions, as equations.
  for (const auto& [pos, s] : av.table) {
    if (s.top) continue;
    for (const auto& v : s.values)
      if (v.isNum) addBound(pos, {Rel::Eq, v.num});
  }

  // Clause arithmetic, instantiated over the finite values of the other
  // variables. Only positions of unbounded (top) value sets need this; the
  // per-variable form is equivalent since a variable's positions share one
  // class.
  for (const auto& c : p.clauses) {
    std::map<std::string, ArgPos> infinitePos;
    for (const Atom* a : c.freeAtoms())
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        const Term& t = a->args[i];
        if (!t.isVar) continue;
        ArgPos pos{a->pred, static_cast<int>(i) + 1};
        if (av.table.at(pos).top) infinitePos.emplace(t.var, pos);
      }
    for (const auto& [x, xpos] : infinitePos) {
      for (const auto& la : c.theory) {
        if (!la.contains(x)) continue;
        std::vector<std::string> others;
        for (const auto& [v, cf] : la.combo)
          if (v != x) others.push_back(v);
        std::vector<std::vector<Rat>> domains;
        bool empty = false;
        bool skip = false;
        for (const auto& y : others) {
          bool have = false;
          std::set<Value> acc;
          for (const auto& bp : c.dependBody(y)) {
            const AvalSet& s = av.table.at(bp);
            if (s.top) continue;
            if (!have) {
              acc = s.values;
              have = true;
            } else {
              std::set<Value> inter;
              std::set_intersection(acc.begin(), acc.end(), s.values.begin(), s.values.end(),
                                    std::inserter(inter, inter.begin()));
              acc = std::move(inter);
            }
          }
          if (!have) {
            // y is the atom's one variable without finite body occurrences,
            // so the atom is instantiated with y as the target instead; it
            // contributes no bounds for x.
            skip = true;
            break;
          }
          std::vector<Rat> dom;
          for (const auto& v : acc) {
            if (!v.isNum) throw InternalError("non-numeric value for arithmetic variable");
            dom.push_back(v.num);
          }
          if (dom.empty()) empty = true;
          domains.push_back(std::move(dom));
        }
        if (skip || empty) continue;
        std::vector<std::size_t> idx(others.size(), 0);
        while (true) {
          std::map<std::string, Rat> sigma;
          for (std::size_t k = 0; k < others.size(); ++k) sigma[others[k]] = domains[k][idx[k]];
          SimplifyResult r = simplify_theory_atom(la, sigma);
          if (r.isGround || r.var != x)
            throw InternalError("instantiated atom did not reduce to a bound on its variable");
          addBound(xpos, r.bound);
          std::size_t k = 0;
          for (; k < idx.size(); ++k) {
            if (++idx[k] < domains[k].size()) break;
            idx[k] = 0;
          }
          if (k == idx.size()) break;
        }
      }
    }
  }
  return con;
}

SimplifyResult simplify_theory_atom(const LinearAtom& a, const std::map<std::string, Rat>& assign) {
  LinearAtom rem = a.substitute(assign);
  SimplifyResult out;
  if (rem.combo.empty()) {
    out.isGround = true;
    out.truth = rel_eval(Rat(0), rem.rel, rem.bound);
    return out;
  }
  if (rem.combo.size() > 1)
    throw InternalError("arithmetic atom '" + a.str() + "' kept more than one free variable");
  out.isGround = false;
  out.var = rem.combo[0].first;
  const Rat& cf = rem.combo[0].second;
  out.bound.value = rem.bound / cf;
  out.bound.rel = cf < 0 ? rel_flip(rem.rel) : rem.rel;
  return out;
}

std::string dump_analysis(const Problem& p, const AVals& av, const Connections& con) {
  std::ostringstream os;
  std::vector<ArgPos> positions;
  for (const auto& [pos, s] : av.table) positions.push_back(pos);
  std::sort(positions.begin(), positions.end(), [&](const ArgPos& a, const ArgPos& b) {
    const std::string& na = p.pred(a.first).name;
    const std::string& nb = p.pred(b.first).name;
    if (na != nb) return na < nb;
    return a.second < b.second;
  });
  auto posName = [&](const ArgPos& pos) {
    return "(" + p.pred(pos.first).name + "," + std::to_string(pos.second) + ")";
  };
  for (const auto& pos : positions) {
    const AvalSet& s = av.at(pos);
    os << "avals" << posName(pos) << " = ";
    if (s.top) {
      os << "TOP\n";
    } else {
      os << "{";
      bool first = true;
      for (const auto& v : s.values) {
        os << (first ? "" : ", ") << v.str();
        first = false;
      }
      os << "}\n";
    }
  }
  auto members = con.classMembers();
  for (auto& [r, ps] : members) {
    std::sort(ps.begin(), ps.end(), [&](const ArgPos& a, const ArgPos& b) {
      const std::string& na = p.pred(a.first).name;
      const std::string& nb = p.pred(b.first).name;
      if (na != nb) return na < nb;
      return a.second < b.second;
    });
  }
  for (const auto& [r, ps] : members) {
    os << "class {";
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : "") << posName(ps[i]);
    os << "} bounds {";
    bool first = true;
    for (const auto& b : con.classBounds.at(r)) {
      os << (first ? "" : ", ") << b.str();
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace slah

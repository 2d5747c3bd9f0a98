#include "slah/testpoints.hpp"

#include <algorithm>
#include <sstream>

namespace slah {

std::size_t TestPointFn::maxSetSize() const {
  std::size_t m = 0;
  for (const auto& [pos, vals] : beta) m = std::max(m, vals.size());
  return m;
}

bool Extrapolation::covers(const Rat& x) const {
  if (!iv.contains(x)) return false;
  switch (parity) {
    case Parity::Whole: return true;
    case Parity::IntPart: return rat_is_integer(x);
    case Parity::NonIntPart: return !rat_is_integer(x);
  }
  return false;
}

std::string Extrapolation::str() const {
  std::string s = iv.str();
  if (parity == Parity::IntPart) s += " ^ Int";
  if (parity == Parity::NonIntPart) s += " \\ Int";
  return s;
}

namespace {

// Keeps only values admissible at the position's sort: integral numbers for
// Int, any number for Real, the declared members for a finite sort.
std::vector<Value> filterToSort(const Problem& p, SortId s, const std::vector<Value>& in) {
  std::vector<Value> out;
  const Sort& sort = p.sorts[s];
  for (const Value& v : in) {
    if (sort.kind == SortKind::Finite) {
      if (!v.isNum &&
          std::find(sort.members.begin(), sort.members.end(), v.fo) != sort.members.end())
        out.push_back(v);
    } else if (v.isNum) {
      if (sort.kind == SortKind::Int && !rat_is_integer(v.num)) continue;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Value& a, const Value& b) { return !(a < b) && !(b < a); }),
            out.end());
  return out;
}

struct Pick {
  Rat value;
  Parity parity;
  int interval;  // index into the class partition
};

}  // namespace

TestPoints pick_test_points(const Problem& p, const AVals& av, const Connections& con,
                            bool twoPointsPerInterval) {
  TestPoints tp;

  // Positions with a bounded derived value set keep exactly those values.
  for (PredId pid = 0; pid < static_cast<PredId>(p.preds.size()); ++pid) {
    for (int i = 1; i <= p.pred(pid).arity(); ++i) {
      ArgPos pos{pid, i};
      bool fin = av.finite(pos);
      tp.fn.finiteFlagged[pos] = fin;
      if (fin) {
        const auto& vs = av.at(pos).values;
        tp.fn.beta[pos] =
            filterToSort(p, p.argSort(pos), std::vector<Value>(vs.begin(), vs.end()));
      }
    }
  }

  // Group the remaining positions by connection class.
  std::map<ArgPos, std::vector<ArgPos>> groups = con.classMembers();
  for (const auto& [root, members] : groups) {
    bool anyTop = false;
    for (const ArgPos& pos : members)
      if (!tp.fn.finiteFlagged.at(pos)) anyTop = true;
    if (!anyTop) continue;

    for (const ArgPos& pos : members)
      if (!tp.fn.finiteFlagged.at(pos) && !p.arithmetic(p.argSort(pos)))
        throw InternalError("finite-sorted position with unbounded value set");

    std::vector<Interval> part = interval_partition(interval_endpoints(con.boundsFor(root)));

    // A class whose positions and connecting variables agree on one sort
    // needs only one point per interval.
    SortId common = p.argSort(members.front());
    bool uniform = true;
    for (const ArgPos& pos : members)
      if (p.argSort(pos) != common) uniform = false;
    for (const HornClause& c : p.clauses) {
      for (const Atom* a : c.freeAtoms()) {
        for (int i = 0; i < static_cast<int>(a->args.size()); ++i) {
          if (!a->args[i].isVar) continue;
          if (con.classOf({a->pred, i + 1}) != root) continue;
          if (c.varSorts.at(a->args[i].var) != common) uniform = false;
        }
      }
    }
    bool onePoint = uniform && !twoPointsPerInterval;

    std::vector<Pick> picks;
    for (int k = 0; k < static_cast<int>(part.size()); ++k) {
      const Interval& iv = part[k];
      if (onePoint) {
        if (iv.hasInteger())
          picks.push_back({iv.integerPick(),
                           common == kSortInt ? Parity::IntPart : Parity::Whole, k});
        else if (common != kSortInt)
          picks.push_back({iv.nonIntegerPick(), Parity::Whole, k});
      } else {
        if (iv.hasInteger()) picks.push_back({iv.integerPick(), Parity::IntPart, k});
        if (iv.hasNonInteger()) picks.push_back({iv.nonIntegerPick(), Parity::NonIntPart, k});
      }
    }

    for (const ArgPos& pos : members) {
      if (tp.fn.finiteFlagged.at(pos)) continue;
      SortId s = p.argSort(pos);
      tp.fn.classIntervals[pos] = part;
      std::vector<Value> vals;
      auto& etaRow = tp.eta.table[pos];
      for (const Pick& pk : picks) {
        if (s == kSortInt && !rat_is_integer(pk.value)) continue;
        Value v = Value::number(pk.value);
        vals.push_back(v);
        etaRow[v] = Extrapolation{part[pk.interval], pk.parity};
      }
      std::sort(vals.begin(), vals.end());
      tp.fn.beta[pos] = std::move(vals);
    }
  }

  return tp;
}

bool eta_complete_for(const Problem& p, const TestPoints& tp, PredId pred) {
  for (int i = 1; i <= p.pred(pred).arity(); ++i) {
    ArgPos pos{pred, i};
    if (!tp.fn.finiteFlagged.at(pos)) continue;  // interval points span the sort
    SortId s = p.argSort(pos);
    if (p.sorts[s].kind != SortKind::Finite) return false;
    std::vector<Value> all = p.memberValues(s);
    std::sort(all.begin(), all.end());
    const auto& have = tp.fn.beta.at(pos);
    if (have.size() != all.size() || !std::equal(have.begin(), have.end(), all.begin()))
      return false;
  }
  return true;
}

std::vector<Value> wti_values(const Problem& p, const HornClause& c, const std::string& var,
                              const TestPointFn& fn) {
  std::vector<ArgPos> positions = c.depend(var);
  if (positions.empty())
    throw InternalError("variable '" + var + "' occurs in no predicate atom");
  std::vector<Value> acc = filterToSort(p, c.varSorts.at(var), fn.beta.at(positions[0]));
  for (std::size_t k = 1; k < positions.size(); ++k) {
    const auto& other = fn.beta.at(positions[k]);
    std::vector<Value> keep;
    for (const Value& v : acc)
      if (std::binary_search(other.begin(), other.end(), v)) keep.push_back(v);
    acc = std::move(keep);
  }
  return acc;
}

void for_each_grounding(const std::vector<std::pair<std::string, std::vector<Value>>>& domains,
                        const std::function<void(const Grounding&)>& fn) {
  for (const auto& [name, dom] : domains)
    if (dom.empty()) return;
  std::vector<std::size_t> idx(domains.size(), 0);
  Grounding g;
  for (;;) {
    for (std::size_t k = 0; k < domains.size(); ++k)
      g[domains[k].first] = domains[k].second[idx[k]];
    fn(g);
    // rightmost position varies fastest
    std::size_t k = domains.size();
    while (k > 0) {
      --k;
      if (++idx[k] < domains[k].second.size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (domains.empty()) return;
  }
}

unsigned long long grounding_count(
    const std::vector<std::pair<std::string, std::vector<Value>>>& domains,
    unsigned long long cap) {
  unsigned long long n = 1;
  for (const auto& [name, dom] : domains) {
    if (dom.empty()) return 0;
    if (n > cap / dom.size()) return cap + 1;
    n *= dom.size();
  }
  return n;
}

std::string dump_testpoints(const Problem& p, const TestPoints& tp) {
  std::ostringstream os;
  std::vector<ArgPos> order;
  for (const auto& [pos, vals] : tp.fn.beta) order.push_back(pos);
  std::sort(order.begin(), order.end(), [&](const ArgPos& a, const ArgPos& b) {
    return std::tie(p.pred(a.first).name, a.second) < std::tie(p.pred(b.first).name, b.second);
  });
  for (const ArgPos& pos : order) {
    os << "beta(" << p.pred(pos.first).name << "," << pos.second << ") = {";
    bool first = true;
    for (const Value& v : tp.fn.beta.at(pos)) {
      if (!first) os << ", ";
      first = false;
      os << v.str();
    }
    os << "}\n";
  }
  for (const ArgPos& pos : order) {
    auto it = tp.eta.table.find(pos);
    if (it == tp.eta.table.end()) continue;
    for (const auto& [v, ex] : it->second)
      os << "eta(" << p.pred(pos.first).name << "," << pos.second << ", " << v.str()
         << ") = " << ex.str() << "\n";
  }
  return os.str();
}

}  // namespace slah

#ifndef SLAH_ANALYSIS_HPP
#define SLAH_ANALYSIS_HPP

#include <map>
#include <set>
#include <string>

#include "slah/problem.hpp"

namespace slah {

// Over-approximation of the values derivable at an argument position.
// top means the whole Real/Int domain; positions of finite sorts are never
// top, their saturation point is the full member set.
struct AvalSet {
  bool top = false;
  std::set<Value> values;
  bool operator==(const AvalSet& o) const { return top == o.top && values == o.values; }
};

struct AVals {
  std::map<ArgPos, AvalSet> table;

  const AvalSet& at(const ArgPos& pos) const { return table.at(pos); }
  bool finite(const ArgPos& pos) const { return !table.at(pos).top; }
};

// Fixpoint over the clause set. With topoSinglePass and an acyclic
// predicate dependency graph the clauses are processed once in topological
// order instead; the result is identical.
AVals derive_values(const Problem& p, bool topoSinglePass = false);

// A clause set is in scope when every arithmetic atom has at most one
// variable that is not bounded to finitely many values through the clause
// body. Returns the offending clause and variables through *why.
bool is_reducible(const Problem& p, const AVals& a, std::string* why = nullptr);
// Same check; throws NotReducibleError instead.
void require_reducible(const Problem& p, const AVals& a);

// Equivalence classes of argument positions connected by shared clause
// variables, with the bounds relevant to each class. Bounds come from
// numeric constants at member positions, from the value sets of
// finite members, and from clause arithmetic instantiated over the finite
// values of the other variables.
struct Connections {
  std::map<ArgPos, ArgPos> repr;  // class representative: least (pred name, index)
  std::map<ArgPos, std::set<SimpleBound>> classBounds;  // keyed by representative

  ArgPos classOf(const ArgPos& pos) const { return repr.at(pos); }
  const std::set<SimpleBound>& boundsFor(const ArgPos& pos) const {
    return classBounds.at(repr.at(pos));
  }
  std::map<ArgPos, std::vector<ArgPos>> classMembers() const;
};

Connections find_connections(const Problem& p, const AVals& a);

// Substitutes, then reduces to a ground truth value or a bound on the one
// remaining variable (coefficient divided out, relation mirrored for a
// negative coefficient). More than one free variable is a contract breach.
struct SimplifyResult {
  bool isGround;
  bool truth = false;
  std::string var;
  SimpleBound bound{Rel::Le, Rat(0)};
};

SimplifyResult simplify_theory_atom(const LinearAtom& a, const std::map<std::string, Rat>& assign);

std::string dump_analysis(const Problem& p, const AVals& a, const Connections& con);

}  // namespace slah

#endif

#ifndef SLAH_DATALOG_HPP
#define SLAH_DATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slah/problem.hpp"

namespace slah {

// Ground-fact Datalog with stratified negation. Constants are the Value
// domain of the source problem: numbers and finite-sort members.
struct DlTerm {
  bool isVar = false;
  std::string var;
  Value value;

  static DlTerm variable(std::string v) { return DlTerm{true, std::move(v), Value::number(0)}; }
  static DlTerm constant(Value v) { return DlTerm{false, {}, std::move(v)}; }
};

struct DlAtom {
  std::string pred;
  std::vector<DlTerm> args;
  bool ground() const;
};

struct DlRule {
  DlAtom head;
  std::vector<DlAtom> pos;
  std::vector<DlAtom> neg;
};

struct DatalogProgram {
  std::map<std::string, int> arity;
  std::vector<DlAtom> facts;  // ground atoms
  std::vector<DlRule> rules;

  void declare(const std::string& pred, int n);  // ParseError on arity clash
  void addFact(DlAtom a);
  void addRule(DlRule r);
};

// Accepts the concrete syntax produced by emit_datalog: facts `p(1, a).`,
// rules `h(X) :- b(X), not q(X).`, bare nullary atoms, `%` comments,
// integer constants, quoted rationals like "-1/2", symbolic constants and
// predicate names starting with a lowercase letter or underscore, and
// variables starting with an uppercase letter.
DatalogProgram parse_datalog(const std::string& text);

std::string print_datalog_atom(const DlAtom& a);

}  // namespace slah

#endif

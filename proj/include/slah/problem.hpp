#ifndef SLAH_PROBLEM_HPP
#define SLAH_PROBLEM_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slah/rational.hpp"

namespace slah {

// Clause sets are Horn over first-order atoms with a linear-arithmetic
// side condition. Sorts are Real, Int, or a declared finite enumeration;
// arithmetic atoms may only constrain Real/Int variables.

enum class SortKind { Real, Int, Finite };

using SortId = int;
constexpr SortId kSortReal = 0;
constexpr SortId kSortInt = 1;

struct Sort {
  SortKind kind;
  std::string name;
  std::vector<std::string> members;  // Finite only, declaration order
};

using PredId = int;

struct PredicateSig {
  std::string name;
  std::vector<SortId> argSorts;
  int arity() const { return static_cast<int>(argSorts.size()); }
};

// Argument position (P, i), 1-based index to match the usual notation.
using ArgPos = std::pair<PredId, int>;

// A ground value: a rational or a member of a finite sort. Total order:
// numerics first (by value), then members by name. Member names are
// globally unique, so the name identifies the value.
struct Value {
  bool isNum;
  Rat num;
  std::string fo;

  static Value number(Rat r) { return Value{true, std::move(r), {}}; }
  static Value member(std::string name) { return Value{false, Rat(0), std::move(name)}; }

  bool operator==(const Value& o) const {
    return isNum == o.isNum && (isNum ? num == o.num : fo == o.fo);
  }
  bool operator!=(const Value& o) const { return !(*this == o); }
  bool operator<(const Value& o) const {
    if (isNum != o.isNum) return isNum;
    return isNum ? num < o.num : fo < o.fo;
  }
  std::string str() const { return isNum ? rat_to_string(num) : fo; }
};

// Term in a first-order atom. Variables are clause-local names.
struct Term {
  bool isVar;
  std::string var;
  Value value{true, Rat(0), {}};

  static Term variable(std::string name) { return Term{true, std::move(name)}; }
  static Term constant(Value v) { return Term{false, {}, std::move(v)}; }
};

struct Atom {
  PredId pred;
  std::vector<Term> args;
};

enum class Rel { Le, Lt, Eq, Ne, Gt, Ge };

const char* rel_token(Rel r);
bool rel_eval(const Rat& lhs, Rel r, const Rat& rhs);
// Mirrors the relation for negated coefficients: <= becomes >=, etc.
Rel rel_flip(Rel r);

// A bound on a single anonymous variable, x <rel> value.
struct SimpleBound {
  Rel rel;
  Rat value;
  bool operator==(const SimpleBound& o) const { return rel == o.rel && value == o.value; }
  bool operator<(const SimpleBound& o) const {
    if (value != o.value) return value < o.value;
    return static_cast<int>(rel) < static_cast<int>(o.rel);
  }
  std::string str(const std::string& var = "x") const {
    return var + " " + rel_token(rel) + " " + rat_to_string(value);
  }
};

// Linear atom in normal form: sum of coeff*var <rel> bound. Variables are
// kept in first-appearance order; coefficients are nonzero. An empty combo
// is a ground (immediately decidable) atom.
struct LinearAtom {
  std::vector<std::pair<std::string, Rat>> combo;
  Rel rel;
  Rat bound;

  bool ground() const { return combo.empty(); }
  bool contains(const std::string& var) const;
  const Rat* coeff(const std::string& var) const;
  void add_term(const std::string& var, const Rat& c);

  // All variables bound: exact truth value.
  bool eval(const std::map<std::string, Rat>& assign) const;
  // Substitutes the given variables; keeps the rest symbolic.
  LinearAtom substitute(const std::map<std::string, Rat>& assign) const;

  std::string str() const;
};

struct HornClause {
  std::vector<LinearAtom> theory;  // Lambda
  std::vector<Atom> body;          // Delta
  std::optional<Atom> head;        // nullopt encodes the empty head (false)

  // Sort of every variable of the clause, inferred at parse time.
  std::map<std::string, SortId> varSorts;

  std::vector<const Atom*> freeAtoms() const;  // body then head
  std::set<std::string> vars() const;
  std::set<std::string> theoryVars() const;
  std::set<std::string> freeAtomVars() const;
  // Positions of var among the free atoms; body-only variant for Delta.
  std::vector<ArgPos> depend(const std::string& var) const;
  std::vector<ArgPos> dependBody(const std::string& var) const;
};

enum class Quantifier { Exists, Forall };

// Single-atom conjecture. Universal conjectures carry distinct variables
// only; existential ones may mix variables and ground values.
struct Conjecture {
  Quantifier quant;
  std::vector<std::string> boundVars;
  Atom atom;
  std::map<std::string, SortId> varSorts;
};

struct Problem {
  std::vector<Sort> sorts;  // [0]=Real, [1]=Int, finite sorts after
  std::vector<PredicateSig> preds;
  std::map<std::string, SortId> sortByName;
  std::map<std::string, PredId> predByName;
  std::map<std::string, SortId> memberSort;  // finite-sort member census
  std::vector<HornClause> clauses;
  std::optional<Conjecture> conjecture;

  Problem();
  bool arithmetic(SortId s) const { return s == kSortReal || s == kSortInt; }
  const Sort& sort(SortId s) const { return sorts[s]; }
  const PredicateSig& pred(PredId p) const { return preds[p]; }
  SortId argSort(const ArgPos& pos) const { return preds[pos.first].argSorts[pos.second - 1]; }
  std::vector<Value> memberValues(SortId s) const;
};

// Fresh-name prefixes used by the pipeline; rejected in input.
extern const char* const kReservedPrefixes[7];
bool has_reserved_prefix(const std::string& name);

std::string print_atom(const Problem& p, const Atom& a);
std::string print_clause(const Problem& p, const HornClause& c);
// Canonical text form; reparsing it reproduces the same Problem.
std::string print_problem(const Problem& p);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct NotReducibleError : Error {
  using Error::Error;
};

struct ScaleExceededError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace slah

#endif

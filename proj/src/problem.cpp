#include "slah/problem.hpp"

#include <sstream>

namespace slah {

const char* rel_token(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Lt: return "<";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
  }
  return "?";
}

bool rel_eval(const Rat& lhs, Rel r, const Rat& rhs) {
  switch (r) {
    case Rel::Le: return lhs <= rhs;
    case Rel::Lt: return lhs < rhs;
    case Rel::Eq: return lhs == rhs;
    case Rel::Ne: return lhs != rhs;
    case Rel::Gt: return lhs > rhs;
    case Rel::Ge: return lhs >= rhs;
  }
  return false;
}

Rel rel_flip(Rel r) {
  switch (r) {
    case Rel::Le: return Rel::Ge;
    case Rel::Lt: return Rel::Gt;
    case Rel::Gt: return Rel::Lt;
    case Rel::Ge: return Rel::Le;
    default: return r;  // = and != are symmetric
  }
}

bool LinearAtom::contains(const std::string& var) const { return coeff(var) != nullptr; }

const Rat* LinearAtom::coeff(const std::string& var) const {
  for (const auto& [v, c] : combo)
    if (v == var) return &c;
  return nullptr;
}

void LinearAtom::add_term(const std::string& var, const Rat& c) {
  for (auto it = combo.begin(); it != combo.end(); ++it) {
    if (it->first == var) {
      it->second += c;
      if (it->second == 0) combo.erase(it);
      return;
    }
  }
  if (c != 0) combo.emplace_back(var, c);
}

bool LinearAtom::eval(const std::map<std::string, Rat>& assign) const {
  Rat lhs(0);
  for (const auto& [v, c] : combo) {
    auto it = assign.find(v);
    if (it == assign.end()) throw InternalError("eval of non-ground arithmetic atom");
    lhs += c * it->second;
  }
  return rel_eval(lhs, rel, bound);
}

LinearAtom LinearAtom::substitute(const std::map<std::string, Rat>& assign) const {
  LinearAtom out;
  out.rel = rel;
  out.bound = bound;
  for (const auto& [v, c] : combo) {
    auto it = assign.find(v);
    if (it == assign.end())
      out.combo.emplace_back(v, c);
    else
      out.bound -= c * it->second;
  }
  return out;
}

std::string LinearAtom::str() const {
  // Coefficients reachable from input are integers (terms contribute +-1
  // per occurrence), printed as repeated summands so the text reparses.
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : combo) {
    if (!rat_is_integer(c)) throw InternalError("non-integer coefficient has no text form");
    mpz_class n = c.get_num();
    bool neg = n < 0;
    mpz_class k = neg ? mpz_class(-n) : n;
    for (mpz_class j = 0; j < k; ++j) {
      if (first)
        os << (neg ? "0 - " : "");
      else
        os << (neg ? " - " : " + ");
      os << v;
      first = false;
    }
  }
  if (first) os << "0";
  os << " " << rel_token(rel) << " " << rat_to_string(bound);
  return os.str();
}

std::vector<const Atom*> HornClause::freeAtoms() const {
  std::vector<const Atom*> out;
  for (const auto& a : body) out.push_back(&a);
  if (head) out.push_back(&*head);
  return out;
}

std::set<std::string> HornClause::vars() const {
  std::set<std::string> out = theoryVars();
  auto fv = freeAtomVars();
  out.insert(fv.begin(), fv.end());
  return out;
}

std::set<std::string> HornClause::theoryVars() const {
  std::set<std::string> out;
  for (const auto& la : theory)
    for (const auto& [v, c] : la.combo) out.insert(v);
  return out;
}

std::set<std::string> HornClause::freeAtomVars() const {
  std::set<std::string> out;
  for (const Atom* a : freeAtoms())
    for (const auto& t : a->args)
      if (t.isVar) out.insert(t.var);
  return out;
}

std::vector<ArgPos> HornClause::depend(const std::string& var) const {
  std::vector<ArgPos> out;
  for (const Atom* a : freeAtoms())
    for (std::size_t i = 0; i < a->args.size(); ++i)
      if (a->args[i].isVar && a->args[i].var == var)
        out.push_back({a->pred, static_cast<int>(i) + 1});
  return out;
}

std::vector<ArgPos> HornClause::dependBody(const std::string& var) const {
  std::vector<ArgPos> out;
  for (const Atom& a : body)
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (a.args[i].isVar && a.args[i].var == var)
        out.push_back({a.pred, static_cast<int>(i) + 1});
  return out;
}

Problem::Problem() {
  sorts.push_back({SortKind::Real, "Real", {}});
  sorts.push_back({SortKind::Int, "Int", {}});
  sortByName["Real"] = kSortReal;
  sortByName["Int"] = kSortInt;
}

std::vector<Value> Problem::memberValues(SortId s) const {
  std::vector<Value> out;
  for (const auto& m : sorts[s].members) out.push_back(Value::member(m));
  return out;
}

const char* const kReservedPrefixes[7] = {"__abs",  "__sortvar",  "__theory", "__sortfact",
                                          "__goal", "__expected", "__missing"};

bool has_reserved_prefix(const std::string& name) {
  for (const char* p : kReservedPrefixes)
    if (name.rfind(p, 0) == 0) return true;
  return false;
}

std::string print_atom(const Problem& p, const Atom& a) {
  std::ostringstream os;
  os << p.pred(a.pred).name << "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ", ";
    os << (a.args[i].isVar ? a.args[i].var : a.args[i].value.str());
  }
  os << ")";
  return os.str();
}

std::string print_clause(const Problem& p, const HornClause& c) {
  std::ostringstream os;
  os << "clause ";
  if (c.theory.empty() && c.body.empty() && c.head) {
    os << print_atom(p, *c.head) << ".";
    return os.str();
  }
  for (std::size_t i = 0; i < c.theory.size(); ++i) {
    if (i) os << ", ";
    os << c.theory[i].str();
  }
  os << (c.theory.empty() ? "|| " : " || ");
  for (std::size_t i = 0; i < c.body.size(); ++i) {
    if (i) os << ", ";
    os << print_atom(p, c.body[i]);
  }
  os << (c.body.empty() ? "-> " : " -> ");
  os << (c.head ? print_atom(p, *c.head) : std::string("false")) << ".";
  return os.str();
}

std::string print_problem(const Problem& p) {
  std::ostringstream os;
  for (SortId s = 2; s < static_cast<SortId>(p.sorts.size()); ++s) {
    os << "sort " << p.sorts[s].name << " = { ";
    for (std::size_t i = 0; i < p.sorts[s].members.size(); ++i) {
      if (i) os << ", ";
      os << p.sorts[s].members[i];
    }
    os << " }.\n";
  }
  for (const auto& sig : p.preds) {
    os << "pred " << sig.name << "(";
    for (std::size_t i = 0; i < sig.argSorts.size(); ++i) {
      if (i) os << ", ";
      os << p.sort(sig.argSorts[i]).name;
    }
    os << ").\n";
  }
  for (const auto& c : p.clauses) os << print_clause(p, c) << "\n";
  if (p.conjecture) {
    const auto& cj = *p.conjecture;
    os << "conjecture " << (cj.quant == Quantifier::Exists ? "exists" : "forall");
    for (std::size_t i = 0; i < cj.boundVars.size(); ++i)
      os << (i ? ", " : " ") << cj.boundVars[i];
    os << ". " << print_atom(p, cj.atom) << ".\n";
  }
  return os.str();
}

}  // namespace slah

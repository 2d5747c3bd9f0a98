#include "slah/emit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace slah {

namespace {

std::string lowerAll(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

struct Namer {
  std::set<std::string> used;
  std::map<std::string, std::string> assigned;

  std::string get(const std::string& orig, const std::string& want) {
    auto it = assigned.find(orig);
    if (it != assigned.end()) return it->second;
    std::string name = want;
    for (int k = 2; used.count(name); ++k) name = want + "_" + std::to_string(k);
    used.insert(name);
    assigned.emplace(orig, name);
    return name;
  }
};

std::string varWant(const std::string& v) {
  if (std::isalpha(static_cast<unsigned char>(v[0]))) {
    std::string s = v;
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
  }
  return "V" + v;
}

struct DatalogWriter {
  Namer preds, members;

  DatalogWriter() { preds.used.insert("not"); }

  std::string value(const Value& v) {
    if (!v.isNum) return members.get(v.fo, lowerAll(v.fo));
    if (rat_is_integer(v.num)) return rat_to_string(v.num);
    return "\"" + rat_to_string(v.num) + "\"";
  }

  std::string atom(const DlAtom& a, Namer* vars) {
    std::string s = preds.get(a.pred, lowerAll(a.pred));
    if (a.args.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) s += ", ";
      const DlTerm& t = a.args[i];
      s += t.isVar ? vars->get(t.var, varWant(t.var)) : value(t.value);
    }
    return s + ")";
  }
};

std::string tptpNumber(const Rat& r) {
  bool neg = r < 0;
  Rat a = rat_abs(r);
  std::string s;
  if (rat_is_integer(a))
    s = "c" + a.get_num().get_str();
  else
    s = "q" + a.get_num().get_str() + "_" + a.get_den().get_str();
  if (neg) s = "n" + (s[0] == 'c' ? s.substr(1) : s);
  return s;
}

std::string tptpSymbolWant(const std::string& orig) {
  std::string s = lowerAll(orig);
  std::size_t k = 0;
  while (k < s.size() && s[k] == '_') ++k;
  s = s.substr(k);
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) s = "p" + s;
  return s;
}

}  // namespace

std::string emit_datalog(const HammeredProgram& hp) {
  DatalogWriter w;
  std::ostringstream os;
  os << "% horn clauses over their test points; derive " << kGoalPred;
  if (hp.hasUniversal && hp.etaComplete) os << " or " << kGoalUnivPred;
  os << " to refute\n";

  // name predicates in a stable order before rendering anything
  for (const auto& [pred, n] : hp.program.arity) w.preds.get(pred, lowerAll(pred));

  std::vector<std::string> factLines;
  for (const DlAtom& f : hp.program.facts) factLines.push_back(w.atom(f, nullptr) + ".");
  std::sort(factLines.begin(), factLines.end());
  factLines.erase(std::unique(factLines.begin(), factLines.end()), factLines.end());
  for (const std::string& line : factLines) os << line << "\n";

  for (const DlRule& r : hp.program.rules) {
    Namer vars;
    os << w.atom(r.head, &vars) << " :- ";
    bool first = true;
    for (const DlAtom& a : r.pos) {
      if (!first) os << ", ";
      first = false;
      os << w.atom(a, &vars);
    }
    for (const DlAtom& a : r.neg) {
      if (!first) os << ", ";
      first = false;
      os << "not " << w.atom(a, &vars);
    }
    os << ".\n";
  }
  return os.str();
}

std::string emit_tptp(const HammeredProgram& hp) {
  for (const DlRule& r : hp.program.rules)
    if (!r.neg.empty())
      throw NegationNotRepresentableError(
          "the stratified goal encoding has no clause form; emit the instance-clause "
          "encoding instead");

  Namer symbols;
  for (const auto& [pred, n] : hp.program.arity) symbols.get(pred, tptpSymbolWant(pred));

  auto value = [&](const Value& v) {
    if (v.isNum) return symbols.get("\x01num:" + v.str(), tptpNumber(v.num));
    return symbols.get("\x02mem:" + v.fo, tptpSymbolWant(v.fo));
  };
  auto atom = [&](const DlAtom& a, Namer* vars) {
    std::string s = symbols.assigned.at(a.pred);
    if (a.args.empty()) return s;
    s += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) s += ",";
      const DlTerm& t = a.args[i];
      s += t.isVar ? vars->get(t.var, varWant(t.var)) : value(t.value);
    }
    return s + ")";
  };

  std::ostringstream os;
  int k = 0;
  for (const DlAtom& f : hp.program.facts)
    os << "cnf(fact_" << ++k << ", axiom, " << atom(f, nullptr) << ").\n";
  k = 0;
  for (const DlRule& r : hp.program.rules) {
    Namer vars;
    os << "cnf(rule_" << ++k << ", axiom, " << atom(r.head, &vars);
    for (const DlAtom& a : r.pos) os << " | ~" << atom(a, &vars);
    os << ").\n";
  }
  os << "cnf(goal, negated_conjecture, ~" << symbols.get(kGoalPred, tptpSymbolWant(kGoalPred))
     << ").\n";
  return os.str();
}

}  // namespace slah

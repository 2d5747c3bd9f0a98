#include "slah/datalog.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace slah {

bool DlAtom::ground() const {
  for (const DlTerm& t : args)
    if (t.isVar) return false;
  return true;
}

void DatalogProgram::declare(const std::string& pred, int n) {
  auto [it, fresh] = arity.emplace(pred, n);
  if (!fresh && it->second != n)
    throw ParseError(0, 0, "predicate '" + pred + "' used with arity " + std::to_string(n) +
                            " and " + std::to_string(it->second));
}

void DatalogProgram::addFact(DlAtom a) {
  declare(a.pred, static_cast<int>(a.args.size()));
  if (!a.ground()) throw ParseError(0, 0, "fact with variables: " + print_datalog_atom(a));
  facts.push_back(std::move(a));
}

void DatalogProgram::addRule(DlRule r) {
  declare(r.head.pred, static_cast<int>(r.head.args.size()));
  for (const DlAtom& a : r.pos) declare(a.pred, static_cast<int>(a.args.size()));
  for (const DlAtom& a : r.neg) declare(a.pred, static_cast<int>(a.args.size()));
  std::set<std::string> bound;
  for (const DlAtom& a : r.pos)
    for (const DlTerm& t : a.args)
      if (t.isVar) bound.insert(t.var);
  for (const DlTerm& t : r.head.args)
    if (t.isVar && !bound.count(t.var))
      throw ParseError(0, 0, "head variable '" + t.var + "' not bound by a positive body atom");
  for (const DlAtom& a : r.neg)
    for (const DlTerm& t : a.args)
      if (t.isVar && !bound.count(t.var))
        throw ParseError(0, 0,
                         "negated variable '" + t.var + "' not bound by a positive body atom");
  rules.push_back(std::move(r));
}

std::string print_datalog_atom(const DlAtom& a) {
  std::string s = a.pred;
  if (a.args.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ", ";
    const DlTerm& t = a.args[i];
    if (t.isVar)
      s += t.var;
    else if (!t.value.isNum)
      s += t.value.fo;
    else if (rat_is_integer(t.value.num))
      s += rat_to_string(t.value.num);
    else
      s += "\"" + rat_to_string(t.value.num) + "\"";
  }
  s += ")";
  return s;
}

namespace {

struct DlLexer {
  const std::string& text;
  std::size_t i = 0;
  int line = 1, col = 1;

  explicit DlLexer(const std::string& t) : text(t) {}

  void bump(char ch) {
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip() {
    while (i < text.size()) {
      char ch = text[i];
      if (ch == '%') {
        while (i < text.size() && text[i] != '\n') bump(text[i]);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        bump(ch);
      } else {
        return;
      }
    }
  }

  bool done() {
    skip();
    return i >= text.size();
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line, col, msg); }

  char peekChar() {
    skip();
    return i < text.size() ? text[i] : '\0';
  }

  void expect(const std::string& tok) {
    skip();
    if (text.compare(i, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    for (char ch : tok) bump(ch);
  }

  bool tryTake(const std::string& tok) {
    skip();
    if (text.compare(i, tok.size(), tok) != 0) return false;
    for (char ch : tok) bump(ch);
    return true;
  }

  // word match that refuses to split an identifier
  bool tryKeyword(const std::string& w) {
    skip();
    if (text.compare(i, w.size(), w) != 0) return false;
    std::size_t after = i + w.size();
    if (after < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
      return false;
    for (char ch : w) bump(ch);
    return true;
  }

  std::string ident() {
    skip();
    if (i >= text.size()) fail("unexpected end of input");
    char ch = text[i];
    if (!std::isalpha(static_cast<unsigned char>(ch)) && ch != '_')
      fail(std::string("unexpected character '") + ch + "'");
    std::string s;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      s += text[i];
      bump(text[i]);
    }
    return s;
  }

  Rat quotedRational() {
    bump('"');
    std::string body;
    while (i < text.size() && text[i] != '"') {
      body += text[i];
      bump(text[i]);
    }
    if (i >= text.size()) fail("unterminated quoted constant");
    bump('"');
    if (auto r = rat_from_literal(body)) return *r;  // "12", "-0.5"
    // n/d form
    std::size_t k = 0;
    if (k < body.size() && body[k] == '-') ++k;
    std::size_t numStart = k;
    while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
    if (k == numStart || k >= body.size() || body[k] != '/')
      fail("malformed quoted constant \"" + body + "\"");
    std::size_t denStart = ++k;
    while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
    if (k == denStart || k != body.size())
      fail("malformed quoted constant \"" + body + "\"");
    std::string den = body.substr(denStart);
    if (den.find_first_not_of('0') == std::string::npos)
      fail("zero denominator in quoted constant \"" + body + "\"");
    Rat r(body, 10);
    r.canonicalize();
    return r;
  }

  Rat integer() {
    skip();
    bool neg = tryTake("-");
    skip();
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i];
      bump(text[i]);
    }
    if (digits.empty()) fail("expected a number");
    Rat r(digits, 10);
    return neg ? Rat(-r) : r;
  }

  DlTerm term() {
    skip();
    if (i >= text.size()) fail("unexpected end of input");
    char ch = text[i];
    if (ch == '"') return DlTerm::constant(Value::number(quotedRational()));
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch)))
      return DlTerm::constant(Value::number(integer()));
    std::string name = ident();
    if (std::isupper(static_cast<unsigned char>(name[0]))) return DlTerm::variable(name);
    return DlTerm::constant(Value::member(name));
  }

  DlAtom atom() {
    DlAtom a;
    a.pred = ident();
    if (std::isupper(static_cast<unsigned char>(a.pred[0])))
      fail("predicate name '" + a.pred + "' must not start with an uppercase letter");
    if (tryTake("(")) {
      if (!tryTake(")")) {
        do a.args.push_back(term());
        while (tryTake(","));
        expect(")");
      }
    }
    return a;
  }
};

}  // namespace

DatalogProgram parse_datalog(const std::string& text) {
  DatalogProgram prog;
  DlLexer lx(text);
  while (!lx.done()) {
    DlAtom first = lx.atom();
    if (lx.tryTake(":-")) {
      DlRule r;
      r.head = std::move(first);
      do {
        bool negated = lx.tryKeyword("not");
        DlAtom a = lx.atom();
        (negated ? r.neg : r.pos).push_back(std::move(a));
      } while (lx.tryTake(","));
      lx.expect(".");
      prog.addRule(std::move(r));
    } else {
      lx.expect(".");
      prog.addFact(std::move(first));
    }
  }
  return prog;
}

}  // namespace slah

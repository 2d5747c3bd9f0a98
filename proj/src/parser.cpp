#include "slah/parser.hpp"

#include <cctype>

namespace slah {
namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {
    cur_ = scan();
    next_ = scan();
  }

  const Token& peek() const { return cur_; }
  const Token& peekNext() const { return next_; }
  Token take() {
    Token t = cur_;
    cur_ = next_;
    next_ = scan();
    return t;
  }

 private:
  Token scan() {
    skipSpace();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        s += get();
      t.kind = Tok::Ident;
      t.text = s;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += get();
      if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        s += get();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) s += get();
      }
      t.kind = Tok::Number;
      t.text = s;
      return t;
    }
    static const char* two[] = {"||", "->", "<=", ">=", "!="};
    for (const char* op : two) {
      if (text_.compare(pos_, 2, op) == 0) {
        get();
        get();
        t.kind = Tok::Punct;
        t.text = op;
        return t;
      }
    }
    static const std::string one = ".,(){}=<>+-";
    if (one.find(c) != std::string::npos) {
      get();
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      return t;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_, next_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Problem run() {
    while (lex_.peek().kind != Tok::End) statement();
    return std::move(p_);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }

  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != kind) fail(t, "expected " + what);
    return t;
  }

  void expectPunct(const std::string& text) {
    Token t = lex_.take();
    if (t.kind != Tok::Punct || t.text != text) fail(t, "expected '" + text + "'");
  }

  bool peekPunct(const std::string& text) {
    return lex_.peek().kind == Tok::Punct && lex_.peek().text == text;
  }

  std::string freshName(const Token& t) {
    if (has_reserved_prefix(t.text)) fail(t, "reserved name prefix in '" + t.text + "'");
    return t.text;
  }

  void statement() {
    Token t = expect(Tok::Ident, "statement keyword");
    if (t.text == "sort")
      sortDecl();
    else if (t.text == "pred")
      predDecl();
    else if (t.text == "clause")
      clauseStmt();
    else if (t.text == "conjecture")
      conjectureStmt();
    else
      fail(t, "expected 'sort', 'pred', 'clause', or 'conjecture'");
  }

  void sortDecl() {
    Token name = expect(Tok::Ident, "sort name");
    if (p_.sortByName.count(name.text)) fail(name, "sort '" + name.text + "' already declared");
    freshName(name);
    expectPunct("=");
    expectPunct("{");
    Sort s{SortKind::Finite, name.text, {}};
    while (true) {
      Token m = expect(Tok::Ident, "sort member");
      freshName(m);
      if (p_.memberSort.count(m.text)) fail(m, "member '" + m.text + "' already declared");
      p_.memberSort[m.text] = static_cast<SortId>(p_.sorts.size());
      s.members.push_back(m.text);
      if (peekPunct(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    expectPunct("}");
    expectPunct(".");
    p_.sortByName[name.text] = static_cast<SortId>(p_.sorts.size());
    p_.sorts.push_back(std::move(s));
  }

  void predDecl() {
    Token name = expect(Tok::Ident, "predicate name");
    if (p_.predByName.count(name.text)) fail(name, "predicate '" + name.text + "' already declared");
    freshName(name);
    expectPunct("(");
    PredicateSig sig{name.text, {}};
    if (!peekPunct(")")) {
      while (true) {
        Token s = expect(Tok::Ident, "sort name");
        auto it = p_.sortByName.find(s.text);
        if (it == p_.sortByName.end()) fail(s, "unknown sort '" + s.text + "'");
        sig.argSorts.push_back(it->second);
        if (peekPunct(",")) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    expectPunct(")");
    expectPunct(".");
    p_.predByName[name.text] = static_cast<PredId>(p_.preds.size());
    p_.preds.push_back(std::move(sig));
  }

  Rat numberValue(const Token& t) {
    auto r = rat_from_literal(t.text);
    if (!r) fail(t, "malformed number '" + t.text + "'");
    return *r;
  }

  Term atomArg() {
    Token t = lex_.take();
    if (t.kind == Tok::Number) return Term::constant(Value::number(numberValue(t)));
    if (t.kind == Tok::Punct && t.text == "-") {
      Token n = expect(Tok::Number, "number after '-'");
      return Term::constant(Value::number(-numberValue(n)));
    }
    if (t.kind == Tok::Ident) {
      auto it = p_.memberSort.find(t.text);
      if (it != p_.memberSort.end()) return Term::constant(Value::member(t.text));
      freshName(t);
      return Term::variable(t.text);
    }
    fail(t, "expected atom argument");
  }

  Atom atom() {
    Token name = expect(Tok::Ident, "predicate name");
    auto it = p_.predByName.find(name.text);
    if (it == p_.predByName.end()) fail(name, "unknown predicate '" + name.text + "'");
    Atom a{it->second, {}};
    expectPunct("(");
    if (!peekPunct(")")) {
      while (true) {
        a.args.push_back(atomArg());
        if (peekPunct(",")) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    expectPunct(")");
    if (static_cast<int>(a.args.size()) != p_.pred(a.pred).arity())
      fail(name, "predicate '" + name.text + "' expects " +
                     std::to_string(p_.pred(a.pred).arity()) + " arguments, got " +
                     std::to_string(a.args.size()));
    return a;
  }

  void linTerm(LinearAtom& la, Rat& constant, int sign) {
    bool first = true;
    while (true) {
      int termSign = sign;
      if (peekPunct("-")) {
        lex_.take();
        termSign = -sign;
      } else if (peekPunct("+")) {
        lex_.take();
      } else if (!first) {
        break;
      }
      Token t = lex_.take();
      if (t.kind == Tok::Number) {
        constant += Rat(termSign) * numberValue(t);
      } else if (t.kind == Tok::Ident) {
        if (p_.memberSort.count(t.text))
          fail(t, "finite-sort constant '" + t.text + "' in arithmetic atom");
        freshName(t);
        la.add_term(t.text, Rat(termSign));
      } else {
        fail(t, "expected number or variable");
      }
      first = false;
      if (!peekPunct("+") && !peekPunct("-")) break;
    }
  }

  LinearAtom linAtom() {
    LinearAtom la;
    // Normal form: (lhs - rhs) coefficients, bound = rhs - lhs constants.
    Rat lhsConst(0), negRhsConst(0);
    linTerm(la, lhsConst, +1);
    Token t = lex_.take();
    if (t.kind != Tok::Punct) fail(t, "expected relation");
    if (t.text == "<=")
      la.rel = Rel::Le;
    else if (t.text == "<")
      la.rel = Rel::Lt;
    else if (t.text == "=")
      la.rel = Rel::Eq;
    else if (t.text == "!=")
      la.rel = Rel::Ne;
    else if (t.text == ">")
      la.rel = Rel::Gt;
    else if (t.text == ">=")
      la.rel = Rel::Ge;
    else
      fail(t, "expected relation");
    linTerm(la, negRhsConst, -1);
    la.bound = -negRhsConst - lhsConst;
    return la;
  }

  void clauseStmt() {
    HornClause c;
    Token first = lex_.peek();
    // Fact shorthand: a declared predicate name followed by '('.
    if (first.kind == Tok::Ident && p_.predByName.count(first.text) &&
        lex_.peekNext().kind == Tok::Punct && lex_.peekNext().text == "(") {
      c.head = atom();
      expectPunct(".");
      finishClause(std::move(c), first);
      return;
    }
    if (!peekPunct("||")) {
      while (true) {
        c.theory.push_back(linAtom());
        if (peekPunct(",")) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    expectPunct("||");
    if (!peekPunct("->")) {
      while (true) {
        c.body.push_back(atom());
        if (peekPunct(",")) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    expectPunct("->");
    Token headTok = lex_.peek();
    if (headTok.kind == Tok::Ident && headTok.text == "false") {
      lex_.take();
      c.head.reset();
    } else {
      c.head = atom();
    }
    expectPunct(".");
    finishClause(std::move(c), first);
  }

  void finishClause(HornClause c, const Token& at) {
    inferSorts(c, at);
    p_.clauses.push_back(std::move(c));
  }

  // Variable sorts: finite positions pin the sort exactly; Int positions
  // promote Real to Int; theory-only variables default to Real.
  void inferSorts(HornClause& c, const Token& at) {
    std::map<std::string, SortId> finiteOf;
    std::set<std::string> needInt, seen;
    for (const Atom* a : c.freeAtoms()) {
      const PredicateSig& sig = p_.pred(a->pred);
      for (std::size_t i = 0; i < a->args.size(); ++i) {
        SortId s = sig.argSorts[i];
        const Term& t = a->args[i];
        if (!t.isVar) {
          checkConstant(t.value, s, at);
          continue;
        }
        seen.insert(t.var);
        if (p_.sort(s).kind == SortKind::Finite) {
          auto [it, fresh] = finiteOf.emplace(t.var, s);
          if (!fresh && it->second != s)
            fail(at, "variable '" + t.var + "' used at two different finite sorts");
        } else if (s == kSortInt) {
          needInt.insert(t.var);
        }
      }
    }
    for (const auto& la : c.theory)
      for (const auto& [v, cf] : la.combo) {
        seen.insert(v);
        if (finiteOf.count(v))
          fail(at, "finite-sorted variable '" + v + "' in arithmetic atom");
      }
    for (const auto& v : seen) {
      auto fit = finiteOf.find(v);
      if (fit != finiteOf.end()) {
        if (needInt.count(v)) fail(at, "variable '" + v + "' used at both finite and Int sorts");
        c.varSorts[v] = fit->second;
      } else {
        c.varSorts[v] = needInt.count(v) ? kSortInt : kSortReal;
      }
    }
  }

  void checkConstant(const Value& v, SortId s, const Token& at) {
    if (v.isNum) {
      if (!p_.arithmetic(s))
        fail(at, "number at position of finite sort '" + p_.sort(s).name + "'");
      if (s == kSortInt && !rat_is_integer(v.num))
        fail(at, "non-integer constant at Int position");
    } else {
      SortId ms = p_.memberSort.at(v.fo);
      if (p_.arithmetic(s))
        fail(at, "finite-sort constant '" + v.fo + "' at arithmetic position");
      if (ms != s)
        fail(at, "constant '" + v.fo + "' has sort '" + p_.sort(ms).name + "', position expects '" +
                     p_.sort(s).name + "'");
    }
  }

  void conjectureStmt() {
    Token qt = expect(Tok::Ident, "'exists' or 'forall'");
    if (p_.conjecture) fail(qt, "multiple conjectures");
    Conjecture cj;
    if (qt.text == "exists")
      cj.quant = Quantifier::Exists;
    else if (qt.text == "forall")
      cj.quant = Quantifier::Forall;
    else
      fail(qt, "expected 'exists' or 'forall'");
    if (!peekPunct(".")) {
      while (true) {
        Token v = expect(Tok::Ident, "variable name");
        freshName(v);
        for (const auto& b : cj.boundVars)
          if (b == v.text) fail(v, "duplicate conjecture variable '" + v.text + "'");
        cj.boundVars.push_back(v.text);
        if (peekPunct(",")) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    expectPunct(".");
    Token at = lex_.peek();
    cj.atom = atom();
    expectPunct(".");

    const PredicateSig& sig = p_.pred(cj.atom.pred);
    std::set<std::string> used;
    for (std::size_t i = 0; i < cj.atom.args.size(); ++i) {
      const Term& t = cj.atom.args[i];
      SortId s = sig.argSorts[i];
      if (t.isVar) {
        bool declared = false;
        for (const auto& b : cj.boundVars) declared |= b == t.var;
        if (!declared) fail(at, "conjecture variable '" + t.var + "' not quantified");
        if (used.count(t.var)) fail(at, "conjecture variable '" + t.var + "' used twice");
        used.insert(t.var);
        cj.varSorts[t.var] = s;
      } else {
        if (cj.quant == Quantifier::Forall)
          fail(at, "universal conjecture arguments must be distinct variables; "
                   "flatten the conjecture into an auxiliary predicate first");
        checkConstant(t.value, s, at);
      }
    }
    for (const auto& b : cj.boundVars)
      if (!used.count(b)) fail(at, "quantified variable '" + b + "' unused in conjecture");
    p_.conjecture = std::move(cj);
  }

  Lexer lex_;
  Problem p_;
};

}  // namespace

Problem parse_problem(const std::string& text) { return Parser(text).run(); }

}  // namespace slah

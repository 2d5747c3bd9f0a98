#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "slah/analysis.hpp"
#include "slah/parser.hpp"
#include "slah/testpoints.hpp"
#include "support.hpp"

using namespace slah;

namespace {

std::set<Value> nums(const std::vector<long>& xs) {
  std::set<Value> out;
  for (long x : xs) out.insert(Value::number(Rat(static_cast<int>(x))));
  return out;
}

ArgPos pos(const Problem& p, const std::string& pred, int i) {
  return {p.predByName.at(pred), i};
}

// Naive ground saturation of an all-finite-sort clause set.
std::map<PredId, std::set<std::vector<Value>>> saturateFinite(const Problem& p) {
  std::map<PredId, std::set<std::vector<Value>>> facts;
  auto tupleOf = [](const Atom& a, const Grounding& g) {
    std::vector<Value> t;
    for (const Term& arg : a.args) t.push_back(arg.isVar ? g.at(arg.var) : arg.value);
    return t;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : p.clauses) {
      if (!c.head) continue;
      std::vector<std::pair<std::string, std::vector<Value>>> domains;
      for (const auto& [v, s] : c.varSorts) domains.emplace_back(v, p.memberValues(s));
      for_each_grounding(domains, [&](const Grounding& g) {
        for (const auto& b : c.body)
          if (!facts[b.pred].count(tupleOf(b, g))) return;
        changed |= facts[c.head->pred].insert(tupleOf(*c.head, g)).second;
      });
    }
  }
  return facts;
}

}  // namespace

TEST_CASE("ignition model value sets") {
  Problem p = parse_problem(slah_tests::readFile(slah_tests::dataPath("ecu.slah")));
  AVals av = derive_values(p);

  CHECK(av.at(pos(p, "SpeedTable", 1)).values == nums({0, 2000, 4000, 6000}));
  CHECK(av.at(pos(p, "SpeedTable", 2)).values == nums({2000, 4000, 6000, 8000}));
  CHECK(av.at(pos(p, "SpeedTable", 3)).values == nums({1350, 1600, 1850, 2100}));
  CHECK(av.at(pos(p, "IgnDeg", 2)).values == nums({1350, 1600, 1850, 2100}));
  for (const char* top : {"Speed", "IgnDeg", "ResArgs", "Conj"}) {
    CHECK(av.at(pos(p, top, 1)).top);
    CHECK_FALSE(av.finite(pos(p, top, 1)));
  }
  CHECK(av.finite(pos(p, "SpeedTable", 1)));
  CHECK(is_reducible(p, av));
}

TEST_CASE("ignition model connections and bounds") {
  Problem p = parse_problem(slah_tests::readFile(slah_tests::dataPath("ecu.slah")));
  AVals av = derive_values(p);
  Connections con = find_connections(p, av);

  ArgPos big = con.classOf(pos(p, "Conj", 1));
  CHECK(big == pos(p, "Conj", 1));  // least name in the class
  CHECK(con.classOf(pos(p, "Speed", 1)) == big);
  CHECK(con.classOf(pos(p, "IgnDeg", 1)) == big);
  CHECK(con.classOf(pos(p, "ResArgs", 1)) == big);
  CHECK(con.classOf(pos(p, "IgnDeg", 2)) == con.classOf(pos(p, "SpeedTable", 3)));
  CHECK(con.classOf(pos(p, "SpeedTable", 1)) == pos(p, "SpeedTable", 1));
  CHECK(con.classOf(pos(p, "SpeedTable", 2)) == pos(p, "SpeedTable", 2));

  std::set<SimpleBound> expected;
  for (long b : {0, 2000, 4000, 6000, 8000}) {
    expected.insert({Rel::Ge, Rat(static_cast<int>(b))});
    expected.insert({Rel::Lt, Rat(static_cast<int>(b))});
  }
  CHECK(con.boundsFor(pos(p, "Conj", 1)) == expected);

  // Finite classes carry their values as equations.
  std::set<SimpleBound> tableLow;
  for (long b : {0, 2000, 4000, 6000}) tableLow.insert({Rel::Eq, Rat(static_cast<int>(b))});
  CHECK(con.boundsFor(pos(p, "SpeedTable", 1)) == tableLow);

  auto members = con.classMembers();
  CHECK(members.at(big).size() == 4);
  CHECK(members.size() == 4);
}

TEST_CASE("single topological pass matches the fixpoint") {
  Problem ecu = parse_problem(slah_tests::readFile(slah_tests::dataPath("ecu.slah")));
  CHECK(derive_values(ecu, true).table == derive_values(ecu, false).table);

  // Recursive programs fall back to the fixpoint loop.
  Problem rec = parse_problem(
      "pred E(Real, Real).\npred R(Real, Real).\n"
      "clause E(0, 1).\nclause E(1, 2).\n"
      "clause || E(x, y) -> R(x, y).\n"
      "clause || E(x, y), R(y, z) -> R(x, z).\n");
  CHECK(derive_values(rec, true).table == derive_values(rec, false).table);
  CHECK(derive_values(rec).at(pos(rec, "R", 2)).values == nums({1, 2}));
}

TEST_CASE("head value propagation cases") {
  Problem p = parse_problem(
      "sort M = { a, b }.\n"
      "pred A(Real).\npred B(Real).\npred H(Real).\npred U(Real).\npred E(Real).\n"
      "pred F(M).\n"
      "clause A(1).\nclause A(2).\nclause B(2).\nclause B(3).\n"
      "clause || A(x), B(x) -> H(x).\n"
      "clause || -> U(x).\n"
      "clause x = 3 || A(y) -> E(x).\n"
      "clause F(a).\nclause F(b).\n");
  AVals av = derive_values(p);
  CHECK(av.at(pos(p, "A", 1)).values == nums({1, 2}));
  CHECK(av.at(pos(p, "H", 1)).values == nums({2}));  // intersection of body homes
  CHECK(av.at(pos(p, "U", 1)).top);                  // unconstrained head variable
  CHECK(av.at(pos(p, "E", 1)).values == nums({3}));  // pinned by an equation
  const AvalSet& f = av.at(pos(p, "F", 1));
  CHECK_FALSE(f.top);
  CHECK(f.values == std::set<Value>{Value::member("a"), Value::member("b")});
}

TEST_CASE("value sets over-approximate every derivable fact") {
  slah_tests::Generator gen(20260822);
  int done = 0;
  while (done < 60) {
    slah_tests::Generator::Config cfg;
    cfg.allFinite = true;
    cfg.kind = slah_tests::Generator::Kind::Plain;
    Problem p;
    try {
      p = parse_problem(gen.instance(cfg));
    } catch (const ParseError&) {
      continue;  // generator may collide names; skip
    }
    AVals av = derive_values(p);
    auto facts = saturateFinite(p);
    for (const auto& [pid, tuples] : facts)
      for (const auto& t : tuples)
        for (std::size_t i = 0; i < t.size(); ++i) {
          const AvalSet& s = av.at({pid, static_cast<int>(i) + 1});
          CHECK_FALSE(s.top);
          CHECK(s.values.count(t[i]) == 1);
        }
    CHECK(derive_values(p, true).table == av.table);
    ++done;
  }
}

TEST_CASE("reducibility check") {
  Problem bad = parse_problem(
      "pred P(Real).\n"
      "clause || -> P(x).\n"
      "clause x + y <= 0 || P(x), P(y) -> false.\n");
  AVals av = derive_values(bad);
  std::string why;
  CHECK_FALSE(is_reducible(bad, av, &why));
  CHECK(why.find("unbounded variables") != std::string::npos);
  CHECK(why.find("x") != std::string::npos);
  CHECK(why.find("y") != std::string::npos);
  CHECK_THROWS_AS(require_reducible(bad, av), NotReducibleError);

  // One of the two variables ranges over finitely many values: in scope.
  Problem ok = parse_problem(
      "pred A(Real).\npred P(Real).\n"
      "clause A(1).\nclause A(2).\n"
      "clause || -> P(x).\n"
      "clause x + y <= 0 || A(x), P(y) -> false.\n");
  CHECK(is_reducible(ok, derive_values(ok)));

  // Bounded through the body only; a head occurrence does not help.
  Problem headOnly = parse_problem(
      "pred A(Real).\npred P(Real).\n"
      "clause A(1).\n"
      "clause x + y <= 0 || A(x) -> P(y).\n");
  CHECK(is_reducible(headOnly, derive_values(headOnly)));
  CHECK_NOTHROW(require_reducible(headOnly, derive_values(headOnly)));
}

TEST_CASE("theory atom simplification") {
  Problem p = parse_problem(std::string("pred Q(Real, Real).\n") +
                            "clause x + y <= 3 || Q(x, y) -> false.\n"
                            "clause 0 - x + y < 0 || Q(x, y) -> false.\n");
  const LinearAtom& sum = p.clauses[0].theory[0];
  SimplifyResult g = simplify_theory_atom(sum, {{"x", Rat(1)}, {"y", Rat(2)}});
  CHECK(g.isGround);
  CHECK(g.truth);
  g = simplify_theory_atom(sum, {{"x", Rat(2)}, {"y", Rat(2)}});
  CHECK(g.isGround);
  CHECK_FALSE(g.truth);

  SimplifyResult one = simplify_theory_atom(sum, {{"y", Rat(1)}});
  CHECK_FALSE(one.isGround);
  CHECK(one.var == "x");
  CHECK(one.bound == SimpleBound{Rel::Le, Rat(2)});

  // Negative coefficient mirrors the relation.
  SimplifyResult neg = simplify_theory_atom(p.clauses[1].theory[0], {{"y", Rat(2)}});
  CHECK(neg.var == "x");
  CHECK(neg.bound == SimpleBound{Rel::Gt, Rat(2)});

  CHECK_THROWS_AS(simplify_theory_atom(sum, {}), InternalError);
}

TEST_CASE("analysis dump format") {
  Problem p = parse_problem(slah_tests::readFile(slah_tests::dataPath("ecu.slah")));
  AVals av = derive_values(p);
  std::string d = dump_analysis(p, av, find_connections(p, av));
  CHECK(d.find("avals(Conj,1) = TOP") != std::string::npos);
  CHECK(d.find("avals(SpeedTable,1) = {0, 2000, 4000, 6000}") != std::string::npos);
  CHECK(d.find("class {(Conj,1), (IgnDeg,1), (ResArgs,1), (Speed,1)} bounds {x < 0, x >= 0, "
               "x < 2000, x >= 2000,") != std::string::npos);
}

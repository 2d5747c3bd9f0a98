#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "slah/hammer.hpp"
#include "slah/parser.hpp"
#include "support.hpp"

using namespace slah;

namespace {

HammeredProgram build(const Problem& p, Encoding enc = Encoding::Stratified,
                      bool twoPoints = false) {
  AVals av = derive_values(p);
  TestPoints tp = pick_test_points(p, av, find_connections(p, av), twoPoints);
  return hammer(p, tp, enc);
}

std::set<std::string> factsOf(const DatalogProgram& prog, const std::string& pred) {
  std::set<std::string> out;
  for (const DlAtom& f : prog.facts)
    if (f.pred == pred) out.insert(print_datalog_atom(f));
  return out;
}

std::map<std::string, int> factCounts(const DatalogProgram& prog) {
  std::map<std::string, int> out;
  for (const DlAtom& f : prog.facts) ++out[f.pred];
  return out;
}

const DlRule* ruleWithHead(const DatalogProgram& prog, const std::string& pred) {
  for (const DlRule& r : prog.rules)
    if (r.head.pred == pred) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("ignition model grounds to the expected theory tables") {
  Problem p = parse_problem(slah_tests::readFile(slah_tests::dataPath("ecu.slah")));
  HammeredProgram hp = build(p);

  CHECK(hp.stats.tfactCount == 40);
  CHECK(hp.stats.sfactCount == 0);
  CHECK(hp.stats.deltaPhi == 6);
  CHECK(hp.hasUniversal);
  CHECK(hp.etaComplete);
  REQUIRE(hp.theoryPreds.size() == 6);
  CHECK(hp.sortPreds.empty());

  auto counts = factCounts(hp.program);
  CHECK(counts["__theory0"] == 5);   // 0 <= xp over the six interval points
  CHECK(counts["__theory1"] == 5);   // xp < 8000
  CHECK(counts["__theory2"] == 14);  // x1 <= xp over the table rows
  CHECK(counts["__theory3"] == 14);  // xp < x2
  CHECK(counts["__theory4"] == 1);   // xp >= 8000
  CHECK(counts["__theory5"] == 1);   // xp < 0

  CHECK(factsOf(hp.program, "__theory0") ==
        std::set<std::string>{"__theory0(0)", "__theory0(2000)", "__theory0(4000)",
                              "__theory0(6000)", "__theory0(8000)"});
  CHECK(factsOf(hp.program, "__theory4") == std::set<std::string>{"__theory4(8000)"});
  CHECK(factsOf(hp.program, "__theory5") == std::set<std::string>{"__theory5(-1)"});

  std::set<std::string> pairs = factsOf(hp.program, "__theory2");
  CHECK(pairs.size() == 14);
  CHECK(pairs.count("__theory2(0, 0)") == 1);
  CHECK(pairs.count("__theory2(6000, 8000)") == 1);
  CHECK(pairs.count("__theory2(2000, 0)") == 0);  // 2000 <= 0 fails

  // Argument order follows first appearance in the arithmetic atom.
  CHECK(hp.theoryPreds[2].argVars == std::vector<std::string>{"x1", "xp"});
  CHECK(hp.theoryPreds[2].argDomains[0].size() == 4);
  CHECK(hp.theoryPreds[2].argDomains[1].size() == 6);

  // The four table rows stay ordinary facts of the source predicate.
  CHECK(factsOf(hp.program, "SpeedTable").size() == 4);
}

TEST_CASE("ignition model universal encodings") {
  Problem p = parse_problem(slah_tests::readFile(slah_tests::dataPath("ecu.slah")));

  HammeredProgram clause = build(p, Encoding::Clause);
  const DlRule* big = ruleWithHead(clause.program, kGoalPred);
  REQUIRE(big != nullptr);
  CHECK(big->neg.empty());
  REQUIRE(big->pos.size() == 6);
  std::set<std::string> insts;
  for (const DlAtom& a : big->pos) insts.insert(print_datalog_atom(a));
  CHECK(insts == std::set<std::string>{"Conj(-1)", "Conj(0)", "Conj(2000)", "Conj(4000)",
                                       "Conj(6000)", "Conj(8000)"});
  CHECK(factsOf(clause.program, kExpectedPred).empty());

  HammeredProgram strat = build(p, Encoding::Stratified);
  CHECK(factsOf(strat.program, kExpectedPred).size() == 6);
  const DlRule* miss = ruleWithHead(strat.program, kMissingPred);
  REQUIRE(miss != nullptr);
  REQUIRE(miss->pos.size() == 1);
  CHECK(miss->pos[0].pred == kExpectedPred);
  REQUIRE(miss->neg.size() == 1);
  CHECK(miss->neg[0].pred == "Conj");
  const DlRule* done = ruleWithHead(strat.program, kGoalUnivPred);
  REQUIRE(done != nullptr);
  CHECK(done->pos.empty());
  REQUIRE(done->neg.size() == 1);
  CHECK(done->neg[0].pred == kMissingPred);
  CHECK(ruleWithHead(strat.program, kGoalPred) == nullptr);
}

TEST_CASE("equal arithmetic atoms over equal domains share one table") {
  Problem p = parse_problem(
      "pred A(Real).\npred B(Real).\n"
      "clause A(0).\nclause A(1).\n"
      "clause 0 < x || A(x) -> B(x).\n"
      "clause 0 < y || A(y) -> false.\n");
  HammeredProgram hp = build(p);
  CHECK(hp.theoryPreds.size() == 1);
  CHECK(hp.stats.tfactCount == 1);  // only the point 1 satisfies 0 < x
  CHECK(factsOf(hp.program, "__theory0") == std::set<std::string>{"__theory0(1)"});

  // A different domain for the same inequality needs its own table.
  Problem q = parse_problem(
      "pred A(Real).\npred B(Real).\n"
      "clause A(0).\nclause A(1).\nclause B(5).\n"
      "clause 0 < x || A(x) -> false.\n"
      "clause 0 < y || B(y) -> false.\n");
  HammeredProgram hq = build(q);
  CHECK(hq.theoryPreds.size() == 2);
  CHECK(factsOf(hq.program, "__theory1") == std::set<std::string>{"__theory1(5)"});
}

TEST_CASE("sort membership literals appear exactly where needed") {
  // Head-only variable: constrained by a sort table over its test points.
  Problem headOnly = parse_problem(
      "pred P(Real).\n"
      "clause || -> P(x).\n"
      "clause x < 1 || P(x) -> false.\n");
  HammeredProgram h1 = build(headOnly);
  REQUIRE(h1.sortPreds.size() == 1);
  CHECK(h1.sortPreds[0].sort == kSortReal);
  const DlRule* r1 = ruleWithHead(h1.program, "P");
  REQUIRE(r1 != nullptr);
  REQUIRE(r1->pos.size() == 1);
  CHECK(r1->pos[0].pred == "__sortfact0");
  CHECK(static_cast<int>(factsOf(h1.program, "__sortfact0").size()) == h1.stats.sfactCount);
  CHECK(h1.stats.sfactCount == 2);  // one point per interval around 1

  // Integer variable whose only body home is real-sorted: the table keeps
  // the fractional points out.
  Problem promo = parse_problem(
      "pred R(Real).\npred N(Int).\n"
      "clause || -> R(x).\n"
      "clause x < 1 || R(x) -> false.\n"
      "clause || R(z) -> N(z).\n");
  HammeredProgram h2 = build(promo);
  const DlRule* r2 = ruleWithHead(h2.program, "N");
  REQUIRE(r2 != nullptr);
  REQUIRE(r2->pos.size() == 2);
  CHECK(r2->pos[0].pred == "R");
  CHECK(r2->pos[1].pred.rfind("__sortfact", 0) == 0);
  REQUIRE(h2.sortPreds.size() == 2);  // one real table for x, one integer table for z
  int intTables = 0;
  for (const SortPredInfo& sp : h2.sortPreds) {
    if (sp.sort != kSortInt) continue;
    ++intTables;
    CHECK(sp.values.size() == 2);
    for (const Value& v : sp.values) CHECK(rat_is_integer(v.num));
  }
  CHECK(intTables == 1);

  // A variable already in the arithmetic part needs no sort literal.
  Problem lam = parse_problem(
      "pred P(Real).\n"
      "clause 0 < x || -> P(x).\n");
  HammeredProgram h3 = build(lam);
  const DlRule* r3 = ruleWithHead(h3.program, "P");
  REQUIRE(r3 != nullptr);
  REQUIRE(r3->pos.size() == 1);
  CHECK(r3->pos[0].pred == "__theory0");

  // A real variable housed in the body needs none either.
  Problem housed = parse_problem(
      "pred A(Real).\npred B(Real).\nclause A(1).\nclause || A(v) -> B(v).\n");
  HammeredProgram h4 = build(housed);
  CHECK(h4.sortPreds.empty());
  const DlRule* r4 = ruleWithHead(h4.program, "B");
  REQUIRE(r4->pos.size() == 1);
  CHECK(r4->pos[0].pred == "A");
}

TEST_CASE("ground arithmetic atoms fold away") {
  Problem p = parse_problem(
      "pred P(Real).\npred Q(Real).\npred S(Real).\n"
      "clause P(0).\n"
      "clause 1 < 2 || P(y) -> Q(y).\n"
      "clause 2 < 1 || P(y) -> S(y).\n"
      "clause 0 = 0 || -> Q(7).\n");
  HammeredProgram hp = build(p);
  CHECK(hp.theoryPreds.empty());
  const DlRule* q = ruleWithHead(hp.program, "Q");
  REQUIRE(q != nullptr);
  REQUIRE(q->pos.size() == 1);  // the true guard disappeared
  CHECK(q->pos[0].pred == "P");
  CHECK(ruleWithHead(hp.program, "S") == nullptr);  // false guard kills the clause
  CHECK(factsOf(hp.program, "Q") == std::set<std::string>{"Q(7)"});
}

TEST_CASE("nullary universal conjecture") {
  Problem p = parse_problem("pred G().\nclause G().\nconjecture forall. G().\n");
  HammeredProgram clause = build(p, Encoding::Clause);
  CHECK(clause.stats.deltaPhi == 1);
  const DlRule* big = ruleWithHead(clause.program, kGoalPred);
  REQUIRE(big != nullptr);
  REQUIRE(big->pos.size() == 1);
  CHECK(print_datalog_atom(big->pos[0]) == "G");

  HammeredProgram strat = build(p, Encoding::Stratified);
  CHECK(factsOf(strat.program, kExpectedPred).size() == 1);
  REQUIRE(ruleWithHead(strat.program, kMissingPred) != nullptr);
  REQUIRE(ruleWithHead(strat.program, kGoalUnivPred) != nullptr);
}

TEST_CASE("incomplete extrapolation suppresses the conjecture encoding") {
  Problem p = parse_problem(
      "pred P(Real).\npred Q(Real).\n"
      "clause P(1).\nclause || P(w) -> Q(w).\n"
      "conjecture forall v. Q(v).\n");
  HammeredProgram hp = build(p, Encoding::Stratified);
  CHECK(hp.hasUniversal);
  CHECK_FALSE(hp.etaComplete);
  CHECK(hp.stats.deltaPhi == 0);
  CHECK(ruleWithHead(hp.program, kGoalPred) == nullptr);
  CHECK(ruleWithHead(hp.program, kGoalUnivPred) == nullptr);
  CHECK(ruleWithHead(hp.program, kMissingPred) == nullptr);
  CHECK(factsOf(hp.program, kExpectedPred).empty());
  // Same for the clause encoding.
  HammeredProgram hc = build(p, Encoding::Clause);
  CHECK(ruleWithHead(hc.program, kGoalPred) == nullptr);
}

TEST_CASE("oversized universal expansions are refused") {
  std::string text = "sort M = { m0, m1, m2, m3, m4, m5, m6, m7, m8, m9 }.\npred F(";
  for (int i = 0; i < 8; ++i) text += std::string(i ? ", " : "") + "M";
  text += ").\n";
  for (int i = 0; i < 10; ++i) {
    text += "clause F(";
    for (int j = 0; j < 8; ++j) text += std::string(j ? ", " : "") + "m" + std::to_string(i);
    text += ").\n";
  }
  text += "conjecture forall a1, a2, a3, a4, a5, a6, a7, a8. F(a1, a2, a3, a4, a5, a6, a7, a8).\n";
  Problem p = parse_problem(text);
  CHECK_THROWS_AS(build(p, Encoding::Clause), ScaleExceededError);
}

TEST_CASE("existential conjectures must be lowered first") {
  Problem p = parse_problem("pred P(Real).\nclause P(1).\nconjecture exists x. P(x).\n");
  CHECK_THROWS_AS(build(p), InternalError);
}

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "slah.h"

namespace {

int exitCodeFor(slah_status st) { return st == SLAH_ERR_NOT_REDUCIBLE ? 3 : 2; }

int failWith(slah_status st) {
  std::cerr << "error: " << slah_last_error() << "\n";
  return exitCodeFor(st);
}

bool writeOut(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream os(path, std::ios::binary);
  os << text;
  if (!os) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

const char* verdictWord(slah_verdict v) {
  return v == SLAH_ENTAILED ? "ENTAILED" : "NOT ENTAILED";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decides conjectures over Horn clauses with linear arithmetic by "
      "translating them to Datalog over finitely many test points"};
  app.get_formatter()->column_width(34);

  std::string inputPath;
  std::string outputPath;
  std::string emitFormat;
  std::string encoding = "stratified";
  std::string dumpFactsPred;
  bool twoPoints = false, topoAvals = false, dumpAnalysis = false, dumpTestpoints = false;
  bool oracleCheck = false, stats = false;

  app.add_option("input", inputPath, "problem file, or - for stdin")->required();
  app.add_option("-o,--output", outputPath, "write the result here instead of stdout");
  app.add_option("--emit", emitFormat, "print the translated program (datalog or tptp)")
      ->check(CLI::IsMember({"datalog", "tptp"}));
  app.add_option("--encoding", encoding, "universal conjecture encoding (default stratified)")
      ->check(CLI::IsMember({"clause", "stratified"}));
  app.add_flag("--two-points-per-interval", twoPoints,
               "always pick an integer and a non-integer point per interval");
  app.add_flag("--topo-avals", topoAvals,
               "derive value sets in one topological pass when the clauses allow it");
  app.add_flag("--dump-analysis", dumpAnalysis, "print derived value sets and argument classes");
  app.add_flag("--dump-testpoints", dumpTestpoints, "print test points and extrapolations");
  app.add_option("--dump-facts", dumpFactsPred, "print the derived facts of one predicate");
  app.add_flag("--oracle-check", oracleCheck,
               "cross-check the verdict against ground saturation");
  app.add_flag("--stats", stats, "print size statistics (timing goes to stderr)");
  CLI11_PARSE(app, argc, argv);

  int modes = (!emitFormat.empty()) + dumpAnalysis + dumpTestpoints + (!dumpFactsPred.empty());
  if (modes > 1) {
    std::cerr << "error: --emit, --dump-analysis, --dump-testpoints and --dump-facts are "
                 "mutually exclusive\n";
    return 2;
  }

  std::string text;
  if (inputPath == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream is(inputPath, std::ios::binary);
    if (!is) {
      std::cerr << "error: cannot read '" << inputPath << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << is.rdbuf();
    text = buf.str();
  }

  slah_options opt;
  slah_options_init(&opt);
  opt.two_points_per_interval = twoPoints;
  opt.topo_avals = topoAvals;
  opt.encoding = encoding == "clause" ? SLAH_ENCODING_CLAUSE : SLAH_ENCODING_STRATIFIED;

  slah_problem* problem = nullptr;
  slah_status st = slah_parse(text.c_str(), &problem);
  if (st != SLAH_OK) return failWith(st);

  auto start = std::chrono::steady_clock::now();
  int rc = 0;

  if (modes == 1) {
    char* rendered = nullptr;
    if (!emitFormat.empty())
      st = slah_emit(problem, &opt,
                     emitFormat == "tptp" ? SLAH_EMIT_TPTP : SLAH_EMIT_DATALOG, &rendered);
    else if (dumpAnalysis)
      st = slah_dump_analysis(problem, &opt, &rendered);
    else if (dumpTestpoints)
      st = slah_dump_testpoints(problem, &opt, &rendered);
    else
      st = slah_dump_facts(problem, &opt, dumpFactsPred.c_str(), &rendered);
    if (st != SLAH_OK)
      rc = failWith(st);
    else
      rc = writeOut(outputPath, rendered ? rendered : "") ? 0 : 2;
    slah_string_free(rendered);
  } else {
    slah_verdict verdict;
    slah_stats sizes;
    st = slah_decide(problem, &opt, &verdict, &sizes);
    if (st != SLAH_OK) {
      rc = failWith(st);
    } else {
      std::string payload = std::string(verdictWord(verdict)) + "\n";
      rc = writeOut(outputPath, payload) ? (verdict == SLAH_ENTAILED ? 0 : 1) : 2;
      if (rc != 2 && stats) {
        std::cout << "clauses: " << sizes.clauses << "\n"
                  << "max-clause-vars: " << sizes.max_clause_vars << "\n"
                  << "max-test-points: " << sizes.max_test_points << "\n"
                  << "theory-facts: " << sizes.theory_facts << "\n"
                  << "sort-facts: " << sizes.sort_facts << "\n"
                  << "expected-instances: " << sizes.expected_instances << "\n";
      }
      if (rc != 2 && oracleCheck) {
        slah_verdict ov;
        st = slah_oracle_decide(problem, &opt, &ov);
        if (st != SLAH_OK) {
          rc = failWith(st);
        } else {
          bool agree = ov == verdict;
          std::cout << "oracle-verdict: " << verdictWord(ov) << "\n"
                    << "oracle-agrees: " << (agree ? "yes" : "no") << "\n";
          if (!agree) rc = 2;
        }
      }
    }
  }

  if (stats) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "wall-time-ms: " << ms << "\n";
  }
  slah_problem_free(problem);
  return rc;
}

#include "slah.h"

#include <cstring>
#include <sstream>

#include "slah/emit.hpp"
#include "slah/parser.hpp"
#include "slah/pipeline.hpp"

using namespace slah;

struct slah_problem {
  Problem problem;
};

namespace {

thread_local std::string g_lastError;

slah_status fail(slah_status st, const std::string& msg) {
  g_lastError = msg;
  return st;
}

template <typename Fn>
slah_status guarded(const Fn& fn) {
  try {
    slah_status st = fn();
    if (st == SLAH_OK) g_lastError.clear();
    return st;
  } catch (const ParseError& e) {
    return fail(SLAH_ERR_PARSE, e.what());
  } catch (const NotReducibleError& e) {
    return fail(SLAH_ERR_NOT_REDUCIBLE, e.what());
  } catch (const ScaleExceededError& e) {
    return fail(SLAH_ERR_SCALE, e.what());
  } catch (const NegationNotRepresentableError& e) {
    return fail(SLAH_ERR_UNSUPPORTED, e.what());
  } catch (const std::exception& e) {
    return fail(SLAH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SLAH_ERR_INTERNAL, "unknown error");
  }
}

PipelineOptions toPipelineOptions(const slah_options* opt) {
  PipelineOptions po;
  if (!opt) return po;
  po.twoPointsPerInterval = opt->two_points_per_interval != 0;
  po.topoAvals = opt->topo_avals != 0;
  po.encoding = opt->encoding == SLAH_ENCODING_CLAUSE ? Encoding::Clause : Encoding::Stratified;
  return po;
}

unsigned long long limitOf(const slah_options* opt) {
  if (opt && opt->oracle_limit) return opt->oracle_limit;
  return oracle_limit_from_env();
}

char* copyOut(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

slah_status emitString(const std::string& s, char** out) {
  *out = copyOut(s);
  return *out ? SLAH_OK : fail(SLAH_ERR_INTERNAL, "out of memory");
}

}  // namespace

extern "C" {

void slah_options_init(slah_options* opt) {
  if (!opt) return;
  opt->two_points_per_interval = 0;
  opt->topo_avals = 0;
  opt->encoding = SLAH_ENCODING_STRATIFIED;
  opt->oracle_limit = 0;
}

slah_status slah_parse(const char* text, slah_problem** out) {
  if (!text || !out) return fail(SLAH_ERR_INVALID, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* p = new slah_problem{parse_problem(text)};
    *out = p;
    return SLAH_OK;
  });
}

void slah_problem_free(slah_problem* p) { delete p; }

slah_status slah_decide(slah_problem* p, const slah_options* opt, slah_verdict* out,
                        slah_stats* stats) {
  if (!p || !out) return fail(SLAH_ERR_INVALID, "null argument");
  return guarded([&] {
    PipelineResult pr = run_pipeline(p->problem, toPipelineOptions(opt));
    Decision d = decide(pr);
    *out = d.verdict == Verdict::Entailed ? SLAH_ENTAILED : SLAH_NOT_ENTAILED;
    if (stats) {
      stats->clauses = pr.clauseCount;
      stats->max_clause_vars = pr.maxClauseVars;
      stats->max_test_points = pr.tps.fn.maxSetSize();
      stats->theory_facts = pr.hammered.stats.tfactCount;
      stats->sort_facts = pr.hammered.stats.sfactCount;
      stats->expected_instances = pr.hammered.stats.deltaPhi;
    }
    return SLAH_OK;
  });
}

slah_status slah_oracle_decide(slah_problem* p, const slah_options* opt, slah_verdict* out) {
  if (!p || !out) return fail(SLAH_ERR_INVALID, "null argument");
  return guarded([&] {
    PipelineResult pr = run_pipeline(p->problem, toPipelineOptions(opt));
    Verdict v = oracle_verdict(pr, limitOf(opt));
    *out = v == Verdict::Entailed ? SLAH_ENTAILED : SLAH_NOT_ENTAILED;
    return SLAH_OK;
  });
}

slah_status slah_emit(slah_problem* p, const slah_options* opt, int format, char** out) {
  if (!p || !out) return fail(SLAH_ERR_INVALID, "null argument");
  if (format != SLAH_EMIT_DATALOG && format != SLAH_EMIT_TPTP)
    return fail(SLAH_ERR_INVALID, "unknown emit format");
  return guarded([&] {
    PipelineResult pr = run_pipeline(p->problem, toPipelineOptions(opt));
    std::string text =
        format == SLAH_EMIT_DATALOG ? emit_datalog(pr.hammered) : emit_tptp(pr.hammered);
    return emitString(text, out);
  });
}

slah_status slah_dump_analysis(slah_problem* p, const slah_options* opt, char** out) {
  if (!p || !out) return fail(SLAH_ERR_INVALID, "null argument");
  return guarded([&] {
    PipelineResult pr = run_pipeline(p->problem, toPipelineOptions(opt));
    return emitString(dump_analysis(pr.problem, pr.avals, pr.con), out);
  });
}

slah_status slah_dump_testpoints(slah_problem* p, const slah_options* opt, char** out) {
  if (!p || !out) return fail(SLAH_ERR_INVALID, "null argument");
  return guarded([&] {
    PipelineResult pr = run_pipeline(p->problem, toPipelineOptions(opt));
    return emitString(dump_testpoints(pr.problem, pr.tps), out);
  });
}

slah_status slah_dump_facts(slah_problem* p, const slah_options* opt, const char* pred,
                            char** out) {
  if (!p || !out || !pred) return fail(SLAH_ERR_INVALID, "null argument");
  return guarded([&] {
    PipelineResult pr = run_pipeline(p->problem, toPipelineOptions(opt));
    Decision d = decide(pr);
    auto it = d.eval.facts.find(pred);
    if (it == d.eval.facts.end())
      return fail(SLAH_ERR_INVALID, std::string("unknown predicate '") + pred + "'");
    std::ostringstream os;
    for (const std::vector<Value>& tup : it->second) {
      os << pred;
      if (!tup.empty()) {
        os << "(";
        for (std::size_t i = 0; i < tup.size(); ++i) {
          if (i) os << ", ";
          os << tup[i].str();
        }
        os << ")";
      }
      os << "\n";
    }
    return emitString(os.str(), out);
  });
}

void slah_string_free(char* s) { std::free(s); }

const char* slah_last_error(void) { return g_lastError.c_str(); }

}  // extern "C"

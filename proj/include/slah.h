#ifndef SLAH_H
#define SLAH_H

/* C interface to the sorted-hammer decision procedure. All functions are
 * thread-safe as long as each slah_problem is confined to one thread.
 * Strings returned through char** are owned by the caller and released
 * with slah_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SLAH_OK = 0,
  SLAH_ERR_PARSE = 1,         /* malformed input text */
  SLAH_ERR_NOT_REDUCIBLE = 2, /* clause set outside the decidable fragment */
  SLAH_ERR_SCALE = 3,         /* grounding larger than the configured limit */
  SLAH_ERR_UNSUPPORTED = 4,   /* request has no representation, e.g. negation in TPTP */
  SLAH_ERR_INVALID = 5,       /* bad argument from the caller */
  SLAH_ERR_INTERNAL = 6
} slah_status;

typedef enum { SLAH_ENTAILED = 0, SLAH_NOT_ENTAILED = 1 } slah_verdict;

typedef enum { SLAH_ENCODING_CLAUSE = 0, SLAH_ENCODING_STRATIFIED = 1 } slah_encoding;

typedef enum { SLAH_EMIT_DATALOG = 0, SLAH_EMIT_TPTP = 1 } slah_emit_format;

typedef struct slah_problem slah_problem;

typedef struct {
  int two_points_per_interval; /* nonzero: two points per interval everywhere */
  int topo_avals;              /* nonzero: try a topological single pass first */
  int encoding;                /* slah_encoding, default stratified */
  unsigned long long oracle_limit; /* 0: SLAH_ORACLE_LIMIT env or 1000000 */
} slah_options;

typedef struct {
  unsigned long long clauses;            /* clause count after lowering and repair */
  unsigned long long max_clause_vars;    /* most variables in one clause */
  unsigned long long max_test_points;    /* largest per-position test point set */
  unsigned long long theory_facts;       /* tabulated arithmetic facts */
  unsigned long long sort_facts;         /* domain restriction facts */
  unsigned long long expected_instances; /* universal conjecture instances */
} slah_stats;

void slah_options_init(slah_options* opt);

/* Parses problem text. On success *out owns the problem. */
slah_status slah_parse(const char* text, slah_problem** out);
void slah_problem_free(slah_problem* p);

/* Decides the conjecture (or plain satisfiability when the problem has
 * none). stats may be NULL. */
slah_status slah_decide(slah_problem* p, const slah_options* opt, slah_verdict* out,
                        slah_stats* stats);

/* Same question answered by ground saturation instead of the Datalog
 * translation; intended for cross-checking. */
slah_status slah_oracle_decide(slah_problem* p, const slah_options* opt, slah_verdict* out);

/* Renders the translated program, format from slah_emit_format. */
slah_status slah_emit(slah_problem* p, const slah_options* opt, int format, char** out);

/* Value analysis and connected argument classes, one line each. */
slah_status slah_dump_analysis(slah_problem* p, const slah_options* opt, char** out);

/* Test point sets and their interval extrapolations. */
slah_status slah_dump_testpoints(slah_problem* p, const slah_options* opt, char** out);

/* Derived facts of one predicate after evaluation, one atom per line.
 * Unknown predicate names give SLAH_ERR_INVALID. */
slah_status slah_dump_facts(slah_problem* p, const slah_options* opt, const char* pred,
                            char** out);

void slah_string_free(char* s);

/* Message for the last failing call on this thread, empty string if none. */
const char* slah_last_error(void);

#ifdef __cplusplus
}
#endif

#endif

#ifndef SLAH_EMIT_HPP
#define SLAH_EMIT_HPP

#include "slah/hammer.hpp"

namespace slah {

struct NegationNotRepresentableError : Error {
  using Error::Error;
};

// Plain Datalog text: facts sorted, rules in program order, `not` for
// negated atoms. Predicate and symbolic constant names are lowercased and
// made unique, variables get an uppercase initial, non-integer numbers are
// quoted. The output parses back through parse_datalog.
std::string emit_datalog(const HammeredProgram& hp);

// CNF clauses plus a final negated goal unit, so a refutation exists iff
// the goal atom is derivable. Numbers are mangled into symbols (c2000, n1,
// q1_2, nq1_2). Throws NegationNotRepresentableError when the program
// carries negated atoms.
std::string emit_tptp(const HammeredProgram& hp);

}  // namespace slah

#endif

#ifndef SLAH_PARSER_HPP
#define SLAH_PARSER_HPP

#include <string>

#include "slah/problem.hpp"

namespace slah {

// Parses the clause-set input language:
//
//   sort Speed = { low, high }.
//   pred P(Real, Speed).
//   clause P(0, low).
//   clause 0 <= x, x < 10 || P(x, s) -> Q(x).
//   conjecture forall x. Q(x).
//
// Declarations precede use. Comments run from '%' to end of line.
// Throws ParseError with line/column on lexical, syntactic, or sort errors.
Problem parse_problem(const std::string& text);

}  // namespace slah

#endif

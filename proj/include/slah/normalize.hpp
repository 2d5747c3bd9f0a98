#ifndef SLAH_NORMALIZE_HPP
#define SLAH_NORMALIZE_HPP

#include "slah/problem.hpp"

namespace slah {

// Replaces every numeric argument of a free atom by a fresh variable
// constrained with an equation, e.g. P(3, y) into x = 3 || -> P(x, y).
// One fresh variable per argument position; counter keeps names unique
// across clauses. Truth-table equivalent to the input clause.
HornClause abstract_clause(const Problem& p, const HornClause& c, int& counter);

// abstract_clause over every clause of the problem.
Problem abstract_problem(Problem p);

// Gives every variable that occurs only in arithmetic atoms a home: adds a
// positive occurrence in a fresh unary predicate over the variable's sort
// plus the defining clause -> Q(x). Afterwards vars(theory) is a subset of
// vars(body+head) for every clause. Satisfiability is preserved.
void repair_unhoused_vars(Problem& p);

}  // namespace slah

#endif

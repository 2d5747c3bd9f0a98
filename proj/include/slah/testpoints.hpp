#ifndef SLAH_TESTPOINTS_HPP
#define SLAH_TESTPOINTS_HPP

#include <functional>
#include <map>
#include <vector>

#include "slah/analysis.hpp"
#include "slah/intervals.hpp"

namespace slah {

// Test points per argument position. Positions whose value analysis came
// out finite keep those values; positions over an unbounded value set get
// representative points of their class's interval partition.
struct TestPointFn {
  std::map<ArgPos, std::vector<Value>> beta;  // sorted, domain-filtered
  std::map<ArgPos, bool> finiteFlagged;
  // Built for every class with at least one unbounded member position.
  std::map<ArgPos, std::vector<Interval>> classIntervals;

  const std::vector<Value>& at(const ArgPos& pos) const { return beta.at(pos); }
  std::size_t maxSetSize() const;
};

enum class Parity { Whole, IntPart, NonIntPart };

struct Extrapolation {
  Interval iv;
  Parity parity;
  bool covers(const Rat& x) const;
  std::string str() const;
};

// Maps a test point of an unbounded position to the slice of its interval
// it stands for. Finite-flagged positions extrapolate to the point itself
// and carry no entry.
struct ExtrapolationFn {
  std::map<ArgPos, std::map<Value, Extrapolation>> table;
};

struct TestPoints {
  TestPointFn fn;
  ExtrapolationFn eta;
};

// Interval points: one per interval for a class whose member positions and
// connecting variables share a single sort (integer value preferred),
// otherwise one integer and one non-integer per interval where present.
// twoPointsPerInterval forces the latter everywhere.
TestPoints pick_test_points(const Problem& p, const AVals& av, const Connections& con,
                            bool twoPointsPerInterval);

// True iff the extrapolations of pred's test points cover every argument
// sort completely, the condition for a universal conjecture over pred to
// be decided from test points alone.
bool eta_complete_for(const Problem& p, const TestPoints& tp, PredId pred);

// Values a clause variable may range over: the sort domain intersected
// with the test points of every position the variable occupies.
std::vector<Value> wti_values(const Problem& p, const HornClause& c, const std::string& var,
                              const TestPointFn& fn);

// Deterministic lexicographic enumeration over named value domains.
using Grounding = std::map<std::string, Value>;
void for_each_grounding(const std::vector<std::pair<std::string, std::vector<Value>>>& domains,
                        const std::function<void(const Grounding&)>& fn);

// Product size with an overflow cap; returns cap+1 once exceeded.
unsigned long long grounding_count(
    const std::vector<std::pair<std::string, std::vector<Value>>>& domains,
    unsigned long long cap);

std::string dump_testpoints(const Problem& p, const TestPoints& tp);

}  // namespace slah

#endif

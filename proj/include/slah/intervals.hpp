#ifndef SLAH_INTERVALS_HPP
#define SLAH_INTERVALS_HPP

#include <optional>
#include <set>
#include <vector>

#include "slah/problem.hpp"

namespace slah {

// Interval border, written c) [c c] (c. The shape order at equal value,
// c) < [c < c] < (c, makes a sorted border set alternate between upper and
// lower borders, which is what interval_partition pairs up.
struct Border {
  enum class Kind { NegInf, Finite, PosInf };
  enum class Shape { UpperOpen, LowerClosed, UpperClosed, LowerOpen };

  Kind kind;
  Shape shape;  // NegInf behaves as a lower border, PosInf as an upper one
  Rat value;

  static Border negInf() { return {Kind::NegInf, Shape::LowerOpen, Rat(0)}; }
  static Border posInf() { return {Kind::PosInf, Shape::UpperOpen, Rat(0)}; }
  static Border make(Shape s, Rat v) { return {Kind::Finite, s, std::move(v)}; }

  bool lower() const {
    if (kind != Kind::Finite) return kind == Kind::NegInf;
    return shape == Shape::LowerClosed || shape == Shape::LowerOpen;
  }
  bool closed() const {
    return kind == Kind::Finite && (shape == Shape::LowerClosed || shape == Shape::UpperClosed);
  }

  bool operator==(const Border& o) const {
    if (kind != o.kind) return false;
    if (kind != Kind::Finite) return true;
    return shape == o.shape && value == o.value;
  }
  bool operator<(const Border& o) const {
    if (kind == Kind::NegInf || o.kind == Kind::NegInf) return kind == Kind::NegInf && o.kind != Kind::NegInf;
    if (kind == Kind::PosInf || o.kind == Kind::PosInf) return o.kind == Kind::PosInf && kind != Kind::PosInf;
    if (value != o.value) return value < o.value;
    return static_cast<int>(shape) < static_cast<int>(o.shape);
  }

  std::string str() const;
};

// Nonempty interval delimited by a lower and an upper border.
struct Interval {
  Border lo, hi;

  bool contains(const Rat& x) const;
  bool boundedBelow() const { return lo.kind == Border::Kind::Finite; }
  bool boundedAbove() const { return hi.kind == Border::Kind::Finite; }
  bool singlePoint() const;

  // Smallest integer and largest integer inside, when bounded on that side.
  std::optional<Rat> leastInt() const;
  std::optional<Rat> greatestInt() const;

  bool hasInteger() const;
  // Integer of least absolute value (a tie cannot occur: an interval
  // holding k and -k also holds 0).
  Rat integerPick() const;
  bool hasNonInteger() const;
  // Deterministic non-integer choice: midpoint, or half a unit inside a
  // one-sided interval, falling back to quarter steps where those land on
  // integers.
  Rat nonIntegerPick() const;

  std::string str() const;
};

// Border set induced by a set of variable bounds: every bound value
// contributes the borders that separate satisfying from non-satisfying
// side, and the infinities are always present.
std::set<Border> interval_endpoints(const std::set<SimpleBound>& bounds);

// Pairs a sorted border set into the interval partition it induces.
// Throws InternalError when the set does not alternate lower/upper or does
// not cover the whole line.
std::vector<Interval> interval_partition(const std::set<Border>& borders);

}  // namespace slah

#endif

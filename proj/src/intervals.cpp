#include "slah/intervals.hpp"

namespace slah {

std::string Border::str() const {
  switch (kind) {
    case Kind::NegInf: return "(-inf";
    case Kind::PosInf: return "inf)";
    case Kind::Finite: break;
  }
  std::string v = rat_to_string(value);
  switch (shape) {
    case Shape::UpperOpen: return v + ")";
    case Shape::LowerClosed: return "[" + v;
    case Shape::UpperClosed: return v + "]";
    case Shape::LowerOpen: return "(" + v;
  }
  return v;
}

bool Interval::contains(const Rat& x) const {
  if (lo.kind == Border::Kind::Finite) {
    if (lo.closed() ? x < lo.value : x <= lo.value) return false;
  }
  if (hi.kind == Border::Kind::Finite) {
    if (hi.closed() ? x > hi.value : x >= hi.value) return false;
  }
  return true;
}

bool Interval::singlePoint() const {
  return lo.kind == Border::Kind::Finite && hi.kind == Border::Kind::Finite &&
         lo.value == hi.value;
}

std::optional<Rat> Interval::leastInt() const {
  if (!boundedBelow()) return std::nullopt;
  Rat c = rat_ceil(lo.value);
  if (!contains(c)) c += 1;  // open border at an integer value
  return c;
}

std::optional<Rat> Interval::greatestInt() const {
  if (!boundedAbove()) return std::nullopt;
  Rat c = rat_floor(hi.value);
  if (!contains(c)) c -= 1;
  return c;
}

bool Interval::hasInteger() const {
  auto lo_ = leastInt();
  auto hi_ = greatestInt();
  if (lo_ && hi_) return *lo_ <= *hi_;
  return true;  // unbounded on at least one side
}

Rat Interval::integerPick() const {
  auto lo_ = leastInt();
  auto hi_ = greatestInt();
  if (!hasInteger()) throw InternalError("integerPick on integer-free interval");
  Rat zero(0);
  if ((!lo_ || *lo_ <= zero) && (!hi_ || *hi_ >= zero)) return zero;
  if (lo_ && *lo_ > zero) return *lo_;
  return *hi_;
}

bool Interval::hasNonInteger() const {
  if (singlePoint()) return !rat_is_integer(lo.value);
  return true;  // any interval with two points holds a non-integer
}

Rat Interval::nonIntegerPick() const {
  if (!hasNonInteger()) throw InternalError("nonIntegerPick on integer point");
  if (singlePoint()) return lo.value;
  bool below = boundedBelow(), above = boundedAbove();
  if (!below && !above) return rat_make(1, 2);
  if (!below) {
    Rat v = hi.value - rat_make(1, 2);
    return rat_is_integer(v) ? hi.value - rat_make(1, 4) : v;
  }
  if (!above) {
    Rat v = lo.value + rat_make(1, 2);
    return rat_is_integer(v) ? lo.value + rat_make(1, 4) : v;
  }
  Rat mid = (lo.value + hi.value) / 2;
  if (!rat_is_integer(mid) && contains(mid)) return mid;
  if (hasInteger()) {
    Rat k = integerPick();
    Rat up = k + rat_make(1, 2);
    if (contains(up)) return up;
    Rat down = k - rat_make(1, 2);
    if (contains(down)) return down;
    // Interval is narrower than half a unit around k; average toward the
    // wider side, which cannot land on an integer.
    if (hi.value > k) return (k + hi.value) / 2;
    return (lo.value + k) / 2;
  }
  return mid;  // integer-free interval: the midpoint is not an integer
}

std::string Interval::str() const {
  std::string lo_ = lo.kind == Border::Kind::NegInf
                        ? "(-inf"
                        : (lo.closed() ? "[" : "(") + rat_to_string(lo.value);
  std::string hi_ = hi.kind == Border::Kind::PosInf
                        ? "inf)"
                        : rat_to_string(hi.value) + (hi.closed() ? "]" : ")");
  return lo_ + ", " + hi_;
}

std::set<Border> interval_endpoints(const std::set<SimpleBound>& bounds) {
  std::set<Border> out;
  out.insert(Border::negInf());
  out.insert(Border::posInf());
  for (const auto& b : bounds) {
    bool closedAbove = b.rel == Rel::Le || b.rel == Rel::Eq || b.rel == Rel::Ne || b.rel == Rel::Gt;
    bool closedBelow = b.rel == Rel::Ge || b.rel == Rel::Eq || b.rel == Rel::Ne || b.rel == Rel::Lt;
    if (closedAbove) {
      out.insert(Border::make(Border::Shape::UpperClosed, b.value));
      out.insert(Border::make(Border::Shape::LowerOpen, b.value));
    }
    if (closedBelow) {
      out.insert(Border::make(Border::Shape::UpperOpen, b.value));
      out.insert(Border::make(Border::Shape::LowerClosed, b.value));
    }
  }
  return out;
}

std::vector<Interval> interval_partition(const std::set<Border>& borders) {
  std::vector<Border> v(borders.begin(), borders.end());
  if (v.size() < 2 || v.size() % 2 != 0)
    throw InternalError("malformed border set: odd border count");
  if (v.front().kind != Border::Kind::NegInf || v.back().kind != Border::Kind::PosInf)
    throw InternalError("malformed border set: does not span the line");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < v.size(); i += 2) {
    const Border& lo = v[i];
    const Border& hi = v[i + 1];
    if (!lo.lower() || hi.lower())
      throw InternalError("malformed border set: lower/upper alternation broken");
    if (lo.kind == Border::Kind::Finite && hi.kind == Border::Kind::Finite) {
      if (lo.value > hi.value || (lo.value == hi.value && !(lo.closed() && hi.closed())))
        throw InternalError("malformed border set: empty interval");
    }
    // Adjacent intervals must meet without gap or overlap.
    if (i + 2 < v.size()) {
      const Border& nextLo = v[i + 2];
      if (hi.kind != Border::Kind::Finite || nextLo.kind != Border::Kind::Finite ||
          hi.value != nextLo.value || hi.closed() == nextLo.closed())
        throw InternalError("malformed border set: gap between intervals");
    }
    out.push_back({lo, hi});
  }
  return out;
}

}  // namespace slah

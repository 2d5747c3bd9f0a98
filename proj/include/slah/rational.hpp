#ifndef SLAH_RATIONAL_HPP
#define SLAH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace slah {

// Exact rational arithmetic. Rat is always canonical: gcd-reduced,
// positive denominator. Construct through the helpers below; raw
// mpq_class(n, d) does not reduce.
using Rat = mpq_class;

Rat rat_from_long(long n);
Rat rat_make(long num, long den);

// Accepts "12", "-7", "3.25", "-0.5". Returns nothing on malformed text.
std::optional<Rat> rat_from_literal(const std::string& text);

bool rat_is_integer(const Rat& r);
Rat rat_floor(const Rat& r);
Rat rat_ceil(const Rat& r);
Rat rat_abs(const Rat& r);

// Canonical text: integers bare ("-3"), terminating decimals in decimal
// form ("0.5"), anything else as "n/d". Parsing the result with
// rat_from_literal round-trips whenever the form is decimal.
std::string rat_to_string(const Rat& r);

std::size_t rat_hash(const Rat& r);

}  // namespace slah

#endif

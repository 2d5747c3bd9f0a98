#include "slah/rational.hpp"

#include <cctype>
#include <functional>

namespace slah {

Rat rat_from_long(long n) { return Rat(n); }

Rat rat_make(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rat> rat_from_literal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  if (digits.empty()) return std::nullopt;
  std::string frac;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac += text[i++];
    if (frac.empty()) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  mpz_class num(digits + frac, 10);  // explicit base, leading zeros are not octal
  mpz_class den(1);
  for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
  Rat r(num, den);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

Rat rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

Rat rat_ceil(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

std::string rat_to_string(const Rat& r) {
  if (rat_is_integer(r)) return r.get_num().get_str();
  // Terminating decimal iff the reduced denominator is 2^a * 5^b.
  mpz_class den = r.get_den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
    ++fives;
  }
  if (den == 1) {
    int digits = twos > fives ? twos : fives;
    mpz_class scale(1);
    for (int k = 0; k < digits; ++k) scale *= 10;
    mpz_class scaled = r.get_num() * scale / r.get_den();
    bool neg = scaled < 0;
    mpz_class a = neg ? mpz_class(-scaled) : scaled;
    std::string s = a.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::size_t rat_hash(const Rat& r) {
  std::hash<std::string> h;
  return h(r.get_num().get_str()) * 1000003u ^ h(r.get_den().get_str());
}

}  // namespace slah

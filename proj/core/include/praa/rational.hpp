#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace praa {

// Exact arithmetic types used throughout. All ring coefficients,
// distributions and certified constants are rationals; no rounding
// happens outside the explicitly floating-point spectral routines.
using Int = mpz_class;
using Rat = mpq_class;

// Parses a decimal string ("1.41", "-0.35", "2.5e-3") into the exact
// rational it denotes. Plain "p/q" fractions are accepted too.
Rat rat_from_decimal(std::string_view s);

// mpq_class(num, den) does not canonicalize, and GMP's rational arithmetic
// assumes canonical operands; route every numerator/denominator pair here.
inline Rat frac(Int num, Int den) {
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}
inline Rat frac(long num, unsigned long den) { return frac(Int(num), Int(den)); }

std::string rat_to_string(const Rat& r);

// Shortest-round-trip style decimal rendering for reports (not exact).
double rat_to_double(const Rat& r);

}  // namespace praa

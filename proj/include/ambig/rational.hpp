#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ambig {

// Exact rational scalar. All phase bookkeeping in this library is done in
// "turns" (full revolutions), so a phase is simply a Rat and angle identities
// become integer shifts.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q", "p", or a leading-sign variant. Throws on malformed input.
Rat parse_rat(const std::string& text);

// Canonical form: "p" for integers, "p/q" otherwise, q > 0.
std::string rat_str(const Rat& value);

double rat_to_double(const Rat& value);

// Largest integer n with n <= value.
Rat rat_floor(const Rat& value);

// value - floor(value), in [0, 1).
Rat mod1(const Rat& value);

long rat_to_long(const Rat& value);  // requires an integral value

// lcm of denominators of a list of rationals.
unsigned long common_denominator(const std::vector<Rat>& values);

}  // namespace ambig

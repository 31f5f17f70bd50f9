#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hammersley {

// Exact arithmetic for trajectory counts and probabilities. Counts exceed
// 64 bits already at n = 21 (HAD) and far earlier for the interval process.
using Nat = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Nat factorial(int n);

// (2n-1)!! = 1 * 3 * ... * (2n-1), the gap-pair count of one interval step
// sequence; defined as 1 for n = 0.
Nat odd_double_factorial(int n);

// Total ordered-pair mass of the interval process after n steps:
// prod_{m=1..n} (2m-1)^2 = ((2n-1)!!)^2.
Nat interval_mass(int n);

std::string decimal(const Nat& value);

// "p/q" in lowest terms; integers print without the "/q" part.
std::string fraction(const Rat& value);

// Decimal expansion truncated toward zero after `digits` fractional digits,
// never rounded: 7/6 with digits=3 yields "1.166".
std::string decimal_truncated(const Rat& value, int digits);

double to_double(const Rat& value);

}  // namespace hammersley

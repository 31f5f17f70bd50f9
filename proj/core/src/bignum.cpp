#include "hammersley/bignum.hpp"

#include <stdexcept>

namespace hammersley {

Nat factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Nat result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Nat odd_double_factorial(int n) {
  if (n < 0) throw std::invalid_argument("double factorial of a negative number");
  Nat result = 1;
  for (int m = 1; m <= n; ++m) result *= 2 * m - 1;
  return result;
}

Nat interval_mass(int n) {
  const Nat f = odd_double_factorial(n);
  return f * f;
}

std::string decimal(const Nat& value) {
  return value.str();
}

std::string fraction(const Rat& value) {
  const Nat num = boost::multiprecision::numerator(value);
  const Nat den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string decimal_truncated(const Rat& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  const bool negative = value < 0;
  Nat num = boost::multiprecision::numerator(value);
  if (negative) num = -num;
  const Nat den = boost::multiprecision::denominator(value);
  Nat scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Nat scaled = num * scale / den;  // truncation toward zero
  const Nat whole = scaled / scale;
  std::string out = (negative ? "-" : "") + whole.str();
  if (digits > 0) {
    std::string frac = Nat(scaled % scale).str();
    out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return out;
}

double to_double(const Rat& value) {
  return value.convert_to<double>();
}

}  // namespace hammersley

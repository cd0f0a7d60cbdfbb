#pragma once

#include <compare>
#include <string>

namespace tunnelrho {

// Exact rational on 64-bit integers, always reduced, den > 0.
// Every coordinate in this project is tiny (lattice points below 10^2,
// denominators below 10^3), so plain long long never overflows here.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  Rat operator-() const { return Rat(-num, den); }
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;

  bool operator==(const Rat& o) const = default;
  std::strong_ordering operator<=>(const Rat& o) const;

  bool is_integer() const { return den == 1; }
  long long floor() const;
  double to_double() const { return double(num) / double(den); }

  // "n" for integers, "n/d" otherwise.
  std::string str() const;
  // always "n/d", e.g. "3/2", "2/1".
  std::string frac_str() const;
};

// x reduced modulo m into [0, m).
Rat mod_positive(const Rat& x, long long m);

}  // namespace tunnelrho

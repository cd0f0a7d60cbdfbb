#include "tunnelrho/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace tunnelrho {

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(num * o.den + o.num * den, den * o.den);
}

Rat Rat::operator-(const Rat& o) const {
  return Rat(num * o.den - o.num * den, den * o.den);
}

Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

Rat Rat::operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }

std::strong_ordering Rat::operator<=>(const Rat& o) const {
  return num * o.den <=> o.num * den;
}

long long Rat::floor() const {
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string Rat::frac_str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat mod_positive(const Rat& x, long long m) {
  Rat r = x - Rat((x / Rat(m)).floor() * m);
  return r;
}

}  // namespace tunnelrho

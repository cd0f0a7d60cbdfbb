#include "tunnelrho/slope.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "tunnelrho/error.hpp"

namespace tunnelrho {

Slope::Slope(long long p_, long long q_) : p(p_), q(q_) {
  if (p == 0 && q == 0) fail(Err::InvalidSlope, "0/0 is not a slope");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (q == 0) p = 1;
}

std::string Slope::str() const {
  if (infinite()) return "inf";
  return std::to_string(p) + "/" + std::to_string(q);
}

static long long parse_ll(const char* first, const char* last, bool& ok) {
  long long v = 0;
  auto res = std::from_chars(first, last, v);
  ok = res.ec == std::errc() && res.ptr == last;
  return v;
}

Slope Slope::parse(const std::string& text) {
  if (text == "inf" || text == "1/0" || text == "-1/0") return slope_infinity();
  auto slash = text.find('/');
  bool ok_p = false, ok_q = true;
  long long p = 0, q = 1;
  if (slash == std::string::npos) {
    p = parse_ll(text.data(), text.data() + text.size(), ok_p);
  } else {
    p = parse_ll(text.data(), text.data() + slash, ok_p);
    q = parse_ll(text.data() + slash + 1, text.data() + text.size(), ok_q);
  }
  if (!ok_p || !ok_q) fail(Err::ParseError, "not a slope: \"" + text + "\"");
  if (p == 0 && q == 0) fail(Err::ParseError, "not a slope: \"" + text + "\"");
  return Slope(p, q);
}

long long delta(const Slope& a, const Slope& b) {
  long long d = a.p * b.q - b.p * a.q;
  return d < 0 ? -d : d;
}

long long min_intersections(const Slope& a, const Slope& b) {
  long long d = delta(a, b);
  return d <= 1 ? 0 : 2 * d - 2;
}

Parity parity(const Slope& a) {
  return (a.p % 2 != 0) ? Parity::Odd : Parity::Even;
}

Slope add_full_twists(const Slope& a, long long k) {
  if (a.infinite())
    fail(Err::InfiniteSlope, "full twists about mu_t fix the infinite slope");
  return Slope(a.p + 2 * k * a.q, a.q);
}

SlopeMod2 reduce_mod2(const Slope& a) {
  if (a.infinite())
    fail(Err::InfiniteSlope, "the infinite slope has no class in Q/2Z");
  long long m = 2 * a.q;
  long long r = ((a.p % m) + m) % m;  // [0, 2q)
  if (r > a.q) r -= m;                // (-q, q]
  return SlopeMod2{Slope(r, a.q)};
}

const char* err_name(Err e) {
  switch (e) {
    case Err::InfiniteSlope: return "InfiniteSlope";
    case Err::InvalidSlope: return "InvalidSlope";
    case Err::EqualSlopes: return "EqualSlopes";
    case Err::NotCoprime: return "NotCoprime";
    case Err::DegenerateTorusKnot: return "DegenerateTorusKnot";
    case Err::NotFound: return "NotFound";
    case Err::CertificateFailure: return "CertificateFailure";
    case Err::MixedBases: return "MixedBases";
    case Err::NoWaves: return "NoWaves";
    case Err::InvalidSystem: return "InvalidSystem";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::InvalidGenerator: return "InvalidGenerator";
    case Err::EvenNumeratorTarget: return "EvenNumeratorTarget";
    case Err::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace tunnelrho

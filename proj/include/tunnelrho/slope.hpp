#pragma once

#include <compare>
#include <string>

namespace tunnelrho {

enum class Parity { Odd, Even };

inline const char* parity_name(Parity p) {
  return p == Parity::Odd ? "odd" : "even";
}

// Isotopy class of a complete pair of arcs on the 4-punctured sphere,
// written as a reduced extended rational p/q. |p| counts the crossings
// of one arc of the pair with the separating reference circle mu_perp,
// q its crossings with the transverse circle mu_t. Canonical form:
// gcd(|p|, q) = 1 and q >= 0, with 1/0 the infinite class and 0/1 the
// zero class. Construction from any unreduced pair normalizes.
struct Slope {
  long long p = 0;
  long long q = 1;

  Slope() = default;
  Slope(long long p_, long long q_);

  bool infinite() const { return q == 0; }
  bool finite() const { return q != 0; }

  bool operator==(const Slope&) const = default;
  auto operator<=>(const Slope&) const = default;

  std::string str() const;

  // Accepts "p/q" (normalized silently if unreduced), plain integers,
  // and "inf" for 1/0.
  static Slope parse(const std::string& text);
};

inline Slope slope_infinity() { return Slope(1, 0); }
inline Slope slope_zero() { return Slope(0, 1); }

// Element of Q/2Z, held by its canonical representative: for p/q the
// numerator lies in the half-open interval (-q, q], so 1/1 and -1/1
// share the representative 1/1.
struct SlopeMod2 {
  Slope rep;

  bool operator==(const SlopeMod2&) const = default;
  auto operator<=>(const SlopeMod2&) const = default;

  std::string str() const { return rep.str(); }
};

// |p q' - p' q|. Zero iff the slopes are equal; at most 1 iff the two
// pairs can be realized disjointly.
long long delta(const Slope& a, const Slope& b);

// Minimal crossing number of two complete pairs: 0 when delta <= 1,
// otherwise 2*delta - 2.
long long min_intersections(const Slope& a, const Slope& b);

// Odd iff p is odd, i.e. each arc of the pair joins a minus puncture
// to a plus puncture. The infinite slope 1/0 is odd.
Parity parity(const Slope& a);

// k full Dehn twists about mu_t: p/q -> p/q + 2k. The infinite slope is
// fixed by such twists and is rejected with Err::InfiniteSlope.
Slope add_full_twists(const Slope& a, long long k);

// Class of a finite slope in Q/2Z. Err::InfiniteSlope on 1/0.
SlopeMod2 reduce_mod2(const Slope& a);

}  // namespace tunnelrho

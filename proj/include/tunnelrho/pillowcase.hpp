#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "tunnelrho/geom.hpp"
#include "tunnelrho/slope.hpp"

namespace tunnelrho {

// Flat model of the 4-punctured sphere: the unit torus R^2/Z^2 modulo
// the involution v -> -v. The four involution fixed points are the
// punctures,
//
//   (0,0)     mu_l-      (1/2,0)    mu_r-
//   (0,1/2)   mu_l+      (1/2,1/2)  mu_r+
//
// and the reference circles are the images of {x = 1/4} (mu_t) and
// {y = 1/4} (mu_perp). A slope-p/q pair is realized by two straight
// segments of direction (q, p) and parameter length 1/2, one through
// each pair of fixed points; straight segments are minimal-position
// representatives, so every count below is exact rational geometry
// with no tolerance anywhere.

struct RealizedPair {
  Slope slope;
  // Oriented segments with rational endpoints, read modulo the integer
  // lattice and the involution. The four endpoints are the four
  // punctures, each used once.
  std::array<Seg, 2> arcs;
};

RealizedPair realize_pair(const Slope& s);

// Crossings of one arc with each reference circle; the two arcs of a
// pair always agree, and the counts equal (|p|, q).
struct ReferenceCrossings {
  long long mu_perp = 0;
  long long mu_t = 0;
};
ReferenceCrossings reference_crossings(const RealizedPair& rp);

// Odd when the realized arcs join the y=0 row of punctures to the
// y=1/2 row, even when each arc stays in its row. Agrees with
// parity(s) by construction; computed from the endpoints, not from p.
Parity endpoint_parity(const Slope& s);

// Exact crossing counts of two realized configurations, computed by
// enumerating lattice translates of the lifted segments and solving
// the pairwise segment intersections in rational arithmetic.
//   torus_total  intersection points of the full preimages on the torus
//   at_punctures those landing on the involution fixed points
//   quotient     crossings on the pillowcase away from the punctures
// For distinct slopes the counts satisfy torus_total = 4*delta,
// at_punctures = 4 and quotient = (torus_total - 4) / 2.
struct CrossingStats {
  long long torus_total = 0;
  long long at_punctures = 0;
  long long quotient = 0;
};

// window_margin widens the translate window beyond the joint bounding
// box; any value >= 0 gives the same counts (tested), the parameter
// exists to demonstrate that.
CrossingStats crossing_stats(const RealizedPair& a, const RealizedPair& b,
                             long long window_margin = 1);

// quotient count; Err::EqualSlopes when the slopes coincide.
long long count_crossings(const RealizedPair& a, const RealizedPair& b,
                          long long window_margin = 1);

// Sweep of every distinct normalized slope pair with |p| <= max_p,
// 0 < q <= max_q, plus the infinite slope, comparing the crossing
// count of the realized configurations with min_intersections.
struct OracleSweepReport {
  long long slopes = 0;
  long long pairs_checked = 0;
  std::vector<std::pair<Slope, Slope>> mismatches;
  double elapsed_ms = 0.0;
};
OracleSweepReport oracle_sweep(long long max_p, long long max_q);

// One SVG of the fundamental domain with punctures, reference circles
// and the realized arcs of each configuration.
void render_svg(std::ostream& os, const std::vector<RealizedPair>& pairs);

}  // namespace tunnelrho

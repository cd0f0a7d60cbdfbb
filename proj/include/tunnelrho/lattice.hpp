#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tunnelrho/arcsys.hpp"
#include "tunnelrho/geom.hpp"
#include "tunnelrho/slope.hpp"

namespace tunnelrho {

// Exact lattice pipeline certifying the slope invariant of a torus knot
// with the annulus-spanning tunnel. Everything happens in the universal
// cover picture: the tunnel meridian lifts to the segment (0,0)-(m,n),
// the knot meridians to the sides of a unimodular parallelogram, and
// the splitting sphere's curve to a unit lattice square. Clipping the
// parallelogram against the right square exposes the wave, and the
// wave's two crossings with the diagonal pin the invariant down.

struct TorusKnotInput {
  long long m = 0;
  long long n = 0;
};

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
  Vec2 vec() const { return Vec2{Rat(x), Rat(y)}; }
};

// Corners (0,0), (p,q), (m,n), (m-p,n-q) with mq - np = 1; area 1,
// empty interior, minor diagonal of non-negative slope.
struct Parallelogram {
  long long m = 0, n = 0, p = 0, q = 0;

  std::array<LatticePoint, 4> corners() const;
  std::vector<Vec2> vertices() const;
  std::array<std::pair<LatticePoint, LatticePoint>, 4> sides() const;
  std::pair<LatticePoint, LatticePoint> major_diagonal() const;
  std::pair<LatticePoint, LatticePoint> minor_diagonal() const;
};

struct InteriorScan {
  long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;  // inclusive bounds scanned
  long long interior_points = 0;
};

struct WaveCertificate {
  LatticePoint corner;             // minor-diagonal endpoint, apex of triangle
  LatticePoint square;             // lower-left lattice corner of the unit square
  std::array<Vec2, 3> triangle;    // triangle[0] == corner
  int base_side = -1;              // index into Parallelogram::sides()
  Seg base;                        // triangle side opposite the corner
  MeridianPair base_meridian;      // meridian family of the base side
  std::vector<Vec2> diagonal_crossings;  // always exactly two points
};

struct TorusKnotCertificate {
  TorusKnotInput input;
  long long p = 0, q = 0;
  Parallelogram para;
  InteriorScan scan;
  WaveCertificate at_pq;          // corner (p, q)
  WaveCertificate at_complement;  // corner (m-p, n-q)
  long long wave_mu_t_crossings = 0;  // per wave; always 2
  SlopeMod2 rho;
};

// The unique (p, q) with 0 < p < m, 0 < q < n and mq - np = 1.
// Err::DegenerateTorusKnot for m < 2 or n < 2, Err::NotCoprime else.
std::pair<long long, long long> companion_pq(const TorusKnotInput& in);

// Builds the parallelogram and checks all of its invariants
// (Err::CertificateFailure on any violation).
Parallelogram build_parallelogram(const TorusKnotInput& in);

// Brute-force lattice scan of the interior over the bounding box.
InteriorScan scan_interior(const Parallelogram& para);

// Searches the unit lattice squares at the given corner (falling back
// to every square meeting the bounding box) for one that clips the
// parallelogram to a triangle with apex at the corner, its two
// apex-incident sides on square edges, its base inside a single side of
// the parallelogram, and exactly two crossings of the apex-incident
// sides with the major diagonal. Err::NotFound if no square qualifies;
// that would falsify the construction and is never swallowed.
WaveCertificate find_wave_square(const Parallelogram& para, LatticePoint corner);

// Full pipeline: companion pair, parallelogram certificates, wave
// certificates at both corners, and the invariant read off them.
TorusKnotCertificate certify_torus_knot(const TorusKnotInput& in);

// certify_torus_knot(in).rho
SlopeMod2 rho_torus(const TorusKnotInput& in);

// The arc system on the 4-punctured sphere the two certificates
// describe: one wave per certificate, based on the two copies of the
// base-side meridian, plus the joining pair of the derived slope.
ArcSystem to_arc_system(const TorusKnotCertificate& cert);

// Full certificate chain as JSON, all coordinates exact.
nlohmann::json trace_json(const TorusKnotCertificate& cert);

// Picture of the parallelogram, wave squares, triangles and diagonal.
void render_svg(std::ostream& os, const TorusKnotCertificate& cert);

}  // namespace tunnelrho

#include "tunnelrho/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "tunnelrho/error.hpp"
#include "tunnelrho/svg.hpp"

namespace tunnelrho {

std::array<LatticePoint, 4> Parallelogram::corners() const {
  return {{{0, 0}, {p, q}, {m, n}, {m - p, n - q}}};
}

std::vector<Vec2> Parallelogram::vertices() const {
  std::vector<Vec2> v;
  for (const LatticePoint& c : corners()) v.push_back(c.vec());
  return v;
}

std::array<std::pair<LatticePoint, LatticePoint>, 4> Parallelogram::sides()
    const {
  auto c = corners();
  return {{{c[0], c[1]}, {c[1], c[2]}, {c[2], c[3]}, {c[3], c[0]}}};
}

std::pair<LatticePoint, LatticePoint> Parallelogram::major_diagonal() const {
  return {{0, 0}, {m, n}};
}

std::pair<LatticePoint, LatticePoint> Parallelogram::minor_diagonal() const {
  return {{p, q}, {m - p, n - q}};
}

std::pair<long long, long long> companion_pq(const TorusKnotInput& in) {
  if (in.m < 2 || in.n < 2)
    fail(Err::DegenerateTorusKnot,
         "torus knot needs m, n >= 2 (got " + std::to_string(in.m) + ", " +
             std::to_string(in.n) + ")");
  if (std::gcd(in.m, in.n) != 1)
    fail(Err::NotCoprime, "gcd(" + std::to_string(in.m) + ", " +
                              std::to_string(in.n) + ") = " +
                              std::to_string(std::gcd(in.m, in.n)));
  // extended gcd: x*m + y*n == 1, so m*x - n*(-y) == 1
  long long x = 1, y = 0, x1 = 0, y1 = 1, a = in.m, b = in.n;
  while (b != 0) {
    long long t = a / b;
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
    std::tie(y, y1) = std::make_pair(y1, y - t * y1);
    std::tie(a, b) = std::make_pair(b, a - t * b);
  }
  long long q0 = x, p0 = -y;  // m*q0 - n*p0 == 1
  long long p = ((p0 % in.m) + in.m) % in.m;
  long long q = (1 + in.n * p) / in.m;
  if (!(0 < p && p < in.m && 0 < q && q < in.n && in.m * q - in.n * p == 1))
    fail(Err::CertificateFailure,
         "no companion pair in range for (" + std::to_string(in.m) + ", " +
             std::to_string(in.n) + ")");
  (void)q0;
  return {p, q};
}

InteriorScan scan_interior(const Parallelogram& para) {
  InteriorScan scan;
  auto verts = para.vertices();
  scan.x0 = 0;
  scan.x1 = para.m;
  scan.y0 = 0;
  scan.y1 = para.n;
  for (long long x = scan.x0; x <= scan.x1; ++x)
    for (long long y = scan.y0; y <= scan.y1; ++y)
      if (point_in_convex_interior(Vec2{Rat(x), Rat(y)}, verts))
        ++scan.interior_points;
  return scan;
}

Parallelogram build_parallelogram(const TorusKnotInput& in) {
  auto [p, q] = companion_pq(in);
  Parallelogram para{in.m, in.n, p, q};

  if (polygon_area2(para.vertices()) != Rat(2))
    fail(Err::CertificateFailure, "parallelogram area is not 1");

  // minor diagonal never of negative slope
  long long dx = (in.m - p) - p, dy = (in.n - q) - q;
  if (dx * dy < 0)
    fail(Err::CertificateFailure, "minor diagonal has negative slope");

  if (scan_interior(para).interior_points != 0)
    fail(Err::CertificateFailure, "parallelogram interior contains a lattice point");

  return para;
}

namespace {

bool on_square_edge(const Vec2& a, const Vec2& b, long long sx, long long sy) {
  for (auto [axis, bound] : {std::pair<int, long long>{0, sx},
                             {0, sx + 1},
                             {1, sy},
                             {1, sy + 1}}) {
    Rat av = axis == 0 ? a.x : a.y;
    Rat bv = axis == 0 ? b.x : b.y;
    if (av == Rat(bound) && bv == Rat(bound)) return true;
  }
  return false;
}

// Try one unit square; fills out the certificate when it qualifies.
bool try_square(const Parallelogram& para, const LatticePoint& corner,
                long long sx, long long sy, WaveCertificate* cert) {
  std::vector<Vec2> tri = clip_to_square(para.vertices(), sx, sy);
  if (tri.size() != 3 || polygon_area2(tri) == Rat(0)) return false;

  Vec2 c = corner.vec();
  auto it = std::find(tri.begin(), tri.end(), c);
  if (it == tri.end()) return false;
  size_t i = static_cast<size_t>(it - tri.begin());
  Vec2 v1 = tri[(i + 1) % 3], v2 = tri[(i + 2) % 3];

  // the wave: both apex sides run along the square's boundary
  if (!on_square_edge(c, v1, sx, sy) || !on_square_edge(c, v2, sx, sy))
    return false;

  // the base lies inside a single side of the parallelogram
  int base_side = -1;
  auto sides = para.sides();
  for (int k = 0; k < 4; ++k) {
    Seg side{sides[k].first.vec(), sides[k].second.vec()};
    if (on_segment(v1, side) && on_segment(v2, side)) {
      base_side = k;
      break;
    }
  }
  if (base_side < 0) return false;

  // the apex sides cross the major diagonal twice
  Seg diag{Vec2{Rat(0), Rat(0)}, Vec2{Rat(para.m), Rat(para.n)}};
  std::vector<Vec2> crossings;
  for (const Vec2& v : {v1, v2}) {
    if (auto pt = seg_intersection(Seg{c, v}, diag)) crossings.push_back(*pt);
  }
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()),
                  crossings.end());
  if (crossings.size() != 2) return false;

  auto [s0, s1] = sides[static_cast<size_t>(base_side)];
  long long dx = s1.x - s0.x, dy = s1.y - s0.y;
  bool along_pq = dx * para.q - dy * para.p == 0;

  cert->corner = corner;
  cert->square = {sx, sy};
  cert->triangle = {c, v1, v2};
  cert->base_side = base_side;
  cert->base = Seg{v1, v2};
  cert->base_meridian = along_pq ? MeridianPair::Plus : MeridianPair::Minus;
  cert->diagonal_crossings = crossings;
  return true;
}

}  // namespace

WaveCertificate find_wave_square(const Parallelogram& para,
                                 LatticePoint corner) {
  LatticePoint minor1{para.p, para.q};
  LatticePoint minor2{para.m - para.p, para.n - para.q};
  if (!(corner == minor1 || corner == minor2))
    fail(Err::CertificateFailure,
         "wave square search needs a minor-diagonal endpoint");

  WaveCertificate cert;
  // the four squares having the corner as a vertex, then every square
  // over the bounding box as a fallback
  for (long long sx : {corner.x - 1, corner.x})
    for (long long sy : {corner.y - 1, corner.y})
      if (try_square(para, corner, sx, sy, &cert)) return cert;
  for (long long sx = -1; sx <= para.m; ++sx)
    for (long long sy = -1; sy <= para.n; ++sy)
      if (try_square(para, corner, sx, sy, &cert)) return cert;

  fail(Err::NotFound, "no unit square cuts a wave triangle at corner (" +
                          std::to_string(corner.x) + ", " +
                          std::to_string(corner.y) + ")");
}

TorusKnotCertificate certify_torus_knot(const TorusKnotInput& in) {
  TorusKnotCertificate cert;
  cert.input = in;
  std::tie(cert.p, cert.q) = companion_pq(in);
  cert.para = build_parallelogram(in);
  cert.scan = scan_interior(cert.para);
  cert.at_pq = find_wave_square(cert.para, LatticePoint{cert.p, cert.q});
  cert.at_complement = find_wave_square(
      cert.para, LatticePoint{in.m - cert.p, in.n - cert.q});

  if (cert.at_pq.base_meridian != cert.at_complement.base_meridian)
    fail(Err::CertificateFailure,
         "the two wave triangles base on different meridian families");

  // Each wave crosses the tunnel-meridian lift (the major diagonal)
  // twice, and a wave double-covers its spanning arc away from the
  // punctures, so the spanning pair crosses mu_t once: the derived
  // slope has denominator 1. Re-choosing mu_perp moves its numerator by
  // even integers and parity makes it odd, so the least positive odd
  // representative stands for the class.
  cert.wave_mu_t_crossings =
      static_cast<long long>(cert.at_pq.diagonal_crossings.size());
  if (cert.wave_mu_t_crossings !=
          static_cast<long long>(cert.at_complement.diagonal_crossings.size()) ||
      cert.wave_mu_t_crossings % 2 != 0)
    fail(Err::CertificateFailure, "wave crossing counts disagree");
  long long denom = cert.wave_mu_t_crossings / 2;
  if (denom != 1)
    fail(Err::CertificateFailure, "wave does not cross mu_t exactly twice");
  cert.rho = reduce_mod2(Slope(1, denom));
  return cert;
}

SlopeMod2 rho_torus(const TorusKnotInput& in) {
  return certify_torus_knot(in).rho;
}

ArcSystem to_arc_system(const TorusKnotCertificate& cert) {
  MeridianPair base = cert.at_pq.base_meridian;
  Slope s(1, cert.wave_mu_t_crossings / 2);
  Puncture left =
      base == MeridianPair::Minus ? Puncture::MinusLeft : Puncture::PlusLeft;
  Puncture right =
      base == MeridianPair::Minus ? Puncture::MinusRight : Puncture::PlusRight;

  ArcSystem sys;
  sys.classes.push_back({ArcClass{left, left, s}, 1});
  sys.classes.push_back({ArcClass{right, right, s}, 1});
  sys.classes.push_back(
      {ArcClass{Puncture::MinusLeft, pair_partner(Puncture::MinusLeft, s), s},
       1});
  sys.classes.push_back(
      {ArcClass{Puncture::MinusRight, pair_partner(Puncture::MinusRight, s), s},
       1});
  return sys;
}

namespace {

nlohmann::json point_json(const LatticePoint& p) {
  return nlohmann::json::array({p.x, p.y});
}

nlohmann::json frac_point_json(const Vec2& v) {
  return nlohmann::json::array({v.x.frac_str(), v.y.frac_str()});
}

nlohmann::json certificate_json(const Parallelogram& para,
                                const WaveCertificate& c) {
  auto sides = para.sides();
  auto [s0, s1] = sides[static_cast<size_t>(c.base_side)];
  nlohmann::json tri = nlohmann::json::array();
  for (const Vec2& v : c.triangle) tri.push_back(frac_point_json(v));
  return {
      {"corner", point_json(c.corner)},
      {"square", point_json(c.square)},
      {"triangle", tri},
      {"base_side", {{"from", point_json(s0)},
                     {"to", point_json(s1)},
                     {"meridian", meridian_name(c.base_meridian)}}},
      {"diagonal_crossings",
       nlohmann::json::array({frac_point_json(c.diagonal_crossings[0]),
                              frac_point_json(c.diagonal_crossings[1])})},
  };
}

}  // namespace

nlohmann::json trace_json(const TorusKnotCertificate& cert) {
  nlohmann::json corners = nlohmann::json::array();
  for (const LatticePoint& c : cert.para.corners())
    corners.push_back(point_json(c));
  return {
      {"torus_knot", {{"m", cert.input.m}, {"n", cert.input.n}}},
      {"companion", {{"p", cert.p}, {"q", cert.q}}},
      {"parallelogram",
       {{"corners", corners},
        {"area", "1/1"},
        {"scan_bounds",
         {{"x", nlohmann::json::array({cert.scan.x0, cert.scan.x1})},
          {"y", nlohmann::json::array({cert.scan.y0, cert.scan.y1})}}},
        {"interior_lattice_points", cert.scan.interior_points},
        {"minor_diagonal",
         {{"from", point_json(cert.para.minor_diagonal().first)},
          {"to", point_json(cert.para.minor_diagonal().second)}}}}},
      {"certificates",
       nlohmann::json::array({certificate_json(cert.para, cert.at_pq),
                              certificate_json(cert.para, cert.at_complement)})},
      {"wave_mu_t_crossings", cert.wave_mu_t_crossings},
      {"rho", cert.rho.str()},
  };
}

void render_svg(std::ostream& os, const TorusKnotCertificate& cert) {
  const Parallelogram& para = cert.para;
  double scale = 480.0 / std::max<double>(double(para.m), double(para.n));
  SvgWriter svg(-0.5, -0.5, double(para.m) + 0.5, double(para.n) + 0.5, scale);

  for (long long x = 0; x <= para.m; ++x)
    for (long long y = 0; y <= para.n; ++y)
      svg.circle(double(x), double(y), 2, "#cccccc");

  std::string pg;
  for (const LatticePoint& c : para.corners())
    pg += svg.pt(double(c.x), double(c.y));
  svg.polygon(pg, "#bfdbfe", "#1d4ed8", 0.45);

  svg.line(0, 0, double(para.m), double(para.n), "#1d4ed8", 2.0);
  svg.line(double(para.p), double(para.q), double(para.m - para.p),
           double(para.n - para.q), "#1d4ed8", 1.2, "5,4");

  for (const WaveCertificate* c : {&cert.at_pq, &cert.at_complement}) {
    double sx = double(c->square.x), sy = double(c->square.y);
    svg.polygon(svg.pt(sx, sy) + svg.pt(sx + 1, sy) + svg.pt(sx + 1, sy + 1) +
                    svg.pt(sx, sy + 1),
                "none", "#dc2626");
    std::string tp;
    for (const Vec2& v : c->triangle)
      tp += svg.pt(v.x.to_double(), v.y.to_double());
    svg.polygon(tp, "#fca5a5", "#b91c1c", 0.7);
    for (const Vec2& v : c->diagonal_crossings)
      svg.circle(v.x.to_double(), v.y.to_double(), 4, "#16a34a");
    svg.circle(double(c->corner.x), double(c->corner.y), 3.5, "#7c2d12");
  }
  svg.text(double(para.m) / 2 - 0.4, double(para.n) + 0.25,
           "(" + std::to_string(para.m) + "," + std::to_string(para.n) +
               ")  rho = " + cert.rho.str(),
           14, "start");
  svg.write(os);
}

}  // namespace tunnelrho

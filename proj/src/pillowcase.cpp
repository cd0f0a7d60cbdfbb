#include "tunnelrho/pillowcase.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "tunnelrho/error.hpp"
#include "tunnelrho/svg.hpp"

namespace tunnelrho {

namespace {

// Integer point in doubled coordinates: punctures sit at {0,1}^2 and
// the deck lattice is 2Z^2, so every arc endpoint is integral.
struct IPt {
  long long x, y;
};

struct ISeg {
  IPt a, b;
};

long long mod2i(long long v) {
  long long r = v % 2;
  return r < 0 ? r + 2 : r;
}

// The two arcs of the slope-p/q pair in doubled coordinates. The first
// starts at (0,0); the second runs parallel through the two punctures
// the first one misses.
std::array<ISeg, 2> doubled_arcs(const Slope& s) {
  IPt e1{mod2i(s.q), mod2i(s.p)};
  std::array<IPt, 4> fixed = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  IPt s2{-1, -1};
  for (const IPt& f : fixed) {
    if ((f.x == 0 && f.y == 0) || (f.x == e1.x && f.y == e1.y)) continue;
    s2 = f;
    break;  // fixed[] is in lexicographic order
  }
  return {{{{0, 0}, {s.q, s.p}}, {s2, {s2.x + s.q, s2.y + s.p}}}};
}

// Full preimage on the torus: the two arcs plus their involution images.
std::array<ISeg, 4> lift(const Slope& s) {
  auto arcs = doubled_arcs(s);
  auto neg = [](const ISeg& g) {
    return ISeg{{-g.a.x, -g.a.y}, {-g.b.x, -g.b.y}};
  };
  return {{arcs[0], arcs[1], neg(arcs[0]), neg(arcs[1])}};
}

Vec2 mod2_point(const Vec2& v) {
  return Vec2{mod_positive(v.x, 2), mod_positive(v.y, 2)};
}

}  // namespace

RealizedPair realize_pair(const Slope& s) {
  auto arcs = doubled_arcs(s);
  auto half = [](const IPt& p) { return Vec2{Rat(p.x, 2), Rat(p.y, 2)}; };
  RealizedPair rp;
  rp.slope = s;
  rp.arcs = {Seg{half(arcs[0].a), half(arcs[0].b)},
             Seg{half(arcs[1].a), half(arcs[1].b)}};
  return rp;
}

ReferenceCrossings reference_crossings(const RealizedPair& rp) {
  // Quadrupled coordinates: arc endpoints become even integers and the
  // reference circles sit on the odd integers (x = 1/4 + k/2 and
  // y = 1/4 + k/2 both quadruple to odd values).
  auto count_odd_between = [](const Rat& lo4, const Rat& hi4) {
    long long a = (lo4 * Rat(4)).num;  // den == 1 after scaling
    long long b = (hi4 * Rat(4)).num;
    if (a > b) std::swap(a, b);
    long long n = 0;
    for (long long c = a + 1; c < b; ++c)
      if (c % 2 != 0) ++n;
    return n;
  };
  ReferenceCrossings first{}, second{};
  for (int i = 0; i < 2; ++i) {
    const Seg& arc = rp.arcs[i];
    ReferenceCrossings rc;
    rc.mu_t = count_odd_between(arc.a.x, arc.b.x);
    rc.mu_perp = count_odd_between(arc.a.y, arc.b.y);
    (i == 0 ? first : second) = rc;
  }
  if (first.mu_t != second.mu_t || first.mu_perp != second.mu_perp)
    throw std::logic_error("arcs of one pair disagree on reference crossings");
  return first;
}

Parity endpoint_parity(const Slope& s) {
  RealizedPair rp = realize_pair(s);
  auto row = [](const Vec2& v) {
    // 0 for the y=0 row of punctures, 1 for the y=1/2 row
    return (mod_positive(v.y, 1) == Rat(0)) ? 0 : 1;
  };
  int r0 = row(rp.arcs[0].a) ^ row(rp.arcs[0].b);
  int r1 = row(rp.arcs[1].a) ^ row(rp.arcs[1].b);
  if (r0 != r1)
    throw std::logic_error("arcs of one pair disagree on endpoint rows");
  return r0 ? Parity::Odd : Parity::Even;
}

CrossingStats crossing_stats(const RealizedPair& a, const RealizedPair& b,
                             long long window_margin) {
  if (a.slope == b.slope)
    fail(Err::EqualSlopes,
         "crossing count is undefined for parallel configurations of slope " +
             a.slope.str());
  auto la = lift(a.slope);
  auto lb = lift(b.slope);
  long long pad = 2 * window_margin;  // whole lattice units, doubled

  std::vector<Vec2> pts;
  for (const ISeg& sa : la) {
    long long axlo = std::min(sa.a.x, sa.b.x), axhi = std::max(sa.a.x, sa.b.x);
    long long aylo = std::min(sa.a.y, sa.b.y), ayhi = std::max(sa.a.y, sa.b.y);
    Seg ga{Vec2{Rat(sa.a.x), Rat(sa.a.y)}, Vec2{Rat(sa.b.x), Rat(sa.b.y)}};
    for (const ISeg& sb : lb) {
      long long bxlo = std::min(sb.a.x, sb.b.x), bxhi = std::max(sb.a.x, sb.b.x);
      long long bylo = std::min(sb.a.y, sb.b.y), byhi = std::max(sb.a.y, sb.b.y);
      // translates 2(i,j) whose bounding box can touch sa's, widened by pad
      long long ilo = axlo - bxhi - pad, ihi = axhi - bxlo + pad;
      long long jlo = aylo - byhi - pad, jhi = ayhi - bylo + pad;
      for (long long i = ilo; i <= ihi; ++i) {
        if (mod2i(i) != 0) continue;
        for (long long j = jlo; j <= jhi; ++j) {
          if (mod2i(j) != 0) continue;
          Seg gb{Vec2{Rat(sb.a.x + i), Rat(sb.a.y + j)},
                 Vec2{Rat(sb.b.x + i), Rat(sb.b.y + j)}};
          if (auto pt = seg_intersection(ga, gb)) pts.push_back(mod2_point(*pt));
        }
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  CrossingStats st;
  st.torus_total = static_cast<long long>(pts.size());
  std::vector<Vec2> free_pts;
  for (const Vec2& pt : pts) {
    if (pt.x.is_integer() && pt.y.is_integer())
      ++st.at_punctures;
    else
      free_pts.push_back(pt);
  }
  // free points come in involution pairs; the quotient sees one of each
  for (const Vec2& pt : free_pts) {
    Vec2 neg = mod2_point(-pt);
    if (neg == pt || !std::binary_search(pts.begin(), pts.end(), neg))
      throw std::logic_error("free crossing without involution partner");
  }
  st.quotient = static_cast<long long>(free_pts.size()) / 2;
  return st;
}

long long count_crossings(const RealizedPair& a, const RealizedPair& b,
                          long long window_margin) {
  return crossing_stats(a, b, window_margin).quotient;
}

OracleSweepReport oracle_sweep(long long max_p, long long max_q) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Slope> grid;
  for (long long q = 1; q <= max_q; ++q)
    for (long long p = -max_p; p <= max_p; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) grid.push_back(Slope(p, q));
  grid.push_back(slope_infinity());

  OracleSweepReport rep;
  rep.slopes = static_cast<long long>(grid.size());
  std::vector<RealizedPair> realized;
  realized.reserve(grid.size());
  for (const Slope& s : grid) realized.push_back(realize_pair(s));

  for (size_t i = 0; i < grid.size(); ++i) {
    for (size_t j = i + 1; j < grid.size(); ++j) {
      ++rep.pairs_checked;
      long long oracle = count_crossings(realized[i], realized[j]);
      if (oracle != min_intersections(grid[i], grid[j]))
        rep.mismatches.emplace_back(grid[i], grid[j]);
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

namespace {

// Pieces of a straight arc translated back into the fundamental square.
std::vector<Seg> wrap_to_unit_square(const Seg& arc) {
  Vec2 d = arc.b - arc.a;
  std::vector<Rat> ts = {Rat(0), Rat(1)};
  for (int axis = 0; axis < 2; ++axis) {
    Rat a0 = axis ? arc.a.y : arc.a.x;
    Rat dv = axis ? d.y : d.x;
    if (dv == Rat(0)) continue;
    Rat lo = a0, hi = a0 + dv;
    if (hi < lo) std::swap(lo, hi);
    for (long long k = lo.floor(); k <= hi.floor() + 1; ++k) {
      Rat t = (Rat(k) - a0) / dv;
      if (Rat(0) < t && t < Rat(1)) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<Seg> out;
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    Rat tm = (ts[i] + ts[i + 1]) / Rat(2);
    Vec2 mid{arc.a.x + tm * d.x, arc.a.y + tm * d.y};
    Rat ox(-mid.x.floor()), oy(-mid.y.floor());
    Vec2 p0{arc.a.x + ts[i] * d.x + ox, arc.a.y + ts[i] * d.y + oy};
    Vec2 p1{arc.a.x + ts[i + 1] * d.x + ox, arc.a.y + ts[i + 1] * d.y + oy};
    out.push_back(Seg{p0, p1});
  }
  return out;
}

}  // namespace

void render_svg(std::ostream& os, const std::vector<RealizedPair>& pairs) {
  SvgWriter svg(0, 0, 1, 1, 420);
  // fundamental domain
  svg.polygon(svg.pt(0, 0) + svg.pt(1, 0) + svg.pt(1, 1) + svg.pt(0, 1),
              "white", "#444444");
  // reference circles: mu_t vertical, mu_perp horizontal (each appears
  // twice in the square, once per involution representative)
  for (double x : {0.25, 0.75}) svg.line(x, 0, x, 1, "#999999", 1.0, "6,4");
  for (double y : {0.25, 0.75}) svg.line(0, y, 1, y, "#bbbbbb", 1.0, "2,4");
  svg.text(0.25, 1.03, "mu_t", 12);
  svg.text(-0.05, 0.25, "mu_perp", 12);

  const char* colors[] = {"#2563eb", "#dc2626", "#059669", "#7c3aed"};
  for (size_t i = 0; i < pairs.size(); ++i) {
    const char* c = colors[i % 4];
    for (const Seg& arc : pairs[i].arcs)
      for (const Seg& piece : wrap_to_unit_square(arc))
        svg.line(piece.a.x.to_double(), piece.a.y.to_double(),
                 piece.b.x.to_double(), piece.b.y.to_double(), c, 2.2);
    svg.text(1.02, 1.0 - 0.06 * double(i), pairs[i].slope.str(), 13, "start");
  }

  struct P {
    double x, y;
    const char* label;
  };
  for (const P& p : {P{0, 0, "mu_l-"}, P{0.5, 0, "mu_r-"}, P{0, 0.5, "mu_l+"},
                     P{0.5, 0.5, "mu_r+"}}) {
    svg.circle(p.x, p.y, 5, "#111111");
    svg.text(p.x + 0.03, p.y + 0.025, p.label, 12, "start");
  }
  svg.write(os);
}

}  // namespace tunnelrho

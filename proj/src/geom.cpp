#include "tunnelrho/geom.hpp"

namespace tunnelrho {

Rat cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::optional<Vec2> seg_intersection(const Seg& s, const Seg& t) {
  Vec2 r = s.b - s.a;
  Vec2 u = t.b - t.a;
  Rat den = r.x * u.y - r.y * u.x;
  if (den == Rat(0)) return std::nullopt;
  Vec2 w = t.a - s.a;
  Rat tp = (w.x * u.y - w.y * u.x) / den;
  Rat up = (w.x * r.y - w.y * r.x) / den;
  Rat zero(0), one(1);
  if (tp < zero || tp > one || up < zero || up > one) return std::nullopt;
  return Vec2{s.a.x + tp * r.x, s.a.y + tp * r.y};
}

bool on_segment(const Vec2& pt, const Seg& s) {
  if (cross(s.a, s.b, pt) != Rat(0)) return false;
  Rat xlo = s.a.x < s.b.x ? s.a.x : s.b.x;
  Rat xhi = s.a.x < s.b.x ? s.b.x : s.a.x;
  Rat ylo = s.a.y < s.b.y ? s.a.y : s.b.y;
  Rat yhi = s.a.y < s.b.y ? s.b.y : s.a.y;
  return xlo <= pt.x && pt.x <= xhi && ylo <= pt.y && pt.y <= yhi;
}

Rat polygon_area2(const std::vector<Vec2>& poly) {
  Rat s(0);
  for (size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    s = s + (a.x * b.y - a.y * b.x);
  }
  return s < Rat(0) ? -s : s;
}

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, int axis,
                                 const Rat& bound, bool keep_ge) {
  std::vector<Vec2> out;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& cur = poly[i];
    const Vec2& nxt = poly[(i + 1) % n];
    Rat cv = (axis == 0 ? cur.x : cur.y) - bound;
    Rat nv = (axis == 0 ? nxt.x : nxt.y) - bound;
    if (!keep_ge) {
      cv = -cv;
      nv = -nv;
    }
    Rat zero(0);
    if (cv >= zero) out.push_back(cur);
    if ((cv > zero && nv < zero) || (cv < zero && nv > zero)) {
      Rat t = cv / (cv - nv);
      out.push_back(Vec2{cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  // drop duplicate consecutive vertices introduced by clipping
  std::vector<Vec2> ded;
  for (const Vec2& v : out) {
    if (ded.empty() || !(ded.back() == v)) ded.push_back(v);
  }
  while (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
  return ded;
}

std::vector<Vec2> clip_to_square(const std::vector<Vec2>& poly, long long ax,
                                 long long ay) {
  std::vector<Vec2> p = poly;
  p = clip_halfplane(p, 0, Rat(ax), true);
  if (!p.empty()) p = clip_halfplane(p, 0, Rat(ax + 1), false);
  if (!p.empty()) p = clip_halfplane(p, 1, Rat(ay), true);
  if (!p.empty()) p = clip_halfplane(p, 1, Rat(ay + 1), false);
  return p;
}

bool point_in_convex_interior(const Vec2& pt, const std::vector<Vec2>& poly) {
  int sign = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    Rat c = cross(poly[i], poly[(i + 1) % n], pt);
    if (c == Rat(0)) return false;
    int s = c < Rat(0) ? -1 : 1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

}  // namespace tunnelrho

#pragma once

#include <optional>
#include <vector>

#include "tunnelrho/rational.hpp"

namespace tunnelrho {

struct Vec2 {
  Rat x, y;

  Vec2() = default;
  Vec2(Rat x_, Rat y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }

  bool operator==(const Vec2&) const = default;
  auto operator<=>(const Vec2&) const = default;
};

// Signed area of the triangle (o, a, b), doubled.
Rat cross(const Vec2& o, const Vec2& a, const Vec2& b);

struct Seg {
  Vec2 a, b;
};

// Intersection point of two closed segments. Parallel segments yield
// nullopt even when they overlap; callers here never compare parallel
// segments for anything but emptiness.
std::optional<Vec2> seg_intersection(const Seg& s, const Seg& t);

// Point on the closed segment, endpoints included.
bool on_segment(const Vec2& pt, const Seg& s);

// |shoelace|, i.e. twice the polygon area.
Rat polygon_area2(const std::vector<Vec2>& poly);

// Convex clipping against the half plane {v[axis] >= bound} (keep_ge)
// or {v[axis] <= bound}. axis: 0 = x, 1 = y.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, int axis,
                                 const Rat& bound, bool keep_ge);

// Convex polygon clipped to the unit lattice square [ax,ax+1]x[ay,ay+1].
std::vector<Vec2> clip_to_square(const std::vector<Vec2>& poly, long long ax,
                                 long long ay);

// Strict interior test for a convex polygon in either orientation.
bool point_in_convex_interior(const Vec2& pt, const std::vector<Vec2>& poly);

}  // namespace tunnelrho

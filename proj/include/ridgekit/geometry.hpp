#pragma once

// Small planar-geometry value types shared by every module.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ridgekit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double xx, double yy) : x(xx), y(yy) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
  constexpr double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }

  // Left-hand perpendicular (rotate +90 degrees).
  constexpr Vec2 perp() const { return {-y, x}; }

  Vec2 normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("normalized(): zero vector");
    return {x / n, y / n};
  }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline double dist2(Vec2 a, Vec2 b) { return (a - b).norm2(); }

inline double angle_between(Vec2 a, Vec2 b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  double c = a.dot(b) / (na * nb);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

// Angle between the *lines* spanned by a and b (direction-insensitive).
inline double line_angle_between(Vec2 a, Vec2 b) {
  const double t = angle_between(a, b);
  return std::min(t, 3.14159265358979323846 - t);
}

struct Box {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double diameter() const { return (hi - lo).norm(); }
  Vec2 center() const { return (lo + hi) * 0.5; }

  bool contains(Vec2 p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }

  // Box shrunk by a uniform band of width w on every side.
  Box shrunk(double w) const { return {{lo.x + w, lo.y + w}, {hi.x - w, hi.y - w}}; }
};

inline double sq(double v) { return v * v; }

constexpr double kPi = 3.14159265358979323846;

}  // namespace ridgekit

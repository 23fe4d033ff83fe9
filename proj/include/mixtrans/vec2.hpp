#pragma once

#include <cmath>

namespace mixtrans {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double operator[](int i) const { return i == 0 ? x : y; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }

// Rotation sigma(v) = (v2, -v1).  In isothermal coordinates this is
// g-orthogonal to v with the same g-norm, and it commutes with parallel
// transport along geodesics.
inline Vec2 rotate(Vec2 v) { return {v.y, -v.x}; }

}  // namespace mixtrans

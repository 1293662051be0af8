#pragma once

#include <cmath>

namespace pursuit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  constexpr Vec2 xy() const { return {x, y}; }
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
constexpr double squared_norm(const Vec3& a) { return dot(a, a); }
inline double horizontal_norm(const Vec3& a) { return std::hypot(a.x, a.y); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Unit vector along `a`, or the zero vector when `‖a‖ <= eps`.
inline Vec3 normalized_or_zero(const Vec3& a, double eps = 0.0) {
  const double n = norm(a);
  return n > eps ? a / n : Vec3{};
}

/// Scales `a` down so that its norm does not exceed `limit`.
inline Vec3 clamp_norm(const Vec3& a, double limit) {
  const double n = norm(a);
  return n > limit ? a * (limit / n) : a;
}

/// Hamilton quaternion (w, x, y, z), rotating body-frame vectors into the world frame.
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion identity() { return {}; }

  static Quaternion from_yaw(double yaw) {
    return {std::cos(0.5 * yaw), 0.0, 0.0, std::sin(0.5 * yaw)};
  }

  /// exp of the pure quaternion (0, v/2): rotation by |v| about v.
  static Quaternion from_rotation_vector(const Vec3& v) {
    const double angle = pursuit::norm(v);
    if (angle < 1e-12) {
      return Quaternion{1.0, 0.5 * v.x, 0.5 * v.y, 0.5 * v.z}.normalized();
    }
    const double s = std::sin(0.5 * angle) / angle;
    return {std::cos(0.5 * angle), v.x * s, v.y * s, v.z * s};
  }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quaternion normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  Vec3 rotate(const Vec3& v) const {
    const Vec3 u{x, y, z};
    const Vec3 t = 2.0 * cross(u, v);
    return v + w * t + cross(u, t);
  }

  /// Third column of the rotation matrix: the body z-axis in world coordinates.
  Vec3 body_z() const {
    return {2.0 * (x * z + w * y), 2.0 * (y * z - w * x), 1.0 - 2.0 * (x * x + y * y)};
  }
};

}  // namespace pursuit

#pragma once

#include <cmath>

namespace pedflow {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    Vec2& operator*=(double s) {
        x *= s;
        y *= s;
        return *this;
    }
};

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator*(double s, Vec2 v) { return v *= s; }
inline Vec2 operator*(Vec2 v, double s) { return v *= s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double norm2(const Vec2& v) { return dot(v, v); }
inline double norm(const Vec2& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }

// Zero vector when |v| is below eps; callers rely on this to avoid 0/0.
inline Vec2 unit_or_zero(const Vec2& v, double eps = 1e-14) {
    double n = norm(v);
    if (n <= eps) return {};
    return {v.x / n, v.y / n};
}

}  // namespace pedflow

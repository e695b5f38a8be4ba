#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "polysmooth/errors.hpp"

namespace polysmooth {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec3 {
    double x{0}, y{0}, z{0};

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& b) const { return {x + b.x, y + b.y, z + b.z}; }
    constexpr Vec3 operator-(const Vec3& b) const { return {x - b.x, y - b.y, z - b.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& b) { x += b.x; y += b.y; z += b.z; return *this; }
    Vec3& operator-=(const Vec3& b) { x -= b.x; y -= b.y; z -= b.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    constexpr bool operator==(const Vec3& b) const { return x == b.x && y == b.y && z == b.z; }

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double norm2(const Vec3& v) { return dot(v, v); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (n == 0.0) throw GeometryError("cannot normalize zero vector");
    return v / n;
}

/// Angle between two vectors, in [0, pi]. Robust near 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Some unit vector orthogonal to v (deterministic choice).
inline Vec3 any_orthogonal(const Vec3& v) {
    const double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
    Vec3 ref = (ax <= ay && ax <= az) ? Vec3{1, 0, 0} : (ay <= az ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    return normalized(cross(v, ref));
}

/// Rotate x about the unit axis n by angle theta (Rodrigues).
inline Vec3 rotate_about(const Vec3& x, const Vec3& n, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return x * c + cross(n, x) * s + n * (dot(n, x) * (1.0 - c));
}

struct Vec2 {
    double x{0}, y{0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& b) const { return {x + b.x, y + b.y}; }
    constexpr Vec2 operator-(const Vec2& b) const { return {x - b.x, y - b.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
};

inline constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

inline Vec2 normalized(const Vec2& v) {
    const double n = norm(v);
    if (n == 0.0) throw GeometryError("cannot normalize zero vector");
    return v / n;
}

/// 4x4 real matrix, row-major. Used for homogeneous transforms.
struct Mat4 {
    std::array<double, 16> m{};

    static Mat4 identity() {
        Mat4 r;
        r.m = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
        return r;
    }

    double& at(int r, int c) { return m[4 * r + c]; }
    double at(int r, int c) const { return m[4 * r + c]; }

    Mat4 operator*(const Mat4& b) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0;
                for (int k = 0; k < 4; ++k) s += at(i, k) * b.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    double det() const {
        // Laplace expansion over the first row using 3x3 cofactors.
        auto d3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
            return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
                   at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
                   at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
        };
        return at(0, 0) * d3(1, 2, 3, 1, 2, 3) - at(0, 1) * d3(1, 2, 3, 0, 2, 3) +
               at(0, 2) * d3(1, 2, 3, 0, 1, 3) - at(0, 3) * d3(1, 2, 3, 0, 1, 2);
    }

    Mat4 inverse() const {
        // Gauss-Jordan with partial pivoting.
        std::array<double, 32> a{};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) a[8 * i + j] = at(i, j);
            a[8 * i + 4 + i] = 1.0;
        }
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs(a[8 * r + col]) > std::abs(a[8 * piv + col])) piv = r;
            if (std::abs(a[8 * piv + col]) < 1e-300) throw GeometryError("singular 4x4 matrix");
            if (piv != col)
                for (int j = 0; j < 8; ++j) std::swap(a[8 * piv + j], a[8 * col + j]);
            const double d = a[8 * col + col];
            for (int j = 0; j < 8; ++j) a[8 * col + j] /= d;
            for (int r = 0; r < 4; ++r) {
                if (r == col) continue;
                const double f = a[8 * r + col];
                if (f == 0.0) continue;
                for (int j = 0; j < 8; ++j) a[8 * r + j] -= f * a[8 * col + j];
            }
        }
        Mat4 inv;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) inv.at(i, j) = a[8 * i + 4 + j];
        return inv;
    }

    Mat4 transposed() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
        return r;
    }
};

/// Format a double with full round-trip precision, matching the file formats.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace polysmooth

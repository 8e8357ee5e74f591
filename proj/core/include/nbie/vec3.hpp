#pragma once

#include <cmath>

namespace nbie {

/// Plain 3-vector used for points, normals and gradients.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
    constexpr Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const { return *this / norm(); }

    static constexpr Vec3 axis(int i) {
        return {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0};
    }
};

constexpr Vec3 operator*(double a, const Vec3& v) { return v * a; }

/// 3x3 matrix stored column-major; enough for the orthogonal mixing matrix.
struct Mat3 {
    Vec3 col[3];

    constexpr Vec3 apply(const Vec3& v) const {
        return col[0] * v.x + col[1] * v.y + col[2] * v.z;
    }
    /// Multiply by the transpose, i.e. y -> M^T y.
    constexpr Vec3 apply_transpose(const Vec3& v) const {
        return {col[0].dot(v), col[1].dot(v), col[2].dot(v)};
    }
    double det() const {
        const Vec3 c = {col[1].y * col[2].z - col[1].z * col[2].y,
                        col[1].z * col[2].x - col[1].x * col[2].z,
                        col[1].x * col[2].y - col[1].y * col[2].x};
        return col[0].dot(c);
    }
};

} // namespace nbie

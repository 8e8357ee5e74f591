#include "nbie/analytic_cases.hpp"

#include <cmath>

namespace nbie {

Mat3 mixing_matrix() {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    Mat3 m;
    m.col[0] = Vec3{1.0, 1.0, 1.0} * (s2 / s6);
    m.col[1] = Vec3{0.0, 1.0, -1.0} * (s3 / s6);
    m.col[2] = Vec3{-2.0, 1.0, 1.0} * (1.0 / s6);
    return m;
}

double spherical_harmonic_f(const Vec3& x) {
    const Vec3 y = mixing_matrix().apply(x);
    return 1.75 * (y.x - 2.0 * y.y) * (7.5 * y.z * y.z - 1.5);
}

namespace {

// Homogeneous form r^3 f(x/r) = 1.75 (y1 - 2 y2)(7.5 y3^2 - 1.5 |y|^2),
// a harmonic cubic; valid at x = 0 where the spherical form is singular.
double solid_harmonic(const Vec3& x) {
    const Vec3 y = mixing_matrix().apply(x);
    return 1.75 * (y.x - 2.0 * y.y) * (7.5 * y.z * y.z - 1.5 * y.norm2());
}

Vec3 solid_harmonic_grad(const Vec3& x) {
    const Mat3 m = mixing_matrix();
    const Vec3 y = m.apply(x);
    const double lin = y.x - 2.0 * y.y;
    const double quad = 7.5 * y.z * y.z - 1.5 * y.norm2();
    const Vec3 grad_y{quad - 3.0 * y.x * lin, -2.0 * quad - 3.0 * y.y * lin, 12.0 * y.z * lin};
    return m.apply_transpose(grad_y * 1.75);
}

} // namespace

double spherical_harmonic_u(const Vec3& x) {
    const double r2 = x.norm2();
    if (r2 <= 1.0) return -solid_harmonic(x) / 7.0;
    const double r = std::sqrt(r2);
    return -spherical_harmonic_f(x / r) / (7.0 * r2 * r2);
}

Vec3 spherical_harmonic_grad_u(const Vec3& x) {
    return solid_harmonic_grad(x) * (-1.0 / 7.0);
}

double exp_harmonic_u(const Vec3& x) {
    const Vec3 y = mixing_matrix().apply(x);
    return std::exp(y.x + 2.0 * y.y) * std::cos(std::sqrt(5.0) * y.z);
}

Vec3 exp_harmonic_grad(const Vec3& x) {
    const Mat3 m = mixing_matrix();
    const Vec3 y = m.apply(x);
    const double s5 = std::sqrt(5.0);
    const double e = std::exp(y.x + 2.0 * y.y);
    const double c = std::cos(s5 * y.z), s = std::sin(s5 * y.z);
    return m.apply_transpose(Vec3{e * c, 2.0 * e * c, -s5 * e * s});
}

double TestCase::neumann_data(const Vec3& x, const Vec3& n) const {
    if (kind == TestKind::SphereHarmonic) return -(3.0 / 7.0) * spherical_harmonic_f(x);
    return exact_grad_u(x).dot(n);
}

TestCase make_test_case(TestKind kind) {
    TestCase t;
    t.kind = kind;
    if (kind == TestKind::SphereHarmonic) {
        t.exact_u = [](const Vec3& x) { return spherical_harmonic_u(x); };
        t.exact_grad_u = [](const Vec3& x) { return spherical_harmonic_grad_u(x); };
        t.exact_f = [](const Vec3& x) { return spherical_harmonic_f(x); };
        t.has_exact_f = true;
        t.anchor_value = 0.0; // cubic harmonic vanishes at the origin
    } else {
        t.exact_u = [](const Vec3& x) { return exp_harmonic_u(x); };
        t.exact_grad_u = [](const Vec3& x) { return exp_harmonic_grad(x); };
        t.has_exact_f = false;
        t.anchor_value = 1.0; // exp(0) cos(0)
    }
    return t;
}

SurfaceField boundary_data(const TestCase& test, const QuadratureRule& rule) {
    SurfaceField g(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        g[i] = test.neumann_data(rule.points[i].position, rule.points[i].normal);
    return g;
}

SurfaceField sample(const std::function<double(const Vec3&)>& fn, const QuadratureRule& rule) {
    SurfaceField v(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) v[i] = fn(rule.points[i].position);
    return v;
}

} // namespace nbie

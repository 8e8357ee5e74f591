#pragma once

#include <functional>

#include "nbie/layer_potentials.hpp"
#include "nbie/quadrature.hpp"
#include "nbie/vec3.hpp"

namespace nbie {

/// Orthogonal matrix used to rotate the test solutions off the coordinate
/// axes; columns (1,1,1)/sqrt(3), (0,1,-1)/sqrt(2), (-2,1,1)/sqrt(6).
Mat3 mixing_matrix();

/// Degree-3 spherical harmonic density, f(x) = 1.75 (y1 - 2 y2)(7.5 y3^2 - 1.5)
/// with y = M x.
double spherical_harmonic_f(const Vec3& x);

/// Harmonic potential whose single layer density on the unit sphere is
/// spherical_harmonic_f: u = -r^3 f(x/r)/7 inside, -r^{-4} f(x/r)/7 outside.
double spherical_harmonic_u(const Vec3& x);

/// Gradient of the interior branch of spherical_harmonic_u.
Vec3 spherical_harmonic_grad_u(const Vec3& x);

/// Entire harmonic u(x) = exp(y1 + 2 y2) cos(sqrt(5) y3), y = M x.
double exp_harmonic_u(const Vec3& x);
Vec3 exp_harmonic_grad(const Vec3& x);

enum class TestKind { SphereHarmonic, ExpHarmonic };

/// Exact solution bundle for one convergence experiment.
struct TestCase {
    TestKind kind;
    std::function<double(const Vec3&)> exact_u;
    std::function<Vec3(const Vec3&)> exact_grad_u;
    std::function<double(const Vec3&)> exact_f; // null unless known
    bool has_exact_f = false;
    Vec3 anchor{0.0, 0.0, 0.0};
    double anchor_value = 0.0; // exact u at the anchor

    /// Neumann data at a surface point with outward normal n.
    double neumann_data(const Vec3& x, const Vec3& n) const;
};

TestCase make_test_case(TestKind kind);

/// Neumann data g at every point of the rule.
SurfaceField boundary_data(const TestCase& test, const QuadratureRule& rule);

/// A function sampled at every point of the rule.
SurfaceField sample(const std::function<double(const Vec3&)>& fn, const QuadratureRule& rule);

} // namespace nbie

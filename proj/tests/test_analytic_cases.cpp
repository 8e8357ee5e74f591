#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nbie/analytic_cases.hpp"

using namespace nbie;

namespace {

constexpr double kTheta = 70.0 * 3.14159265358979323846 / 180.0;

Vec3 random_unit(std::mt19937& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec3 v{n(rng), n(rng), n(rng)};
    return v / v.norm();
}

// 6-point Laplacian stencil
double laplacian(const std::function<double(const Vec3&)>& u, const Vec3& p, double step) {
    double s = -6.0 * u(p);
    s += u({p.x + step, p.y, p.z}) + u({p.x - step, p.y, p.z});
    s += u({p.x, p.y + step, p.z}) + u({p.x, p.y - step, p.z});
    s += u({p.x, p.y, p.z + step}) + u({p.x, p.y, p.z - step});
    return s / (step * step);
}

} // namespace

TEST_CASE("mixing matrix is orthogonal with the pinned first column") {
    const Mat3 m = mixing_matrix();
    for (int i = 0; i < 3; ++i) {
        CHECK(m.col[i].norm() == doctest::Approx(1.0).epsilon(1e-15));
        for (int j = i + 1; j < 3; ++j)
            CHECK(std::abs(m.col[i].dot(m.col[j])) <= 1e-15);
    }
    const Vec3 y = m.apply({1, 0, 0});
    CHECK(y.x == doctest::Approx(0.5773502691896258).epsilon(1e-14));
    CHECK(y.y == doctest::Approx(0.5773502691896258).epsilon(1e-14));
    CHECK(y.z == doctest::Approx(0.5773502691896258).epsilon(1e-14));
    CHECK(std::abs(std::abs(m.det()) - 1.0) <= 1e-14);
}

TEST_CASE("spherical harmonic density at pinned points") {
    // y = (1,1,1)/sqrt(3): f = 1.75 (-1/sqrt(3)) (2.5 - 1.5)
    CHECK(spherical_harmonic_f({1, 0, 0}) ==
          doctest::Approx(-1.75 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(spherical_harmonic_f({1, 0, 0}) == doctest::Approx(-1.0103629710818451).epsilon(1e-12));

    // y1 = 2 y2 makes the first factor vanish: x = M^T (2,1,0) has y=(2,1,0)
    const Mat3 m = mixing_matrix();
    const Vec3 x = m.apply_transpose({2, 1, 0});
    CHECK(std::abs(spherical_harmonic_f(x)) <= 1e-14);
}

TEST_CASE("spherical harmonic potential") {
    CHECK(spherical_harmonic_u({0, 0, 0}) == 0.0);

    std::mt19937 rng(4);
    for (int i = 0; i < 100; ++i) {
        const Vec3 x = random_unit(rng);
        // continuity at r = 1: both branches give -f/7
        const double inner = spherical_harmonic_u(x * (1.0 - 1e-12));
        const double outer = spherical_harmonic_u(x * (1.0 + 1e-12));
        const double expected = -spherical_harmonic_f(x) / 7.0;
        CHECK(inner == doctest::Approx(expected).epsilon(1e-9));
        CHECK(outer == doctest::Approx(expected).epsilon(1e-9));

        // g = grad u . n with the interior gradient
        CHECK(spherical_harmonic_grad_u(x).dot(x) ==
              doctest::Approx(-(3.0 / 7.0) * spherical_harmonic_f(x)).epsilon(1e-12));
    }
}

TEST_CASE("the radial derivative jumps by the density across the sphere") {
    std::mt19937 rng(5);
    const double eps = 1e-6;
    for (int i = 0; i < 20; ++i) {
        const Vec3 x = random_unit(rng);
        const double din =
            (spherical_harmonic_u(x) - spherical_harmonic_u(x * (1.0 - eps))) / eps;
        const double dout =
            (spherical_harmonic_u(x * (1.0 + eps)) - spherical_harmonic_u(x)) / eps;
        CHECK(dout - din == doctest::Approx(spherical_harmonic_f(x)).epsilon(1e-4));
    }
}

TEST_CASE("exp-harmonic potential and gradient") {
    CHECK(exp_harmonic_u({0, 0, 0}) == 1.0);

    std::mt19937 rng(6);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    const double step = 1e-6;
    for (int i = 0; i < 20; ++i) {
        const Vec3 p{u(rng), u(rng), u(rng)};
        const Vec3 g = exp_harmonic_grad(p);
        const Vec3 fd{
            (exp_harmonic_u({p.x + step, p.y, p.z}) - exp_harmonic_u({p.x - step, p.y, p.z})) /
                (2 * step),
            (exp_harmonic_u({p.x, p.y + step, p.z}) - exp_harmonic_u({p.x, p.y - step, p.z})) /
                (2 * step),
            (exp_harmonic_u({p.x, p.y, p.z + step}) - exp_harmonic_u({p.x, p.y, p.z - step})) /
                (2 * step)};
        CHECK((g - fd).norm() <= 1e-7 * g.norm());
    }
}

TEST_CASE("both exact solutions are numerically harmonic") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    for (const TestKind kind : {TestKind::SphereHarmonic, TestKind::ExpHarmonic}) {
        const TestCase t = make_test_case(kind);
        for (int i = 0; i < 50; ++i) {
            const Vec3 p{u(rng), u(rng), u(rng)};
            const double lap = laplacian(t.exact_u, p, 1e-3);
            CHECK(std::abs(lap) <= 1e-5 * (1.0 + std::abs(t.exact_u(p))));
        }
    }
}

TEST_CASE("test case bundles") {
    const TestCase sh = make_test_case(TestKind::SphereHarmonic);
    CHECK(sh.has_exact_f);
    CHECK(sh.anchor_value == 0.0);
    CHECK(sh.anchor.norm() == 0.0);

    const TestCase eh = make_test_case(TestKind::ExpHarmonic);
    CHECK_FALSE(eh.has_exact_f);
    CHECK(eh.anchor_value == 1.0);
}

TEST_CASE("boundary data is discretely compatible") {
    const QuadratureRule rule = generate_points(Surface::ellipsoid(), 1.0 / 16, kTheta);
    const TestCase t = make_test_case(TestKind::ExpHarmonic);
    const SurfaceField g = boundary_data(t, rule);
    // integral of a normal derivative of a harmonic function over the closed
    // surface vanishes up to the smooth-data quadrature error
    CHECK(std::abs(integrate(rule, g)) <= 2e-2);

    const QuadratureRule sph = generate_points(Surface::unit_sphere(), 1.0 / 16, kTheta);
    const TestCase t2 = make_test_case(TestKind::SphereHarmonic);
    CHECK(std::abs(integrate(sph, boundary_data(t2, sph))) <= 1e-8);
}

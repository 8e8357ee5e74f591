#include "nbie/surface.hpp"

#include <cmath>
#include <stdexcept>

namespace nbie {

namespace {

constexpr double kMoleculeRadius = 0.5;
constexpr double kMoleculeLevel = 0.6;

std::vector<Vec3> make_molecule_centers() {
    const double s3 = std::sqrt(3.0);
    const double s6 = std::sqrt(6.0);
    return {
        {s3 / 3.0, 0.0, -s6 / 12.0},
        {-s3 / 6.0, 0.5, -s6 / 12.0},
        {-s3 / 6.0, -0.5, -s6 / 12.0},
        {0.0, 0.0, s6 / 4.0},
    };
}

double molecule_level(const Vec3& p) {
    const double inv_r2 = 1.0 / (kMoleculeRadius * kMoleculeRadius);
    double sum = 0.0;
    for (const Vec3& c : molecule_centers())
        sum += std::exp(-(p - c).norm2() * inv_r2);
    // Written as c - sum so that the inside (large sum) is negative.
    return kMoleculeLevel - sum;
}

Vec3 molecule_gradient(const Vec3& p) {
    const double inv_r2 = 1.0 / (kMoleculeRadius * kMoleculeRadius);
    Vec3 g{};
    for (const Vec3& c : molecule_centers()) {
        const Vec3 d = p - c;
        const double e = std::exp(-d.norm2() * inv_r2);
        g = g + d * (2.0 * inv_r2 * e);
    }
    return g;
}

} // namespace

const std::vector<Vec3>& molecule_centers() {
    static const std::vector<Vec3> centers = make_molecule_centers();
    return centers;
}

Surface Surface::unit_sphere() {
    return Surface(SurfaceKind::UnitSphere, Box{{-1.2, -1.2, -1.2}, {1.2, 1.2, 1.2}});
}

Surface Surface::ellipsoid() {
    return Surface(SurfaceKind::Ellipsoid, Box{{-1.2, -0.7, -0.7}, {1.2, 0.7, 0.7}});
}

Surface Surface::molecule() {
    return Surface(SurfaceKind::Molecule, Box{{-1.5, -1.5, -1.5}, {1.5, 1.5, 1.5}});
}

Surface Surface::custom(std::function<double(const Vec3&)> level,
                        std::function<Vec3(const Vec3&)> gradient, Box bounding_box) {
    Surface s(SurfaceKind::Custom, bounding_box);
    s.custom_level_ = std::move(level);
    s.custom_gradient_ = std::move(gradient);
    return s;
}

double Surface::level(const Vec3& p) const {
    switch (kind_) {
        case SurfaceKind::UnitSphere:
            return p.norm2() - 1.0;
        case SurfaceKind::Ellipsoid:
            return p.x * p.x + 4.0 * p.y * p.y + 4.0 * p.z * p.z - 1.0;
        case SurfaceKind::Molecule:
            return molecule_level(p);
        case SurfaceKind::Custom:
            return custom_level_(p);
    }
    return 0.0;
}

Vec3 Surface::gradient(const Vec3& p) const {
    switch (kind_) {
        case SurfaceKind::UnitSphere:
            return p * 2.0;
        case SurfaceKind::Ellipsoid:
            return {2.0 * p.x, 8.0 * p.y, 8.0 * p.z};
        case SurfaceKind::Molecule:
            return molecule_gradient(p);
        case SurfaceKind::Custom:
            return custom_gradient_(p);
    }
    return {};
}

Vec3 Surface::unit_normal(const Vec3& p) const {
    if (std::abs(level(p)) >= 1e-10)
        throw std::domain_error("unit_normal: point is not on the surface");
    const Vec3 g = gradient(p);
    const double n = g.norm();
    if (n < 1e-12)
        throw std::domain_error("unit_normal: degenerate surface point (|gradient| < 1e-12)");
    return g / n;
}

} // namespace nbie

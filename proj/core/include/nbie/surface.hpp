#pragma once

#include <functional>
#include <vector>

#include "nbie/vec3.hpp"

namespace nbie {

enum class SurfaceKind { UnitSphere, Ellipsoid, Molecule, Custom };

/// Axis-aligned box.
struct Box {
    Vec3 lo;
    Vec3 hi;
};

/// A smooth closed surface given as the zero set of a level function phi,
/// with the convention phi < 0 inside and phi > 0 outside, so that
/// grad(phi)/|grad(phi)| is the outward unit normal.
class Surface {
public:
    static Surface unit_sphere();
    /// x1^2 + 4 x2^2 + 4 x3^2 = 1.
    static Surface ellipsoid();
    /// Four overlapping Gaussian atoms, sum_k exp(-|x-x_k|^2/r^2) = c,
    /// centers at the vertices of a regular tetrahedron, r = 0.5, c = 0.6.
    static Surface molecule();
    /// User-supplied level set; the gradient callback must be analytic.
    static Surface custom(std::function<double(const Vec3&)> level,
                          std::function<Vec3(const Vec3&)> gradient, Box bounding_box);

    double level(const Vec3& p) const;
    Vec3 gradient(const Vec3& p) const;

    /// Outward unit normal at an on-surface point (|level(p)| < 1e-10).
    /// Throws std::domain_error off the surface or where |gradient| < 1e-12.
    Vec3 unit_normal(const Vec3& p) const;

    const Box& bounding_box() const { return box_; }
    SurfaceKind kind() const { return kind_; }

private:
    Surface(SurfaceKind kind, Box box) : kind_(kind), box_(box) {}

    SurfaceKind kind_;
    Box box_;
    std::function<double(const Vec3&)> custom_level_;
    std::function<Vec3(const Vec3&)> custom_gradient_;
};

/// Atom centers of the molecular surface (regular tetrahedron, centroid 0).
const std::vector<Vec3>& molecule_centers();

} // namespace nbie

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nbie/surface.hpp"
#include "nbie/vec3.hpp"

namespace nbie {

/// One on-surface node of the projection quadrature. `axis` is the chart
/// (1, 2 or 3) whose coordinate planes carry the grid; (j1, j2) index the
/// grid line in the remaining two coordinates, in increasing axis order.
struct QuadraturePoint {
    Vec3 position;
    Vec3 normal;
    double weight = 0.0;
    int axis = 0;
    int j1 = 0;
    int j2 = 0;
};

/// Point set for one (surface, h, theta) triple; ordered by
/// (axis, j1, j2, root), which fixes every summation order downstream.
struct QuadratureRule {
    Surface surface;
    double h = 0.0;
    double theta = 0.0; // radians
    std::vector<QuadraturePoint> points;
    double total_weight = 0.0;

    std::size_t size() const { return points.size(); }
};

/// C-infinity bump: exp(r^2/(r^2-1)) inside |r| < 1, zero outside.
double bump(double r);

/// Partition-of-unity weight psi_i(n) for axis i in {1,2,3}; theta in radians.
/// psi_i = 0 whenever |n.e_i| <= cos(theta) and the three weights sum to 1.
/// Throws std::domain_error if every chart is inactive (theta too small).
double partition_weight(const Vec3& n, int axis, double theta);

/// All transversal roots of the level function along the grid line with the
/// two off-axis coordinates fixed, scanned at `scan_step` and refined by
/// bisection plus Newton polish; sorted ascending.
std::vector<double> find_roots_along_line(const Surface& surface, int axis, double fixed1,
                                          double fixed2, double scan_step);

/// Builds the quadrature rule: for each axis, roots along every grid line of
/// spacing h inside the bounding box, kept when |n.e_axis| >= cos(theta),
/// with weight psi_i(n) h^2 / |n.e_axis|.
QuadratureRule generate_points(const Surface& surface, double h, double theta);

/// Deterministic sum of values[k] * weight[k] over the rule.
double integrate(const QuadratureRule& rule, std::span<const double> values);

/// CSV dump with columns axis,j1,j2,x,y,z,nx,ny,nz,weight.
std::string dump_points_csv(const QuadratureRule& rule);

} // namespace nbie

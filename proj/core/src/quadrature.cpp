#include "nbie/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nbie {

namespace {

constexpr double kMinTheta = 54.8 * 3.14159265358979323846 / 180.0;
constexpr double kMaxTheta = 90.0 * 3.14159265358979323846 / 180.0;

// Chart window as a function of the angle between n and the axis: 1 at the
// pole, vanishing to all orders at angle theta.
double chart_cutoff(double s, double cos_theta, double theta) {
    if (s <= cos_theta) return 0.0;
    return bump(std::acos(std::min(s, 1.0)) / theta);
}

Vec3 line_point(int axis, double fixed1, double fixed2, double t) {
    // fixed1/fixed2 fill the two non-axis coordinates in increasing order
    switch (axis) {
        case 1: return {t, fixed1, fixed2};
        case 2: return {fixed1, t, fixed2};
        default: return {fixed1, fixed2, t};
    }
}

double refine_root(const Surface& surface, int axis, double fixed1, double fixed2, double lo,
                   double hi) {
    double flo = surface.level(line_point(axis, fixed1, fixed2, lo));
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fmid = surface.level(line_point(axis, fixed1, fixed2, mid));
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    double t = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
        const Vec3 p = line_point(axis, fixed1, fixed2, t);
        const double f = surface.level(p);
        if (f == 0.0) break;
        const double df = surface.gradient(p)[axis - 1];
        if (df == 0.0) break;
        const double step = f / df;
        const double next = t - step;
        if (next < lo || next > hi || next == t) break;
        t = next;
    }
    return t;
}

} // namespace

double bump(double r) {
    const double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    return std::exp(r2 / (r2 - 1.0));
}

double partition_weight(const Vec3& n, int axis, double theta) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("partition_weight: axis must be 1..3");
    const double c = std::cos(theta);
    const double chi1 = chart_cutoff(std::abs(n.x), c, theta);
    const double chi2 = chart_cutoff(std::abs(n.y), c, theta);
    const double chi3 = chart_cutoff(std::abs(n.z), c, theta);
    const double denom = chi1 + chi2 + chi3;
    if (denom == 0.0)
        throw std::domain_error("partition_weight: no active chart; theta below ~54.8 deg");
    const double chi = axis == 1 ? chi1 : (axis == 2 ? chi2 : chi3);
    return chi / denom;
}

std::vector<double> find_roots_along_line(const Surface& surface, int axis, double fixed1,
                                          double fixed2, double scan_step) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("find_roots_along_line: bad axis");
    if (scan_step <= 0.0) throw std::invalid_argument("find_roots_along_line: bad scan step");
    const Box& box = surface.bounding_box();
    const double lo = (axis == 1) ? box.lo.x : (axis == 2) ? box.lo.y : box.lo.z;
    const double hi = (axis == 1) ? box.hi.x : (axis == 2) ? box.hi.y : box.hi.z;

    std::vector<double> roots;
    double t_prev = lo;
    double f_prev = surface.level(line_point(axis, fixed1, fixed2, t_prev));
    if (f_prev == 0.0) roots.push_back(t_prev);
    while (t_prev < hi) {
        double t = t_prev + scan_step;
        if (t > hi) t = hi;
        const double f = surface.level(line_point(axis, fixed1, fixed2, t));
        if (f == 0.0) {
            roots.push_back(t);
        } else if ((f_prev < 0.0) != (f < 0.0) && f_prev != 0.0) {
            roots.push_back(refine_root(surface, axis, fixed1, fixed2, t_prev, t));
        }
        t_prev = t;
        f_prev = f;
    }
    return roots;
}

QuadratureRule generate_points(const Surface& surface, double h, double theta) {
    if (h <= 0.0) throw std::invalid_argument("generate_points: h must be > 0");
    if (theta <= kMinTheta || theta >= kMaxTheta)
        throw std::invalid_argument("generate_points: theta must be in (54.8, 90) degrees");

    const Box& box = surface.bounding_box();
    const double cos_theta = std::cos(theta);
    QuadratureRule rule{surface, h, theta, {}, 0.0};

    for (int axis = 1; axis <= 3; ++axis) {
        const int u = (axis == 1) ? 1 : 0;           // first free coordinate
        const int v = (axis == 3) ? 1 : 2;           // second free coordinate
        const double ulo = box.lo[u], uhi = box.hi[u];
        const double vlo = box.lo[v], vhi = box.hi[v];
        const long j1_lo = static_cast<long>(std::ceil(ulo / h));
        const long j1_hi = static_cast<long>(std::floor(uhi / h));
        const long j2_lo = static_cast<long>(std::ceil(vlo / h));
        const long j2_hi = static_cast<long>(std::floor(vhi / h));

        for (long j1 = j1_lo; j1 <= j1_hi; ++j1) {
            for (long j2 = j2_lo; j2 <= j2_hi; ++j2) {
                const double f1 = j1 * h;
                const double f2 = j2 * h;
                const auto roots = find_roots_along_line(surface, axis, f1, f2, 0.5 * h);
                for (const double t : roots) {
                    const Vec3 p = line_point(axis, f1, f2, t);
                    if (std::abs(surface.level(p)) >= 1e-12)
                        throw std::runtime_error("generate_points: root refinement failed");
                    const Vec3 g = surface.gradient(p);
                    const double gn = g.norm();
                    if (gn < 1e-12)
                        throw std::runtime_error("generate_points: degenerate normal");
                    const Vec3 n = g / gn;
                    const double s = std::abs(n[axis - 1]);
                    if (s < cos_theta) continue;
                    const double w = partition_weight(n, axis, theta) * h * h / s;
                    rule.points.push_back({p, n, w, axis, static_cast<int>(j1),
                                           static_cast<int>(j2)});
                }
            }
        }
    }

    std::vector<double> ones(rule.points.size(), 1.0);
    rule.total_weight = integrate(rule, ones);
    return rule;
}

double integrate(const QuadratureRule& rule, std::span<const double> values) {
    if (values.size() != rule.points.size())
        throw std::invalid_argument("integrate: field length does not match rule size");
    const std::size_t n = values.size();
    constexpr std::size_t kChunk = 4096;
    double total = 0.0;
    for (std::size_t c = 0; c < n; c += kChunk) {
        const std::size_t end = std::min(n, c + kChunk);
        double partial = 0.0;
        for (std::size_t i = c; i < end; ++i) partial += values[i] * rule.points[i].weight;
        total += partial;
    }
    return total;
}

std::string dump_points_csv(const QuadratureRule& rule) {
    std::string out = "axis,j1,j2,x,y,z,nx,ny,nz,weight\n";
    char buf[256];
    for (const QuadraturePoint& q : rule.points) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      q.axis, q.j1, q.j2, q.position.x, q.position.y, q.position.z, q.normal.x,
                      q.normal.y, q.normal.z, q.weight);
        out += buf;
    }
    return out;
}

} // namespace nbie

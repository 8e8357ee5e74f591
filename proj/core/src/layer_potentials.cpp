#include "nbie/layer_potentials.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nbie/parallel.hpp"

namespace nbie {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInv4Pi = 1.0 / (4.0 * kPi);
constexpr std::size_t kBlock = 1024;

// Contiguous copies of the rule data; the pair loops below stream these.
struct Soa {
    std::vector<double> px, py, pz, nx, ny, nz, w;

    explicit Soa(const QuadratureRule& rule) {
        const std::size_t n = rule.size();
        px.resize(n); py.resize(n); pz.resize(n);
        nx.resize(n); ny.resize(n); nz.resize(n);
        w.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const QuadraturePoint& q = rule.points[i];
            px[i] = q.position.x; py[i] = q.position.y; pz[i] = q.position.z;
            nx[i] = q.normal.x;   ny[i] = q.normal.y;   nz[i] = q.normal.z;
            w[i] = q.weight;
        }
    }

    std::size_t size() const { return px.size(); }
};

double shape(KernelMode mode, double rho) {
    return mode == KernelMode::ThirdOrder ? shape_third(rho) : shape_fifth(rho);
}

// Elementwise pair kernels for one source block; restrict-qualified so the
// compiler can vectorize the sqrt/div chains.
void adl_block(std::size_t m, const double* __restrict px, const double* __restrict py,
               const double* __restrict pz, const double* __restrict nx,
               const double* __restrict ny, const double* __restrict nz,
               const double* __restrict w, const double* __restrict fv, double yx, double yy,
               double yz, double nyx, double nyy, double nyz, double fy, double* __restrict kb,
               double* __restrict r2b) {
    for (std::size_t j = 0; j < m; ++j) {
        const double dx = yx - px[j];
        const double dy = yy - py[j];
        const double dz = yz - pz[j];
        const double r2 = dx * dx + dy * dy + dz * dz;
        const double a = nyx * dx + nyy * dy + nyz * dz;
        const double b = nx[j] * dx + ny[j] * dy + nz[j] * dz;
        const double num = fv[j] * a + fy * b;
        kb[j] = num * w[j] / (r2 * std::sqrt(r2));
        r2b[j] = r2;
    }
}

void sl_block(std::size_t m, const double* __restrict px, const double* __restrict py,
              const double* __restrict pz, const double* __restrict w,
              const double* __restrict fv, double yx, double yy, double yz,
              double* __restrict kb, double* __restrict r2b) {
    for (std::size_t j = 0; j < m; ++j) {
        const double dx = yx - px[j];
        const double dy = yy - py[j];
        const double dz = yz - pz[j];
        const double r2 = dx * dx + dy * dy + dz * dz;
        kb[j] = fv[j] * w[j] / std::sqrt(r2);
        r2b[j] = r2;
    }
}

// Reduced ADL sum over sources [begin, end) for one target, without the
// 1/(4 pi) factor. Far pairs (rho >= 6) use s = 1 directly; within each
// block a second sweep adds the (s - 1) correction for the few near pairs.
double adl_range_sum(const Soa& s, const SurfaceField& f, std::size_t begin,
                     std::size_t end, const Vec3& y, const Vec3& n_y, double fy, KernelMode mode,
                     double delta) {
    const double near_r2 = (mode == KernelMode::Unregularized)
                               ? 0.0
                               : 36.0 * delta * delta; // s == 1 beyond rho = 6
    double r2buf[kBlock];
    double kbuf[kBlock];
    double acc = 0.0;
    for (std::size_t c0 = begin; c0 < end; c0 += kBlock) {
        const std::size_t c1 = std::min(end, c0 + kBlock);
        adl_block(c1 - c0, s.px.data() + c0, s.py.data() + c0, s.pz.data() + c0,
                  s.nx.data() + c0, s.ny.data() + c0, s.nz.data() + c0, s.w.data() + c0,
                  f.data() + c0, y.x, y.y, y.z, n_y.x, n_y.y, n_y.z, fy, kbuf, r2buf);
        double part = 0.0;
        for (std::size_t j = c0; j < c1; ++j) part += kbuf[j - c0];
        if (mode != KernelMode::Unregularized) {
            for (std::size_t j = c0; j < c1; ++j) {
                const double r2 = r2buf[j - c0];
                if (r2 >= near_r2) continue;
                const double dx = y.x - s.px[j];
                const double dy = y.y - s.py[j];
                const double dz = y.z - s.pz[j];
                const double a = n_y.x * dx + n_y.y * dy + n_y.z * dz;
                const double b = s.nx[j] * dx + s.ny[j] * dy + s.nz[j] * dz;
                const double num = f[j] * a + fy * b;
                const double r = std::sqrt(r2);
                part += (shape(mode, r / delta) - 1.0) * num * s.w[j] / (r2 * r);
            }
        }
        acc += part;
    }
    return acc;
}

double adl_value(const Soa& s, const SurfaceField& f, std::size_t target, KernelMode mode,
                 double delta) {
    const Vec3 y{s.px[target], s.py[target], s.pz[target]};
    const Vec3 n_y{s.nx[target], s.ny[target], s.nz[target]};
    const double fy = f[target];
    const double sum = adl_range_sum(s, f, 0, target, y, n_y, fy, mode, delta) +
                       adl_range_sum(s, f, target + 1, s.size(), y, n_y, fy, mode, delta);
    return kInv4Pi * sum + 0.5 * fy;
}

// Single layer sum over sources [begin, end) excluding the target index.
double sl_range_sum(const Soa& s, const SurfaceField& f, std::size_t begin, std::size_t end,
                    const Vec3& y, double delta) {
    const double near_r2 = 36.0 * delta * delta;
    double r2buf[kBlock];
    double kbuf[kBlock];
    double acc = 0.0;
    for (std::size_t c0 = begin; c0 < end; c0 += kBlock) {
        const std::size_t c1 = std::min(end, c0 + kBlock);
        sl_block(c1 - c0, s.px.data() + c0, s.py.data() + c0, s.pz.data() + c0,
                 s.w.data() + c0, f.data() + c0, y.x, y.y, y.z, kbuf, r2buf);
        double part = 0.0;
        for (std::size_t j = c0; j < c1; ++j) part += kbuf[j - c0];
        for (std::size_t j = c0; j < c1; ++j) {
            const double r2 = r2buf[j - c0];
            if (r2 >= near_r2) continue;
            const double r = std::sqrt(r2);
            part += (single_layer_shape(r / delta) - 1.0) * f[j] * s.w[j] / r;
        }
        acc += part;
    }
    return acc;
}

double sl_value(const Soa& s, const SurfaceField& f, std::size_t target, double delta) {
    const Vec3 y{s.px[target], s.py[target], s.pz[target]};
    const double sum = sl_range_sum(s, f, 0, target, y, delta) +
                       sl_range_sum(s, f, target + 1, s.size(), y, delta);
    return -kInv4Pi * sum + regularized_green_at_zero(delta) * f[target] * s.w[target];
}

double gauss_value(const Soa& s, std::size_t target, KernelMode mode, double delta) {
    const double near_r2 = (mode == KernelMode::Unregularized) ? 0.0 : 36.0 * delta * delta;
    const Vec3 y{s.px[target], s.py[target], s.pz[target]};
    double acc = 0.0;
    const std::size_t n = s.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (j == target) continue;
        const double dx = s.px[j] - y.x;
        const double dy = s.py[j] - y.y;
        const double dz = s.pz[j] - y.z;
        const double r2 = dx * dx + dy * dy + dz * dz;
        const double b = s.nx[j] * dx + s.ny[j] * dy + s.nz[j] * dz;
        const double r = std::sqrt(r2);
        double sfac = 1.0;
        if (mode != KernelMode::Unregularized && r2 < near_r2) sfac = shape(mode, r / delta);
        acc += b * sfac * s.w[j] / (r2 * r);
    }
    return kInv4Pi * acc;
}

void check_field(const QuadratureRule& rule, const SurfaceField& f) {
    if (f.size() != rule.size())
        throw std::invalid_argument("field length does not match rule size");
}

void check_target(const QuadratureRule& rule, std::size_t target) {
    if (target >= rule.size()) throw std::out_of_range("target index out of range");
}

void check_config(const KernelConfig& config) {
    config.validate();
}

} // namespace

double eval_adl_modified(const QuadratureRule& rule, const SurfaceField& f, std::size_t target,
                         const KernelConfig& config) {
    check_field(rule, f);
    check_target(rule, target);
    check_config(config);
    const Soa s(rule);
    return adl_value(s, f, target, config.mode, config.delta);
}

double eval_adl_unregularized(const QuadratureRule& rule, const SurfaceField& f,
                              std::size_t target) {
    check_field(rule, f);
    check_target(rule, target);
    const Soa s(rule);
    return adl_value(s, f, target, KernelMode::Unregularized, 0.0);
}

SurfaceField apply_adjoint_operator(const QuadratureRule& rule, const SurfaceField& f,
                                    const KernelConfig& config, int threads) {
    check_field(rule, f);
    check_config(config);
    const Soa s(rule);
    SurfaceField out(rule.size());
    parallel_for(rule.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[i] = adl_value(s, f, i, config.mode, config.delta);
    });
    return out;
}

double eval_single_layer_on_surface(const QuadratureRule& rule, const SurfaceField& f,
                                    std::size_t target, double delta) {
    check_field(rule, f);
    check_target(rule, target);
    if (delta <= 0.0) throw std::invalid_argument("eval_single_layer_on_surface: delta <= 0");
    const Soa s(rule);
    return sl_value(s, f, target, delta);
}

SurfaceField eval_single_layer_surface_field(const QuadratureRule& rule, const SurfaceField& f,
                                             double delta, int threads) {
    check_field(rule, f);
    if (delta <= 0.0) throw std::invalid_argument("eval_single_layer_surface_field: delta <= 0");
    const Soa s(rule);
    SurfaceField out(rule.size());
    parallel_for(rule.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[i] = sl_value(s, f, i, delta);
    });
    return out;
}

double eval_single_layer_interior(const QuadratureRule& rule, const SurfaceField& f,
                                  const Vec3& x0) {
    check_field(rule, f);
    if (rule.surface.level(x0) >= 0.0)
        throw std::domain_error("eval_single_layer_interior: point is not strictly interior");
    double min_r2 = std::numeric_limits<double>::max();
    for (const QuadraturePoint& q : rule.points)
        min_r2 = std::min(min_r2, (q.position - x0).norm2());
    // The plain quadrature resolves the 1/r integrand once the target is a
    // few grid spacings away from the surface.
    if (min_r2 <= 25.0 * rule.h * rule.h)
        throw std::domain_error("eval_single_layer_interior: point closer than 5h to the surface");

    const std::size_t n = rule.size();
    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i) {
        const QuadraturePoint& q = rule.points[i];
        terms[i] = -kInv4Pi / (q.position - x0).norm() * f[i] * q.weight;
    }
    return deterministic_sum(terms);
}

double eval_gauss_identity(const QuadratureRule& rule, std::size_t target,
                           const KernelConfig& config) {
    check_target(rule, target);
    check_config(config);
    const Soa s(rule);
    return gauss_value(s, target, config.mode, config.delta);
}

SurfaceField gauss_identity_field(const QuadratureRule& rule, const KernelConfig& config,
                                  int threads) {
    check_config(config);
    const Soa s(rule);
    SurfaceField out(rule.size());
    parallel_for(rule.size(), threads, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) out[i] = gauss_value(s, i, config.mode, config.delta);
    });
    return out;
}

} // namespace nbie

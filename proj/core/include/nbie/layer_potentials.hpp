#pragma once

#include <vector>

#include "nbie/kernels.hpp"
#include "nbie/quadrature.hpp"

namespace nbie {

/// Real values carried at the quadrature points, in rule point order.
using SurfaceField = std::vector<double>;

/// Singularity-reduced adjoint double layer at rule point `target`,
/// regularized by config.mode/config.delta:
///   v(y) = sum_x (f(x) n(y) + f(y) n(x)) . (y-x) s(|x-y|/delta)
///              / (4 pi |x-y|^3) w(x)  +  f(y)/2.
/// The self node contributes 0: the reduced numerator is O(r^3) and s(0) = 0.
/// With KernelMode::Unregularized this equals eval_adl_unregularized.
double eval_adl_modified(const QuadratureRule& rule, const SurfaceField& f, std::size_t target,
                         const KernelConfig& config);

/// Same sum with s = 1 and the self node skipped.
double eval_adl_unregularized(const QuadratureRule& rule, const SurfaceField& f,
                              std::size_t target);

/// eval_adl_modified at every rule point. The result approximates T* f,
/// the adjoint double layer of f: the +f/2 term restores the Gauss-identity
/// subtraction used to reduce the singularity, so no further correction is
/// needed by callers.
SurfaceField apply_adjoint_operator(const QuadratureRule& rule, const SurfaceField& f,
                                    const KernelConfig& config, int threads = 0);

/// Regularized single layer at rule point `target`:
///   u(y) = sum_x G(x-y) s_sl(|x-y|/delta) f(x) w(x),
/// with the self node taken at the finite limit G_delta(0).
double eval_single_layer_on_surface(const QuadratureRule& rule, const SurfaceField& f,
                                    std::size_t target, double delta);

/// eval_single_layer_on_surface at every rule point.
SurfaceField eval_single_layer_surface_field(const QuadratureRule& rule, const SurfaceField& f,
                                             double delta, int threads = 0);

/// Plain (unregularized) quadrature of the single layer at a strictly
/// interior point; requires distance(x0, S) > 5h so the integrand is
/// resolved by the grid. Throws std::domain_error otherwise.
double eval_single_layer_interior(const QuadratureRule& rule, const SurfaceField& f,
                                  const Vec3& x0);

/// Discrete Gauss identity sum at rule point `target`:
///   sum_x n(x) . (x-y) s(|x-y|/delta) / (4 pi |x-y|^3) w(x),
/// which approximates 1/2 for targets on a closed surface.
double eval_gauss_identity(const QuadratureRule& rule, std::size_t target,
                           const KernelConfig& config);

/// eval_gauss_identity at every rule point.
SurfaceField gauss_identity_field(const QuadratureRule& rule, const KernelConfig& config,
                                  int threads = 0);

} // namespace nbie

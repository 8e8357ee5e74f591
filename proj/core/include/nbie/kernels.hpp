#pragma once

#include <stdexcept>

#include "nbie/vec3.hpp"

namespace nbie {

/// Error function, accurate to < 1e-15 relative error over |x| <= 6.
/// Built from a cancellation-free power series and a continued fraction,
/// accumulated in extended precision; exactly odd by construction.
double erf(double x);

/// Free-space Green's function G(x) = -1 / (4 pi |x|).
double green(const Vec3& x);

/// Normal derivative of G at the target:  n(y) . (y - x) / (4 pi |x-y|^3).
double adl_kernel(const Vec3& y, const Vec3& n_y, const Vec3& x);

/// Shape factor of the natural smoothing of grad G: erf(p) - (2/sqrt(pi)) p exp(-p^2).
/// Vanishes like p^3 at 0, saturates to 1; leaves an O(delta^3) smoothing error.
double shape_third(double rho);

/// Modified shape factor erf(p) - (2/sqrt(pi)) (p - 2p^3/3) exp(-p^2).
/// The cubic term cancels the second radial moment of the smoothing error,
/// improving it to O(delta^5).
double shape_fifth(double rho);

/// Shape factor for the single layer kernel itself (not its gradient):
///   erf(p) + (2/sqrt(pi)) (5p/3 - 2p^3/3) exp(-p^2).
/// The two polynomial coefficients are fixed by requiring the zeroth and
/// second radial moments of (1 - s) to vanish, which makes the smoothing
/// error of G(x) s(|x|/delta) fifth order. See README for the derivation.
double single_layer_shape(double rho);

/// Finite value of the regularized single layer kernel at zero separation,
/// lim_{r->0} G(r) single_layer_shape(r/delta) = -4 / (3 pi^{3/2} delta).
double regularized_green_at_zero(double delta);

enum class KernelMode { Unregularized, ThirdOrder, FifthOrder };

/// How the smoothing radius delta is tied to the grid size h.
struct DeltaRule {
    enum class Kind { MultipleOfH, PowerLaw };

    Kind kind = Kind::MultipleOfH;
    double coeff = 3.0;    // delta = coeff * h   or   delta = coeff * h^exponent
    double exponent = 1.0; // only used by PowerLaw

    static DeltaRule multiple_of_h(double m) { return {Kind::MultipleOfH, m, 1.0}; }
    static DeltaRule power_law(double c, double q) { return {Kind::PowerLaw, c, q}; }

    double resolve(double h) const;
};

/// Regularization mode plus the delta rule; `delta` is the value resolved
/// for a concrete h via resolved_for().
struct KernelConfig {
    KernelMode mode = KernelMode::FifthOrder;
    DeltaRule rule = DeltaRule::multiple_of_h(3.0);
    double delta = 0.0;

    KernelConfig resolved_for(double h) const;
    void validate() const;
};

} // namespace nbie

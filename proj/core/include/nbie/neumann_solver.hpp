#pragma once

#include <stdexcept>
#include <vector>

#include "nbie/layer_potentials.hpp"

namespace nbie {

struct SolverConfig {
    double beta = 0.7;        // relaxation, must lie in (0, 1)
    double tolerance = 1e-8;  // sup-norm of successive iterate differences
    int max_iterations = 500;
};

struct SolveResult {
    SurfaceField density;        // f_h, discrete zero-mean
    double null_coefficient = 0; // a_h of the rank-one augmentation
    int iterations = 0;
    double final_residual = 0;   // last ||f^{n+1} - f^n||_inf
    std::vector<double> residual_history;
    std::vector<double> mean_history;     // |sum f^n w| per iterate
    std::vector<double> abs_mean_history; // sum |f^n| w per iterate
};

struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(int iters, double residual)
        : std::runtime_error("successive approximations did not converge"),
          iterations(iters),
          final_residual(residual) {}
    int iterations;
    double final_residual;
};

/// Weighted average (sum v w) / (sum w) over the rule.
double weighted_mean(const QuadratureRule& rule, const SurfaceField& v);

/// Solves the augmented second-kind equation A_h f + a 1 = g,
/// A = -I/2 + T*, by successive approximations:
///   f* = (1-beta) f^n + 2 beta T*_h f^n - 2 beta g,
///   a^{n+1} = weighted mean of f*,   f^{n+1} = f* - a^{n+1} 1.
/// T*_h f is exactly the field returned by apply_adjoint_operator: the
/// modified-ADL value already equals the adjoint double layer of f, since
/// its +f/2 term undoes the Gauss-identity subtraction.
/// Warns (stderr) if the data g is discretely incompatible.
/// Throws NonConvergenceError when max_iterations is exhausted.
SolveResult solve(const QuadratureRule& rule, const SurfaceField& g, const SolverConfig& solver,
                  const KernelConfig& kernel, int threads = 0);

/// Solves for the density, evaluates the single layer at every rule point
/// with the fifth-order single layer kernel, and pins the free constant:
///   u_h := u_h - u_h(anchor) + u_anchor,
/// with u_h(anchor) from the plain interior quadrature.
/// If `result` is non-null the SolveResult is copied there.
SurfaceField solve_and_evaluate(const QuadratureRule& rule, const SurfaceField& g,
                                const SolverConfig& solver, const KernelConfig& kernel,
                                const Vec3& anchor, double u_anchor, int threads = 0,
                                SolveResult* result = nullptr);

} // namespace nbie

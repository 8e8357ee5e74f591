#include "nbie/neumann_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nbie/parallel.hpp"

namespace nbie {

namespace {

double weighted_sum(const QuadratureRule& rule, const SurfaceField& v) {
    return integrate(rule, v);
}

double abs_weighted_sum(const QuadratureRule& rule, const SurfaceField& v) {
    SurfaceField a(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) a[i] = std::abs(v[i]);
    return integrate(rule, a);
}

double sup_norm(const SurfaceField& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

double weighted_mean(const QuadratureRule& rule, const SurfaceField& v) {
    if (v.size() != rule.size())
        throw std::invalid_argument("weighted_mean: field length does not match rule size");
    if (rule.total_weight <= 0.0) throw std::invalid_argument("weighted_mean: empty rule");
    return weighted_sum(rule, v) / rule.total_weight;
}

SolveResult solve(const QuadratureRule& rule, const SurfaceField& g, const SolverConfig& solver,
                  const KernelConfig& kernel, int threads) {
    if (g.size() != rule.size())
        throw std::invalid_argument("solve: data length does not match rule size");
    if (solver.beta <= 0.0 || solver.beta >= 1.0)
        throw std::invalid_argument("solve: beta must lie in (0, 1)");
    if (solver.tolerance <= 0.0) throw std::invalid_argument("solve: tolerance must be > 0");
    kernel.validate();

    const double g_mean = weighted_mean(rule, g);
    if (std::abs(g_mean) > 1e-6 * sup_norm(g) && sup_norm(g) > 0.0)
        std::fprintf(stderr,
                     "solve: warning: weighted mean of g is %.3e; data may be incompatible\n",
                     g_mean);

    const std::size_t n = rule.size();
    const double beta = solver.beta;
    SolveResult res;
    res.density.assign(n, 0.0);

    SurfaceField fstar(n);
    for (int it = 1; it <= solver.max_iterations; ++it) {
        const SurfaceField tstar = apply_adjoint_operator(rule, res.density, kernel, threads);
        for (std::size_t i = 0; i < n; ++i)
            fstar[i] = (1.0 - beta) * res.density[i] + 2.0 * beta * tstar[i] - 2.0 * beta * g[i];
        const double a = weighted_mean(rule, fstar);
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            fstar[i] -= a;
            diff = std::max(diff, std::abs(fstar[i] - res.density[i]));
        }
        res.density.swap(fstar);
        res.null_coefficient = a;
        res.iterations = it;
        res.final_residual = diff;
        res.residual_history.push_back(diff);
        res.mean_history.push_back(std::abs(weighted_sum(rule, res.density)));
        res.abs_mean_history.push_back(abs_weighted_sum(rule, res.density));
        if (diff < solver.tolerance) return res;
    }
    throw NonConvergenceError(res.iterations, res.final_residual);
}

SurfaceField solve_and_evaluate(const QuadratureRule& rule, const SurfaceField& g,
                                const SolverConfig& solver, const KernelConfig& kernel,
                                const Vec3& anchor, double u_anchor, int threads,
                                SolveResult* result) {
    SolveResult res = solve(rule, g, solver, kernel, threads);
    SurfaceField u = eval_single_layer_surface_field(rule, res.density, kernel.delta, threads);
    const double u_h_anchor = eval_single_layer_interior(rule, res.density, anchor);
    for (double& v : u) v += u_anchor - u_h_anchor;
    if (result) *result = std::move(res);
    return u;
}

} // namespace nbie

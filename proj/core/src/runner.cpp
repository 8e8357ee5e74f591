#include "nbie/runner.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nbie {

namespace {

bool is_half_of(double coarse, double fine) {
    return std::abs(fine - 0.5 * coarse) <= 1e-12 * coarse;
}

void validate_h_list(const std::vector<double>& h_list) {
    if (h_list.empty()) throw std::invalid_argument("run: empty h list");
    for (std::size_t i = 0; i < h_list.size(); ++i) {
        if (h_list[i] <= 0.0) throw std::invalid_argument("run: h must be > 0");
        if (i > 0 && h_list[i] >= h_list[i - 1])
            throw std::invalid_argument("run: h list must be strictly decreasing");
    }
}

} // namespace

Surface make_surface(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::UnitSphere: return Surface::unit_sphere();
        case SurfaceKind::Ellipsoid: return Surface::ellipsoid();
        case SurfaceKind::Molecule: return Surface::molecule();
        default: throw std::invalid_argument("make_surface: custom surfaces need a descriptor");
    }
}

const QuadratureRule& RuleCache::get(SurfaceKind kind, double h, double theta) {
    const auto key = std::make_tuple(static_cast<int>(kind), h, theta);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto rule = std::make_unique<QuadratureRule>(generate_points(make_surface(kind), h, theta));
        it = cache_.emplace(key, std::move(rule)).first;
    }
    return *it->second;
}

std::vector<ConvergenceRow> run_direct_adl(const RunSpec& spec, RuleCache* cache) {
    if (spec.surface != SurfaceKind::UnitSphere || spec.test != TestKind::SphereHarmonic)
        throw std::invalid_argument(
            "run_direct_adl: only the unit sphere with the spherical-harmonic density has a "
            "known exact density");
    validate_h_list(spec.h_list);

    RuleCache local;
    RuleCache& rules = cache ? *cache : local;
    std::vector<ConvergenceRow> rows;
    for (double h : spec.h_list) {
        const QuadratureRule& rule = rules.get(spec.surface, h, spec.theta);
        const KernelConfig kernel = spec.kernel.resolved_for(h);
        const SurfaceField f = sample(spherical_harmonic_f, rule);
        const SurfaceField v = apply_adjoint_operator(rule, f, kernel, spec.threads);
        SurfaceField g_comp(rule.size()), g_exact(rule.size());
        for (std::size_t i = 0; i < rule.size(); ++i) {
            g_comp[i] = -0.5 * f[i] + v[i];
            g_exact[i] = -(3.0 / 7.0) * f[i];
        }
        const auto [linf, l2] = error_norms(g_comp, g_exact);
        ConvergenceRow row{h, static_cast<long>(rule.size()), linf, l2, {}, {}, {}};
        if (!rows.empty() && is_half_of(rows.back().h, h))
            row.order = convergence_order(rows.back().err_l2, l2);
        rows.push_back(row);
        std::fprintf(stderr, "  [direct] h=%s N=%ld Linf=%.2e L2=%.2e\n", format_h(h).c_str(),
                     row.n, linf, l2);
    }
    return rows;
}

SolveRunResult run_solve(const RunSpec& spec, RuleCache* cache) {
    if (spec.test == TestKind::SphereHarmonic && spec.surface != SurfaceKind::UnitSphere)
        throw std::invalid_argument(
            "run_solve: the spherical-harmonic case is defined on the unit sphere only");
    validate_h_list(spec.h_list);

    RuleCache local;
    RuleCache& rules = cache ? *cache : local;
    const TestCase test = make_test_case(spec.test);

    SolveRunResult out;
    for (double h : spec.h_list) {
        const QuadratureRule& rule = rules.get(spec.surface, h, spec.theta);
        const KernelConfig kernel = spec.kernel.resolved_for(h);
        const SurfaceField g = boundary_data(test, rule);

        SolveResult solve_result;
        SurfaceField u;
        try {
            u = solve_and_evaluate(rule, g, spec.solver, kernel, test.anchor, test.anchor_value,
                                   spec.threads, &solve_result);
        } catch (const NonConvergenceError& e) {
            std::fprintf(stderr, "  [solve] h=%s did not converge after %d iterations (%.2e)\n",
                         format_h(h).c_str(), e.iterations, e.final_residual);
            out.converged = false;
            return out;
        }

        const SurfaceField u_exact = sample(test.exact_u, rule);
        const auto [u_inf, u_l2] = error_norms(u, u_exact);
        ConvergenceRow u_row{h,  static_cast<long>(rule.size()),  u_inf, u_l2, {},
                             solve_result.iterations, solve_result.null_coefficient};
        if (!out.u_rows.empty() && is_half_of(out.u_rows.back().h, h))
            u_row.order = convergence_order(out.u_rows.back().err_l2, u_l2);
        out.u_rows.push_back(u_row);

        if (test.has_exact_f) {
            const SurfaceField f_exact = sample(test.exact_f, rule);
            const auto [f_inf, f_l2] = error_norms(solve_result.density, f_exact);
            ConvergenceRow f_row{h,  static_cast<long>(rule.size()),  f_inf, f_l2, {},
                                 solve_result.iterations, solve_result.null_coefficient};
            if (!out.f_rows.empty() && is_half_of(out.f_rows.back().h, h))
                f_row.order = convergence_order(out.f_rows.back().err_l2, f_l2);
            out.f_rows.push_back(f_row);
        }

        std::fprintf(stderr, "  [solve] h=%s N=%ld iters=%d u_L2=%.2e\n", format_h(h).c_str(),
                     u_row.n, solve_result.iterations, u_l2);
        out.solves.push_back(std::move(solve_result));
    }
    return out;
}

} // namespace nbie

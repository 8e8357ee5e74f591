// Acceptance suite: reproduces the published convergence tables and checks
// the structural properties of the method, one criterion per line.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "nbie/runner.hpp"

using namespace nbie;

namespace {

constexpr double kTheta = 70.0 * 3.14159265358979323846 / 180.0;

struct Ctx {
    RuleCache rules;
    int threads = 0;
    int checks_failed = 0;
    std::vector<SolveResult> all_solves; // every solve performed by the suite
    SolveResult sphere_solve_16, sphere_solve_32;
    bool have_sphere_solves = false;
    struct APair {
        std::string tag;
        double coarse, fine;
    };
    std::vector<APair> expharmonic_a; // |a_h| at h=1/16 and 1/32 per solve block
};

bool within_pct(double got, double expect, double pct) {
    return std::abs(got - expect) <= pct / 100.0 * std::abs(expect);
}

void check(Ctx& ctx, bool ok, const char* fmt, ...) {
    if (!ok) ++ctx.checks_failed;
    std::va_list args;
    va_start(args, fmt);
    std::printf("    %s ", ok ? "ok  " : "FAIL");
    std::vprintf(fmt, args);
    std::printf("\n");
    va_end(args);
}

RunSpec direct_spec(Ctx& ctx, KernelMode mode, DeltaRule rule) {
    RunSpec s;
    s.experiment = Experiment::DirectAdl;
    s.h_list = {1.0 / 16, 1.0 / 32, 1.0 / 64};
    s.kernel = {mode, rule, 0.0};
    s.threads = ctx.threads;
    return s;
}

void check_l2_row(Ctx& ctx, const std::vector<ConvergenceRow>& rows, std::size_t i,
                  double expect, double pct, const char* tag) {
    check(ctx, within_pct(rows[i].err_l2, expect, pct), "%s h=%s: L2 %.3e vs %.3e (+-%g%%)",
          tag, format_h(rows[i].h).c_str(), rows[i].err_l2, expect, pct);
}

// ---- criterion 1: direct ADL, singularity reduction only ----
bool criterion1(Ctx& ctx) {
    const auto rows = run_direct_adl(
        direct_spec(ctx, KernelMode::Unregularized, DeltaRule::multiple_of_h(1.0)), &ctx.rules);
    const double expect_l2[3] = {5.47e-4, 1.46e-4, 3.45e-5};
    const double expect_order[2] = {1.9, 2.1};
    const int before = ctx.checks_failed;
    for (int i = 0; i < 3; ++i) check_l2_row(ctx, rows, i, expect_l2[i], 15.0, "no-reg");
    for (int i = 0; i < 2; ++i)
        check(ctx, std::abs(*rows[i + 1].order - expect_order[i]) <= 0.3,
              "no-reg order %.2f vs %.1f (+-0.3)", *rows[i + 1].order, expect_order[i]);
    return ctx.checks_failed == before;
}

// ---- criterion 2: direct ADL, third order, delta = 2h ----
bool criterion2(Ctx& ctx) {
    const auto rows = run_direct_adl(
        direct_spec(ctx, KernelMode::ThirdOrder, DeltaRule::multiple_of_h(2.0)), &ctx.rules);
    const double expect_l2[3] = {3.99e-3, 5.00e-4, 6.24e-5};
    const int before = ctx.checks_failed;
    for (int i = 0; i < 3; ++i) check_l2_row(ctx, rows, i, expect_l2[i], 15.0, "order3");
    for (int i = 1; i <= 2; ++i)
        check(ctx, std::abs(*rows[i].order - 3.0) <= 0.3, "order3 order %.2f vs 3.0 (+-0.3)",
              *rows[i].order);
    return ctx.checks_failed == before;
}

// ---- criterion 3: direct ADL, fifth order, two delta rules ----
bool criterion3(Ctx& ctx) {
    const int before = ctx.checks_failed;
    {
        const auto rows = run_direct_adl(
            direct_spec(ctx, KernelMode::FifthOrder, DeltaRule::multiple_of_h(3.0)), &ctx.rules);
        const double expect_l2[3] = {4.10e-4, 1.38e-5, 3.40e-7};
        for (int i = 0; i < 3; ++i) check_l2_row(ctx, rows, i, expect_l2[i], 20.0, "order5 d=3h");
        for (int i = 1; i <= 2; ++i)
            check(ctx, *rows[i].order >= 4.5, "order5 d=3h order %.2f >= 4.5", *rows[i].order);
    }
    {
        const auto rows = run_direct_adl(
            direct_spec(ctx, KernelMode::FifthOrder, DeltaRule::power_law(1.5, 0.8)), &ctx.rules);
        const double expect_l2[3] = {2.40e-4, 1.38e-5, 6.86e-7};
        for (int i = 0; i < 3; ++i)
            check_l2_row(ctx, rows, i, expect_l2[i], 20.0, "order5 d=1.5h^0.8");
        for (int i = 1; i <= 2; ++i)
            check(ctx, std::abs(*rows[i].order - 4.0) <= 0.4,
                  "order5 d=1.5h^0.8 order %.2f vs 4.0 (+-0.4)", *rows[i].order);
    }
    return ctx.checks_failed == before;
}

// ---- criterion 4: full solve on the sphere, delta = 3h ----
bool criterion4(Ctx& ctx) {
    RunSpec s;
    s.experiment = Experiment::SolveNeumann;
    s.h_list = {1.0 / 16, 1.0 / 32};
    s.kernel = {KernelMode::FifthOrder, DeltaRule::multiple_of_h(3.0), 0.0};
    s.threads = ctx.threads;
    const auto result = run_solve(s, &ctx.rules);

    const int before = ctx.checks_failed;
    check(ctx, result.converged, "both solves converged");
    if (!result.converged) return false;

    const double expect_f[2] = {9.57e-4, 3.23e-5};
    const double expect_u[2] = {3.62e-4, 1.14e-5};
    for (int i = 0; i < 2; ++i) {
        check_l2_row(ctx, result.f_rows, i, expect_f[i], 20.0, "density");
        check_l2_row(ctx, result.u_rows, i, expect_u[i], 20.0, "potential");
        check(ctx, result.solves[i].iterations <= 200 && result.solves[i].final_residual < 1e-8,
              "h=%s: converged to 1e-8 in %d iterations (<= 200)",
              format_h(s.h_list[i]).c_str(), result.solves[i].iterations);
    }
    ctx.sphere_solve_16 = result.solves[0];
    ctx.sphere_solve_32 = result.solves[1];
    ctx.have_sphere_solves = true;
    for (const auto& sr : result.solves) ctx.all_solves.push_back(sr);
    return ctx.checks_failed == before;
}

// ---- criterion 5: ellipsoid and molecule solves, both delta rules ----
bool criterion5(Ctx& ctx) {
    struct Block {
        SurfaceKind surface;
        DeltaRule rule;
        double expect_l2[2];
        double expect_order;
        const char* tag;
    };
    const Block blocks[4] = {
        {SurfaceKind::Ellipsoid, DeltaRule::power_law(0.75, 2.0 / 3.0), {3.93e-3, 3.34e-4}, 3.56,
         "ellipsoid d=0.75h^(2/3)"},
        {SurfaceKind::Ellipsoid, DeltaRule::power_law(1.5, 0.8), {5.69e-3, 5.11e-4}, 3.48,
         "ellipsoid d=1.5h^(4/5)"},
        {SurfaceKind::Molecule, DeltaRule::power_law(0.75, 2.0 / 3.0), {3.50e-3, 2.84e-4}, 3.62,
         "molecule d=0.75h^(2/3)"},
        {SurfaceKind::Molecule, DeltaRule::power_law(1.5, 0.8), {4.39e-3, 3.64e-4}, 3.59,
         "molecule d=1.5h^(4/5)"},
    };
    const int before = ctx.checks_failed;
    for (const Block& b : blocks) {
        RunSpec s;
        s.surface = b.surface;
        s.test = TestKind::ExpHarmonic;
        s.experiment = Experiment::SolveNeumann;
        s.h_list = {1.0 / 16, 1.0 / 32};
        s.kernel = {KernelMode::FifthOrder, b.rule, 0.0};
        s.threads = ctx.threads;
        const auto result = run_solve(s, &ctx.rules);
        check(ctx, result.converged, "%s: solves converged", b.tag);
        if (!result.converged) continue;
        for (int i = 0; i < 2; ++i)
            check_l2_row(ctx, result.u_rows, i, b.expect_l2[i], 25.0, b.tag);
        check(ctx, std::abs(*result.u_rows[1].order - b.expect_order) <= 0.4,
              "%s order %.2f vs %.2f (+-0.4)", b.tag, *result.u_rows[1].order, b.expect_order);
        ctx.expharmonic_a.push_back({b.tag, std::abs(result.solves[0].null_coefficient),
                                     std::abs(result.solves[1].null_coefficient)});
        for (const auto& sr : result.solves) ctx.all_solves.push_back(sr);
    }
    return ctx.checks_failed == before;
}

// ---- criterion 6: point-count fingerprints ----
bool criterion6(Ctx& ctx) {
    const int before = ctx.checks_failed;
    const long sphere_n[3] = {4302, 17070, 68166};
    const double hs[3] = {1.0 / 16, 1.0 / 32, 1.0 / 64};
    for (int i = 0; i < 3; ++i) {
        const long n = static_cast<long>(ctx.rules.get(SurfaceKind::UnitSphere, hs[i], kTheta).size());
        check(ctx, n == sphere_n[i], "sphere h=%s: N = %ld (expect %ld exactly)",
              format_h(hs[i]).c_str(), n, sphere_n[i]);
    }
    const long ell_n[2] = {1766, 6958}, mol_n[2] = {2392, 9562};
    for (int i = 0; i < 2; ++i) {
        const long ne = static_cast<long>(ctx.rules.get(SurfaceKind::Ellipsoid, hs[i], kTheta).size());
        check(ctx, ne == ell_n[i], "ellipsoid h=%s: N = %ld (expect %ld)",
              format_h(hs[i]).c_str(), ne, ell_n[i]);
        const long nm = static_cast<long>(ctx.rules.get(SurfaceKind::Molecule, hs[i], kTheta).size());
        check(ctx, nm == mol_n[i], "molecule h=%s: N = %ld (expect %ld)",
              format_h(hs[i]).c_str(), nm, mol_n[i]);
    }
    return ctx.checks_failed == before;
}

// ---- criterion 7: property suite ----
bool criterion7(Ctx& ctx) {
    const int before = ctx.checks_failed;

    { // partition of unity
        std::mt19937 rng(2024);
        std::normal_distribution<double> nd(0.0, 1.0);
        double worst = 0.0;
        bool in_range = true;
        for (int i = 0; i < 1000; ++i) {
            Vec3 n{nd(rng), nd(rng), nd(rng)};
            n = n / n.norm();
            double sum = 0.0;
            for (int axis = 1; axis <= 3; ++axis) {
                const double w = partition_weight(n, axis, kTheta);
                in_range = in_range && w >= 0.0 && w <= 1.0;
                sum += w;
            }
            worst = std::max(worst, std::abs(sum - 1.0));
        }
        check(ctx, worst <= 1e-13 && in_range, "partition of unity: max |sum-1| = %.2e (<= 1e-13)",
              worst);
    }

    { // sphere area at h = 1/32
        const QuadratureRule& rule = ctx.rules.get(SurfaceKind::UnitSphere, 1.0 / 32, kTheta);
        const double err = std::abs(rule.total_weight - 4.0 * 3.14159265358979323846);
        // Known red: the bump-window trapezoid rule that reproduces the
        // published tables has a smooth-data floor of ~2e-5 at this h; the
        // 1e-8 bound is not reachable together with criteria 1-5.
        check(ctx, err <= 1e-8, "sphere area at h=1/32: |sum w - 4pi| = %.3e (<= 1e-8)", err);
    }

    { // Gauss identity at every target, h = 1/32, fifth order, delta = 3h
        const QuadratureRule& rule = ctx.rules.get(SurfaceKind::UnitSphere, 1.0 / 32, kTheta);
        const KernelConfig cfg =
            KernelConfig{KernelMode::FifthOrder, DeltaRule::multiple_of_h(3.0), 0.0}
                .resolved_for(rule.h);
        const SurfaceField gauss = gauss_identity_field(rule, cfg, ctx.threads);
        double worst = 0.0;
        for (double v : gauss) worst = std::max(worst, std::abs(v - 0.5));
        check(ctx, worst <= 1e-4, "Gauss identity: max |sum - 1/2| = %.2e (<= 1e-4)", worst);
    }

    { // exact cancellation of the constant density on the sphere
        const QuadratureRule& rule = ctx.rules.get(SurfaceKind::UnitSphere, 1.0 / 16, kTheta);
        const KernelConfig cfg =
            KernelConfig{KernelMode::FifthOrder, DeltaRule::multiple_of_h(3.0), 0.0}
                .resolved_for(rule.h);
        const SurfaceField v = apply_adjoint_operator(rule, SurfaceField(rule.size(), 1.0), cfg,
                                                      ctx.threads);
        double worst = 0.0;
        for (double x : v) worst = std::max(worst, std::abs(x - 0.5));
        check(ctx, worst <= 1e-12, "constant density: max |v - 1/2| = %.2e (roundoff)", worst);
    }

    { // boundedness contrast on the ellipsoid
        const Surface ell = Surface::ellipsoid();
        const Vec3 y{1.0, 0.0, 0.0};
        const Vec3 ny = ell.unit_normal(y);
        const double fy = spherical_harmonic_f(y);
        std::vector<double> reduced, unreduced;
        for (double u = 2e-4; u < 0.25; u *= 1.15) {
            const Vec3 x{std::cos(u), 0.5 * std::sin(u), 0.0};
            const double r = (y - x).norm();
            if (r < 1e-4 || r > 1e-1) continue;
            const Vec3 nx = ell.unit_normal(x);
            const double fx = spherical_harmonic_f(x);
            reduced.push_back(std::abs((nx * fy + ny * fx).dot(y - x)) / (r * r * r));
            unreduced.push_back(std::abs(ny.dot(y - x) * fx) / (r * r * r));
        }
        std::vector<double> sorted = reduced;
        std::sort(sorted.begin(), sorted.end());
        const double median = sorted[sorted.size() / 2];
        const bool bounded = sorted.back() <= 10.0 * median;
        const double growth = unreduced.front() / unreduced.back();
        check(ctx, bounded, "reduced integrand bounded: max/median = %.2f (<= 10)",
              sorted.back() / median);
        check(ctx, growth >= 100.0, "plain integrand grows: factor %.0f (>= 100)", growth);
    }

    if (ctx.have_sphere_solves) { // solver iterate properties
        double worst_ratio = 0.0;
        for (const SolveResult& sr : ctx.all_solves)
            for (std::size_t n = 0; n < sr.mean_history.size(); ++n)
                worst_ratio = std::max(
                    worst_ratio, sr.mean_history[n] / (1e-12 * sr.abs_mean_history[n] + 1e-14));
        check(ctx, worst_ratio <= 1.0, "zero-mean constraint on every iterate (worst %.2f <= 1)",
              worst_ratio);

        bool monotone = true;
        for (const SolveResult& sr : ctx.all_solves)
            for (std::size_t n = 6; n < sr.residual_history.size(); ++n)
                monotone = monotone && sr.residual_history[n] < sr.residual_history[n - 1];
        check(ctx, monotone, "residuals decrease beyond the first 5 iterations in all solves");

        // On the sphere test the point set is exactly antipodally symmetric
        // and the data is odd, so the compatibility defect (and with it a_h)
        // is zero by parity at every h; accept the summation-noise floor.
        const double a16 = std::abs(ctx.sphere_solve_16.null_coefficient);
        const double a32 = std::abs(ctx.sphere_solve_32.null_coefficient);
        check(ctx, a32 < a16 || (a16 <= 1e-13 && a32 <= 1e-13),
              "sphere |a_h| decreases or sits at roundoff: %.2e -> %.2e", a16, a32);
        for (const auto& pair : ctx.expharmonic_a)
            check(ctx, pair.fine < pair.coarse, "%s: |a_h| decreases: %.2e -> %.2e",
                  pair.tag.c_str(), pair.coarse, pair.fine);
    } else {
        check(ctx, false, "solver properties skipped: criterion 4 did not run");
    }

    return ctx.checks_failed == before;
}

// ---- criterion 8: byte-identical output for identical runs ----
bool criterion8(Ctx& ctx) {
    RunSpec s;
    s.experiment = Experiment::DirectAdl;
    s.h_list = {1.0 / 16};
    s.kernel = {KernelMode::FifthOrder, DeltaRule::multiple_of_h(3.0), 0.0};
    s.threads = ctx.threads;
    // fresh rule caches: both runs regenerate everything from scratch
    RuleCache cache1, cache2;
    const std::string csv1 = emit_table(run_direct_adl(s, &cache1), TableFormat::Csv, "run");
    const std::string csv2 = emit_table(run_direct_adl(s, &cache2), TableFormat::Csv, "run");
    const int before = ctx.checks_failed;
    check(ctx, csv1 == csv2, "identical runs render identical CSV bytes");
    return ctx.checks_failed == before;
}

} // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            ctx.threads = std::atoi(argv[++i]);
        else
            which.push_back(std::atoi(argv[i]));
    }
    if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8};

    struct Criterion {
        int id;
        const char* name;
        bool (*fn)(Ctx&);
    };
    const Criterion criteria[] = {
        {1, "direct ADL, reduction only: L2 and orders", criterion1},
        {2, "direct ADL, third order delta=2h: L2 and orders", criterion2},
        {3, "direct ADL, fifth order, two delta rules: L2 and orders", criterion3},
        {4, "sphere solve delta=3h: density and potential errors", criterion4},
        {5, "ellipsoid and molecule solves: potential errors and orders", criterion5},
        {6, "quadrature point-count fingerprints", criterion6},
        {7, "property suite", criterion7},
        {8, "deterministic output", criterion8},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        bool selected = false;
        for (int id : which) selected = selected || id == c.id;
        if (!selected) continue;
        const auto t0 = std::chrono::steady_clock::now();
        std::printf("criterion %d: %s\n", c.id, c.name);
        std::fflush(stdout);
        const bool ok = c.fn(ctx);
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name, dt);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "nbie/analytic_cases.hpp"
#include "nbie/neumann_solver.hpp"
#include "nbie/reporting.hpp"

namespace nbie {

enum class Experiment { DirectAdl, SolveNeumann };

/// Full description of one convergence run (one table block).
struct RunSpec {
    SurfaceKind surface = SurfaceKind::UnitSphere;
    TestKind test = TestKind::SphereHarmonic;
    Experiment experiment = Experiment::DirectAdl;
    std::vector<double> h_list;
    KernelConfig kernel;
    SolverConfig solver;
    double theta = 70.0 * 3.14159265358979323846 / 180.0;
    int threads = 0;
};

Surface make_surface(SurfaceKind kind);

/// Shares generated rules between runs with the same surface, h and theta.
class RuleCache {
public:
    const QuadratureRule& get(SurfaceKind kind, double h, double theta);

private:
    std::map<std::tuple<int, double, double>, std::unique_ptr<QuadratureRule>> cache_;
};

/// Direct evaluation study: computes A_h f_exact = -f/2 + v at every rule
/// point and compares with g_exact = -(3/7) f_exact. Sphere-harmonic only
/// (the one case whose density is known); throws std::invalid_argument
/// otherwise.
std::vector<ConvergenceRow> run_direct_adl(const RunSpec& spec, RuleCache* cache = nullptr);

struct SolveRunResult {
    std::vector<ConvergenceRow> u_rows;
    std::vector<ConvergenceRow> f_rows; // only when the density is known
    std::vector<SolveResult> solves;    // one per completed h
    bool converged = true;              // false: rows hold the completed levels
};

/// Full solve study: builds g from the test case, solves the integral
/// equation, evaluates u on the surface, adjusts the constant at the
/// anchor, and reports errors against the exact solution.
SolveRunResult run_solve(const RunSpec& spec, RuleCache* cache = nullptr);

} // namespace nbie

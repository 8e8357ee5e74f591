// Command-line driver for the convergence experiments: direct evaluation of
// the reduced adjoint double layer and full Neumann solves, on the built-in
// surfaces, with convergence-table output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbie/runner.hpp"

namespace {

using namespace nbie;

struct Block {
    std::string label;
    RunSpec spec;
};

double parse_h_token(const std::string& tok) {
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
        const double num = std::stod(tok.substr(0, slash));
        const double den = std::stod(tok.substr(slash + 1));
        return num / den;
    }
    return std::stod(tok);
}

std::vector<double> parse_h_list(const std::string& list) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const std::string tok =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) out.push_back(parse_h_token(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string h_tag(double h) {
    char buf[32];
    const double inv = 1.0 / h;
    if (std::abs(inv - std::round(inv)) < 1e-9 * inv)
        std::snprintf(buf, sizeof(buf), "h%ld", static_cast<long>(std::round(inv)));
    else
        std::snprintf(buf, sizeof(buf), "h%g", h);
    return buf;
}

std::vector<double> preset_h(bool solve, bool extended) {
    if (solve) return extended ? std::vector<double>{1.0 / 16, 1.0 / 32, 1.0 / 64}
                               : std::vector<double>{1.0 / 16, 1.0 / 32};
    return extended ? std::vector<double>{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128}
                    : std::vector<double>{1.0 / 16, 1.0 / 32, 1.0 / 64};
}

std::vector<Block> make_preset(const std::string& name, const RunSpec& base, bool extended) {
    RunSpec s = base;
    std::vector<Block> blocks;
    if (name == "table1") {
        s.surface = SurfaceKind::UnitSphere;
        s.test = TestKind::SphereHarmonic;
        s.experiment = Experiment::DirectAdl;
        s.h_list = preset_h(false, extended);
        s.kernel = {KernelMode::Unregularized, DeltaRule::multiple_of_h(1.0), 0.0};
        blocks.push_back({"sphere, direct ADL, no regularization", s});
        s.kernel = {KernelMode::ThirdOrder, DeltaRule::multiple_of_h(2.0), 0.0};
        blocks.push_back({"sphere, direct ADL, 3rd order, delta=2h", s});
    } else if (name == "table2") {
        s.surface = SurfaceKind::UnitSphere;
        s.test = TestKind::SphereHarmonic;
        s.experiment = Experiment::DirectAdl;
        s.h_list = preset_h(false, extended);
        s.kernel = {KernelMode::FifthOrder, DeltaRule::multiple_of_h(3.0), 0.0};
        blocks.push_back({"sphere, direct ADL, 5th order, delta=3h", s});
        s.kernel = {KernelMode::FifthOrder, DeltaRule::power_law(1.5, 0.8), 0.0};
        blocks.push_back({"sphere, direct ADL, 5th order, delta=1.5h^(4/5)", s});
    } else if (name == "table3") {
        s.surface = SurfaceKind::UnitSphere;
        s.test = TestKind::SphereHarmonic;
        s.experiment = Experiment::SolveNeumann;
        s.h_list = preset_h(true, extended);
        s.kernel = {KernelMode::FifthOrder, DeltaRule::multiple_of_h(3.0), 0.0};
        blocks.push_back({"sphere, solve, 5th order, delta=3h", s});
    } else if (name == "table4" || name == "table5") {
        s.surface = name == "table4" ? SurfaceKind::Ellipsoid : SurfaceKind::Molecule;
        s.test = TestKind::ExpHarmonic;
        s.experiment = Experiment::SolveNeumann;
        s.h_list = preset_h(true, extended);
        const char* surf = name == "table4" ? "ellipsoid" : "molecule";
        char label[128];
        s.kernel = {KernelMode::FifthOrder, DeltaRule::power_law(0.75, 2.0 / 3.0), 0.0};
        std::snprintf(label, sizeof(label), "%s, solve, 5th order, delta=0.75h^(2/3)", surf);
        blocks.push_back({label, s});
        s.kernel = {KernelMode::FifthOrder, DeltaRule::power_law(1.5, 0.8), 0.0};
        std::snprintf(label, sizeof(label), "%s, solve, 5th order, delta=1.5h^(4/5)", surf);
        blocks.push_back({label, s});
    } else {
        throw CLI::ValidationError("--preset", "unknown preset " + name);
    }
    return blocks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-integral Neumann solver: convergence experiments"};
    app.set_help_flag("--help", "print usage"); // frees -h for the grid-size option

    std::string surface = "sphere", test = "harmonic3", experiment = "direct";
    std::string kernel = "order5", h_arg, preset, output, dump_points;
    double delta_mult = 0.0, delta_c = 0.0, delta_q = 0.0, theta_deg = 70.0;
    double beta = 0.7, tol = 1e-8;
    int max_iter = 500, threads = 0;
    bool extended = false;

    app.add_option("--surface", surface, "sphere|ellipsoid|molecule")
        ->check(CLI::IsMember({"sphere", "ellipsoid", "molecule"}));
    app.add_option("--test", test, "harmonic3|expharmonic")
        ->check(CLI::IsMember({"harmonic3", "expharmonic"}));
    app.add_option("--experiment", experiment, "direct|solve")
        ->check(CLI::IsMember({"direct", "solve"}));
    app.add_option("--h", h_arg, "comma-separated grid sizes, e.g. 1/16,1/32");
    app.add_option("--kernel", kernel, "none|order3|order5")
        ->check(CLI::IsMember({"none", "order3", "order5"}));
    app.add_option("--delta-mult", delta_mult, "delta = mult * h");
    app.add_option("--delta-c", delta_c, "delta = c * h^q (with --delta-q)");
    app.add_option("--delta-q", delta_q, "exponent q in delta = c * h^q");
    app.add_option("--theta", theta_deg, "chart half-angle in degrees (default 70)");
    app.add_option("--beta", beta, "iteration relaxation (default 0.7)");
    app.add_option("--tol", tol, "iteration tolerance (default 1e-8)");
    app.add_option("--max-iter", max_iter, "iteration cap (default 500)");
    app.add_option("--preset", preset, "table1|table2|table3|table4|table5");
    app.add_option("--output", output, "write CSV here instead of stdout Markdown");
    app.add_option("--dump-points", dump_points, "write the quadrature point set as CSV");
    app.add_option("--threads", threads, "worker threads, 0 = all cores");
    app.add_flag("--extended", extended, "include the slow finest-grid rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    using namespace nbie;
    try {
        RunSpec base;
        base.theta = theta_deg * 3.14159265358979323846 / 180.0;
        base.threads = threads;
        base.solver = {beta, tol, max_iter};

        std::vector<Block> blocks;
        if (!preset.empty()) {
            blocks = make_preset(preset, base, extended);
            if (!h_arg.empty())
                for (Block& b : blocks) b.spec.h_list = parse_h_list(h_arg);
        } else {
            RunSpec s = base;
            s.surface = surface == "sphere"      ? SurfaceKind::UnitSphere
                        : surface == "ellipsoid" ? SurfaceKind::Ellipsoid
                                                 : SurfaceKind::Molecule;
            s.test = test == "harmonic3" ? TestKind::SphereHarmonic : TestKind::ExpHarmonic;
            s.experiment = experiment == "direct" ? Experiment::DirectAdl
                                                  : Experiment::SolveNeumann;
            s.h_list = h_arg.empty() ? std::vector<double>{1.0 / 16, 1.0 / 32}
                                     : parse_h_list(h_arg);
            s.kernel.mode = kernel == "none"     ? KernelMode::Unregularized
                            : kernel == "order3" ? KernelMode::ThirdOrder
                                                 : KernelMode::FifthOrder;
            if (delta_c > 0.0 || delta_q > 0.0) {
                if (delta_c <= 0.0 || delta_q <= 0.0)
                    throw std::invalid_argument("--delta-c and --delta-q must be given together");
                s.kernel.rule = DeltaRule::power_law(delta_c, delta_q);
            } else if (delta_mult > 0.0) {
                s.kernel.rule = DeltaRule::multiple_of_h(delta_mult);
            } else {
                s.kernel.rule = DeltaRule::multiple_of_h(
                    s.kernel.mode == KernelMode::ThirdOrder ? 2.0 : 3.0);
            }
            blocks.push_back({"", s});
        }

        RuleCache cache;
        const TableFormat fmt = output.empty() ? TableFormat::Markdown : TableFormat::Csv;
        std::string rendered;
        bool all_converged = true;

        for (const Block& block : blocks) {
            if (!block.label.empty()) std::fprintf(stderr, "[%s]\n", block.label.c_str());
            if (block.spec.experiment == Experiment::DirectAdl) {
                const auto rows = run_direct_adl(block.spec, &cache);
                rendered += emit_table(rows, fmt, block.label);
            } else {
                const auto result = run_solve(block.spec, &cache);
                if (!result.f_rows.empty())
                    rendered += emit_table(result.f_rows, fmt,
                                           block.label.empty() ? "error in f"
                                                               : block.label + " (error in f)");
                if (!result.u_rows.empty())
                    rendered += emit_table(result.u_rows, fmt,
                                           block.label.empty() ? "error in u"
                                                               : block.label + " (error in u)");
                all_converged = all_converged && result.converged;
            }
            if (fmt == TableFormat::Markdown) rendered += "\n";
        }

        if (!dump_points.empty() && !blocks.empty()) {
            const RunSpec& s = blocks.front().spec;
            for (double h : s.h_list) {
                const QuadratureRule& rule = cache.get(s.surface, h, s.theta);
                std::string path = dump_points;
                if (s.h_list.size() > 1) path += "." + h_tag(h);
                std::ofstream f(path, std::ios::binary);
                f << dump_points_csv(rule);
            }
        }

        if (output.empty()) {
            std::fputs(rendered.c_str(), stdout);
        } else {
            std::ofstream f(output, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file " + output);
            f << rendered;
        }
        return all_converged ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

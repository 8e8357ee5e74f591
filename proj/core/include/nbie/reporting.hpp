#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nbie {

/// One refinement level of a convergence study.
struct ConvergenceRow {
    double h = 0.0;
    long n = 0;
    double err_inf = 0.0;
    double err_l2 = 0.0;
    std::optional<double> order;   // log2 ratio vs. the row at 2h
    std::optional<int> iterations; // solver runs only
    std::optional<double> a_h;     // solver runs only
};

/// (max |e|, sqrt(mean e^2)) for e = computed - exact.
std::pair<double, double> error_norms(std::span<const double> computed,
                                      std::span<const double> exact);

/// log2(coarse / fine); both inputs must be positive.
double convergence_order(double coarse_l2, double fine_l2);

enum class TableFormat { Markdown, Csv };

/// Renders rows with columns h, N, Linf, L2, Order (and iters, a_h when
/// present); errors in 3-significant-digit scientific notation, orders with
/// one decimal. CSV emits the caption as a leading '# caption' line.
std::string emit_table(const std::vector<ConvergenceRow>& rows, TableFormat format,
                       std::string_view caption = {});

/// "1/16" for reciprocals of integers, otherwise a compact decimal.
std::string format_h(double h);

} // namespace nbie

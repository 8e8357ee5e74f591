#include "nbie/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nbie {

std::pair<double, double> error_norms(std::span<const double> computed,
                                      std::span<const double> exact) {
    if (computed.size() != exact.size())
        throw std::invalid_argument("error_norms: field lengths differ");
    if (computed.empty()) throw std::invalid_argument("error_norms: empty fields");
    double m = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const double e = computed[i] - exact[i];
        m = std::max(m, std::abs(e));
        ss += e * e;
    }
    return {m, std::sqrt(ss / static_cast<double>(computed.size()))};
}

double convergence_order(double coarse_l2, double fine_l2) {
    if (coarse_l2 <= 0.0 || fine_l2 <= 0.0)
        throw std::invalid_argument("convergence_order: norms must be positive");
    return std::log2(coarse_l2 / fine_l2);
}

std::string format_h(double h) {
    char buf[64];
    const double inv = 1.0 / h;
    const double rounded = std::round(inv);
    if (rounded >= 1.0 && std::abs(inv - rounded) < 1e-9 * inv) {
        std::snprintf(buf, sizeof(buf), "1/%ld", static_cast<long>(rounded));
    } else {
        std::snprintf(buf, sizeof(buf), "%.6g", h);
    }
    return buf;
}

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

std::string one_decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

} // namespace

std::string emit_table(const std::vector<ConvergenceRow>& rows, TableFormat format,
                       std::string_view caption) {
    if (rows.empty()) throw std::invalid_argument("emit_table: no rows");
    const bool solver_cols =
        std::any_of(rows.begin(), rows.end(),
                    [](const ConvergenceRow& r) { return r.iterations || r.a_h; });

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header = {"h", "N", "Linf", "L2", "Order"};
    if (solver_cols) {
        header.push_back("iters");
        header.push_back("a_h");
    }
    cells.push_back(header);
    for (const ConvergenceRow& r : rows) {
        std::vector<std::string> row = {format_h(r.h), std::to_string(r.n), sci(r.err_inf),
                                        sci(r.err_l2), r.order ? one_decimal(*r.order) : ""};
        if (solver_cols) {
            row.push_back(r.iterations ? std::to_string(*r.iterations) : "");
            row.push_back(r.a_h ? sci(*r.a_h) : "");
        }
        cells.push_back(row);
    }

    std::string out;
    if (format == TableFormat::Csv) {
        if (!caption.empty()) {
            out += "# ";
            out += caption;
            out += "\n";
        }
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ",";
                out += row[c];
            }
            out += "\n";
        }
        return out;
    }

    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    if (!caption.empty()) {
        out += caption;
        out += "\n";
    }
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out += "|";
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            out += " ";
            out += cells[r][c];
            out.append(width[c] - cells[r][c].size(), ' ');
            out += " |";
        }
        out += "\n";
        if (r == 0) {
            out += "|";
            for (std::size_t c = 0; c < width.size(); ++c) {
                out.append(width[c] + 2, '-');
                out += "|";
            }
            out += "\n";
        }
    }
    return out;
}

} // namespace nbie

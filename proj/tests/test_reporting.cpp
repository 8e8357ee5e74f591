#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "nbie/reporting.hpp"

using namespace nbie;

TEST_CASE("error norms") {
    std::vector<double> zeros(5, 0.0);
    auto [linf0, l20] = error_norms(zeros, zeros);
    CHECK(linf0 == 0.0);
    CHECK(l20 == 0.0);

    std::vector<double> a{3.0, 0.0, 0.0, 0.0}, b(4, 0.0);
    auto [linf, l2] = error_norms(a, b);
    CHECK(linf == 3.0);
    CHECK(l2 == doctest::Approx(1.5).epsilon(1e-15));

    std::vector<double> c(7, -2.5), d(7, 0.0);
    auto [linfc, l2c] = error_norms(c, d);
    CHECK(linfc == 2.5);
    CHECK(l2c == doctest::Approx(2.5).epsilon(1e-15));

    CHECK_THROWS_AS(error_norms(a, zeros), std::invalid_argument);
}

TEST_CASE("norm properties: permutation invariance and l2 <= linf") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<double> x(64), y(64);
    for (int i = 0; i < 64; ++i) { x[i] = u(rng); y[i] = u(rng); }
    auto [linf, l2] = error_norms(x, y);
    CHECK(l2 <= linf + 1e-15);

    std::vector<int> perm(64);
    for (int i = 0; i < 64; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> xp(64), yp(64);
    for (int i = 0; i < 64; ++i) { xp[i] = x[perm[i]]; yp[i] = y[perm[i]]; }
    auto [plinf, pl2] = error_norms(xp, yp);
    CHECK(plinf == linf);
    CHECK(pl2 == doctest::Approx(l2).epsilon(1e-14));
}

TEST_CASE("convergence order") {
    CHECK(convergence_order(8e-4, 1e-4) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(convergence_order(3.99e-3, 5.00e-4) == doctest::Approx(3.0).epsilon(0.01));
    CHECK(convergence_order(4.10e-4, 1.38e-5) == doctest::Approx(4.9).epsilon(0.01));
    CHECK_THROWS_AS(convergence_order(0.0, 1e-4), std::invalid_argument);
    CHECK_THROWS_AS(convergence_order(1e-4, -1.0), std::invalid_argument);
}

TEST_CASE("h formatting") {
    CHECK(format_h(1.0 / 16) == "1/16");
    CHECK(format_h(1.0 / 128) == "1/128");
    CHECK(format_h(0.3) == "0.3");
}

TEST_CASE("table emission") {
    CHECK_THROWS_AS(emit_table({}, TableFormat::Csv), std::invalid_argument);

    std::vector<ConvergenceRow> rows;
    rows.push_back({1.0 / 16, 4302, 8.90e-3, 3.99e-3, {}, {}, {}});
    rows.push_back({1.0 / 32, 17070, 1.11e-3, 5.00e-4, 2.996, {}, {}});

    const std::string csv = emit_table(rows, TableFormat::Csv, "third order");
    CHECK(csv == "# third order\n"
                 "h,N,Linf,L2,Order\n"
                 "1/16,4302,8.90e-03,3.99e-03,\n"
                 "1/32,17070,1.11e-03,5.00e-04,3.0\n");

    const std::string md = emit_table(rows, TableFormat::Markdown);
    CHECK(md.find("| 1/32 | 17070 | 1.11e-03 | 5.00e-04 | 3.0   |") != std::string::npos);

    // solver columns appear when any row carries them
    rows[1].iterations = 23;
    rows[1].a_h = -4.2e-7;
    const std::string csv2 = emit_table(rows, TableFormat::Csv);
    CHECK(csv2.find("h,N,Linf,L2,Order,iters,a_h") == 0);
    CHECK(csv2.find("1/32,17070,1.11e-03,5.00e-04,3.0,23,-4.20e-07") != std::string::npos);

    // single row emits header plus one line
    const std::string one = emit_table({rows[0]}, TableFormat::Csv);
    CHECK(std::count(one.begin(), one.end(), '\n') == 2);
}

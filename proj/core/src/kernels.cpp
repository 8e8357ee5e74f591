#include "nbie/kernels.hpp"

#include <cmath>

namespace nbie {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoOverSqrtPi = 1.1283791670955126; // 2/sqrt(pi)
constexpr long double kTwoOverSqrtPiL = 1.128379167095512573896158903121545172L;

constexpr int kSeriesTerms = 128;

struct OddRecipTable {
    long double r[kSeriesTerms];
    constexpr OddRecipTable() : r{} {
        for (int k = 0; k < kSeriesTerms; ++k) r[k] = 1.0L / (2 * k + 1);
    }
};
constexpr OddRecipTable kOddRecip;

// exp(-a^2) with the argument split by fma so its rounding does not cost a
// digit for a^2 up to 9.
inline double exp_neg_sq(double a) {
    const double x2 = a * a;
    const double x2lo = std::fma(a, a, -x2);
    return std::exp(-x2) * (1.0 - x2lo);
}

// erf on [0,3] from the cancellation-free expansion
//   erf(a) = (2/sqrt(pi)) e^{-a^2} sum_k (2a^2)^k a / (1*3*...*(2k+1)),
// all terms positive; accumulated in extended precision.
double erf_series(double a) {
    const long double two_a2 = 2.0L * (long double)a * a;
    long double term = a;
    long double sum = a;
    for (int k = 1; k < kSeriesTerms; ++k) {
        term *= two_a2 * kOddRecip.r[k];
        sum += term;
        if (term < sum * 1e-19L) break;
    }
    return static_cast<double>(kTwoOverSqrtPiL * sum) * exp_neg_sq(a);
}

// erfc on (3,6) via the Laplace continued fraction
//   erfc(a) = e^{-a^2}/sqrt(pi) * 1/(a + (1/2)/(a + 1/(a + (3/2)/(a + ...)))),
// evaluated bottom-up at fixed depth. The depth gives erfc to ~1e-13
// relative here, and erfc < 3e-5 on this range, so the error reaching
// erf = 1 - erfc is far below one ulp.
double erfc_fraction(double a) {
    constexpr int depth = 24;
    double t = 0.0;
    for (int k = depth; k >= 2; --k) t = (0.5 * (k - 1)) / (a + t);
    const double inv_sqrt_pi = 0.5641895835477563;
    return exp_neg_sq(a) * inv_sqrt_pi / (a + t);
}

} // namespace

double erf(double x) {
    const double a = std::abs(x);
    double r;
    if (a >= 6.0) {
        r = 1.0; // erfc(6) ~ 2e-17, below half an ulp of 1
    } else if (a <= 3.0) {
        r = erf_series(a);
    } else {
        r = 1.0 - erfc_fraction(a);
    }
    return x < 0.0 ? -r : r;
}

double green(const Vec3& x) {
    const double r = x.norm();
    if (r == 0.0) throw std::domain_error("green: evaluated at x = 0");
    return -1.0 / (4.0 * kPi * r);
}

double adl_kernel(const Vec3& y, const Vec3& n_y, const Vec3& x) {
    const Vec3 d = y - x;
    const double r2 = d.norm2();
    if (r2 == 0.0) throw std::domain_error("adl_kernel: evaluated at x = y");
    const double r = std::sqrt(r2);
    return n_y.dot(d) / (4.0 * kPi * r2 * r);
}

namespace {

// Small-rho series of shape_third,
//   s3 = (2/sqrt(pi)) sum_{k>=1} (-1)^{k+1} (2k) rho^{2k+1} / (k! (2k+1)),
// used below rho = 0.5 where the closed form cancels catastrophically.
double shape_third_series(double rho) {
    const double rho2 = rho * rho;
    double u = rho * rho2; // rho^{2k+1}/k! at k = 1
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double term = u * (2.0 * k) / (2.0 * k + 1.0);
        sum += sign * term;
        if (term < 1e-18 * std::abs(sum) + 1e-300) break;
        u *= rho2 / (k + 1.0);
        sign = -sign;
    }
    return kTwoOverSqrtPi * sum;
}

} // namespace

double shape_third(double rho) {
    if (rho >= 6.0) return 1.0; // |1 - s| < 2e-15 here
    if (rho < 0.5) return shape_third_series(rho);
    return erf(rho) - kTwoOverSqrtPi * rho * std::exp(-rho * rho);
}

double shape_fifth(double rho) {
    if (rho >= 6.0) return 1.0; // |1 - s| < 4e-14 here
    const double rho2 = rho * rho;
    if (rho < 0.5) {
        // both contributions are positive, no cancellation
        return shape_third_series(rho) +
               kTwoOverSqrtPi * (2.0 / 3.0) * rho * rho2 * std::exp(-rho2);
    }
    return erf(rho) - kTwoOverSqrtPi * (rho - (2.0 / 3.0) * rho * rho2) * std::exp(-rho2);
}

double single_layer_shape(double rho) {
    if (rho >= 6.0) return 1.0; // |1 - s| < 4e-14 here
    const double rho2 = rho * rho;
    // erf and the polynomial term carry the same sign for small rho, so the
    // closed form is stable down to rho = 0.
    return erf(rho) +
           kTwoOverSqrtPi * ((5.0 / 3.0) * rho - (2.0 / 3.0) * rho * rho2) * std::exp(-rho2);
}

double regularized_green_at_zero(double delta) {
    if (delta <= 0.0) throw std::domain_error("regularized_green_at_zero: delta must be > 0");
    // -s'(0) / (4 pi delta) with s'(0) = 16 / (3 sqrt(pi))
    return -4.0 / (3.0 * kPi * std::sqrt(kPi) * delta);
}

double DeltaRule::resolve(double h) const {
    if (h <= 0.0) throw std::invalid_argument("DeltaRule::resolve: h must be > 0");
    return kind == Kind::MultipleOfH ? coeff * h : coeff * std::pow(h, exponent);
}

KernelConfig KernelConfig::resolved_for(double h) const {
    KernelConfig out = *this;
    out.delta = rule.resolve(h);
    out.validate();
    return out;
}

void KernelConfig::validate() const {
    if (mode == KernelMode::Unregularized) return;
    if (rule.coeff <= 0.0)
        throw std::invalid_argument("KernelConfig: delta coefficient must be > 0");
    if (rule.exponent <= 0.0 || rule.exponent > 1.0)
        throw std::invalid_argument("KernelConfig: delta exponent must be in (0, 1]");
    if (delta <= 0.0)
        throw std::invalid_argument("KernelConfig: delta not resolved (call resolved_for)");
}

} // namespace nbie

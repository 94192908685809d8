#pragma once

// Complex gamma, Hurwitz and Riemann zeta, binomial-series coefficients.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "complex_point.hpp"
#include "error.hpp"
#include "kahan.hpp"

namespace cyclospec {

/// Tuning knobs of the Euler-Maclaurin evaluation of the Hurwitz zeta function.
struct NumericOptions {
    /// Number of explicitly summed terms is max(em_terms_min, ceil(2 |Im s|)),
    /// lowered for Re s < 0 where fewer terms are more accurate.
    int em_terms_min = 20;
    /// Number of Bernoulli correction pairs (B_2 .. B_{2M}); at most 14.
    int em_corrections = 12;
};

namespace detail {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

// Bernoulli numbers B_2, B_4, ..., B_30 as numerator / denominator.
constexpr std::array<std::pair<double, double>, 15> kBernoulli = {{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

/// B_{2j} / (2j)! for j = 1..15.
inline const std::array<double, 15>& bernoulli_over_factorial() {
    static const std::array<double, 15> table = [] {
        std::array<double, 15> t{};
        double fact = 1.0;
        for (int j = 1; j <= 15; ++j) {
            fact *= static_cast<double>((2 * j - 1) * (2 * j));
            t[static_cast<std::size_t>(j - 1)] = kBernoulli[static_cast<std::size_t>(j - 1)].first /
                                                 kBernoulli[static_cast<std::size_t>(j - 1)].second / fact;
        }
        return t;
    }();
    return table;
}

inline bool is_nonpositive_integer(complex_t s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

/// (e^w - 1) / w, accurate near w = 0.
inline complex_t expm1_over_x(complex_t w) {
    if (std::abs(w) < 0.25) {
        complex_t term = 1.0;
        complex_t sum = 1.0;
        for (int n = 2; n < 30; ++n) {
            term *= w / static_cast<double>(n);
            sum += term;
            if (std::abs(term) < kEps * 1e-3) break;
        }
        return sum;
    }
    return (std::exp(w) - 1.0) / w;
}

/// x^{-s} for real x > 0 through the real logarithm.
inline complex_t real_pow_neg(double x, complex_t s) { return std::exp(-s * std::log(x)); }

/// N = max(em_terms_min, ceil(2 |Im s|)). For Re s < 0 the summed terms grow
/// like N^{-Re s}, so N is lowered to the smallest value whose truncation
/// bound is below rounding level relative to the integral term.
inline int euler_maclaurin_terms(complex_t s, double a, const NumericOptions& opt) {
    const int floor_t = static_cast<int>(std::ceil(2.0 * std::abs(s.imag())));
    const int n_default = std::max(opt.em_terms_min, floor_t);
    if (s.real() >= 0.0) return n_default;
    const int m = opt.em_corrections;
    complex_t rising = s;  // s (s+1) ... (s+2M)
    for (int i = 1; i <= 2 * m; ++i) rising *= s + static_cast<double>(i);
    const double next = std::abs(bernoulli_over_factorial()[static_cast<std::size_t>(m)] * rising) *
                        std::abs(s + static_cast<double>(2 * m + 1)) / (s.real() + 2.0 * m + 1.0);
    for (int n = std::max(1, floor_t); n < n_default; ++n) {
        const double x = n + a;
        const double truncation = next * std::pow(x, -s.real() - 2.0 * m - 1.0);
        const double scale = std::pow(x, 1.0 - s.real()) / std::abs(s - 1.0);
        if (truncation <= 0.1 * kEps * scale) return n;
    }
    return n_default;
}

/// Euler-Maclaurin evaluation of zeta(s, a), or of zeta(s, a) - 1/(s-1) when
/// `regularized` is set (entire in s).
inline Evaluation hurwitz_impl(complex_t s, double a, bool regularized, const NumericOptions& opt) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("Hurwitz parameter a must lie in (0, 1], got " + std::to_string(a));
    if (std::abs(s.imag()) > 100.0) {
        throw RangeError("|Im s| > 100 is outside the supported region of the Hurwitz zeta evaluation");
    }
    const int corrections = opt.em_corrections;
    if (corrections < 1 || corrections > 14) throw DomainError("Euler-Maclaurin corrections must be in [1, 14]");
    if (s.real() + 2.0 * corrections + 1.0 <= 0.0) {
        throw RangeError("Re s too negative for " + std::to_string(corrections) + " Euler-Maclaurin corrections");
    }

    const int n_terms = euler_maclaurin_terms(s, a, opt);
    const double abs_s = std::abs(s);

    KahanSum<complex_t> sum;
    double magnitude = 0.0;  // sum of |term| * relative rounding factor
    for (int m = 0; m < n_terms; ++m) {
        const double x = m + a;
        const double lx = std::log(x);
        const complex_t term = std::exp(-s * lx);
        sum += term;
        magnitude += std::abs(term) * (4.0 + abs_s * std::abs(lx));
    }

    const double x = n_terms + a;
    const double lx = std::log(x);
    const complex_t x_neg_s = std::exp(-s * lx);
    const double tail_scale = std::abs(x_neg_s) * (4.0 + abs_s * lx);

    complex_t integral;
    if (regularized) {
        integral = -lx * expm1_over_x((1.0 - s) * lx);
    } else {
        integral = x * x_neg_s / (s - 1.0);
    }
    sum += integral;
    sum += 0.5 * x_neg_s;
    magnitude += std::abs(integral) * (4.0 + abs_s * lx) + tail_scale;

    const auto& bf = bernoulli_over_factorial();
    complex_t rising = s;  // s (s+1) ... (s+2j-2)
    complex_t power = x_neg_s / x;  // x^{-s-2j+1}
    const double inv_x2 = 1.0 / (x * x);
    for (int j = 1; j <= corrections; ++j) {
        const complex_t term = bf[static_cast<std::size_t>(j - 1)] * rising * power;
        sum += term;
        magnitude += std::abs(term) * (4.0 + abs_s * lx);
        rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        power *= inv_x2;
    }
    // Remainder bound: |next correction| * |s + 2M + 1| / (Re s + 2M + 1).
    const double next = std::abs(bf[static_cast<std::size_t>(corrections)] * rising * power);
    const double truncation =
        next * std::abs(s + static_cast<double>(2 * corrections + 1)) / (s.real() + 2.0 * corrections + 1.0);

    return {sum.sum(), truncation + 2.0 * kEps * magnitude + 4.0 * kEps * std::abs(sum.sum())};
}

}  // namespace detail

/// Gamma(s) by the Lanczos approximation, with reflection for Re s < 1/2.
inline Evaluation complex_gamma(ComplexPoint point) {
    const complex_t s = point.value();
    if (detail::is_nonpositive_integer(s)) {
        throw PoleError("Gamma has a pole at s = " + std::to_string(s.real()));
    }
    if (std::abs(s.imag()) > 200.0 || std::abs(s) > 400.0) {
        throw RangeError("complex_gamma supports |Im s| <= 200");
    }
    if (s.real() < 0.5) {
        const Evaluation reflected = complex_gamma(ComplexPoint(1.0 - s));
        const complex_t sine = std::sin(std::numbers::pi * s);
        const complex_t value = std::numbers::pi / (sine * reflected.value);
        const double rel = reflected.abs_error_estimate / std::abs(reflected.value) +
                           8.0 * detail::kEps * (1.0 + std::abs(std::numbers::pi * s));
        return {value, rel * std::abs(value)};
    }
    const complex_t z = s - 1.0;
    complex_t series = detail::kLanczosCoeffs[0];
    for (std::size_t i = 1; i < detail::kLanczosCoeffs.size(); ++i) {
        series += detail::kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const complex_t t = z + detail::kLanczosG + 0.5;
    const complex_t exponent = (z + 0.5) * std::log(t) - t;
    const complex_t value = std::sqrt(2.0 * std::numbers::pi) * std::exp(exponent) * series;
    const double rel = 1e-15 + 4.0 * detail::kEps * (4.0 + std::abs(exponent));
    return {value, rel * std::abs(value)};
}

/// zeta(s, a) for 0 < a <= 1, analytically continued to s != 1.
inline Evaluation hurwitz_zeta(ComplexPoint s, double a, const NumericOptions& opt = {}) {
    if (s.re() == 1.0 && s.im() == 0.0) throw PoleError("Hurwitz zeta has a pole at s = 1");
    return detail::hurwitz_impl(s.value(), a, false, opt);
}

/// zeta(s, a) - 1/(s - 1), entire in s; equal to the Stieltjes-constant
/// series value at s = 1.
inline Evaluation hurwitz_zeta_regularized(ComplexPoint s, double a, const NumericOptions& opt = {}) {
    return detail::hurwitz_impl(s.value(), a, true, opt);
}

inline Evaluation riemann_zeta(ComplexPoint s, const NumericOptions& opt = {}) {
    return hurwitz_zeta(s, 1.0, opt);
}

/// zeta'(s) on the real axis by central differences (step h) with one
/// Richardson extrapolation step.
inline double riemann_zeta_derivative(double s, double h = 1e-5) {
    auto diff = [&](double step) {
        return (riemann_zeta(s + step).value.real() - riemann_zeta(s - step).value.real()) / (2.0 * step);
    };
    const double d1 = diff(h);
    const double d2 = diff(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

/// Coefficient a_m(s) of (1 - x)^{-s} = sum_m a_m(s) x^m, i.e. the rising
/// factorial s (s+1) ... (s+m-1) divided by m!.
inline double binomial_series_coeff(unsigned m, double s) {
    double a = 1.0;
    for (unsigned i = 1; i <= m; ++i) a *= (s + static_cast<double>(i) - 1.0) / static_cast<double>(i);
    return a;
}

}  // namespace cyclospec

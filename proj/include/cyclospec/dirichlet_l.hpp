#pragma once

// Classical Dirichlet L-functions through the Hurwitz decomposition, the
// completed function xi(s, chi), critical-line zeros and the modulus-ratio
// scans used in the GRH experiments.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "complex_point.hpp"
#include "error.hpp"
#include "kahan.hpp"
#include "parallel.hpp"
#include "special_functions.hpp"

namespace cyclospec {

struct CharacterId {
    std::int64_t modulus = 0;
    std::size_t index = 0;
};

struct LValue {
    ComplexPoint s{0.0};
    CharacterId chi_id;
    complex_t value{};
    double abs_error_estimate = 0.0;
};

/// A sampled function of sigma plus a monotonicity verdict.
struct SigmaScan {
    std::vector<std::pair<double, double>> rows;  // (sigma, value)
    bool strictly_monotone = true;
    /// Set when the scan was forced outside the |t| >= 8 hypothesis.
    bool outside_hypothesis = false;
};

namespace detail {

inline void require_nonprincipal(const DirichletCharacter& chi) {
    if (chi.is_principal()) throw HypothesisError("principal characters are not supported (" + chi.label() + ")");
    if (chi.modulus() < 3) throw HypothesisError("modulus must be >= 3");
}

inline void require_primitive_even(const DirichletCharacter& chi) {
    require_nonprincipal(chi);
    if (!chi.is_primitive()) throw HypothesisError(chi.label() + " is not primitive");
    if (!chi.is_even()) throw HypothesisError(chi.label() + " is not even");
}

inline void require_sigma_grid(std::span<const double> grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] < 1.0)) throw DomainError("sigma grid values must lie in (0, 1)");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("sigma grid must be strictly increasing");
    }
}

template <typename Cmp>
bool strictly_ordered(const std::vector<std::pair<double, double>>& rows, Cmp cmp) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!cmp(rows[i - 1].second, rows[i].second)) return false;
    }
    return true;
}

}  // namespace detail

/// L(s, chi) = k^{-s} sum_{m=1}^{k} chi(m) zeta(s, m/k) for non-principal chi.
///
/// Each Hurwitz value is taken with its 1/(s-1) pole removed; the removed
/// parts cancel because sum chi(m) = 0, and s = 1 needs no special casing.
inline LValue l_function(ComplexPoint s, const DirichletCharacter& chi, const NumericOptions& opt = {}) {
    detail::require_nonprincipal(chi);
    const std::int64_t k = chi.modulus();
    KahanSum<complex_t> acc;
    double err = 0.0;
    for (std::int64_t m = 1; m < k; ++m) {
        const complex_t c = chi(m);
        if (c == 0.0) continue;
        const Evaluation z = hurwitz_zeta_regularized(s, static_cast<double>(m) / static_cast<double>(k), opt);
        acc += c * z.value;
        err += z.abs_error_estimate + detail::kEps * std::abs(z.value);
    }
    const complex_t scale = detail::real_pow_neg(static_cast<double>(k), s.value());
    const complex_t value = scale * acc.sum();
    return {s, {k, chi.index()}, value, std::abs(scale) * err + 4.0 * detail::kEps * std::abs(value)};
}

/// d/ds L(s, chi) by a central difference of step h with one Richardson step.
inline complex_t l_function_derivative(ComplexPoint s, const DirichletCharacter& chi, double h = 1e-5) {
    auto diff = [&](double step) {
        return (l_function(ComplexPoint(s.value() + step), chi).value -
                l_function(ComplexPoint(s.value() - step), chi).value) /
               (2.0 * step);
    };
    return (4.0 * diff(h / 2.0) - diff(h)) / 3.0;
}

/// xi(s, chi) = (pi/k)^{-s/2} Gamma(s/2) L(s, chi) for primitive even chi.
inline LValue completed_xi(ComplexPoint s, const DirichletCharacter& chi, const NumericOptions& opt = {}) {
    detail::require_primitive_even(chi);
    const complex_t half = s.value() / 2.0;
    if (detail::is_nonpositive_integer(half)) {
        throw PoleError("xi(s, chi) has a Gamma(s/2) pole at s = " + std::to_string(s.re()));
    }
    const LValue l = l_function(s, chi, opt);
    const Evaluation g = complex_gamma(ComplexPoint(half));
    const double k = static_cast<double>(chi.modulus());
    const complex_t factor = std::exp(-half * std::log(std::numbers::pi / k));
    const complex_t value = factor * g.value * l.value;
    const double err = std::abs(factor) * (g.abs_error_estimate * std::abs(l.value) + std::abs(g.value) * l.abs_error_estimate) +
                       4.0 * detail::kEps * std::abs(value);
    return {s, l.chi_id, value, err};
}

/// Root-number check for critical-line zero finding: G(chi) must be the
/// positive real number sqrt(k).
inline void require_positive_root_number(const DirichletCharacter& chi) {
    const complex_t g = gauss_sum(chi);
    const double rk = std::sqrt(static_cast<double>(chi.modulus()));
    if (!(std::abs(g.imag()) <= 1e-9 * rk && g.real() > 0.0)) {
        throw HypothesisError(chi.label() + " does not have root number +1; xi is not real on the critical line");
    }
}

/// A zero t* of xi(1/2 + i t, chi) in (t_lo, t_hi), located by a sign-change
/// scan of step 0.05 followed by bisection. Requires chi primitive, even,
/// real, with G(chi) = +sqrt(k).
inline double find_critical_zero(const DirichletCharacter& chi, double t_lo, double t_hi,
                                 const NumericOptions& opt = {}) {
    detail::require_primitive_even(chi);
    if (!chi.is_real()) throw HypothesisError(chi.label() + " is not real");
    if (!(t_lo > 0.0 && t_lo < t_hi && t_hi <= 100.0)) {
        throw DomainError("zero search range must satisfy 0 < t_lo < t_hi <= 100");
    }
    require_positive_root_number(chi);

    auto f = [&](double t) { return completed_xi(ComplexPoint(0.5, t), chi, opt).value.real(); };
    constexpr double kStep = 0.05;
    double a = t_lo;
    double fa = f(a);
    if (fa == 0.0) return a;
    while (a < t_hi) {
        const double b = std::min(a + kStep, t_hi);
        const double fb = f(b);
        if (fb == 0.0) return b;
        if (std::signbit(fa) != std::signbit(fb)) {
            double lo = a, hi = b, flo = fa;
            for (int it = 0; it < 200 && hi - lo > 4.0 * detail::kEps * hi; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) return mid;
                if (std::signbit(fm) == std::signbit(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            const double t_star = 0.5 * (lo + hi);
            if (std::abs(completed_xi(ComplexPoint(0.5, t_star), chi, opt).value) > 1e-8) {
                throw NoZeroFoundError("sign change near t = " + std::to_string(t_star) +
                                       " did not converge to |xi| <= 1e-8");
            }
            return t_star;
        }
        a = b;
        fa = fb;
    }
    throw NoZeroFoundError("no sign change of xi(1/2 + it) in [" + std::to_string(t_lo) + ", " +
                           std::to_string(t_hi) + "]");
}

/// |L(s + 2, chi) / L(s - 2, chi)|.
inline double l_shift_ratio(ComplexPoint s, const DirichletCharacter& chi, const NumericOptions& opt = {}) {
    const complex_t up = l_function(ComplexPoint(s.value() + 2.0), chi, opt).value;
    const complex_t down = l_function(ComplexPoint(s.value() - 2.0), chi, opt).value;
    return std::abs(up) / std::abs(down);
}

/// Samples |L(sigma+it+2, chi) / L(sigma+it-2, chi)| over the grid and reports
/// whether it is strictly increasing. |t| < 8 is rejected unless `force`.
inline SigmaScan ratio_monotonicity_scan(const DirichletCharacter& chi, double t, std::span<const double> sigma_grid,
                                         bool force = false, std::size_t jobs = 1, const NumericOptions& opt = {}) {
    detail::require_nonprincipal(chi);
    detail::require_sigma_grid(sigma_grid);
    SigmaScan scan;
    if (std::abs(t) < 8.0) {
        if (!force) throw HypothesisError("monotonicity scan requires |t| >= 8 (use force to override)");
        scan.outside_hypothesis = true;
    }
    const auto values = parallel_map(sigma_grid.size(), jobs, [&](std::size_t i) {
        return l_shift_ratio(ComplexPoint(sigma_grid[i], t), chi, opt);
    });
    for (std::size_t i = 0; i < values.size(); ++i) scan.rows.emplace_back(sigma_grid[i], values[i]);
    scan.strictly_monotone = detail::strictly_ordered(scan.rows, std::less<>());
    return scan;
}

/// 4 pi^2 / (k^2 |s^2 - 1|).
inline double shift_ratio_target(std::int64_t k, ComplexPoint s) {
    const double kk = static_cast<double>(k);
    return 4.0 * std::numbers::pi * std::numbers::pi / (kk * kk * std::abs(s.value() * s.value() - 1.0));
}

inline SigmaScan rhs_decreasing_scan(std::int64_t k, double t, std::span<const double> sigma_grid) {
    if (t == 0.0) throw DomainError("rhs scan requires t != 0");
    if (k < 1) throw DomainError("modulus must be positive");
    detail::require_sigma_grid(sigma_grid);
    SigmaScan scan;
    for (double sigma : sigma_grid) scan.rows.emplace_back(sigma, shift_ratio_target(k, ComplexPoint(sigma, t)));
    scan.strictly_monotone = detail::strictly_ordered(scan.rows, std::greater<>());
    return scan;
}

}  // namespace cyclospec

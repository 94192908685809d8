#pragma once

// Spectral L-functions of the cycle Z/knZ, their completed versions, the
// two-term asymptotic expansion, the alpha coefficient of the n^{-2}
// correction, and the general-graph L_G over a Laplacian spectrum.

#include <algorithm>
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
#include "dirichlet_l.hpp"
#include "error.hpp"
#include "jacobi.hpp"
#include "kahan.hpp"
#include "parallel.hpp"
#include "special_functions.hpp"

namespace cyclospec {

/// Parameters (n, chi, s) of L_n(s, chi). The cycle has k n vertices.
class GraphLParams {
public:
    /// Validated construction: n >= 1, k >= 3, chi primitive and even.
    GraphLParams(std::int64_t n, DirichletCharacter chi, ComplexPoint s)
        : GraphLParams(n, std::move(chi), s, true) {}

    /// Skips the character hypotheses (n >= 1 is still enforced). Intended
    /// for exploring odd or imprimitive characters.
    static GraphLParams unchecked(std::int64_t n, DirichletCharacter chi, ComplexPoint s) {
        return {n, std::move(chi), s, false};
    }

    [[nodiscard]] std::int64_t n() const { return n_; }
    [[nodiscard]] const DirichletCharacter& chi() const { return chi_; }
    [[nodiscard]] ComplexPoint s() const { return s_; }
    [[nodiscard]] std::int64_t k() const { return chi_.modulus(); }
    [[nodiscard]] std::int64_t vertices() const { return n_ * chi_.modulus(); }

    [[nodiscard]] GraphLParams with_s(ComplexPoint s) const { return {n_, chi_, s, false}; }
    [[nodiscard]] GraphLParams with_n(std::int64_t n) const { return {n, chi_, s_, false}; }
    /// (n, conj chi, 1 - s)
    [[nodiscard]] GraphLParams reflected() const { return {n_, chi_.conjugate(), s_.reflect(), false}; }

private:
    GraphLParams(std::int64_t n, DirichletCharacter chi, ComplexPoint s, bool check)
        : n_(n), chi_(std::move(chi)), s_(s) {
        if (n_ < 1) throw DomainError("n must be >= 1");
        if (!check) return;
        if (chi_.modulus() < 3) throw HypothesisError("modulus must be >= 3");
        if (chi_.is_principal()) throw HypothesisError(chi_.label() + " is principal");
        if (!chi_.is_primitive()) throw HypothesisError(chi_.label() + " is not primitive");
        if (!chi_.is_even()) throw HypothesisError(chi_.label() + " is not even");
    }

    std::int64_t n_;
    DirichletCharacter chi_;
    ComplexPoint s_;
};

/// L_n(s, chi) = sum_{j=1}^{kn-1} chi(j) / sin(pi j / kn)^s.
///
/// Terms j and kn - j share the same sine, so they are combined first with
/// the exact coefficient chi(j) + chi(-j), which is 2 chi(j) for even and
/// exactly 0 for odd characters.
inline Evaluation graph_l_n(const GraphLParams& p) {
    const std::int64_t kn = p.vertices();
    const auto& chi = p.chi();
    const complex_t s = p.s().value();
    const double abs_s = std::abs(s);
    const std::int64_t half_turn = chi.denominator() / 2;
    KahanSum<complex_t> acc;
    double magnitude = 0.0;
    for (std::int64_t j = 1; 2 * j < kn; ++j) {
        const std::int64_t a = chi.angle(j);
        if (a < 0) continue;
        const std::int64_t b = chi.angle(kn - j);
        complex_t coeff;
        if (a == b) {
            coeff = 2.0 * chi(j);
        } else if (chi.denominator() % 2 == 0 && detail::mod_floor(a - b, chi.denominator()) == half_turn) {
            continue;
        } else {
            coeff = chi(j) + chi(kn - j);
        }
        const double ls = std::log(std::sin(std::numbers::pi * static_cast<double>(j) / static_cast<double>(kn)));
        const complex_t term = coeff * std::exp(-s * ls);
        acc += term;
        magnitude += std::abs(term) * (4.0 + abs_s * std::abs(ls));
    }
    if (kn % 2 == 0) acc += chi(kn / 2);  // sin(pi/2) = 1
    const complex_t value = acc.sum();
    return {value, 2.0 * detail::kEps * magnitude + 4.0 * detail::kEps * std::abs(value)};
}

/// xi_n(s, chi) = n^{-s} (pi/k)^{s/2} Gamma(s/2) L_n(s, chi), defined for
/// 0 < Re s < 1 unless `allow_outside_strip`.
inline Evaluation graph_xi_n(const GraphLParams& p, bool allow_outside_strip = false) {
    const ComplexPoint sp = p.s();
    if (!allow_outside_strip && !sp.in_open_strip()) {
        throw DomainError("xi_n is defined for 0 < Re s < 1 (got Re s = " + std::to_string(sp.re()) + ")");
    }
    const complex_t s = sp.value();
    if (detail::is_nonpositive_integer(s / 2.0)) throw PoleError("Gamma(s/2) pole");
    const Evaluation ln = graph_l_n(p);
    const Evaluation g = complex_gamma(ComplexPoint(s / 2.0));
    const double k = static_cast<double>(p.k());
    const complex_t factor = std::exp(-s * std::log(static_cast<double>(p.n())) + (s / 2.0) * std::log(std::numbers::pi / k));
    const complex_t value = factor * g.value * ln.value;
    const double err = std::abs(factor) * (g.abs_error_estimate * std::abs(ln.value) + std::abs(g.value) * ln.abs_error_estimate) +
                       4.0 * detail::kEps * std::abs(value);
    return {value, err};
}

/// Two-term expansion 2 (kn/pi)^s (L(s,chi) + (s/6) (kn/pi)^{-2} L(s-2,chi)).
inline Evaluation asymptotic_l_n(const GraphLParams& p, const NumericOptions& opt = {}) {
    const complex_t s = p.s().value();
    const double x = static_cast<double>(p.vertices()) / std::numbers::pi;
    const LValue l0 = l_function(p.s(), p.chi(), opt);
    const LValue l2 = l_function(ComplexPoint(s - 2.0), p.chi(), opt);
    const complex_t scale = 2.0 * std::exp(s * std::log(x));
    const complex_t inner = l0.value + (s / 6.0) / (x * x) * l2.value;
    const complex_t value = scale * inner;
    const double err = std::abs(scale) * (l0.abs_error_estimate + std::abs(s) / 6.0 / (x * x) * l2.abs_error_estimate) +
                       4.0 * detail::kEps * std::abs(value);
    return {value, err};
}

/// Remainder terms of the expansion, normalised so that the leading term is
/// L(s, chi):
///   first_order  = (pi/kn)^s L_n / 2 - L(s, chi)
///   second_order = first_order - (s/6) (pi/kn)^2 L(s-2, chi)
struct ExpansionRemainder {
    complex_t first_order;
    complex_t second_order;
};

inline ExpansionRemainder asymptotic_remainder(const GraphLParams& p, const NumericOptions& opt = {}) {
    const complex_t s = p.s().value();
    const double y = std::numbers::pi / static_cast<double>(p.vertices());
    const complex_t normalised = std::exp(s * std::log(y)) * graph_l_n(p).value / 2.0;
    const complex_t first = normalised - l_function(p.s(), p.chi(), opt).value;
    const complex_t second = first - (s / 6.0) * y * y * l_function(ComplexPoint(s - 2.0), p.chi(), opt).value;
    return {first, second};
}

/// alpha(s, chi) = (s/3) (pi/k)^{2 - s/2} Gamma(s/2) L(s - 2, chi), the
/// coefficient of n^{-2} in xi_n(s, chi) = 2 xi(s, chi) + alpha(s, chi) / n^2 + O(n^{-4}).
inline Evaluation alpha(ComplexPoint sp, const DirichletCharacter& chi, const NumericOptions& opt = {}) {
    detail::require_primitive_even(chi);
    const complex_t s = sp.value();
    if (detail::is_nonpositive_integer(s / 2.0)) throw PoleError("alpha has a Gamma(s/2) pole at s = " + std::to_string(sp.re()));
    const Evaluation g = complex_gamma(ComplexPoint(s / 2.0));
    const LValue l = l_function(ComplexPoint(s - 2.0), chi, opt);
    const double k = static_cast<double>(chi.modulus());
    const complex_t factor = (s / 3.0) * std::exp((2.0 - s / 2.0) * std::log(std::numbers::pi / k));
    const complex_t value = factor * g.value * l.value;
    const double err = std::abs(factor) * (g.abs_error_estimate * std::abs(l.value) + std::abs(g.value) * l.abs_error_estimate) +
                       4.0 * detail::kEps * std::abs(value);
    return {value, err};
}

/// |alpha(s, chi)| - |alpha(1 - s, conj chi)|
inline double alpha_symmetry_residual(ComplexPoint s, const DirichletCharacter& chi, const NumericOptions& opt = {}) {
    return std::abs(alpha(s, chi, opt).value) - std::abs(alpha(s.reflect(), chi.conjugate(), opt).value);
}

/// |L(s+2, chi) / L(s-2, chi)| - 4 pi^2 / (k^2 |s^2 - 1|); vanishes exactly when
/// the alpha symmetry residual does.
inline double shift_ratio_residual(ComplexPoint s, const DirichletCharacter& chi, const NumericOptions& opt = {}) {
    return l_shift_ratio(s, chi, opt) - shift_ratio_target(chi.modulus(), s);
}

/// |xi_n(s, chi)| / |xi_n(1 - s, conj chi)|.
inline double xi_ratio(ComplexPoint s, const DirichletCharacter& chi, std::int64_t n, bool allow_outside_strip = false) {
    const GraphLParams p(n, chi, s);
    const double num = std::abs(graph_xi_n(p, allow_outside_strip).value);
    const double den = std::abs(graph_xi_n(p.reflected(), allow_outside_strip).value);
    if (!(den > 1e-14)) {
        throw DivisionGuardError("|xi_n(1 - s, conj chi)| <= 1e-14 at s = (" + std::to_string(s.re()) + ", " +
                                 std::to_string(s.im()) + "), n = " + std::to_string(n));
    }
    return num / den;
}

/// |L(s, chi)| below this marks a grid point as near a zero of L.
inline constexpr double kNearZeroThreshold = 1e-6;

struct RatioRow {
    double sigma = 0.0;
    double t = 0.0;
    std::int64_t n = 0;
    double ratio = 0.0;
    double abs_ratio_minus_1 = 0.0;
    bool near_zero = false;
    /// |alpha(s, chi)| / |alpha(1 - s, conj chi)|, the limit of the ratio at zeros of L.
    double alpha_ratio = 0.0;
    /// |2 xi(s, chi)|, the limit of |xi_n(s, chi)| away from zeros of L.
    double two_xi_abs = 0.0;
    /// Set when Im s < 8, outside the region the equivalence speaks about.
    bool outside_hypothesis = false;
};

/// Tabulates xi_ratio over s_grid x n_list, ordered by grid index then n.
inline std::vector<RatioRow> ratio_experiment(const DirichletCharacter& chi, std::span<const ComplexPoint> s_grid,
                                              std::span<const std::int64_t> n_list, std::size_t jobs = 1,
                                              const NumericOptions& opt = {}) {
    detail::require_primitive_even(chi);
    if (n_list.empty()) return {};
    for (auto n : n_list) {
        if (n < 1) throw DomainError("n must be >= 1");
    }
    for (const auto& s : s_grid) {
        if (!s.in_open_strip()) throw DomainError("ratio experiment grid must lie in 0 < Re s < 1");
    }
    const DirichletCharacter conj = chi.conjugate();
    auto per_point = parallel_map(s_grid.size(), jobs, [&](std::size_t i) {
        const ComplexPoint s = s_grid[i];
        const double l_abs = std::abs(l_function(s, chi, opt).value);
        const double two_xi = 2.0 * std::abs(completed_xi(s, chi, opt).value);
        const double a_num = std::abs(alpha(s, chi, opt).value);
        const double a_den = std::abs(alpha(s.reflect(), conj, opt).value);
        std::vector<RatioRow> rows;
        for (auto n : n_list) {
            RatioRow r;
            r.sigma = s.re();
            r.t = s.im();
            r.n = n;
            r.ratio = xi_ratio(s, chi, n);
            r.abs_ratio_minus_1 = std::abs(r.ratio - 1.0);
            r.near_zero = l_abs < kNearZeroThreshold;
            r.alpha_ratio = a_num / a_den;
            r.two_xi_abs = two_xi;
            r.outside_hypothesis = s.im() < 8.0;
            rows.push_back(r);
        }
        return rows;
    });
    std::vector<RatioRow> out;
    for (auto& rows : per_point) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

/// Eigenvalues of a combinatorial Laplacian, sorted ascending.
class LaplacianSpectrum {
public:
    explicit LaplacianSpectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
        std::sort(values_.begin(), values_.end());
        const double scale = values_.empty() ? 1.0 : std::max(1.0, std::abs(values_.back()));
        for (double& v : values_) {
            if (!std::isfinite(v)) throw DomainError("eigenvalues must be finite");
            if (v < -1e-9 * scale) throw DomainError("Laplacian eigenvalues must be nonnegative");
            if (v < 0.0) v = 0.0;
        }
    }

    [[nodiscard]] std::span<const double> eigenvalues() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    /// Number of eigenvalues within 1e-9 (relative to the largest) of zero.
    [[nodiscard]] std::size_t zero_count() const {
        const double tol = 1e-9 * (values_.empty() ? 1.0 : std::max(1.0, values_.back()));
        return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [&](double v) { return v <= tol; }));
    }

private:
    std::vector<double> values_;
};

/// Combinatorial Laplacian spectrum of the graph on m vertices with the given
/// undirected edges, by the Jacobi eigensolver.
inline LaplacianSpectrum laplacian_spectrum(std::size_t m, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    if (m == 0 || m > 2000) throw DomainError("graph size must be in [1, 2000]");
    SymmetricMatrix lap(m);
    for (auto [u, v] : edges) {
        if (u >= m || v >= m || u == v) throw DomainError("invalid edge");
        lap(u, u) += 1.0;
        lap(v, v) += 1.0;
        lap(u, v) -= 1.0;
        lap(v, u) -= 1.0;
    }
    return LaplacianSpectrum(jacobi_eigenvalues(std::move(lap)));
}

/// Laplacian spectrum of the cycle C_m.
inline LaplacianSpectrum cycle_spectrum(std::size_t m) {
    if (m < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    return laplacian_spectrum(m, edges);
}

enum class EigenOrder {
    /// Nonzero eigenvalues in ascending order.
    ascending,
    /// Circulant frequency order lambda_j = lambda_{m-j}, reconstructed from
    /// the ascending list by dealing consecutive pairs to j and m - j.
    frequency,
};

/// Nonzero eigenvalues lambda_1 .. lambda_{m-1} in the requested order.
inline std::vector<double> ordered_nonzero_eigenvalues(const LaplacianSpectrum& spectrum, EigenOrder order) {
    if (spectrum.zero_count() != 1) {
        throw DisconnectedGraphError("spectrum has " + std::to_string(spectrum.zero_count()) +
                                     " zero eigenvalues; the graph must be connected");
    }
    const auto all = spectrum.eigenvalues();
    std::vector<double> asc(all.begin() + 1, all.end());
    if (asc.empty()) throw DomainError("spectrum needs at least one nonzero eigenvalue");
    if (order == EigenOrder::ascending) return asc;
    const std::size_t m = asc.size() + 1;
    std::vector<double> freq(m - 1);
    for (std::size_t i = 1; 2 * i <= m - 1; ++i) {
        freq[i - 1] = asc[2 * i - 2];
        freq[m - i - 1] = asc[2 * i - 1];
    }
    if (m % 2 == 0) freq[m / 2 - 1] = asc.back();
    return freq;
}

/// L_G(s, chi) = sum_{j=1}^{m-1} chi(j) lambda_j^{-s}.
inline Evaluation graph_l_general(const LaplacianSpectrum& spectrum, const DirichletCharacter& chi, ComplexPoint sp,
                                  EigenOrder order = EigenOrder::ascending) {
    if (chi.modulus() < 3) throw HypothesisError("modulus must be >= 3");
    const auto lambdas = ordered_nonzero_eigenvalues(spectrum, order);
    const complex_t s = sp.value();
    KahanSum<complex_t> acc;
    double magnitude = 0.0;
    for (std::size_t j = 1; j <= lambdas.size(); ++j) {
        const complex_t c = chi(static_cast<std::int64_t>(j));
        if (c == 0.0) continue;
        const double ll = std::log(lambdas[j - 1]);
        const complex_t term = c * std::exp(-s * ll);
        acc += term;
        magnitude += std::abs(term) * (4.0 + std::abs(s) * std::abs(ll));
    }
    return {acc.sum(), 2.0 * detail::kEps * magnitude};
}

}  // namespace cyclospec

#pragma once

// Character power sums S(m, chi) in exact integer arithmetic, the twisted
// Faulhaber identity, cosine power sums T(m) and the positivity scans built
// on them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "characters.hpp"
#include "complex_point.hpp"
#include "dirichlet_l.hpp"
#include "error.hpp"
#include "graph_l.hpp"
#include "kahan.hpp"
#include "parallel.hpp"
#include "special_functions.hpp"

namespace cyclospec {

using BigInt = boost::multiprecision::cpp_int;

/// sum_{j=1}^{kn-1} chi(j) j^m, held exactly.
struct ExactSum {
    BigInt value;
    unsigned m = 0;
    CharacterId chi_id;
    std::int64_t range_end = 0;  // kn

    [[nodiscard]] int sign() const { return value.sign(); }
    [[nodiscard]] std::string decimal() const { return value.str(); }
};

namespace detail {

inline void require_real(const DirichletCharacter& chi) {
    if (!chi.is_real()) throw HypothesisError(chi.label() + " is not real; S(m, chi) would not be an integer");
}

inline void require_primitive_even_real(const DirichletCharacter& chi) {
    require_primitive_even(chi);
    require_real(chi);
}

}  // namespace detail

/// sum_{j=1}^{kn-1} chi(j) j^m for a real character, exactly.
inline ExactSum s_power_sum_range(unsigned m, const DirichletCharacter& chi, std::int64_t n) {
    detail::require_real(chi);
    if (n < 1) throw DomainError("n must be >= 1");
    const std::int64_t kn = chi.modulus() * n;
    BigInt pos = 0;
    BigInt neg = 0;
    for (std::int64_t j = 1; j < kn; ++j) {
        const int c = chi.real_value(j);
        if (c == 0) continue;
        BigInt term = boost::multiprecision::pow(BigInt(j), m);
        (c > 0 ? pos : neg) += term;
    }
    return {pos - neg, m, {chi.modulus(), chi.index()}, kn};
}

/// S(m, chi) = sum_{j=1}^{k-1} chi(j) j^m.
inline ExactSum s_power_sum(unsigned m, const DirichletCharacter& chi) { return s_power_sum_range(m, chi, 1); }

/// m (m-1) ... (m - len + 1)
inline double falling_factorial(unsigned m, unsigned len) {
    double r = 1.0;
    for (unsigned i = 0; i < len; ++i) r *= static_cast<double>(m) - static_cast<double>(i);
    return r;
}

/// Right-hand side of the twisted Faulhaber identity
///   (kn)^{-m} sum_{j<kn} chi(j) j^m
///     = 2 n sqrt(k) sum_{j=1}^{floor(m/2)} (-1)^{j+1} m (m-1) ... (m-2j+2) / (4 pi^2 n^2)^j L(2j, chi).
inline Evaluation faulhaber_rhs(unsigned m, const DirichletCharacter& chi, std::int64_t n,
                                const NumericOptions& opt = {}) {
    detail::require_primitive_even_real(chi);
    if (m < 2) throw DomainError("Faulhaber identity requires m >= 2");
    if (n < 1) throw DomainError("n must be >= 1");
    const double nn = static_cast<double>(n);
    const double base = 4.0 * std::numbers::pi * std::numbers::pi * nn * nn;
    KahanSum<double> acc;
    double err = 0.0;
    double power = 1.0;
    for (unsigned j = 1; j <= m / 2; ++j) {
        power *= base;
        const LValue l = l_function(ComplexPoint(2.0 * j), chi, opt);
        const double coeff = (j % 2 == 1 ? 1.0 : -1.0) * falling_factorial(m, 2 * j - 1) / power;
        acc += coeff * l.value.real();
        err += std::abs(coeff) * (l.abs_error_estimate + 4.0 * detail::kEps * std::abs(l.value));
    }
    const double scale = 2.0 * nn * std::sqrt(static_cast<double>(chi.modulus()));
    const double value = scale * acc.sum();
    return {value, scale * err + 4.0 * detail::kEps * std::abs(value)};
}

/// Left-hand side (kn)^{-m} sum_{j<kn} chi(j) j^m, rounded once from the exact rational.
inline double faulhaber_lhs(unsigned m, const DirichletCharacter& chi, std::int64_t n) {
    const ExactSum s = s_power_sum_range(m, chi, n);
    const BigInt den = boost::multiprecision::pow(BigInt(s.range_end), m);
    return boost::multiprecision::cpp_rational(s.value, den).convert_to<double>();
}

struct SignEntry {
    unsigned m = 0;
    int sign = 0;
    BigInt value;
};

struct Corollary6Report {
    /// Exact signs of S(m, chi) for m = 2..7.
    std::vector<SignEntry> proven_range;
    /// Exact signs for the sampled m >= k - 2 (domination region).
    std::vector<SignEntry> domination_sample;

    [[nodiscard]] bool all_positive() const {
        auto pos = [](const SignEntry& e) { return e.sign > 0; };
        return std::all_of(proven_range.begin(), proven_range.end(), pos) &&
               std::all_of(domination_sample.begin(), domination_sample.end(), pos);
    }
};

/// The m values >= k - 2 sampled by the domination check: k - 2, k - 1 and 2k.
inline std::vector<unsigned> domination_sample_exponents(std::int64_t k) {
    const auto base = static_cast<unsigned>(std::max<std::int64_t>(k - 2, 2));
    return {base, base + 1, static_cast<unsigned>(2 * k)};
}

inline Corollary6Report corollary6_check(const DirichletCharacter& chi,
                                         std::span<const unsigned> domination_exponents = {}) {
    detail::require_primitive_even_real(chi);
    Corollary6Report report;
    for (unsigned m = 2; m <= 7; ++m) {
        auto s = s_power_sum(m, chi);
        report.proven_range.push_back({m, s.sign(), std::move(s.value)});
    }
    std::vector<unsigned> sample(domination_exponents.begin(), domination_exponents.end());
    if (sample.empty()) sample = domination_sample_exponents(chi.modulus());
    for (unsigned m : sample) {
        if (static_cast<std::int64_t>(m) < chi.modulus() - 2) {
            throw DomainError("domination sample requires m >= k - 2");
        }
        auto s = s_power_sum(m, chi);
        report.domination_sample.push_back({m, s.sign(), std::move(s.value)});
    }
    return report;
}

/// T(m) = sum_{j=1}^{kn-1} chi(j) cos^{2m}(pi j / kn).
inline Evaluation cos_power_sum(unsigned m, const DirichletCharacter& chi, std::int64_t n) {
    detail::require_primitive_even_real(chi);
    if (n < 1) throw DomainError("n must be >= 1");
    const std::int64_t kn = chi.modulus() * n;
    KahanSum<double> acc;
    double magnitude = 0.0;
    for (std::int64_t j = 1; j < kn; ++j) {
        const int c = chi.real_value(j);
        if (c == 0) continue;
        const double cs = std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(kn));
        const double term = std::pow(cs * cs, static_cast<double>(m));
        acc += c * term;
        magnitude += term * (4.0 + 2.0 * m);
    }
    return {acc.sum(), 2.0 * detail::kEps * magnitude};
}

struct CosScanRow {
    unsigned m = 0;
    double value = 0.0;
    int sign = 0;
};

struct CosScan {
    std::vector<CosScanRow> rows;
    std::size_t negative_count = 0;
};

/// T(m) and its sign for m = 1..m_max. Reports only.
inline CosScan cos_scan(const DirichletCharacter& chi, std::int64_t n, unsigned m_max, std::size_t jobs = 1) {
    detail::require_primitive_even_real(chi);
    CosScan scan;
    scan.rows = parallel_map(m_max, jobs, [&](std::size_t i) {
        const auto m = static_cast<unsigned>(i + 1);
        const Evaluation t = cos_power_sum(m, chi, n);
        const double v = t.value.real();
        const int sign = std::abs(v) <= t.abs_error_estimate ? 0 : (v > 0.0 ? 1 : -1);
        return CosScanRow{m, v, sign};
    });
    scan.negative_count = static_cast<std::size_t>(
        std::count_if(scan.rows.begin(), scan.rows.end(), [](const CosScanRow& r) { return r.sign < 0; }));
    return scan;
}

/// Truncated binomial expansion sum_{m=1}^{M} a_m(s/2) T(m) of L_n(s, chi) for
/// real 0 < s < 1, with a bound on what the truncation and rounding can miss.
struct BinomialExpansion {
    double partial_sum = 0.0;
    double tail_bound = 0.0;      // (kn - 1) sum_{m > M} a_m(s/2) cos^{2m}(pi/kn)
    double rounding_bound = 0.0;  // floating-point error of partial_sum
};

inline BinomialExpansion binomial_expansion(const DirichletCharacter& chi, std::int64_t n, double s, unsigned terms) {
    detail::require_primitive_even_real(chi);
    if (!(s > 0.0 && s < 1.0)) throw DomainError("binomial expansion needs 0 < s < 1");
    BinomialExpansion out;
    KahanSum<double> acc;
    double a = 1.0;
    for (unsigned m = 1; m <= terms; ++m) {
        a *= (s / 2.0 + m - 1.0) / m;
        const Evaluation t = cos_power_sum(m, chi, n);
        acc += a * t.value.real();
        out.rounding_bound += a * t.abs_error_estimate + 4.0 * detail::kEps * std::abs(a * t.value.real());
    }
    out.partial_sum = acc.sum();
    out.rounding_bound += 4.0 * detail::kEps * std::abs(out.partial_sum);

    // Tail: 1000 further terms summed directly, then a geometric bound
    // (a_m(s/2) is decreasing in m for s/2 < 1).
    const double kn = static_cast<double>(chi.modulus() * n);
    const double c = std::cos(std::numbers::pi / kn);
    const double x = c * c;
    double xm = std::pow(x, static_cast<double>(terms));
    KahanSum<double> tail;
    for (unsigned m = terms + 1; m <= terms + 1000; ++m) {
        a *= (s / 2.0 + m - 1.0) / m;
        xm *= x;
        tail += a * xm;
    }
    tail += a * xm * x / (1.0 - x);
    out.tail_bound = (kn - 1.0) * tail.sum();
    return out;
}

struct Corollary5Row {
    std::int64_t n = 0;
    double l_n = 0.0;
    int sign = 0;
    /// sign(L(s, chi)), the sign L_n must eventually take.
    int limit_sign = 0;
    bool agrees = false;
};

/// Signs of the real values L_n(s, chi) for n in n_list, against sign(L(s, chi)).
inline std::vector<Corollary5Row> corollary5_scan(const DirichletCharacter& chi, double s,
                                                  std::span<const std::int64_t> n_list, std::size_t jobs = 1,
                                                  const NumericOptions& opt = {}) {
    detail::require_primitive_even_real(chi);
    if (!(s > 0.0 && s < 1.0)) throw DomainError("corollary 5 scan needs 0 < s < 1");
    if (n_list.empty()) return {};
    const double l = l_function(ComplexPoint(s), chi, opt).value.real();
    const int limit_sign = l > 0.0 ? 1 : (l < 0.0 ? -1 : 0);
    return parallel_map(n_list.size(), jobs, [&](std::size_t i) {
        const Evaluation ln = graph_l_n(GraphLParams(n_list[i], chi, ComplexPoint(s)));
        const double v = ln.value.real();
        Corollary5Row row;
        row.n = n_list[i];
        row.l_n = v;
        row.sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        row.limit_sign = limit_sign;
        row.agrees = row.sign == limit_sign;
        return row;
    });
}

}  // namespace cyclospec

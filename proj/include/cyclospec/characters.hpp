#pragma once

// Dirichlet characters modulo k: enumeration, classification, Gauss sums.
//
// A character is stored through exact angles: chi(j) = exp(2 pi i a_j / D)
// where D is the exponent of (Z/kZ)^* (common to every character mod k).
// Non-units carry the sentinel angle -1. Floating values are derived from
// the angles, so orthogonality, realness and parity tests never depend on
// rounding.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "complex_point.hpp"
#include "error.hpp"
#include "kahan.hpp"

namespace cyclospec {

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t result = 1 % mod;
    base = mod_floor(base, mod);
    while (exp > 0) {
        if (exp & 1) result = (result * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return result;
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest primitive root modulo an odd prime p.
inline std::int64_t primitive_root_mod_prime(std::int64_t p) {
    if (p == 2) return 1;
    const auto factors = factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

/// Chinese remainder lift: the residue mod `modulus` that is `r` mod `part`
/// and 1 mod modulus/part (the two moduli are coprime).
inline std::int64_t crt_lift(std::int64_t r, std::int64_t part, std::int64_t modulus) {
    for (std::int64_t x = r; x < modulus; x += part) {
        if (x % (modulus / part) == 1 % (modulus / part)) return x;
    }
    return r;
}

/// e^{2 pi i num/den}, exact at the quarter turns.
inline complex_t root_of_unity(std::int64_t num, std::int64_t den) {
    num = mod_floor(num, den);
    if (num == 0) return {1.0, 0.0};
    if (4 * num == den) return {0.0, 1.0};
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

/// One cyclic factor of (Z/kZ)^*: a generator (lifted to mod k) and its order.
struct CyclicFactor {
    std::int64_t generator;
    std::int64_t order;
};

inline std::vector<CyclicFactor> unit_group_decomposition(std::int64_t k) {
    std::vector<CyclicFactor> out;
    for (auto [p, e] : factorize(k)) {
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue;
            out.push_back({crt_lift(pe - 1, pe, k), 2});
            if (e >= 3) out.push_back({crt_lift(5, pe, k), pe / 4});
            continue;
        }
        std::int64_t g = primitive_root_mod_prime(p);
        if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
        out.push_back({crt_lift(g, pe, k), pe / p * (p - 1)});
    }
    return out;
}

}  // namespace detail

/// A Dirichlet character modulo k with its classification metadata.
class DirichletCharacter {
public:
    /// Builds a character from its exact angle table (length k, entries in
    /// [0, denominator) for units and -1 for non-units).
    DirichletCharacter(std::int64_t modulus, std::int64_t denominator, std::vector<std::int64_t> angles)
        : modulus_(modulus), denominator_(denominator), angles_(std::move(angles)) {
        values_.resize(angles_.size());
        std::int64_t g = denominator_;
        for (std::size_t j = 0; j < angles_.size(); ++j) {
            if (angles_[j] < 0) continue;
            values_[j] = detail::root_of_unity(angles_[j], denominator_);
            g = std::gcd(g, angles_[j]);
        }
        order_ = denominator_ / g;
        is_real_ = std::all_of(angles_.begin(), angles_.end(),
                               [&](std::int64_t a) { return a <= 0 || 2 * a == denominator_; });
        is_even_ = angles_[static_cast<std::size_t>(detail::mod_floor(-1, modulus_))] == 0;
        conductor_ = compute_conductor();
    }

    [[nodiscard]] std::int64_t modulus() const { return modulus_; }
    [[nodiscard]] std::int64_t order() const { return order_; }
    [[nodiscard]] bool is_even() const { return is_even_; }
    [[nodiscard]] bool is_odd() const { return !is_even_; }
    [[nodiscard]] bool is_real() const { return is_real_; }
    [[nodiscard]] bool is_principal() const { return order_ == 1; }
    [[nodiscard]] std::int64_t conductor() const { return conductor_; }
    [[nodiscard]] bool is_primitive() const { return conductor_ == modulus_; }
    /// Position in the deterministic enumeration order of its modulus.
    [[nodiscard]] std::size_t index() const { return index_; }
    void set_index(std::size_t index) { index_ = index; }

    [[nodiscard]] std::int64_t denominator() const { return denominator_; }
    [[nodiscard]] std::span<const std::int64_t> angles() const { return angles_; }
    [[nodiscard]] std::span<const complex_t> values() const { return values_; }

    /// chi(j), reducing j mod k.
    [[nodiscard]] complex_t operator()(std::int64_t j) const {
        return values_[static_cast<std::size_t>(detail::mod_floor(j, modulus_))];
    }
    /// Exact angle numerator of chi(j) over denominator(), or -1 when gcd(j,k) > 1.
    [[nodiscard]] std::int64_t angle(std::int64_t j) const {
        return angles_[static_cast<std::size_t>(detail::mod_floor(j, modulus_))];
    }
    /// chi(j) as an integer in {-1, 0, 1}; only meaningful for real characters.
    [[nodiscard]] int real_value(std::int64_t j) const {
        const std::int64_t a = angle(j);
        return a < 0 ? 0 : (a == 0 ? 1 : -1);
    }

    [[nodiscard]] DirichletCharacter conjugate() const {
        std::vector<std::int64_t> conj(angles_.size());
        for (std::size_t j = 0; j < angles_.size(); ++j) {
            conj[j] = angles_[j] < 0 ? -1 : detail::mod_floor(-angles_[j], denominator_);
        }
        DirichletCharacter out(modulus_, denominator_, std::move(conj));
        return out;
    }

    /// Exact test of sum_{j=1}^{k} chi(j) == 0: a non-principal character takes
    /// every value of its image (the order-d roots of unity) equally often.
    [[nodiscard]] bool exact_sum_vanishes() const {
        if (order_ == 1) return false;
        std::vector<std::int64_t> counts(static_cast<std::size_t>(order_), 0);
        const std::int64_t step = denominator_ / order_;
        for (std::int64_t a : angles_) {
            if (a < 0) continue;
            if (a % step != 0) return false;
            ++counts[static_cast<std::size_t>(a / step)];
        }
        return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
    }

    [[nodiscard]] std::string label() const {
        return "chi(" + std::to_string(modulus_) + "," + std::to_string(index_) + ")";
    }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.angles_ == b.angles_;
    }

private:
    // Smallest f | k such that chi(j) = 1 for every unit j = 1 mod f.
    [[nodiscard]] std::int64_t compute_conductor() const {
        for (std::int64_t f : detail::divisors(modulus_)) {
            bool induced = true;
            for (std::int64_t j = 1; j < modulus_ && induced; j += f) {
                induced = angles_[static_cast<std::size_t>(j)] <= 0;
            }
            if (induced) return f;
        }
        return modulus_;
    }

    std::int64_t modulus_;
    std::int64_t denominator_;
    std::vector<std::int64_t> angles_;
    std::vector<complex_t> values_;
    std::int64_t order_ = 1;
    bool is_real_ = true;
    bool is_even_ = true;
    std::int64_t conductor_ = 1;
    std::size_t index_ = 0;
};

inline std::int64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

/// All phi(k) characters modulo k, sorted lexicographically by exact angle
/// table; index 0 is the principal character.
inline std::vector<DirichletCharacter> enumerate_characters(std::int64_t k) {
    if (k < 1) throw DomainError("modulus must be >= 1, got " + std::to_string(k));
    const auto factors = detail::unit_group_decomposition(k);
    std::int64_t exponent = 1;
    for (const auto& f : factors) exponent = std::lcm(exponent, f.order);

    // Discrete logs of every unit with respect to the generators.
    const std::size_t r = factors.size();
    std::vector<std::vector<std::int64_t>> logs(static_cast<std::size_t>(k));
    std::vector<std::int64_t> e(r, 0);
    for (;;) {
        std::int64_t x = 1 % k;
        for (std::size_t i = 0; i < r; ++i) x = (x * detail::pow_mod(factors[i].generator, e[i], k)) % k;
        logs[static_cast<std::size_t>(x)] = e;
        std::size_t i = 0;
        while (i < r && ++e[i] == factors[i].order) e[i++] = 0;
        if (i == r) break;
    }

    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(detail::euler_phi(k)));
    std::vector<std::int64_t> c(r, 0);
    for (;;) {
        std::vector<std::int64_t> angles(static_cast<std::size_t>(k), -1);
        for (std::int64_t j = 0; j < k; ++j) {
            if (std::gcd(j, k) != 1) continue;
            std::int64_t a = 0;
            const auto& lj = logs[static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < r; ++i) a += c[i] * lj[i] * (exponent / factors[i].order);
            angles[static_cast<std::size_t>(j)] = a % exponent;
        }
        out.emplace_back(k, exponent, std::move(angles));
        std::size_t i = 0;
        while (i < r && ++c[i] == factors[i].order) c[i++] = 0;
        if (i == r) break;
    }
    std::sort(out.begin(), out.end(), [](const DirichletCharacter& a, const DirichletCharacter& b) {
        return std::lexicographical_compare(a.angles().begin(), a.angles().end(), b.angles().begin(),
                                            b.angles().end());
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].set_index(i);
    return out;
}

/// The character with the given enumeration index modulo k.
inline DirichletCharacter character_by_index(std::int64_t k, std::size_t index) {
    auto all = enumerate_characters(k);
    if (index >= all.size()) {
        throw DomainError("character index " + std::to_string(index) + " out of range for modulus " +
                          std::to_string(k) + " (" + std::to_string(all.size()) + " characters)");
    }
    return all[index];
}

/// The primitive even real characters modulo k (possibly none).
inline std::vector<DirichletCharacter> primitive_even_real_characters(std::int64_t k) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : enumerate_characters(k)) {
        if (chi.is_primitive() && chi.is_even() && chi.is_real() && !chi.is_principal()) out.push_back(chi);
    }
    return out;
}

/// G(chi) = sum_{l=0}^{k-1} chi(l) e^{2 pi i l / k}. Each summand is formed
/// from the exact combined angle a_l/D + l/k before conversion to floating point.
inline complex_t gauss_sum(const DirichletCharacter& chi) {
    const std::int64_t k = chi.modulus();
    const std::int64_t d = chi.denominator();
    const std::int64_t den = std::lcm(d, k);
    KahanSum<complex_t> acc;
    for (std::int64_t l = 0; l < k; ++l) {
        const std::int64_t a = chi.angle(l);
        if (a < 0) continue;
        acc += detail::root_of_unity(a * (den / d) + l * (den / k), den);
    }
    return acc.sum();
}

}  // namespace cyclospec

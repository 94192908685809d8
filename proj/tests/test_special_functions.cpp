#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cyclospec/special_functions.hpp"
#include "oracles.hpp"

using namespace cyclospec;

namespace {

constexpr double pi = std::numbers::pi;

double rel_diff(complex_t a, complex_t b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Gamma, ExactValues) {
    EXPECT_NEAR(std::abs(complex_gamma(1.0).value - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(complex_gamma(2.0).value - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(complex_gamma(5.0).value - 24.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(complex_gamma(0.5).value - std::sqrt(pi)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(complex_gamma(-0.5).value + 2.0 * std::sqrt(pi)), 0.0, 1e-13);
}

TEST(Gamma, CriticalLineModulus) {
    for (double t : {1.0, 5.0, 10.0}) {
        const double g2 = std::norm(complex_gamma(ComplexPoint(0.5, t)).value);
        EXPECT_NEAR(g2 / (pi / std::cosh(pi * t)), 1.0, 1e-12) << t;
    }
}

TEST(Gamma, Recurrence) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-4.5, 6.0), im(-40.0, 40.0);
    for (int i = 0; i < 100; ++i) {
        const complex_t s(re(rng), im(rng));
        const complex_t lhs = complex_gamma(s + 1.0).value;
        const complex_t rhs = s * complex_gamma(s).value;
        EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs)) << s;
    }
}

TEST(Gamma, MatchesStirlingOracle) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(-3.0, 5.0), im(-60.0, 60.0);
    for (int i = 0; i < 200; ++i) {
        const complex_t s(re(rng), im(rng));
        const complex_t ref = oracle::gamma_stirling(s);
        EXPECT_LE(std::abs(complex_gamma(s).value - ref), 1e-12 * std::abs(ref)) << s;
    }
}

TEST(Gamma, ReferenceValues) {
    struct Case {
        complex_t s, expected;
    };
    const Case cases[] = {
        {{3.0, 4.0}, {0.0052255384713692141947, -0.17254707929430018772}},
        {{0.25, -7.0}, {2.582003509403341808e-5, 1.3703869497676168475e-6}},
        {{-2.5, 1.0}, {-0.041736625807893613745, -0.086369107369763484694}},
        {{0.5, 50.0}, {9.0332043526006192339e-35, 1.7263622522690938061e-34}},
    };
    for (const auto& c : cases) {
        const Evaluation g = complex_gamma(c.s);
        EXPECT_LE(std::abs(g.value - c.expected), 1e-13 * std::abs(c.expected)) << c.s;
        EXPECT_LE(std::abs(g.value - c.expected), g.abs_error_estimate + 1e-14 * std::abs(c.expected)) << c.s;
    }
}

TEST(Gamma, PolesAndRange) {
    for (double s : {0.0, -1.0, -7.0}) EXPECT_THROW(complex_gamma(s), PoleError);
    EXPECT_THROW(complex_gamma(ComplexPoint(0.5, 250.0)), RangeError);
    EXPECT_THROW(ComplexPoint(std::nan(""), 0.0), DomainError);
}

TEST(Hurwitz, ClosedForms) {
    EXPECT_NEAR(hurwitz_zeta(2.0, 1.0).value.real(), pi * pi / 6.0, 1e-12);
    EXPECT_NEAR(hurwitz_zeta(2.0, 0.5).value.real(), pi * pi / 2.0, 1e-12);
    for (double a : {0.1, 0.25, 0.5, 0.9, 1.0}) {
        EXPECT_NEAR(std::abs(hurwitz_zeta(0.0, a).value - (0.5 - a)), 0.0, 1e-12) << a;
    }
    // zeta(-1, a) = -B_2(a)/2
    for (double a : {0.2, 0.7}) {
        EXPECT_NEAR(hurwitz_zeta(-1.0, a).value.real(), -(a * a - a + 1.0 / 6.0) / 2.0, 1e-12);
    }
}

TEST(Hurwitz, MatchesSeriesOracle) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> sig(2.0, 5.0), im(-30.0, 30.0), pa(0.05, 1.0);
    for (int i = 0; i < 200; ++i) {
        const complex_t s(sig(rng), im(rng));
        const double a = pa(rng);
        const auto ref = oracle::hurwitz_series(s, a);
        ASSERT_LT(ref.tail_bound, 1e-12);
        const Evaluation h = hurwitz_zeta(s, a);
        EXPECT_LE(rel_diff(h.value, ref.value), 1e-10) << s << " a=" << a;
    }
}

TEST(Hurwitz, ReferenceValues) {
    struct Case {
        complex_t s;
        double a;
        complex_t expected;
    };
    const Case cases[] = {
        {{3.0, 4.0}, 0.3, {3.9898210619224915168, -37.193722158925520662}},
        {{0.5, 20.0}, 0.7, {1.2765963133844655659, 0.87461950964866895961}},
        {{-1.5, 3.0}, 0.2, {0.22379535372087720619, -0.22316956470039101915}},
        {{0.3, 90.0}, 0.9, {-4.1092157878111282416, 0.1170804779900845319}},
    };
    for (const auto& c : cases) {
        const Evaluation h = hurwitz_zeta(c.s, c.a);
        EXPECT_LE(std::abs(h.value - c.expected), 1e-11 * std::max(1.0, std::abs(c.expected))) << c.s;
        EXPECT_LE(std::abs(h.value - c.expected), 10.0 * h.abs_error_estimate + 1e-15) << c.s;
    }
    EXPECT_LE(std::abs(riemann_zeta(ComplexPoint(0.5, 14.0)).value -
                       complex_t(0.022241142609993589246, -0.1032581232664500579)),
              1e-12);
}

TEST(Hurwitz, DoublingTermsIsSelfConsistent) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> sig(0.0, 3.0), im(-50.0, 50.0), pa(0.05, 1.0);
    NumericOptions twice;
    for (int i = 0; i < 100; ++i) {
        const complex_t s(sig(rng), im(rng));
        if (std::abs(s - 1.0) < 1e-3) continue;
        const double a = pa(rng);
        twice.em_terms_min = 2 * std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
        const Evaluation h1 = hurwitz_zeta(s, a);
        const Evaluation h2 = hurwitz_zeta(s, a, twice);
        EXPECT_LE(std::abs(h1.value - h2.value), h1.abs_error_estimate + h2.abs_error_estimate) << s;
        EXPECT_LE(rel_diff(h1.value, h2.value), 1e-12) << s;
    }
}

TEST(Hurwitz, DuplicationFormula) {
    // zeta(s, a/2) + zeta(s, (a+1)/2) = 2^s zeta(s, a)
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> sig(-2.0, 4.0), im(-40.0, 40.0), pa(0.05, 1.0);
    for (int i = 0; i < 100; ++i) {
        const complex_t s(sig(rng), im(rng));
        const double a = pa(rng);
        const complex_t lhs = hurwitz_zeta(s, a / 2.0).value + hurwitz_zeta(s, (a + 1.0) / 2.0).value;
        const complex_t rhs = std::pow(2.0, s) * hurwitz_zeta(s, a).value;
        EXPECT_LE(rel_diff(lhs, rhs), 1e-11) << s << " a=" << a;
    }
}

TEST(Hurwitz, RegularizedIsContinuousAtOne) {
    const double a = 0.3;
    const complex_t at_one = hurwitz_zeta_regularized(1.0, a).value;
    // The constant term is -digamma(a); digamma(0.3) = -3.50252422220013...
    EXPECT_NEAR(at_one.real(), 3.502524222200133, 1e-12);
    for (double step : {1e-4, 1e-7, 1e-10}) {
        const double h = (1.0 + step) - 1.0;  // the increment actually represented
        EXPECT_NEAR(std::abs(hurwitz_zeta_regularized(1.0 + h, a).value - at_one), 0.0, 5.0 * h);
        if (h >= 1e-7) {
            const complex_t near = hurwitz_zeta(1.0 + h, a).value - 1.0 / h;
            EXPECT_NEAR(std::abs(near - at_one), 0.0, 5.0 * h + 1e-8);
        }
    }
}

TEST(Hurwitz, Errors) {
    EXPECT_THROW(hurwitz_zeta(1.0, 0.5), PoleError);
    EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
    EXPECT_THROW(hurwitz_zeta(2.0, 1.5), DomainError);
    EXPECT_THROW(hurwitz_zeta(ComplexPoint(0.5, 150.0), 0.5), RangeError);
    NumericOptions bad;
    bad.em_corrections = 20;
    EXPECT_THROW(hurwitz_zeta(2.0, 0.5, bad), DomainError);
}

TEST(Zeta, LogDerivativeAtTwo) {
    const double ratio = -riemann_zeta_derivative(2.0) / riemann_zeta(2.0).value.real();
    EXPECT_NEAR(ratio, 0.5699609930945, 1e-9);
    EXPECT_LT(ratio, 0.57);
}

TEST(BinomialCoefficients, ValuesAndPositivity) {
    EXPECT_DOUBLE_EQ(binomial_series_coeff(0, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(binomial_series_coeff(1, 0.5), 0.5);
    EXPECT_DOUBLE_EQ(binomial_series_coeff(2, 0.5), 0.375);
    EXPECT_DOUBLE_EQ(binomial_series_coeff(3, 1.0), 1.0);
    for (double s : {0.05, 0.25, 0.4, 0.5}) {
        double prev = 2.0;
        for (unsigned m = 1; m <= 500; ++m) {
            const double a = binomial_series_coeff(m, s);
            ASSERT_GT(a, 0.0);
            ASSERT_LT(a, prev);
            prev = a;
        }
    }
}

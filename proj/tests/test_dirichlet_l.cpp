#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cyclospec/dirichlet_l.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cyclospec;
using fixtures::chi5;
using fixtures::chi8;

namespace {

std::vector<double> sigma_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
    return g;
}

double rel_diff(complex_t a, complex_t b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(LFunction, Chi5AtTwoMatchesSeries) {
    const auto ref = oracle::dirichlet_series(2.0, fixtures::table(chi5()));
    ASSERT_LT(ref.tail_bound, 1e-12);
    const LValue l = l_function(2.0, chi5());
    EXPECT_NEAR(std::abs(l.value - ref.value), 0.0, 1e-12);
    EXPECT_EQ(l.chi_id.modulus, 5);
    EXPECT_EQ(l.chi_id.index, 2u);
}

TEST(LFunction, SeriesAgreementForPrimitiveEvenCharacters) {
    const complex_t points[] = {{2.0, 0.0}, {2.5, 7.0}, {3.0, -12.0}};
    for (long k = 3; k <= 50; ++k) {
        const auto chars = fixtures::primitive_even(k);
        if (chars.empty()) continue;
        for (const complex_t s : points) {
            const auto residues = oracle::residue_class_sums(s, k, 400000 / k);
            for (const auto& chi : chars) {
                const auto ref = oracle::dirichlet_series(residues, fixtures::table(chi));
                ASSERT_LT(ref.tail_bound, 1e-11);
                EXPECT_LE(std::abs(l_function(s, chi).value - ref.value), 1e-10) << chi.label() << " s=" << s;
            }
        }
    }
}

TEST(LFunction, ReferenceValues) {
    EXPECT_LE(std::abs(l_function(ComplexPoint(0.5, 14.0), chi5()).value -
                       complex_t(4.2415839599604457364, -0.24772970928075774518)),
              1e-11);
    EXPECT_LE(std::abs(l_function(ComplexPoint(0.25, 30.0), chi8()).value -
                       complex_t(-1.5118219011162011762, 0.39024506411657924744)),
              1e-11);
    EXPECT_NEAR(l_function(-1.5, chi5()).value.real(), -0.3765457438912605455, 1e-12);
    EXPECT_NEAR(l_function(0.5, chi5()).value.real(), 0.23175094750401575588, 1e-12);
}

TEST(LFunction, ClassNumberValuesAtOne) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    EXPECT_NEAR(l_function(1.0, chi5()).value.real(), 2.0 * std::log(phi) / std::sqrt(5.0), 1e-13);
    EXPECT_NEAR(l_function(1.0, chi8()).value.real(), std::log(1.0 + std::sqrt(2.0)) / std::sqrt(2.0), 1e-13);
    // Continuity through s = 1.
    for (double h : {1e-6, 1e-9}) {
        EXPECT_NEAR(std::abs(l_function(1.0 + h, chi5()).value - l_function(1.0, chi5()).value), 0.0, 10.0 * h);
    }
}

TEST(LFunction, RealForRealCharacters) {
    for (const auto& chi : {chi5(), chi8()}) {
        for (double s : {-1.5, 0.5, 3.0}) EXPECT_LE(std::abs(l_function(s, chi).value.imag()), 1e-15);
    }
}

TEST(LFunction, SchwarzReflection) {
    for (const auto& chi : enumerate_characters(13)) {
        if (chi.is_principal()) continue;
        for (const complex_t s : {complex_t(0.3, 9.0), complex_t(1.7, -4.0), complex_t(-0.5, 20.0)}) {
            const complex_t a = l_function(s, chi).value;
            const complex_t b = l_function(std::conj(s), chi.conjugate()).value;
            EXPECT_LE(rel_diff(b, std::conj(a)), 1e-13) << chi.label();
        }
    }
}

TEST(LFunction, TrivialZeros) {
    for (long k : {5, 8, 12, 13}) {
        for (const auto& chi : fixtures::primitive_even(k)) {
            for (int m = 0; m <= 2; ++m) {
                EXPECT_LE(std::abs(l_function(-2.0 * m, chi).value), 1e-9) << chi.label() << " m=" << m;
            }
        }
    }
    // Larger moduli: k^{2m} amplifies rounding, but the error estimate must cover it.
    for (long k = 3; k <= 60; ++k) {
        for (const auto& chi : fixtures::primitive_even(k)) {
            for (int m = 0; m <= 2; ++m) {
                const LValue l = l_function(-2.0 * m, chi);
                EXPECT_LE(std::abs(l.value), std::max(1e-9, l.abs_error_estimate)) << chi.label() << " m=" << m;
            }
        }
    }
}

TEST(LFunction, NegativeOnLeftInterval) {
    for (long k = 3; k <= 100; ++k) {
        for (const auto& chi : fixtures::primitive_even(k, true)) {
            for (double s : {-1.5, -1.0, -0.5}) EXPECT_LT(l_function(s, chi).value.real(), 0.0) << chi.label();
        }
    }
}

TEST(LFunction, EulerProductBounds) {
    for (long k = 3; k <= 100; ++k) {
        for (const auto& chi : fixtures::primitive_even(k, true)) {
            for (double s : {1.5, 2.0, 3.0, 5.0}) {
                const double l = l_function(s, chi).value.real();
                const double z = riemann_zeta(s).value.real();
                const double z2 = riemann_zeta(2.0 * s).value.real();
                EXPECT_LE(z2 / z, l) << chi.label();
                EXPECT_LE(l, z) << chi.label();
            }
        }
    }
}

TEST(LFunction, PrincipalCharacterRejected) {
    EXPECT_THROW(l_function(2.0, enumerate_characters(5)[0]), HypothesisError);
    EXPECT_THROW(l_function(2.0, enumerate_characters(2)[0]), HypothesisError);
}

TEST(LFunction, DerivativeMatchesSeries) {
    // L'(s) = -sum chi(j) log(j) j^{-s}; summed to 4e6 terms at s = 3 (tail < 1e-12).
    complex_t ref = 0.0;
    for (long j = 4000000; j >= 1; --j) {
        const int c = chi5().real_value(j);
        if (c != 0) ref -= c * std::log(static_cast<double>(j)) * std::pow(static_cast<double>(j), -3.0);
    }
    EXPECT_LE(std::abs(l_function_derivative(3.0, chi5()) - ref), 1e-9);
}

TEST(CompletedXi, FunctionalEquationGrid) {
    for (long k : {5, 8, 12, 13}) {
        for (const auto& chi : fixtures::primitive_even(k)) {
            for (int i = 0; i < 10; ++i) {
                for (int j = 0; j < 10; ++j) {
                    const ComplexPoint s(0.1 + 0.8 * i / 9.0, 8.0 + 22.0 * j / 9.0);
                    const double a = std::abs(completed_xi(s, chi).value);
                    const double b = std::abs(completed_xi(s.reflect(), chi.conjugate()).value);
                    ASSERT_LE(std::abs(a - b), 1e-8) << chi.label();
                    ASSERT_LE(std::abs(a - b), 1e-9 * std::max(a, b)) << chi.label() << " s=" << s.value();
                }
            }
        }
    }
}

TEST(CompletedXi, RealOnCriticalLineForRootNumberOne) {
    for (const auto& chi : {chi5(), chi8()}) {
        for (double t : {1.0, 6.0, 14.0, 25.0}) {
            const complex_t x = completed_xi(ComplexPoint(0.5, t), chi).value;
            EXPECT_LE(std::abs(x.imag()), 1e-12 * std::max(1e-300, std::abs(x))) << t;
        }
    }
}

TEST(CompletedXi, Errors) {
    EXPECT_THROW(completed_xi(0.0, chi5()), PoleError);
    EXPECT_THROW(completed_xi(-2.0, chi5()), PoleError);
    EXPECT_THROW(completed_xi(0.5, enumerate_characters(5)[1]), HypothesisError);  // odd
    EXPECT_THROW(completed_xi(0.5, enumerate_characters(10)[2]), HypothesisError);  // imprimitive or odd
}

TEST(CriticalZeros, Chi5) {
    const double t = find_critical_zero(chi5(), 0.1, 10.0);
    EXPECT_GT(t, 0.1);
    EXPECT_LT(t, 10.0);
    EXPECT_LE(std::abs(completed_xi(ComplexPoint(0.5, t), chi5()).value), 1e-8);
    EXPECT_NEAR(t, 6.6484533447, 1e-8);
}

TEST(CriticalZeros, Chi8) {
    const double t = find_critical_zero(chi8(), 0.1, 10.0);
    EXPECT_LE(std::abs(completed_xi(ComplexPoint(0.5, t), chi8()).value), 1e-8);
    EXPECT_NEAR(t, 4.899973997007036501, 1e-8);
    EXPECT_LE(std::abs(l_function(ComplexPoint(0.5, t), chi8()).value), 1e-8);
}

TEST(CriticalZeros, NarrowRangeWithoutZero) {
    EXPECT_THROW(find_critical_zero(chi5(), 3.17, 3.18), NoZeroFoundError);
    EXPECT_THROW(find_critical_zero(chi5(), 5.0, 1.0), DomainError);
    EXPECT_THROW(find_critical_zero(chi5(), 1.0, 150.0), DomainError);
}

TEST(CriticalZeros, ComplexCharacterRejected) {
    for (const auto& chi : fixtures::primitive_even(13)) {
        if (!chi.is_real()) {
            EXPECT_THROW(find_critical_zero(chi, 1.0, 10.0), HypothesisError);
            break;
        }
    }
}

TEST(Monotonicity, ShiftRatioIncreasing) {
    const auto grid = sigma_grid();
    const auto s5 = ratio_monotonicity_scan(chi5(), 10.0, grid);
    EXPECT_TRUE(s5.strictly_monotone);
    EXPECT_FALSE(s5.outside_hypothesis);
    ASSERT_EQ(s5.rows.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_EQ(s5.rows[i].first, grid[i]);
        EXPECT_DOUBLE_EQ(s5.rows[i].second, l_shift_ratio(ComplexPoint(grid[i], 10.0), chi5()));
    }
    EXPECT_TRUE(ratio_monotonicity_scan(chi8(), 8.0, grid).strictly_monotone);
}

TEST(Monotonicity, SinglePointAndHypothesis) {
    const double one[] = {0.5};
    EXPECT_TRUE(ratio_monotonicity_scan(chi5(), 12.0, one).strictly_monotone);
    const auto grid = sigma_grid();
    EXPECT_THROW(ratio_monotonicity_scan(chi5(), 5.0, grid), HypothesisError);
    const auto forced = ratio_monotonicity_scan(chi5(), 5.0, grid, true);
    EXPECT_TRUE(forced.outside_hypothesis);
    const double unsorted[] = {0.5, 0.4};
    EXPECT_THROW(ratio_monotonicity_scan(chi5(), 10.0, unsorted), DomainError);
    const double outside[] = {0.5, 1.2};
    EXPECT_THROW(ratio_monotonicity_scan(chi5(), 10.0, outside), DomainError);
}

TEST(Monotonicity, ParallelScanIsIdentical) {
    const auto grid = sigma_grid();
    const auto a = ratio_monotonicity_scan(chi8(), 15.0, grid, false, 1);
    const auto b = ratio_monotonicity_scan(chi8(), 15.0, grid, false, 4);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i], b.rows[i]);
}

TEST(RhsScan, DecreasingAndAsymmetric) {
    const auto grid = sigma_grid();
    const auto scan = rhs_decreasing_scan(5, 10.0, grid);
    EXPECT_TRUE(scan.strictly_monotone);
    for (const auto& [sigma, v] : scan.rows) {
        const complex_t s(sigma, 10.0);
        EXPECT_DOUBLE_EQ(v, 4.0 * std::numbers::pi * std::numbers::pi / (25.0 * std::abs(s * s - 1.0)));
    }
    EXPECT_NE(shift_ratio_target(5, ComplexPoint(0.2, 10.0)), shift_ratio_target(5, ComplexPoint(0.8, 10.0)));
    EXPECT_LT(shift_ratio_target(5, ComplexPoint(0.5, 50.0)), shift_ratio_target(5, ComplexPoint(0.5, 10.0)));
    EXPECT_THROW(rhs_decreasing_scan(5, 0.0, grid), DomainError);
}

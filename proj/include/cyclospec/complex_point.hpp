#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "error.hpp"

namespace cyclospec {

using complex_t = std::complex<double>;

/// A point s = sigma + i t of the complex plane. Components are always finite.
class ComplexPoint {
public:
    ComplexPoint(double re, double im = 0.0) : re_(re), im_(im) {  // NOLINT(google-explicit-constructor)
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw DomainError("complex point must have finite components");
        }
    }
    ComplexPoint(complex_t z) : ComplexPoint(z.real(), z.imag()) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] double re() const { return re_; }
    [[nodiscard]] double im() const { return im_; }
    [[nodiscard]] complex_t value() const { return {re_, im_}; }
    [[nodiscard]] ComplexPoint conj() const { return {re_, -im_}; }
    /// 1 - s
    [[nodiscard]] ComplexPoint reflect() const { return {1.0 - re_, -im_}; }

    [[nodiscard]] bool in_open_strip() const { return re_ > 0.0 && re_ < 1.0; }
    [[nodiscard]] bool on_critical_line() const { return re_ == 0.5; }
    [[nodiscard]] bool is_real() const { return im_ == 0.0; }

    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

private:
    double re_;
    double im_;
};

/// A computed value together with the absolute error bound claimed by the
/// algorithm that produced it.
struct Evaluation {
    complex_t value{};
    double abs_error_estimate = 0.0;
};

}  // namespace cyclospec

#pragma once

#include <complex>

namespace cyclospec {

/// Compensated (Kahan) accumulator. Works for double and std::complex<double>,
/// where the compensation is applied componentwise.
template <typename T>
class KahanSum {
public:
    using value_type = T;

    KahanSum() = default;
    explicit KahanSum(const T& init) : sum_(init) {}

    void add(const T& x) {
        const T y = x - carry_;
        const T t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }

    KahanSum& operator+=(const T& x) {
        add(x);
        return *this;
    }

    [[nodiscard]] T sum() const { return sum_; }

private:
    T sum_{};
    T carry_{};
};

}  // namespace cyclospec

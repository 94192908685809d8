#pragma once

#include <stdexcept>
#include <vector>

#include "cyclospec/characters.hpp"

namespace fixtures {

using cyclospec::DirichletCharacter;

/// The quadratic character mod 5: 1, -1, -1, 1.
inline const DirichletCharacter& chi5() {
    static const DirichletCharacter chi = cyclospec::enumerate_characters(5).at(2);
    return chi;
}

/// The real even primitive character mod 8: chi(1) = chi(7) = 1, chi(3) = chi(5) = -1.
inline const DirichletCharacter& chi8() {
    static const DirichletCharacter chi = [] {
        for (const auto& c : cyclospec::enumerate_characters(8))
            if (c.is_primitive() && c.is_even() && c.is_real()) return c;
        throw std::logic_error("no primitive even real character mod 8");
    }();
    return chi;
}

inline std::vector<DirichletCharacter> primitive_even(long k, bool real_only = false) {
    std::vector<DirichletCharacter> out;
    if (k < 3) return out;
    for (const auto& c : cyclospec::enumerate_characters(k))
        if (c.is_primitive() && c.is_even() && (!real_only || c.is_real())) out.push_back(c);
    return out;
}

inline std::vector<std::complex<double>> table(const DirichletCharacter& chi) {
    const auto v = chi.values();
    return {v.begin(), v.end()};
}

}  // namespace fixtures

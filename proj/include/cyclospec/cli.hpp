#pragma once

// Command-line front end. Exit status: 0 success, 1 usage error, 2 computation
// error (pole, hypothesis, domain, I/O), each with a one-line diagnostic.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "char_sums.hpp"
#include "characters.hpp"
#include "dirichlet_l.hpp"
#include "graph_l.hpp"
#include "output.hpp"
#include "parallel.hpp"
#include "special_functions.hpp"

namespace cyclospec::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One leaf subcommand and the library operations it exposes.
struct Command {
    std::string path;
    std::vector<std::string> operations;
};

inline const std::vector<Command>& dispatch_table() {
    static const std::vector<Command> table = {
        {"characters", {"enumerate_characters", "conductor", "gauss_sum"}},
        {"special gamma", {"complex_gamma"}},
        {"special hurwitz", {"hurwitz_zeta"}},
        {"special zeta", {"riemann_zeta"}},
        {"special binom", {"binomial_series_coeff"}},
        {"l eval", {"l_function", "completed_xi"}},
        {"l zeros", {"find_critical_zero"}},
        {"l monotonicity", {"ratio_monotonicity_scan", "rhs_decreasing_scan"}},
        {"ln eval", {"graph_l_n", "graph_xi_n"}},
        {"ln prop1", {"asymptotic_l_n"}},
        {"ln ratio", {"alpha", "xi_ratio", "ratio_experiment"}},
        {"graph lg", {"graph_l_general", "cycle_spectrum"}},
        {"sums powers", {"s_power_sum", "s_power_sum_range"}},
        {"sums faulhaber", {"faulhaber_rhs"}},
        {"sums corollary6", {"corollary6_check"}},
        {"sums cos-scan", {"cos_power_sum", "cos_scan"}},
        {"sums corollary5", {"corollary5_scan"}},
    };
    return table;
}

/// Parsed flags shared by every leaf subcommand.
struct RunConfig {
    std::string format = "json";
    std::string output;
    std::size_t jobs = 0;
    int em_terms = NumericOptions{}.em_terms_min;
    int em_corrections = NumericOptions{}.em_corrections;

    [[nodiscard]] NumericOptions numeric() const { return {em_terms, em_corrections}; }
    [[nodiscard]] std::size_t workers() const { return jobs == 0 ? default_jobs() : jobs; }
};

namespace detail {

inline std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("invalid number '" + item + "' in " + what);
        }
    }
    return out;
}

/// "RE,IM" (or "RE" for a real point).
inline ComplexPoint parse_point(const std::string& text) {
    const auto v = parse_doubles(text, "--s");
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw UsageError("expected RE,IM for --s, got '" + text + "'");
}

inline std::pair<double, double> parse_pair(const std::string& text, const std::string& what) {
    const auto v = parse_doubles(text, what);
    if (v.size() != 2) throw UsageError("expected LO,HI for " + what);
    return {v[0], v[1]};
}

/// "START,END,STEP", inclusive of END up to rounding.
inline std::vector<double> parse_range(const std::string& text, const std::string& what) {
    const auto v = parse_doubles(text, what);
    if (v.size() != 3 || !(v[2] > 0.0) || v[1] < v[0]) throw UsageError("expected START,END,STEP with STEP > 0 for " + what);
    const auto count = static_cast<std::size_t>(std::floor((v[1] - v[0]) / v[2] + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = v[0] + static_cast<double>(i) * v[2];
    return out;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("invalid integer '" + item + "' in " + what);
        }
    }
    return out;
}

inline DirichletCharacter lookup_character(std::int64_t modulus, std::int64_t index) {
    if (modulus < 1) throw UsageError("--modulus must be >= 1");
    auto all = enumerate_characters(modulus);
    if (index < 0 || static_cast<std::size_t>(index) >= all.size()) {
        throw UsageError("--char-index " + std::to_string(index) + " out of range; modulus " + std::to_string(modulus) +
                         " has " + std::to_string(all.size()) + " characters");
    }
    return all[static_cast<std::size_t>(index)];
}

inline Cell opt_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

inline std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

/// Parses argv-style arguments (program name excluded) and runs the
/// selected subcommand, writing results to `out` unless --output is given.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral L-functions of cycle graphs and Dirichlet L-function experiments", "cyclospec"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::int64_t modulus = 0;
    std::int64_t char_index = 0;
    std::string s_text, range_text, filter_text, sigma_range, t_range, n_list_text, m_range_text, spectrum_path,
        order_text = "ascending";
    double t_value = 0.0, sigma_step = 0.05, a_value = 1.0, s_real = 0.5;
    std::int64_t n_value = 1, m_value = 2, m_max = 50, cycle_m = 0;
    bool force = false;

    std::function<Table()> action;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", cfg.output, "Write to this path instead of standard output");
        sub->add_option("--jobs", cfg.jobs, "Worker threads (default: $CYCLOSPEC_JOBS or hardware concurrency)");
        sub->add_option("--em-terms", cfg.em_terms, "Minimum Euler-Maclaurin summed terms")->check(CLI::Range(1, 100000));
        sub->add_option("--em-corrections", cfg.em_corrections, "Euler-Maclaurin Bernoulli pairs")->check(CLI::Range(1, 14));
    };
    auto with_char = [&](CLI::App* sub) {
        sub->add_option("--modulus", modulus, "Character modulus k")->required();
        sub->add_option("--char-index", char_index, "Index in the enumeration order of `characters`")->required();
        common(sub);
    };

    // characters
    auto* characters = app.add_subcommand("characters", "Enumerate Dirichlet characters modulo K");
    characters->add_option("--modulus", modulus, "Modulus k")->required();
    characters->add_option("--filter", filter_text, "Comma list of: primitive, even, odd, real, nonprincipal");
    common(characters);
    characters->callback([&] {
        action = [&] {
            std::vector<std::string> filters;
            if (!filter_text.empty()) {
                std::stringstream ss(filter_text);
                std::string f;
                while (std::getline(ss, f, ',')) {
                    static const std::vector<std::string> known = {"primitive", "even", "odd", "real", "nonprincipal"};
                    if (std::find(known.begin(), known.end(), f) == known.end()) throw UsageError("unknown filter '" + f + "'");
                    filters.push_back(f);
                }
            }
            if (modulus < 1) throw UsageError("--modulus must be >= 1");
            Table t{{"modulus", "index", "values", "order", "is_even", "is_real", "conductor", "is_primitive", "gauss_re",
                     "gauss_im"},
                    {}};
            for (const auto& chi : enumerate_characters(modulus)) {
                const bool keep = std::all_of(filters.begin(), filters.end(), [&](const std::string& f) {
                    if (f == "primitive") return chi.is_primitive();
                    if (f == "even") return chi.is_even();
                    if (f == "odd") return chi.is_odd();
                    if (f == "real") return chi.is_real();
                    return !chi.is_principal();
                });
                if (!keep) continue;
                const complex_t g = gauss_sum(chi);
                t.add({modulus, detail::as_int(chi.index()),
                       std::vector<complex_t>(chi.values().begin(), chi.values().end()), chi.order(), chi.is_even(),
                       chi.is_real(), conductor(chi), chi.is_primitive(), g.real(), g.imag()});
            }
            return t;
        };
    });

    // special
    auto* special = app.add_subcommand("special", "Special functions");
    special->require_subcommand(1);
    auto* sp_gamma = special->add_subcommand("gamma", "Complex gamma function");
    sp_gamma->add_option("--s", s_text, "RE,IM")->required();
    common(sp_gamma);
    sp_gamma->callback([&] {
        action = [&] {
            const auto s = detail::parse_point(s_text);
            const auto g = complex_gamma(s);
            Table t{{"sigma", "t", "re", "im", "abs_err"}, {}};
            t.add({s.re(), s.im(), g.value.real(), g.value.imag(), g.abs_error_estimate});
            return t;
        };
    });
    auto* sp_hurwitz = special->add_subcommand("hurwitz", "Hurwitz zeta function");
    sp_hurwitz->add_option("--s", s_text, "RE,IM")->required();
    sp_hurwitz->add_option("--a", a_value, "Shift a in (0, 1]")->required();
    common(sp_hurwitz);
    sp_hurwitz->callback([&] {
        action = [&] {
            const auto s = detail::parse_point(s_text);
            const auto z = hurwitz_zeta(s, a_value, cfg.numeric());
            Table t{{"sigma", "t", "a", "re", "im", "abs_err"}, {}};
            t.add({s.re(), s.im(), a_value, z.value.real(), z.value.imag(), z.abs_error_estimate});
            return t;
        };
    });
    auto* sp_zeta = special->add_subcommand("zeta", "Riemann zeta function");
    sp_zeta->add_option("--s", s_text, "RE,IM")->required();
    common(sp_zeta);
    sp_zeta->callback([&] {
        action = [&] {
            const auto s = detail::parse_point(s_text);
            const auto z = riemann_zeta(s, cfg.numeric());
            Table t{{"sigma", "t", "re", "im", "abs_err"}, {}};
            t.add({s.re(), s.im(), z.value.real(), z.value.imag(), z.abs_error_estimate});
            return t;
        };
    });
    auto* sp_binom = special->add_subcommand("binom", "Coefficient a_m(s) of (1-x)^{-s}");
    sp_binom->add_option("--m", m_value, "Index m >= 0")->required()->check(CLI::NonNegativeNumber);
    sp_binom->add_option("--s", s_real, "Real exponent s")->required();
    common(sp_binom);
    sp_binom->callback([&] {
        action = [&] {
            Table t{{"m", "s", "coeff"}, {}};
            t.add({m_value, s_real, binomial_series_coeff(static_cast<unsigned>(m_value), s_real)});
            return t;
        };
    });

    // l
    auto* l = app.add_subcommand("l", "Classical Dirichlet L-functions");
    l->require_subcommand(1);
    auto* l_eval = l->add_subcommand("eval", "Evaluate L(s, chi) and, for primitive even chi, xi(s, chi)");
    l_eval->add_option("--s", s_text, "RE,IM")->required();
    with_char(l_eval);
    l_eval->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto s = detail::parse_point(s_text);
            const auto lv = l_function(s, chi, cfg.numeric());
            Cell xr = std::monostate{}, xi = std::monostate{}, xe = std::monostate{};
            if (chi.is_primitive() && chi.is_even() && !cyclospec::detail::is_nonpositive_integer(s.value() / 2.0)) {
                const auto x = completed_xi(s, chi, cfg.numeric());
                xr = x.value.real();
                xi = x.value.imag();
                xe = x.abs_error_estimate;
            }
            Table t{{"modulus", "index", "sigma", "t", "l_re", "l_im", "l_abs_err", "xi_re", "xi_im", "xi_abs_err"}, {}};
            t.add({modulus, char_index, s.re(), s.im(), lv.value.real(), lv.value.imag(), lv.abs_error_estimate, xr, xi, xe});
            return t;
        };
    });
    auto* l_zeros = l->add_subcommand("zeros", "Locate a zero of xi(1/2 + it, chi) in a t-range");
    l_zeros->add_option("--range", range_text, "LO,HI")->required();
    with_char(l_zeros);
    l_zeros->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto [lo, hi] = detail::parse_pair(range_text, "--range");
            const double t_star = find_critical_zero(chi, lo, hi, cfg.numeric());
            const double xi_abs = std::abs(completed_xi(ComplexPoint(0.5, t_star), chi, cfg.numeric()).value);
            Table t{{"modulus", "index", "t_star", "xi_abs"}, {}};
            t.add({modulus, char_index, t_star, xi_abs});
            return t;
        };
    });
    auto* l_mono = l->add_subcommand("monotonicity", "Scan |L(s+2)/L(s-2)| and 4pi^2/(k^2|s^2-1|) over sigma");
    l_mono->add_option("--t", t_value, "Imaginary part t")->required();
    l_mono->add_option("--sigma-step", sigma_step, "Grid step H; sigma = H, 2H, ... < 1")->check(CLI::PositiveNumber);
    l_mono->add_flag("--force", force, "Allow |t| < 8 (rows flagged outside the hypothesis)");
    with_char(l_mono);
    l_mono->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            if (!(sigma_step < 1.0)) throw UsageError("--sigma-step must be < 1");
            std::vector<double> grid;
            for (int i = 1; static_cast<double>(i) * sigma_step < 1.0 - 1e-12; ++i) grid.push_back(static_cast<double>(i) * sigma_step);
            const auto lhs = ratio_monotonicity_scan(chi, t_value, grid, force, cfg.workers(), cfg.numeric());
            const auto rhs = rhs_decreasing_scan(modulus, t_value, grid);
            Table t{{"sigma", "ratio", "rhs", "outside_hypothesis"}, {}};
            for (std::size_t i = 0; i < grid.size(); ++i) {
                t.add({grid[i], lhs.rows[i].second, rhs.rows[i].second, lhs.outside_hypothesis});
            }
            err << "ratio strictly increasing: " << (lhs.strictly_monotone ? "yes" : "no")
                << "; rhs strictly decreasing: " << (rhs.strictly_monotone ? "yes" : "no")
                << (lhs.outside_hypothesis ? " (outside lemma hypothesis |t| >= 8)" : "") << '\n';
            return t;
        };
    });

    // ln
    auto* ln = app.add_subcommand("ln", "Spectral L-functions of the cycle Z/knZ");
    ln->require_subcommand(1);
    auto* ln_eval = ln->add_subcommand("eval", "Evaluate L_n(s, chi) and xi_n(s, chi)");
    ln_eval->add_option("--n", n_value, "n (the cycle has kn vertices)")->required();
    ln_eval->add_option("--s", s_text, "RE,IM")->required();
    with_char(ln_eval);
    ln_eval->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto s = detail::parse_point(s_text);
            const GraphLParams p(n_value, chi, s);
            const auto v = graph_l_n(p);
            Cell xr = std::monostate{}, xi = std::monostate{}, xe = std::monostate{};
            if (s.in_open_strip()) {
                const auto x = graph_xi_n(p);
                xr = x.value.real();
                xi = x.value.imag();
                xe = x.abs_error_estimate;
            }
            Table t{{"modulus", "index", "n", "sigma", "t", "ln_re", "ln_im", "ln_abs_err", "xi_n_re", "xi_n_im", "xi_n_abs_err"}, {}};
            t.add({modulus, char_index, n_value, s.re(), s.im(), v.value.real(), v.value.imag(), v.abs_error_estimate, xr, xi, xe});
            return t;
        };
    });
    auto* ln_prop1 = ln->add_subcommand("prop1", "Two-term asymptotic expansion and remainder decay");
    ln_prop1->add_option("--s", s_text, "RE,IM")->required();
    ln_prop1->add_option("--n-list", n_list_text, "Comma list of n")->required();
    with_char(ln_prop1);
    ln_prop1->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto s = detail::parse_point(s_text);
            const auto ns = detail::parse_int_list(n_list_text, "--n-list");
            const GraphLParams base(1, chi, s);
            struct Res {
                Evaluation ln, asym;
                ExpansionRemainder rem;
            };
            const auto results = parallel_map(ns.size(), cfg.workers(), [&](std::size_t i) {
                const auto p = base.with_n(ns[i]);
                return Res{graph_l_n(p), asymptotic_l_n(p, cfg.numeric()), asymptotic_remainder(p, cfg.numeric())};
            });
            Table t{{"n", "ln_re", "ln_im", "asym_re", "asym_im", "first_order_abs", "second_order_abs", "second_order_decay"}, {}};
            for (std::size_t i = 0; i < ns.size(); ++i) {
                const auto& r = results[i];
                std::optional<double> decay;
                if (i > 0) decay = std::abs(r.rem.second_order) / std::abs(results[i - 1].rem.second_order);
                t.add({ns[i], r.ln.value.real(), r.ln.value.imag(), r.asym.value.real(), r.asym.value.imag(),
                       std::abs(r.rem.first_order), std::abs(r.rem.second_order), detail::opt_cell(decay)});
            }
            return t;
        };
    });
    auto* ln_ratio = ln->add_subcommand("ratio", "Ratio |xi_n(s)|/|xi_n(1-s)| over an (s, n) grid");
    ln_ratio->add_option("--sigma-range", sigma_range, "START,END,STEP")->required();
    ln_ratio->add_option("--t-range", t_range, "START,END,STEP")->required();
    ln_ratio->add_option("--n-list", n_list_text, "Comma list of n")->required();
    with_char(ln_ratio);
    ln_ratio->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto sigmas = detail::parse_range(sigma_range, "--sigma-range");
            const auto ts = detail::parse_range(t_range, "--t-range");
            const auto ns = detail::parse_int_list(n_list_text, "--n-list");
            std::vector<ComplexPoint> grid;
            for (double sg : sigmas)
                for (double tv : ts) grid.emplace_back(sg, tv);
            const auto rows = ratio_experiment(chi, grid, ns, cfg.workers(), cfg.numeric());
            Table t{{"sigma", "t", "n", "ratio", "abs_ratio_minus_1", "near_zero_flag", "alpha_ratio", "two_xi_abs"}, {}};
            for (const auto& r : rows) {
                t.add({r.sigma, r.t, r.n, r.ratio, r.abs_ratio_minus_1, r.near_zero, r.alpha_ratio, r.two_xi_abs});
            }
            return t;
        };
    });

    // graph
    auto* graph = app.add_subcommand("graph", "General finite graphs");
    graph->require_subcommand(1);
    auto* graph_lg = graph->add_subcommand("lg", "L_G(s, chi) from a Laplacian spectrum");
    graph_lg->add_option("--s", s_text, "RE,IM")->required();
    auto* spec_opt = graph_lg->add_option("--spectrum", spectrum_path, "File with one eigenvalue per line");
    auto* cycle_opt = graph_lg->add_option("--cycle", cycle_m, "Use the spectrum of the cycle C_M");
    spec_opt->excludes(cycle_opt);
    graph_lg->add_option("--order", order_text, "Eigenvalue order")->check(CLI::IsMember({"ascending", "frequency"}));
    with_char(graph_lg);
    graph_lg->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto s = detail::parse_point(s_text);
            std::optional<LaplacianSpectrum> spectrum;
            if (!spectrum_path.empty()) {
                std::ifstream in(spectrum_path);
                if (!in) throw IoError("cannot open spectrum file '" + spectrum_path + "'");
                std::vector<double> values;
                std::string line;
                while (std::getline(in, line)) {
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    const auto v = detail::parse_doubles(line, "spectrum file '" + spectrum_path + "'");
                    if (v.size() != 1) throw UsageError("spectrum file '" + spectrum_path + "': one eigenvalue per line");
                    values.push_back(v[0]);
                }
                spectrum.emplace(std::move(values));
            } else if (cycle_m > 0) {
                spectrum = cycle_spectrum(static_cast<std::size_t>(cycle_m));
            } else {
                throw UsageError("graph lg needs --spectrum FILE or --cycle M");
            }
            const auto order = order_text == "frequency" ? EigenOrder::frequency : EigenOrder::ascending;
            const auto v = graph_l_general(*spectrum, chi, s, order);
            Table t{{"m", "order", "sigma", "t", "re", "im", "abs_err"}, {}};
            t.add({detail::as_int(spectrum->size()), order_text, s.re(), s.im(), v.value.real(), v.value.imag(), v.abs_error_estimate});
            return t;
        };
    });

    // sums
    auto* sums = app.add_subcommand("sums", "Character power sums and positivity scans");
    sums->require_subcommand(1);
    auto* sums_powers = sums->add_subcommand("powers", "Exact sums of chi(j) j^m over 1 <= j < kn");
    sums_powers->add_option("--m-range", m_range_text, "A,B (inclusive)")->required();
    sums_powers->add_option("--n", n_value, "n (default 1: S(m, chi))");
    with_char(sums_powers);
    sums_powers->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto mr = detail::parse_int_list(m_range_text, "--m-range");
            if (mr.size() != 2 || mr[0] < 0 || mr[1] < mr[0]) throw UsageError("expected --m-range A,B with 0 <= A <= B");
            const auto count = static_cast<std::size_t>(mr[1] - mr[0] + 1);
            const auto sums_out = parallel_map(count, cfg.workers(), [&](std::size_t i) {
                return s_power_sum_range(static_cast<unsigned>(mr[0] + detail::as_int(i)), chi, n_value);
            });
            Table t{{"m", "n", "value", "sign"}, {}};
            for (const auto& s : sums_out) {
                t.add({static_cast<std::int64_t>(s.m), n_value, DecimalInteger{s.decimal()}, static_cast<std::int64_t>(s.sign())});
            }
            return t;
        };
    });
    auto* sums_faul = sums->add_subcommand("faulhaber", "Twisted Faulhaber identity, both sides");
    sums_faul->add_option("--n", n_value, "n")->required();
    sums_faul->add_option("--m", m_value, "m >= 2")->required();
    with_char(sums_faul);
    sums_faul->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            if (m_value < 2) throw UsageError("--m must be >= 2");
            const auto m = static_cast<unsigned>(m_value);
            const auto rhs = faulhaber_rhs(m, chi, n_value, cfg.numeric());
            const double lhs = faulhaber_lhs(m, chi, n_value);
            const double r = rhs.value.real();
            Table t{{"m", "n", "lhs", "rhs", "rhs_abs_err", "relative_residual"}, {}};
            t.add({m_value, n_value, lhs, r, rhs.abs_error_estimate, std::abs(lhs - r) / std::max(1.0, std::abs(r))});
            return t;
        };
    });
    auto* sums_c6 = sums->add_subcommand("corollary6", "Exact signs of S(m, chi) for m = 2..7 and sampled m >= k-2");
    with_char(sums_c6);
    sums_c6->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto report = corollary6_check(chi);
            Table t{{"m", "region", "value", "sign"}, {}};
            for (const auto& e : report.proven_range) t.add({static_cast<std::int64_t>(e.m), std::string("proven"), DecimalInteger{e.value.str()}, static_cast<std::int64_t>(e.sign)});
            for (const auto& e : report.domination_sample) t.add({static_cast<std::int64_t>(e.m), std::string("domination"), DecimalInteger{e.value.str()}, static_cast<std::int64_t>(e.sign)});
            if (!report.all_positive()) {
                err << "*** COUNTEREXAMPLE CANDIDATE: S(m, " << chi.label() << ") <= 0 for some sampled m ***\n";
            }
            return t;
        };
    });
    auto* sums_cos = sums->add_subcommand("cos-scan", "Signs of sum chi(j) cos^{2m}(pi j / kn), m = 1..M");
    sums_cos->add_option("--n", n_value, "n")->required();
    sums_cos->add_option("--m-max", m_max, "M")->required()->check(CLI::PositiveNumber);
    with_char(sums_cos);
    sums_cos->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto scan = cos_scan(chi, n_value, static_cast<unsigned>(m_max), cfg.workers());
            Table t{{"m", "value", "sign"}, {}};
            for (const auto& r : scan.rows) t.add({static_cast<std::int64_t>(r.m), r.value, static_cast<std::int64_t>(r.sign)});
            err << "negative entries: " << scan.negative_count << " of " << scan.rows.size() << '\n';
            return t;
        };
    });
    auto* sums_c5 = sums->add_subcommand("corollary5", "Signs of L_n(s, chi) against sign L(s, chi)");
    sums_c5->add_option("--s", s_real, "Real s in (0, 1)")->required();
    sums_c5->add_option("--n-list", n_list_text, "Comma list of n")->required();
    with_char(sums_c5);
    sums_c5->callback([&] {
        action = [&] {
            const auto chi = detail::lookup_character(modulus, char_index);
            const auto ns = detail::parse_int_list(n_list_text, "--n-list");
            const auto rows = corollary5_scan(chi, s_real, ns, cfg.workers(), cfg.numeric());
            Table t{{"n", "l_n", "sign", "limit_sign", "agrees"}, {}};
            for (const auto& r : rows) t.add({r.n, r.l_n, static_cast<std::int64_t>(r.sign), static_cast<std::int64_t>(r.limit_sign), r.agrees});
            return t;
        };
    });

    if (args.empty()) {
        err << app.help();
        return 1;
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << " (run with --help for usage)\n";
        return 1;
    }

    try {
        if (!action) throw UsageError("no subcommand selected");
        const Table table = action();
        const auto format = cfg.format == "csv" ? OutputFormat::csv : OutputFormat::json;
        if (cfg.output.empty()) {
            emit(table, format, out);
        } else {
            emit_to_path(table, format, cfg.output);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace cyclospec::cli

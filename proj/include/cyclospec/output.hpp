#pragma once

// Tabular experiment output as CSV or newline-delimited JSON. Floats are
// written with 17 significant digits in a fixed scientific layout
// ("1.0000000000000000e0"), so identical inputs give byte-identical files.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"

namespace cyclospec {

/// An exact integer carried as its decimal representation.
struct DecimalInteger {
    std::string digits;
};

using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string, DecimalInteger,
                          std::vector<std::complex<double>>>;

/// Rows sharing one schema; column order is the emission order.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) {
        if (row.size() != columns.size()) throw Error("row width does not match the table schema");
        rows.push_back(std::move(row));
    }
};

enum class OutputFormat { json, csv };

class IoError : public Error {
public:
    using Error::Error;
};

/// 17 significant digits, mantissa d.dddddddddddddddd, exponent without sign
/// padding: 1.0 -> "1.0000000000000000e0", 0.00125 -> "1.2500000000000000e-3".
inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    std::string s(buf);
    const auto e = s.find('e');
    std::string mantissa = s.substr(0, e);
    const int exponent = std::stoi(s.substr(e + 1));
    return mantissa + "e" + std::to_string(exponent);
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

inline std::string json_number(double x) {
    return std::isfinite(x) ? format_double(x) : "null";
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct JsonCell {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return json_number(v); }
    std::string operator()(const std::string& v) const { return json_escape(v); }
    std::string operator()(const DecimalInteger& v) const { return json_escape(v.digits); }
    std::string operator()(const std::vector<std::complex<double>>& v) const {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += "{\"re\":" + json_number(v[i].real()) + ",\"im\":" + json_number(v[i].imag()) + "}";
        }
        return out + "]";
    }
};

struct CsvCell {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return csv_quote(v); }
    std::string operator()(const DecimalInteger& v) const { return v.digits; }
    // (re,im) pairs joined by ';'
    std::string operator()(const std::vector<std::complex<double>>& v) const {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ";";
            out += "(" + format_double(v[i].real()) + "," + format_double(v[i].imag()) + ")";
        }
        return csv_quote(out);
    }
};

}  // namespace detail

inline void emit(const Table& table, OutputFormat format, std::ostream& sink) {
    if (format == OutputFormat::csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i) sink << ',';
            sink << detail::csv_quote(table.columns[i]);
        }
        sink << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) sink << ',';
                sink << std::visit(detail::CsvCell{}, row[i]);
            }
            sink << '\n';
        }
    } else {
        for (const auto& row : table.rows) {
            sink << '{';
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) sink << ',';
                sink << detail::json_escape(table.columns[i]) << ':' << std::visit(detail::JsonCell{}, row[i]);
            }
            sink << "}\n";
        }
    }
    if (!sink) throw IoError("failed writing output");
}

inline void emit_to_path(const Table& table, OutputFormat format, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open output file '" + path + "'");
    emit(table, format, file);
    file.flush();
    if (!file) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace cyclospec

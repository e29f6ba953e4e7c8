#pragma once

// Tabular output: CSV with a trailing `# param key=value` block, or JSON lines.
// Floats are written with 17 significant digits.

#include "polycore.hpp"
#include "xhermite.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace xhdirac {

using Cell = std::variant<double, long long, std::string>;

inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> params;

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size()) throw std::invalid_argument("table row width does not match the header");
        rows.push_back(std::move(row));
    }

    void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
    void param(const std::string& key, double value) { params.emplace_back(key, format_double(value)); }
    void param(const std::string& key, long long value) { params.emplace_back(key, std::to_string(value)); }
    void param(const std::string& key, int value) { params.emplace_back(key, std::to_string(value)); }

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw std::out_of_range("no column '" + name + "'");
    }
};

inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
        os << '\n';
    }
    for (const auto& [k, v] : t.params) os << "# param " << k << '=' << v << '\n';
}

namespace detail {
inline nlohmann::ordered_json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        return *d;
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}
}  // namespace detail

/// One JSON object per row, then one {"params": {...}} line.
inline void write_json_lines(std::ostream& os, const Table& t) {
    for (const auto& row : t.rows) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) j[t.columns[i]] = detail::cell_json(row[i]);
        os << j.dump() << '\n';
    }
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.params) p[k] = v;
    os << nlohmann::ordered_json{{"params", p}}.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Polynomial records.

inline nlohmann::ordered_json coeffs_json(const ExactPoly& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

/// {"coeffs": [decimal strings, ascending degree]}
inline nlohmann::ordered_json to_json(const ExactPoly& p) { return {{"coeffs", coeffs_json(p)}}; }

inline ExactPoly poly_from_json(const nlohmann::json& j) {
    std::vector<BigInt> c;
    for (const auto& s : j.at("coeffs")) c.emplace_back(s.get<std::string>());
    return ExactPoly(std::move(c));
}

/// {"partition":[...], "n":..., "degree":..., "coeffs":[...]}; n is null for H_λ.
inline nlohmann::ordered_json poly_record(const Partition& lambda, std::optional<int> n, const ExactPoly& p) {
    nlohmann::ordered_json j;
    j["partition"] = lambda.parts();
    j["n"] = n ? nlohmann::ordered_json(*n) : nlohmann::ordered_json(nullptr);
    j["degree"] = p.degree();
    j["coeffs"] = coeffs_json(p);
    return j;
}

}  // namespace xhdirac

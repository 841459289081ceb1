#pragma once

// CSV serialization of sweep tables.
//
//   # nlkg-dispersion v<semver> spec=<16 hex digits>
//   x,exact_omega,<m>_omega,<m>_ratio,<m>_delta,...
//   <rows>
//
// Floats use `precision` significant digits (17 round-trips every double),
// an empty cell is a failed evaluation, -inf is written as "-inf", and every
// line ends with LF.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "nlkg/analysis.hpp"
#include "nlkg/model.hpp"

namespace nlkg::cli {

inline constexpr std::string_view kFormatVersion = "1.0.0";

inline std::string format_double(double v, int precision = 17) {
    if (std::isnan(v))
        return {};
    if (std::isinf(v))
        return v < 0 ? "-inf" : "inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    if (s.empty())
        return std::numeric_limits<double>::quiet_NaN();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    if (s == "inf")
        return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("csv: bad number '" + std::string(s) + "'");
    return v;
}

// Canonical text of a sweep spec; its hash tags the CSV preamble.
inline std::string canonical_spec(const analysis::SweepSpec& spec) {
    std::ostringstream os;
    os << "potential=" << potential_name(spec.potential);
    std::visit(overloaded{[&](const Duffing& d) { os << ";mu=" << format_double(d.mu); },
                          [&](const SineGordon&) {},
                          [&](const PureQuartic& q) { os << ";mu=" << format_double(q.mu); }},
               spec.potential);
    std::visit(overloaded{[&](const analysis::AmplitudeGrid& g) {
                              os << ";axis=A;min=" << format_double(g.min) << ";max=" << format_double(g.max)
                                 << ";points=" << g.points;
                          },
                          [&](const analysis::MuA2Grid& g) {
                              os << ";axis=muA2;min=" << format_double(g.min) << ";max=" << format_double(g.max)
                                 << ";points=" << g.points << ";log=" << (g.log_scale ? 1 : 0);
                          }},
               spec.axis);
    os << ";methods=";
    for (std::size_t i = 0; i < spec.methods.size(); ++i)
        os << (i ? "," : "") << method_label(spec.methods[i]);
    os << ";tol=" << format_double(spec.tol);
    return os.str();
}

// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string spec_hash(const analysis::SweepSpec& spec) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical_spec(spec))));
    return buf;
}

struct CsvDocument {
    std::string preamble;  // first line, without the LF
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // NaN = empty cell
};

inline CsvDocument to_csv_document(const analysis::SweepTable& table, const analysis::SweepSpec& spec) {
    CsvDocument doc;
    doc.preamble = "# nlkg-dispersion v" + std::string(kFormatVersion) + " spec=" + spec_hash(spec);
    doc.columns = {"x", "exact_omega"};
    for (const auto& m : table.methods) {
        const std::string label = method_label(m);
        doc.columns.push_back(label + "_omega");
        doc.columns.push_back(label + "_ratio");
        doc.columns.push_back(label + "_delta");
    }
    for (const auto& row : table.rows) {
        std::vector<double> values{row.x, row.exact.omega};
        for (const auto& c : row.cells) {
            values.push_back(c.omega);
            values.push_back(c.ratio);
            values.push_back(c.delta);
        }
        doc.rows.push_back(std::move(values));
    }
    return doc;
}

inline std::string write_csv(const CsvDocument& doc, int precision = 17) {
    std::string out = doc.preamble + "\n";
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
        out += (i ? "," : "") + doc.columns[i];
    out += "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_double(row[i], precision);
        }
        out += "\n";
    }
    return out;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline CsvDocument parse_csv(std::string_view text) {
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.size() < 2 || lines[0].rfind("# nlkg-dispersion ", 0) != 0)
        throw std::invalid_argument("csv: missing nlkg-dispersion preamble");
    CsvDocument doc;
    doc.preamble = std::string(lines[0]);
    for (auto col : split(lines[1], ','))
        doc.columns.emplace_back(col);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto cells = split(lines[i], ',');
        if (cells.size() != doc.columns.size())
            throw std::invalid_argument("csv: row " + std::to_string(i + 1) + " has wrong cell count");
        std::vector<double> row;
        row.reserve(cells.size());
        for (auto c : cells)
            row.push_back(parse_double(c));
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

}  // namespace nlkg::cli

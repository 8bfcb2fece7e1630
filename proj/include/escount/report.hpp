#pragma once

/**
 * @file report.hpp
 * @brief Text, JSON and CSV renderings of count records and verification reports.
 *
 * Counts are always decimal strings so arbitrarily large values survive
 * every format unchanged.
 */

#include "escount/verify.hpp"

#include "json.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace escount {

struct OutputRecord {
    std::string group;
    unsigned n = 0;
    std::string method;
    std::string count;
    std::uint64_t elapsed_ms = 0;

    bool operator==(const OutputRecord&) const = default;
};

enum class Format { text, json, csv };

inline Format parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

inline nlohmann::json to_json_value(const OutputRecord& r) {
    return {{"group", r.group}, {"n", r.n}, {"method", r.method}, {"count", r.count}, {"elapsed_ms", r.elapsed_ms}};
}

inline std::vector<OutputRecord> records_from_json(std::string_view text) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("records_from_json: expected a JSON array");
    std::vector<OutputRecord> out;
    for (const auto& obj : doc)
        out.push_back({obj.at("group").get<std::string>(), obj.at("n").get<unsigned>(),
                       obj.at("method").get<std::string>(), obj.at("count").get<std::string>(),
                       obj.at("elapsed_ms").get<std::uint64_t>()});
    return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

inline std::string render_records(const std::vector<OutputRecord>& records, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : records) arr.push_back(to_json_value(r));
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "group,n,method,count,elapsed_ms\n";
            for (const auto& r : records)
                os << detail::csv_field(r.group) << "," << r.n << "," << detail::csv_field(r.method) << "," << r.count
                   << "," << r.elapsed_ms << "\n";
            break;
        case Format::text: {
            std::size_t gw = 5, mw = 6;
            for (const auto& r : records) {
                gw = std::max(gw, r.group.size());
                mw = std::max(mw, r.method.size());
            }
            os << std::left << std::setw(static_cast<int>(gw)) << "group" << "  " << std::setw(4) << "n" << "  "
               << std::setw(static_cast<int>(mw)) << "method" << "  count (elapsed ms)\n";
            for (const auto& r : records)
                os << std::left << std::setw(static_cast<int>(gw)) << r.group << "  " << std::setw(4) << r.n << "  "
                   << std::setw(static_cast<int>(mw)) << r.method << "  " << r.count << " (" << r.elapsed_ms
                   << ")\n";
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Verification reports

inline nlohmann::json to_json_value(const VerificationReport& report, const std::vector<KnownValueRow>& known) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases) {
        nlohmann::json methods = nlohmann::json::array();
        for (const auto& r : c.results)
            methods.push_back({{"method", r.method},
                               {"status", to_string(r.status)},
                               {"count", r.value ? nlohmann::json(r.value->get_str()) : nlohmann::json(nullptr)},
                               {"note", r.note},
                               {"elapsed_ms", r.elapsed_ms}});
        cases.push_back(
            {{"group", c.group}, {"n", c.n}, {"agree", c.agree}, {"elapsed_ms", c.elapsed_ms}, {"methods", methods}});
    }
    nlohmann::json rows = nlohmann::json::array();
    std::size_t mismatches = 0;
    for (const auto& row : known) {
        mismatches += !row.match;
        rows.push_back({{"label", row.label},
                        {"group", row.group},
                        {"n", row.n},
                        {"expected", row.expected.get_str()},
                        {"computed", row.computed ? nlohmann::json(row.computed->get_str()) : nlohmann::json(nullptr)},
                        {"match", row.match}});
    }
    return {{"cases", cases},
            {"summary",
             {{"passed", report.passed}, {"failed", report.failed}, {"known_value_mismatches", mismatches}}},
            {"erratum_flags", report.erratum_flags},
            {"known_values", rows}};
}

inline std::string render_verification(const VerificationReport& report, const std::vector<KnownValueRow>& known,
                                       Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: os << to_json_value(report, known).dump(2) << "\n"; break;
        case Format::csv:
            os << "group,n,method,count,elapsed_ms,status,agree\n";
            for (const auto& c : report.cases)
                for (const auto& r : c.results)
                    os << detail::csv_field(c.group) << "," << c.n << "," << r.method << ","
                       << (r.value ? r.value->get_str() : "") << "," << r.elapsed_ms << "," << to_string(r.status)
                       << "," << (c.agree ? "true" : "false") << "\n";
            break;
        case Format::text: {
            for (const auto& c : report.cases) {
                os << (c.agree ? "ok    " : "FAIL  ") << c.group << " n=" << c.n << ":";
                for (const auto& r : c.results) {
                    os << " " << r.method << "=";
                    os << (r.value ? r.value->get_str() : std::string(to_string(r.status)));
                }
                os << "\n";
            }
            std::size_t mismatches = 0;
            for (const auto& row : known) {
                mismatches += !row.match;
                os << (row.match ? "ok    " : "FAIL  ") << row.group << " n=" << row.n << " " << row.label
                   << ": expected " << row.expected.get_str() << ", computed "
                   << (row.computed ? row.computed->get_str() : "(" + row.note + ")") << "\n";
            }
            os << "cases: " << report.passed << " agree, " << report.failed << " disagree; known values: "
               << known.size() - mismatches << " match, " << mismatches << " mismatch\n";
            break;
        }
    }
    return os.str();
}

}  // namespace escount

#pragma once

/**
 * @file cli.hpp
 * @brief The count / verify / table commands, independent of argument parsing.
 *
 * Exit codes: 0 success, 1 verification disagreement, 2 parse error,
 * 3 budget exceeded, 4 methods disagree under `count --method all`.
 */

#include "escount/abelian.hpp"
#include "escount/budget.hpp"
#include "escount/burnside.hpp"
#include "escount/closed_form.hpp"
#include "escount/report.hpp"
#include "escount/verify.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace escount::cli {

enum ExitCode : int { ok = 0, disagreement = 1, parse_error = 2, budget_error = 3, method_disagreement = 4 };

struct CountOptions {
    std::string group;
    unsigned n = 1;
    std::string method = "closed";
    Format format = Format::text;
};

struct VerifyOptions {
    std::uint64_t max_order = 16;
    unsigned max_n = 2;
    Format format = Format::text;
};

struct TableOptions {
    std::vector<std::string> groups;
    std::optional<std::uint64_t> all_orders;
    unsigned n = 1;
    Format format = Format::text;
};

namespace detail {

template <class Fn>
OutputRecord timed_record(const AbelianGroup& G, unsigned n, const std::string& method, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    const Count value = fn();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return {G.to_string(), n, method, value.get_str(), static_cast<std::uint64_t>(ms)};
}

inline OutputRecord run_count_method(const AbelianGroup& G, unsigned n, const std::string& method,
                                     const Budget& budget) {
    if (method == "closed") return timed_record(G, n, method, [&] { return count_closed_form(G, n, budget); });
    if (method == "congruence")
        return timed_record(G, n, method, [&] { return orbit_count_congruence(G, n, budget); });
    if (method == "naive") return timed_record(G, n, method, [&] { return orbit_count_naive(G, n, budget); });
    throw ParseError("unknown method '" + method + "' (expected closed, congruence, naive or all)", 0);
}

}  // namespace detail

inline int cmd_count(const CountOptions& opt, const Budget& budget, std::ostream& out, std::ostream& err) {
    try {
        if (opt.n == 0) throw ParseError("--n must be positive", 0);
        const AbelianGroup G = parse_group(opt.group);
        std::vector<std::string> methods{opt.method};
        if (opt.method == "all") methods = {"naive", "congruence", "closed"};
        std::vector<OutputRecord> records;
        for (const auto& m : methods) records.push_back(detail::run_count_method(G, opt.n, m, budget));
        out << render_records(records, opt.format);
        for (const auto& r : records)
            if (r.count != records.front().count) {
                err << "error: methods disagree for " << G.to_string() << " n=" << opt.n << "\n";
                return method_disagreement;
            }
        return ok;
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return parse_error;
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return budget_error;
    }
}

inline int cmd_verify(const VerifyOptions& opt, const Budget& budget, std::ostream& out, std::ostream& err) {
    const VerificationReport report = sweep(opt.max_order, opt.max_n, MethodSet::all(), budget);
    const auto known = reproduce_known_values(budget);
    out << render_verification(report, known, opt.format);
    std::size_t mismatches = 0;
    for (const auto& row : known) mismatches += !row.match;
    for (const auto& flag : report.erratum_flags) err << "disagreement: " << flag << "\n";
    return (report.failed == 0 && mismatches == 0) ? ok : disagreement;
}

inline int cmd_table(const TableOptions& opt, const Budget& budget, std::ostream& out, std::ostream& err) {
    try {
        if (opt.n == 0) throw ParseError("--n must be positive", 0);
        std::vector<AbelianGroup> groups;
        for (const auto& spec : opt.groups) groups.push_back(parse_group(spec));
        if (opt.all_orders)
            for (std::uint64_t m = 1; m <= *opt.all_orders; ++m)
                for (auto& G : abelian_groups_of_order(m)) groups.push_back(std::move(G));
        if (groups.empty()) throw ParseError("table needs --groups or --all-orders", 0);
        std::vector<OutputRecord> records;
        for (const auto& G : groups) records.push_back(detail::run_count_method(G, opt.n, "closed", budget));
        out << render_records(records, opt.format);
        return ok;
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return parse_error;
    } catch (const BudgetExceeded& ex) {
        err << "error: " << ex.what() << "\n";
        return budget_error;
    }
}

}  // namespace escount::cli

#pragma once

/**
 * @file verify.hpp
 * @brief Cross-method agreement checks and reproduction of the known values.
 *
 * A case runs every requested method on one (G, n) and records each value.
 * Methods over budget are marked skipped and never fail the case; any other
 * exception marks the method failed and the case as disagreeing.
 */

#include "escount/abelian.hpp"
#include "escount/budget.hpp"
#include "escount/burnside.hpp"
#include "escount/closed_form.hpp"
#include "escount/numtheory.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace escount {

enum class MethodStatus { computed, skipped, failed };

inline const char* to_string(MethodStatus s) {
    switch (s) {
        case MethodStatus::computed: return "computed";
        case MethodStatus::skipped: return "skipped";
        case MethodStatus::failed: return "failed";
    }
    return "unknown";
}

struct MethodResult {
    std::string method;
    MethodStatus status = MethodStatus::computed;
    std::optional<Count> value;
    /// Budget or error message when not computed.
    std::string note;
    std::int64_t elapsed_ms = 0;
};

struct VerificationCase {
    std::string group;
    unsigned n = 0;
    std::vector<MethodResult> results;
    bool agree = true;
    std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
    std::vector<VerificationCase> cases;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> erratum_flags;
};

/// Which families of methods cross_check runs.
struct MethodSet {
    bool naive = true;
    bool congruence = true;
    bool orbits = true;
    bool closed = true;

    static MethodSet all() { return {}; }
    static MethodSet only_burnside() { return {true, true, false, false}; }
};

using CountFn = std::function<Count()>;

namespace detail {

inline std::vector<std::uint64_t> distinct_primes(const AbelianGroup& G) {
    std::vector<std::uint64_t> out;
    for (const auto& f : G.factors())
        if (out.empty() || out.back() != f.p) out.push_back(f.p);
    return out;
}

}  // namespace detail

/// Closed formulas that apply to (G, n), by method name.
inline std::vector<std::pair<std::string, CountFn>> applicable_closed_forms(const AbelianGroup& G, unsigned n,
                                                                           const Budget& budget = {}) {
    std::vector<std::pair<std::string, CountFn>> out;
    if (G.is_trivial()) {
        out.emplace_back("cyclic", [n] { return n_cyclic(1, n); });
        return out;
    }
    if (G.is_cyclic()) {
        out.emplace_back("cyclic", [m = G.order(), n] { return n_cyclic(m, n); });
        if (n == 1) {
            const auto primes = detail::distinct_primes(G);
            const bool squarefree = std::all_of(G.factors().begin(), G.factors().end(),
                                                [](const PrimePower& f) { return f.e == 1; });
            if (squarefree) out.emplace_back("cor_squarefree_n1", [primes] { return corollary_squarefree_n1(primes); });
        }
    }
    if (G.is_cyclic() && G.is_p_group()) {
        const std::uint64_t p = G.factors()[0].p;
        const unsigned e = G.factors()[0].e;
        out.emplace_back("cyclic_prime_power", [p, e, n] { return n_cyclic_prime_power(p, e, n); });
        out.emplace_back("cyclic_prime_power_reduced", [p, e, n] {
            return detail::as_count(n_cyclic_prime_power_reduced(p, e, n), "n_cyclic_prime_power_reduced");
        });
        if (n == 1) out.emplace_back("cor_cyclic_n1", [p, e] { return corollary_cyclic_n1(p, e); });
        if (n == 2) out.emplace_back("cor_cyclic_n2", [p, e] { return corollary_cyclic_n2(p, e); });
        if (e == 1) out.emplace_back("cor_prime_order", [p, n] { return corollary_prime_order(p, n); });
    }
    if (G.is_elementary_abelian()) {
        const std::uint64_t p = G.factors()[0].p;
        const auto s = static_cast<unsigned>(G.rank());
        out.emplace_back("elementary_abelian", [p, s, n, budget] { return n_elementary_abelian(p, s, n, budget); });
    }
    return out;
}

namespace detail {

inline MethodResult run_method(const std::string& name, const CountFn& fn) {
    MethodResult r;
    r.method = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.value = fn();
        r.status = MethodStatus::computed;
    } catch (const BudgetExceeded& ex) {
        r.status = MethodStatus::skipped;
        r.note = ex.what();
    } catch (const std::exception& ex) {
        r.status = MethodStatus::failed;
        r.note = ex.what();
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace detail

inline VerificationCase cross_check(const AbelianGroup& G, unsigned n, MethodSet methods = {},
                                    const Budget& budget = {}) {
    VerificationCase c;
    c.group = G.to_string();
    c.n = n;
    const auto start = std::chrono::steady_clock::now();
    if (methods.naive) c.results.push_back(detail::run_method("naive", [&] { return orbit_count_naive(G, n, budget); }));
    if (methods.congruence)
        c.results.push_back(detail::run_method("congruence", [&] { return orbit_count_congruence(G, n, budget); }));
    if (methods.orbits)
        c.results.push_back(detail::run_method("orbits", [&] {
            return Count(static_cast<unsigned long>(orbit_enumerate(G, n, budget).representatives.size()));
        }));
    if (methods.closed)
        for (const auto& [name, fn] : applicable_closed_forms(G, n, budget))
            c.results.push_back(detail::run_method(name, fn));

    std::optional<Count> reference;
    for (const auto& r : c.results) {
        if (r.status == MethodStatus::failed) c.agree = false;
        if (!r.value) continue;
        if (!reference) reference = r.value;
        else if (*reference != *r.value) c.agree = false;
    }
    c.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return c;
}

/// Every abelian group of order m, one per isomorphism class, in canonical-string order.
inline std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t m) {
    if (m == 0) throw std::domain_error("abelian_groups_of_order: m must be positive");
    std::vector<std::vector<PrimePower>> partial{{}};
    for (const auto& f : factorize(m)) {
        // Partitions of f.e, parts nonincreasing.
        std::vector<std::vector<unsigned>> parts;
        std::vector<unsigned> cur;
        std::function<void(unsigned, unsigned)> rec = [&](unsigned rem, unsigned max_part) {
            if (rem == 0) {
                parts.push_back(cur);
                return;
            }
            for (unsigned q = std::min(rem, max_part); q >= 1; --q) {
                cur.push_back(q);
                rec(rem - q, q);
                cur.pop_back();
            }
        };
        rec(f.e, f.e);
        std::vector<std::vector<PrimePower>> next;
        for (const auto& base : partial)
            for (const auto& partition : parts) {
                auto g = base;
                for (unsigned q : partition) g.push_back({f.p, q});
                next.push_back(std::move(g));
            }
        partial = std::move(next);
    }
    std::vector<AbelianGroup> out;
    for (auto& factors : partial) out.emplace_back(std::move(factors));
    std::sort(out.begin(), out.end(),
              [](const AbelianGroup& a, const AbelianGroup& b) { return a.to_string() < b.to_string(); });
    return out;
}

inline void tally(VerificationReport& report, VerificationCase c) {
    if (c.agree) {
        ++report.passed;
    } else {
        ++report.failed;
        std::string flag = c.group + " n=" + std::to_string(c.n) + ":";
        for (const auto& r : c.results) {
            flag += " " + r.method + "=";
            flag += r.value ? r.value->get_str() : std::string(to_string(r.status));
        }
        report.erratum_flags.push_back(std::move(flag));
    }
    report.cases.push_back(std::move(c));
}

/// cross_check over every abelian group of order <= max_order and every n <= max_n.
inline VerificationReport sweep(std::uint64_t max_order, unsigned max_n, MethodSet methods = {},
                                const Budget& budget = {}) {
    VerificationReport report;
    for (std::uint64_t m = 1; m <= max_order; ++m)
        for (const auto& G : abelian_groups_of_order(m))
            for (unsigned n = 1; n <= max_n; ++n) tally(report, cross_check(G, n, methods, budget));
    return report;
}

// ---------------------------------------------------------------------------
// Known values

struct KnownValueRow {
    std::string label;
    std::string group;
    unsigned n = 0;
    Count expected;
    std::optional<Count> computed;
    std::string note;
    bool match = false;
};

/// Published values and corollary formulas next to the Burnside average
/// computed from automorphism/solution counts.
inline std::vector<KnownValueRow> reproduce_known_values(const Budget& budget = {}) {
    std::vector<KnownValueRow> rows;
    auto add = [&](std::string label, const AbelianGroup& G, unsigned n, Count expected) {
        KnownValueRow row{std::move(label), G.to_string(), n, std::move(expected), std::nullopt, {}, false};
        try {
            row.computed = n_general(G, n, budget);
            row.match = *row.computed == row.expected;
        } catch (const std::exception& ex) {
            row.note = ex.what();
        }
        rows.push_back(std::move(row));
    };

    add("N(C_2,2) = 10", AbelianGroup::cyclic(2), 2, 10);
    add("N(C_4,2) = 76", AbelianGroup::cyclic(4), 2, 76);

    const std::pair<std::uint64_t, unsigned> cyclic_n1[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1},
                                                            {7, 1}, {3, 3}, {2, 3}, {2, 4}, {2, 5}};
    for (const auto& [p, e] : cyclic_n1) {
        const std::string label = (p == 2 && e >= 3) ? "N(C_{2^e},1) = 2^{e+1}+2^e-2" : "N(C_{p^e},1) = p^e+2(p^{e-1}+...+1)";
        add(label, AbelianGroup::cyclic(ipow(p, e)), 1, corollary_cyclic_n1(p, e));
    }

    const std::vector<std::vector<std::uint64_t>> squarefree = {{2, 3}, {2, 5}, {3, 5}, {2, 3, 5}};
    for (const auto& primes : squarefree) {
        std::uint64_t m = 1;
        for (std::uint64_t p : primes) m *= p;
        add("N(C_{p_1}x...xC_{p_s},1) = prod(p_i+2)", AbelianGroup::cyclic(m), 1, corollary_squarefree_n1(primes));
    }

    const std::pair<std::uint64_t, unsigned> cyclic_n2[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {2, 3}, {2, 4}};
    for (const auto& [p, e] : cyclic_n2) {
        const std::string label = p == 2 ? "N(C_{2^e},2) = (15/14)2^{3e}+3*2^{e+1}-116/7" : "N(C_{p^e},2), odd p";
        add(label, AbelianGroup::cyclic(ipow(p, e)), 2, corollary_cyclic_n2(p, e));
    }

    for (std::uint64_t p : {2, 3, 5, 7})
        for (unsigned n = 1; n <= 3; ++n) add("N(C_p,n), prime order", AbelianGroup::cyclic(p), n, corollary_prime_order(p, n));
    return rows;
}

}  // namespace escount

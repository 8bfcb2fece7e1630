#pragma once

/**
 * @file burnside.hpp
 * @brief Orbit counting for Aut(G) x S_n acting on element systems with characters.
 *
 * Omega(G, n) holds tuples x = ((g_1, chi_1), ..., (g_n, chi_n)). The pair
 * (phi, sigma) sends x to the tuple whose position sigma(j) holds
 * (phi(g_j), chi_j o phi^{-1}). Orbits are the isomorphism classes.
 *
 * Three independent routes are provided:
 *   - orbit_count_naive:       Burnside over every (phi, sigma), fixed points
 *                              found by scanning all of Omega;
 *   - orbit_count_congruence:  Burnside with |F| = prod_r (nu_r mu_r)^{lambda_r},
 *                              permutations grouped by cycle type;
 *   - orbit_enumerate:         explicit orbits by union-find over Omega.
 */

#include "escount/abelian.hpp"
#include "escount/budget.hpp"
#include "escount/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace escount {

/// 0-based permutation of {0..n-1}, stored as its image vector.
using Permutation = std::vector<unsigned>;

/// An element system with characters indexed by J = {1..n}.
struct ESC {
    std::vector<GroupElement> elements;
    std::vector<Character> characters;

    std::size_t n() const { return elements.size(); }
    auto operator<=>(const ESC&) const = default;
};

/// All n! permutations in lexicographic order.
inline std::vector<Permutation> all_permutations(unsigned n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// (phi, sigma) o x.
inline ESC act(const AbelianGroup& G, const EndoMatrix& A, const Permutation& sigma, const ESC& x) {
    if (x.elements.size() != x.characters.size() || sigma.size() != x.n())
        throw std::invalid_argument("act: permutation and ESC lengths disagree");
    const EndoMatrix A_inv = invert_automorphism(G, A);
    ESC out{std::vector<GroupElement>(x.n()), std::vector<Character>(x.n())};
    for (std::size_t j = 0; j < x.n(); ++j) {
        out.elements[sigma[j]] = apply_endo(G, A, x.elements[j]);
        out.characters[sigma[j]] = pullback_character(G, A_inv, x.characters[j]);
    }
    return out;
}

namespace detail {

/// |G|^{2n}, or BudgetExceeded against `cap`.
inline std::uint64_t omega_size(const AbelianGroup& G, unsigned n, std::uint64_t cap, const char* cap_name) {
    const std::uint64_t size = saturating_pow(G.order(), 2ull * n, cap);
    if (size > cap)
        throw BudgetExceeded(cap_name, cap,
                             "|Omega| = " + std::to_string(G.order()) + "^" + std::to_string(2 * n));
    return size;
}

/// Action of phi on a single position: index g*m + chi -> phi(g)*m + chi o phi^{-1}.
inline std::vector<std::uint64_t> pair_table(const AbelianGroup& G, const EndoMatrix& A) {
    const std::uint64_t m = G.order();
    const auto elem = element_table(G, A);
    const auto chars = character_table(G, invert_automorphism(G, A));
    std::vector<std::uint64_t> table(m * m);
    for (std::uint64_t g = 0; g < m; ++g)
        for (std::uint64_t c = 0; c < m; ++c) table[g * m + c] = elem[g] * m + chars[c];
    return table;
}

/// Scans every x in Omega and counts those with (phi, sigma) o x = x.
inline std::uint64_t scan_fixed(const std::vector<std::uint64_t>& table, const Permutation& sigma) {
    const std::size_t n = sigma.size();
    const std::uint64_t base = table.size();
    std::vector<std::uint64_t> x(n, 0);
    std::uint64_t fixed = 0;
    while (true) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j)
            if (table[x[j]] != x[sigma[j]]) {
                ok = false;
                break;
            }
        fixed += ok;
        std::size_t pos = n;
        while (pos-- > 0) {
            if (++x[pos] < base) break;
            x[pos] = 0;
        }
        if (pos == static_cast<std::size_t>(-1)) break;
    }
    return fixed;
}

/// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
}

inline Count exact_quotient(const Count& total, const Count& group_order, const char* what) {
    if (total % group_order != 0)
        throw std::logic_error(std::string(what) + ": Burnside sum " + total.get_str() +
                               " is not divisible by |M| = " + group_order.get_str());
    return total / group_order;
}

}  // namespace detail

/// |F_{(phi, sigma)}| by scanning all of Omega(G, n).
inline Count fixed_points_naive(const AbelianGroup& G, const EndoMatrix& A, const Permutation& sigma,
                                const Budget& budget = {}) {
    const auto n = static_cast<unsigned>(sigma.size());
    detail::omega_size(G, n, budget.max_omega, "max_omega");
    return Count(static_cast<unsigned long>(detail::scan_fixed(detail::pair_table(G, A), sigma)));
}

/// |F_{(phi, sigma)}| = prod_r (nu_{phi,r} mu_{phi,r})^{lambda_r} for sigma of type t.
inline Count fixed_points_by_cycles(const AbelianGroup& G, const EndoMatrix& A, const CycleType& t,
                                    const Budget& budget = {}) {
    Count result = 1;
    for (unsigned r = 1; r <= t.n; ++r) {
        if (t[r] == 0) continue;
        const Count per_cycle = count_element_solutions(G, A, r, budget) * count_character_solutions(G, A, r, budget);
        Count power;
        mpz_pow_ui(power.get_mpz_t(), per_cycle.get_mpz_t(), t[r]);
        result *= power;
    }
    return result;
}

/// Burnside data for the cycle-decomposition method.
struct FixedPointReport {
    AbelianGroup group;
    unsigned n = 0;
    std::size_t automorphism_count = 0;
    /// |F_{(phi, sigma)}| keyed by (automorphism index, cycle type of sigma).
    std::map<std::pair<std::size_t, CycleType>, Count> counts;
    /// sum over all of M of |F|, i.e. sum of counts weighted by perm_count.
    Count total;
    Count orbit_count;
};

inline FixedPointReport fixed_point_report(const AbelianGroup& G, unsigned n, const Budget& budget = {}) {
    if (n == 0) throw std::domain_error("fixed_point_report: n must be positive");
    const auto auts = enumerate_automorphisms(G, budget);
    const auto types = cycle_types(n);

    FixedPointReport report{G, n, auts.size(), {}, 0, 0};
    std::vector<std::vector<Count>> per_aut(auts.size());
    detail::parallel_for(auts.size(), [&](std::size_t a) {
        for (const auto& t : types) per_aut[a].push_back(fixed_points_by_cycles(G, auts[a], t, budget));
    });
    for (std::size_t a = 0; a < auts.size(); ++a)
        for (std::size_t ti = 0; ti < types.size(); ++ti) {
            report.total += per_aut[a][ti] * perm_count(types[ti]);
            report.counts.emplace(std::pair{a, types[ti]}, std::move(per_aut[a][ti]));
        }
    const Count group_order = Count(static_cast<unsigned long>(auts.size())) * factorial(n);
    report.orbit_count = detail::exact_quotient(report.total, group_order, "fixed_point_report");
    return report;
}

/// Per-pair naive fixed-point counts, indexed [automorphism][permutation] in
/// the orders of enumerate_automorphisms and all_permutations.
inline std::vector<std::vector<std::uint64_t>> naive_fixed_point_table(const AbelianGroup& G, unsigned n,
                                                                       const Budget& budget = {}) {
    if (n == 0) throw std::domain_error("naive_fixed_point_table: n must be positive");
    detail::omega_size(G, n, budget.max_omega, "max_omega");
    const auto auts = enumerate_automorphisms(G, budget);
    const auto perms = all_permutations(n);
    std::vector<std::vector<std::uint64_t>> out(auts.size());
    detail::parallel_for(auts.size(), [&](std::size_t a) {
        const auto table = detail::pair_table(G, auts[a]);
        for (const auto& sigma : perms) out[a].push_back(detail::scan_fixed(table, sigma));
    });
    return out;
}

/// N(G, n) = (1/|M|) sum_{(phi,sigma) in M} |F_{(phi,sigma)}| with every fixed set counted by scanning Omega.
inline Count orbit_count_naive(const AbelianGroup& G, unsigned n, const Budget& budget = {}) {
    const auto table = naive_fixed_point_table(G, n, budget);
    Count total = 0;
    for (const auto& row : table)
        for (std::uint64_t f : row) total += Count(static_cast<unsigned long>(f));
    const Count group_order = Count(static_cast<unsigned long>(table.size())) * factorial(n);
    return detail::exact_quotient(total, group_order, "orbit_count_naive");
}

/// N(G, n) = (1/|Aut G|) sum_phi sum_lambda prod_i (nu_{phi,i} mu_{phi,i})^{lambda_i} / (lambda_i! i^{lambda_i}).
inline Count orbit_count_congruence(const AbelianGroup& G, unsigned n, const Budget& budget = {}) {
    if (n == 0) throw std::domain_error("orbit_count_congruence: n must be positive");
    const auto auts = enumerate_automorphisms(G, budget);
    const auto types = cycle_types(n);
    std::vector<Rational> per_aut(auts.size());
    detail::parallel_for(auts.size(), [&](std::size_t a) {
        std::vector<Count> per_cycle(n + 1);
        for (unsigned r = 1; r <= n; ++r)
            per_cycle[r] = count_element_solutions(G, auts[a], r, budget) *
                           count_character_solutions(G, auts[a], r, budget);
        Rational sum = 0;
        for (const auto& t : types) {
            Rational term = cycle_weight(t);
            for (unsigned r = 1; r <= n; ++r) {
                if (t[r] == 0) continue;
                Count power;
                mpz_pow_ui(power.get_mpz_t(), per_cycle[r].get_mpz_t(), t[r]);
                term *= power;
            }
            sum += term;
        }
        per_aut[a] = sum;
    });
    Rational total = 0;
    for (const auto& v : per_aut) total += v;
    total /= Rational(static_cast<unsigned long>(auts.size()));
    total.canonicalize();
    if (total.get_den() != 1)
        throw std::logic_error("orbit_count_congruence: non-integral average " + total.get_str());
    return total.get_num();
}

// ---------------------------------------------------------------------------
// Explicit orbits

struct OrbitPartition {
    /// Least member of each orbit in the order of (g_1, chi_1, g_2, chi_2, ...), sorted.
    std::vector<ESC> representatives;
    /// sizes[i] is the size of the orbit of representatives[i].
    std::vector<std::uint64_t> sizes;
};

namespace detail {

/// A generating set of Aut G, chosen greedily in enumeration order.
inline std::vector<EndoMatrix> automorphism_generators(const AbelianGroup& G, const std::vector<EndoMatrix>& auts) {
    using Table = std::vector<std::uint64_t>;
    Table id(G.order());
    std::iota(id.begin(), id.end(), 0);
    std::set<Table> closure{id};
    std::vector<Table> gen_tables;
    std::vector<EndoMatrix> gens;
    for (const auto& A : auts) {
        Table t = element_table(G, A);
        if (closure.count(t)) continue;
        gens.push_back(A);
        gen_tables.push_back(std::move(t));
        closure = {id};
        std::vector<Table> frontier{id};
        while (!frontier.empty()) {
            std::vector<Table> next;
            for (const auto& e : frontier)
                for (const auto& g : gen_tables) {
                    Table prod(e.size());
                    for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[g[i]];
                    if (closure.insert(prod).second) next.push_back(std::move(prod));
                }
            frontier = std::move(next);
        }
    }
    return gens;
}

inline std::uint64_t find_root(std::vector<std::uint64_t>& parent, std::uint64_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

inline ESC esc_from_index(const AbelianGroup& G, unsigned n, std::uint64_t idx) {
    const std::uint64_t m = G.order();
    ESC x{std::vector<GroupElement>(n), std::vector<Character>(n)};
    for (std::size_t j = n; j-- > 0;) {
        const std::uint64_t u = idx % (m * m);
        idx /= m * m;
        x.elements[j] = element_at(G, u / m);
        x.characters[j] = character_at(G, u % m);
    }
    return x;
}

}  // namespace detail

/// Partitions Omega(G, n) into orbits with union-find over a generating set of
/// Aut(G) together with the generators (0 1) and (0 1 ... n-1) of S_n.
inline OrbitPartition orbit_enumerate(const AbelianGroup& G, unsigned n, const Budget& budget = {}) {
    if (n == 0) throw std::domain_error("orbit_enumerate: n must be positive");
    const std::uint64_t size = detail::omega_size(G, n, budget.max_orbit_omega, "max_orbit_omega");
    const std::uint64_t base = G.order() * G.order();

    std::vector<std::vector<std::uint64_t>> tables;
    for (const auto& A : detail::automorphism_generators(G, enumerate_automorphisms(G, budget)))
        tables.push_back(detail::pair_table(G, A));
    std::vector<Permutation> perm_gens;
    if (n >= 2) {
        Permutation swap(n), cycle(n);
        std::iota(swap.begin(), swap.end(), 0u);
        std::swap(swap[0], swap[1]);
        for (unsigned j = 0; j < n; ++j) cycle[j] = (j + 1) % n;
        perm_gens = {swap, cycle};
    }

    std::vector<std::uint64_t> parent(size);
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](std::uint64_t a, std::uint64_t b) {
        a = detail::find_root(parent, a);
        b = detail::find_root(parent, b);
        // Smaller index becomes the root so roots are orbit minima.
        if (a < b) parent[b] = a;
        else if (b < a) parent[a] = b;
    };

    std::vector<std::uint64_t> x(n), y(n);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t j = n; j-- > 0;) {
            x[j] = rest % base;
            rest /= base;
        }
        auto encode_tuple = [&](const std::vector<std::uint64_t>& v) {
            std::uint64_t out = 0;
            for (std::uint64_t u : v) out = out * base + u;
            return out;
        };
        for (const auto& t : tables) {
            for (std::size_t j = 0; j < n; ++j) y[j] = t[x[j]];
            unite(idx, encode_tuple(y));
        }
        for (const auto& sigma : perm_gens) {
            for (std::size_t j = 0; j < n; ++j) y[sigma[j]] = x[j];
            unite(idx, encode_tuple(y));
        }
    }

    std::map<std::uint64_t, std::uint64_t> orbit_size;
    for (std::uint64_t idx = 0; idx < size; ++idx) ++orbit_size[detail::find_root(parent, idx)];
    OrbitPartition out;
    for (const auto& [root, count] : orbit_size) {
        out.representatives.push_back(detail::esc_from_index(G, n, root));
        out.sizes.push_back(count);
    }
    return out;
}

}  // namespace escount

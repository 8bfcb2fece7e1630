#pragma once

/**
 * @file closed_form.hpp
 * @brief Explicit formulas for N(G, n) on cyclic and elementary abelian groups.
 *
 * For a unit i of Z_{p^e} with order vector of shape (k, d), a cycle of
 * length r of sigma contributes p^{c} fixed choices on each of the element
 * and character side, and the exponents summed over all cycles give the
 * quantities f_p / f_2 below. Every average is taken over exact rationals
 * and checked to be integral.
 *
 * Conventions: [n/x] is integer division; empty sums are 0; empty products 1.
 */

#include "escount/abelian.hpp"
#include "escount/budget.hpp"
#include "escount/burnside.hpp"
#include "escount/numtheory.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace escount {

struct FpExponentParams {
    std::uint64_t p = 0;
    unsigned e = 0;
    unsigned k = 0;
    std::uint64_t d = 0;
    CycleType lambda;
};

namespace detail {

/// sum_{1 <= t <= [n/step], (t,p)=1} lambda_{t*step}
inline std::uint64_t coprime_multiples_sum(const CycleType& lambda, std::uint64_t step, std::uint64_t p) {
    std::uint64_t sum = 0;
    for (std::uint64_t t = 1; t * step <= lambda.n; ++t)
        if (t % p != 0) sum += lambda[t * step];
    return sum;
}

/// sum_{1 <= t <= [n/step]} lambda_{t*step}
inline std::uint64_t multiples_sum(const CycleType& lambda, std::uint64_t step) {
    std::uint64_t sum = 0;
    for (std::uint64_t t = 1; t * step <= lambda.n; ++t) sum += lambda[t * step];
    return sum;
}

/// p^s * d, saturated just past n so it can serve as an (empty) step.
inline std::uint64_t scaled_step(std::uint64_t p, unsigned s, std::uint64_t d, unsigned n) {
    std::uint64_t v = d;
    for (unsigned i = 0; i < s && v <= n; ++i) v *= p;
    return v;
}

inline Rational to_integral_check(Rational q, const char* what) {
    q.canonicalize();
    if (q.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral result " + q.get_str());
    return q;
}

inline Count as_count(Rational q, const char* what) { return to_integral_check(std::move(q), what).get_num(); }

inline Rational pow_rational(std::uint64_t base, std::uint64_t exp) { return Rational(pow_count(base, exp)); }

inline Rational fraction(const Count& num, const Count& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Exponent f_p(lambda, delta^{(k,d)}) for p odd, or p = 2 with e <= 2:
///   sum_{s=0}^{e-k-1} (k+s) sum_{t <= [n/(p^s d)], (t,p)=1} lambda_{t p^s d}
///     + e sum_{t <= [n/(p^{e-k} d)]} lambda_{t p^{e-k} d}
inline std::uint64_t f_p(const FpExponentParams& params) {
    const auto& [p, e, k, d, lambda] = params;
    if (!is_prime(p) || !uses_odd_prime_patterns(p, e))
        throw std::domain_error("f_p: needs an odd prime, or p = 2 with e <= 2");
    if (!lambda.valid()) throw std::invalid_argument("f_p: invalid cycle type");
    if (!is_admissible(p, e, {k, d}))
        throw std::domain_error("f_p: inadmissible (k,d) = (" + std::to_string(k) + "," + std::to_string(d) + ")");
    std::uint64_t value = 0;
    for (unsigned s = 0; s + k < e; ++s)
        value += (k + s) * detail::coprime_multiples_sum(lambda, detail::scaled_step(p, s, d, lambda.n), p);
    value += e * detail::multiples_sum(lambda, detail::scaled_step(p, e - k, d, lambda.n));
    return value;
}

/// Exponent f_2(lambda, delta^{(k,d)}) for p = 2, e >= 3:
///   d = 1, 2 <= k <= e:     sum_{s=0}^{e-k-1} (k+s) C_s + e sum_{t <= [n/2^{e-k}]} lambda_{t 2^{e-k}}
///   d = 2, 2 <= k <= e-1:   O + sum_{s=1}^{e-k-1} (k+s) C_s + e sum_{t <= [n/2^{e-k}]} lambda_{t 2^{e-k}}
///   d = 2, k = e:           O + e sum_{t <= [n/2]} lambda_{2t}
/// with C_s = sum over odd t of lambda_{t 2^s} and O = sum over odd t of lambda_t.
inline std::uint64_t f_2(const FpExponentParams& params) {
    const auto& [p, e, k, d, lambda] = params;
    if (p != 2 || e < 3) throw std::domain_error("f_2: needs p = 2 and e >= 3");
    if (!lambda.valid()) throw std::invalid_argument("f_2: invalid cycle type");
    if (!is_admissible(p, e, {k, d}))
        throw std::domain_error("f_2: inadmissible (k,d) = (" + std::to_string(k) + "," + std::to_string(d) + ")");
    const unsigned n = lambda.n;
    const std::uint64_t odd = detail::coprime_multiples_sum(lambda, 1, 2);
    if (d == 2 && k == e) return odd + e * detail::multiples_sum(lambda, 2);

    std::uint64_t value = d == 2 ? odd : 0;
    for (unsigned s = d == 2 ? 1 : 0; s + k < e; ++s)
        value += (k + s) * detail::coprime_multiples_sum(lambda, detail::scaled_step(2, s, 1, n), 2);
    value += e * detail::multiples_sum(lambda, detail::scaled_step(2, e - k, 1, n));
    return value;
}

/// Exponent of the per-factor fixed count for shape (k, d), dispatching on the branch.
inline std::uint64_t shape_exponent(std::uint64_t p, unsigned e, DeltaShape shape, const CycleType& lambda) {
    const FpExponentParams params{p, e, shape.k, shape.d, lambda};
    return uses_odd_prime_patterns(p, e) ? f_p(params) : f_2(params);
}

// ---------------------------------------------------------------------------
// Cyclic p-groups

namespace detail {

inline void require_prime_power(std::uint64_t p, unsigned e, unsigned n, const char* what) {
    if (!is_prime(p)) throw std::domain_error(std::string(what) + ": p must be prime");
    if (e == 0 || n == 0) throw std::domain_error(std::string(what) + ": e and n must be positive");
}

/// sum_lambda p^{2 f(lambda, (k,d))} / (lambda_1! ... n^{lambda_n})
inline Rational shape_weighted_sum(std::uint64_t p, unsigned e, DeltaShape shape, unsigned n) {
    Rational sum = 0;
    for_each_cycle_type(n, [&](const CycleType& t) {
        sum += cycle_weight(t) * pow_rational(p, 2 * shape_exponent(p, e, shape, t));
    });
    return sum;
}

}  // namespace detail

/// N(C_{p^e}, n) in the form that sums over every (k, d) with its class size:
///   odd p or e <= 2:
///     1/(p^{e-1}(p-1)) sum_{d|p-1} phi(d) S(e,d) + sum_{k=1}^{e-1} p^{-k} sum_{d|p-1} phi(d) S(k,d)
///   p = 2, e >= 3:
///     sum_{d=1}^{2} sum_{k=2}^{e} phi(2^{e-k}) / 2^{e-1} S(k,d)
/// where S(k,d) = sum_lambda p^{2 f(lambda,(k,d))} / (prod lambda_i! i^{lambda_i}).
inline Rational n_cyclic_prime_power_expanded(std::uint64_t p, unsigned e, unsigned n) {
    detail::require_prime_power(p, e, n, "n_cyclic_prime_power");
    Rational total = 0;
    if (uses_odd_prime_patterns(p, e)) {
        const Rational top_scale = detail::fraction(1, Count(static_cast<unsigned long>(ipow(p, e - 1) * (p - 1))));
        for (std::uint64_t d : divisors(p - 1))
            total += top_scale * Rational(euler_phi(d)) * detail::shape_weighted_sum(p, e, {e, d}, n);
        for (unsigned k = 1; k < e; ++k) {
            const Rational scale = detail::fraction(1, pow_count(p, k));
            for (std::uint64_t d : divisors(p - 1))
                total += scale * Rational(euler_phi(d)) * detail::shape_weighted_sum(p, e, {k, d}, n);
        }
    } else {
        for (std::uint64_t d = 1; d <= 2; ++d)
            for (unsigned k = 2; k <= e; ++k) {
                const Rational scale = detail::fraction(euler_phi(ipow(2, e - k)), pow_count(2, e - 1));
                total += scale * detail::shape_weighted_sum(2, e, {k, d}, n);
            }
    }
    total.canonicalize();
    return total;
}

/// The same count after the boundary terms are folded in:
///   odd p or e <= 2:
///     1 + 1/(p^{e-1}(p-1)) sum_{d|p-1, d<=n} phi(d) (sum_lambda p^{2e sum_t lambda_{td}} w - 1)
///       + sum_{k=1}^{e-1} p^{-k} sum_{d|p-1, d<=n} phi(d) (S(k,d) - 1)
///   p = 2, e >= 3:
///     1/2^{e-1} sum_lambda (4^{e sum_t lambda_t} + 4^{O + e sum_t lambda_{2t}}) w
///       + sum_{d=1}^{2} sum_{k=2}^{e-1} 2^{-k} S(k,d)
inline Rational n_cyclic_prime_power_reduced(std::uint64_t p, unsigned e, unsigned n) {
    detail::require_prime_power(p, e, n, "n_cyclic_prime_power");
    Rational total = 0;
    if (uses_odd_prime_patterns(p, e)) {
        total = 1;
        const Rational top_scale = detail::fraction(1, Count(static_cast<unsigned long>(ipow(p, e - 1) * (p - 1))));
        for (std::uint64_t d : divisors(p - 1)) {
            if (d > n) continue;
            Rational inner = 0;
            for_each_cycle_type(n, [&](const CycleType& t) {
                inner += cycle_weight(t) * detail::pow_rational(p, 2ull * e * detail::multiples_sum(t, d));
            });
            total += top_scale * Rational(euler_phi(d)) * (inner - 1);
        }
        for (unsigned k = 1; k < e; ++k) {
            const Rational scale = detail::fraction(1, pow_count(p, k));
            for (std::uint64_t d : divisors(p - 1)) {
                if (d > n) continue;
                total += scale * Rational(euler_phi(d)) * (detail::shape_weighted_sum(p, e, {k, d}, n) - 1);
            }
        }
    } else {
        Rational boundary = 0;
        for_each_cycle_type(n, [&](const CycleType& t) {
            const std::uint64_t all = detail::multiples_sum(t, 1);
            const std::uint64_t odd = detail::coprime_multiples_sum(t, 1, 2);
            const std::uint64_t even = detail::multiples_sum(t, 2);
            boundary += cycle_weight(t) * (detail::pow_rational(4, e * all) + detail::pow_rational(4, odd + e * even));
        });
        total += boundary / Rational(pow_count(2, e - 1));
        for (std::uint64_t d = 1; d <= 2; ++d)
            for (unsigned k = 2; k < e; ++k)
                total += detail::fraction(1, pow_count(2, k)) * detail::shape_weighted_sum(2, e, {k, d}, n);
    }
    total.canonicalize();
    return total;
}

/// N(C_{p^e}, n).
inline Count n_cyclic_prime_power(std::uint64_t p, unsigned e, unsigned n) {
    return detail::as_count(n_cyclic_prime_power_expanded(p, e, n), "n_cyclic_prime_power");
}

// ---------------------------------------------------------------------------
// Cyclic groups

namespace detail {

/// Average over Aut(C_{p^e}) of p^{2 f}, for a fixed cycle type.
inline Rational cyclic_factor_average(std::uint64_t p, unsigned e, const CycleType& t) {
    Rational sum = 0;
    for (const auto& shape : admissible_shapes(p, e)) {
        const Count class_size =
            uses_odd_prime_patterns(p, e) ? euler_phi(ipow(p, e - shape.k) * shape.d) : euler_phi(ipow(2, e - shape.k));
        sum += Rational(class_size) * pow_rational(p, 2 * shape_exponent(p, e, shape, t));
    }
    return sum / Rational(euler_phi(ipow(p, e)));
}

}  // namespace detail

/// N(C_m, n) = sum_lambda w(lambda) prod_i [ sum_{(k_i,d_i)} |class| p_i^{2 f} / phi(p_i^{e_i}) ].
inline Count n_cyclic(std::uint64_t m, unsigned n) {
    if (m == 0 || n == 0) throw std::domain_error("n_cyclic: m and n must be positive");
    if (m == 1) return 1;
    const auto primary = factorize(m);
    Rational total = 0;
    for_each_cycle_type(n, [&](const CycleType& t) {
        Rational term = cycle_weight(t);
        for (const auto& f : primary) term *= detail::cyclic_factor_average(f.p, f.e, t);
        total += term;
    });
    return detail::as_count(total, "n_cyclic");
}

// ---------------------------------------------------------------------------
// Elementary abelian groups

/// p^{s(s-1)/2} prod_{i=1}^{s} (p^i - 1).
inline Count general_linear_order(std::uint64_t p, unsigned s) {
    Count r = pow_count(p, static_cast<std::uint64_t>(s) * (s - 1) / 2);
    for (unsigned i = 1; i <= s; ++i) r *= pow_count(p, i) - 1;
    return r;
}

/// GL(s, Z_p): every s x s matrix over Z_p of full rank, lexicographic.
inline std::vector<EndoMatrix> enumerate_general_linear(std::uint64_t p, unsigned s, const Budget& budget = {}) {
    if (!is_prime(p)) throw std::domain_error("enumerate_general_linear: p must be prime");
    const std::uint64_t total = detail::saturating_pow(p, static_cast<std::uint64_t>(s) * s, budget.max_gl_candidates);
    if (total > budget.max_gl_candidates)
        throw BudgetExceeded("max_gl_candidates", budget.max_gl_candidates,
                             std::to_string(p) + "^" + std::to_string(s * s) + " matrices");
    std::vector<EndoMatrix> out;
    std::vector<std::uint64_t> entries(static_cast<std::size_t>(s) * s, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::vector<std::vector<std::int64_t>> rows(s, std::vector<std::int64_t>(s));
        for (unsigned i = 0; i < s; ++i)
            for (unsigned j = 0; j < s; ++j) rows[i][j] = static_cast<std::int64_t>(entries[i * s + j]);
        if (rank_mod_p(rows, p) == s) out.emplace_back(s, entries);
        for (std::size_t pos = entries.size(); pos-- > 0;) {
            if (++entries[pos] < p) break;
            entries[pos] = 0;
        }
    }
    return out;
}

/// N((C_p)^s, n) = 1/|GL| sum_{A in GL(s,Z_p)} sum_lambda prod_i p^{2(s - rank(A^i - I)) lambda_i} / (lambda_i! i^{lambda_i}).
inline Count n_elementary_abelian(std::uint64_t p, unsigned s, unsigned n, const Budget& budget = {}) {
    if (s == 0 || n == 0) throw std::domain_error("n_elementary_abelian: s and n must be positive");
    const auto gl = enumerate_general_linear(p, s, budget);
    if (Count(static_cast<unsigned long>(gl.size())) != general_linear_order(p, s))
        throw std::logic_error("n_elementary_abelian: enumerated |GL| disagrees with p^{s(s-1)/2} prod (p^i - 1)");
    const AbelianGroup G = AbelianGroup::elementary(p, s);
    const auto types = cycle_types(n);

    Rational total = 0;
    for (const auto& A : gl) {
        std::vector<unsigned> corank(n + 1);
        for (unsigned i = 1; i <= n; ++i) corank[i] = s - rank_mod_p(power_minus_identity(G, A, i), p);
        for (const auto& t : types) {
            std::uint64_t exponent = 0;
            for (unsigned i = 1; i <= n; ++i) exponent += 2ull * corank[i] * t[i];
            total += cycle_weight(t) * detail::pow_rational(p, exponent);
        }
    }
    total /= Rational(general_linear_order(p, s));
    return detail::as_count(total, "n_elementary_abelian");
}

// ---------------------------------------------------------------------------
// Arbitrary finite abelian groups

/// N(G, n) for any finite abelian G; the solution-count Burnside average.
inline Count n_general(const AbelianGroup& G, unsigned n, const Budget& budget = {}) {
    return orbit_count_congruence(G, n, budget);
}

/// The most specific closed formula for G: cyclic, elementary abelian, or general.
inline Count count_closed_form(const AbelianGroup& G, unsigned n, const Budget& budget = {}) {
    if (n == 0) throw std::domain_error("count_closed_form: n must be positive");
    if (G.is_trivial()) return 1;
    if (G.is_cyclic()) return n_cyclic(G.order(), n);
    if (G.is_elementary_abelian())
        return n_elementary_abelian(G.factors()[0].p, static_cast<unsigned>(G.rank()), n, budget);
    return n_general(G, n, budget);
}

// ---------------------------------------------------------------------------
// Corollaries

enum class Corollary { cyclic_n1, cyclic_n2, prime_order, squarefree_n1 };

struct CorollaryParams {
    std::uint64_t p = 0;
    unsigned e = 1;
    unsigned n = 1;
    /// Distinct primes, for squarefree_n1.
    std::vector<std::uint64_t> primes;
};

/// N(C_{p^e}, 1): p^e + 2(p^{e-1} + ... + p + 1), or 2^{e+1} + 2^e - 2 when p = 2, e >= 3.
inline Count corollary_cyclic_n1(std::uint64_t p, unsigned e) {
    if (!is_prime(p) || e == 0) throw std::domain_error("corollary_cyclic_n1: needs a prime p and e >= 1");
    if (p == 2 && e >= 3) return pow_count(2, e + 1) + pow_count(2, e) - 2;
    Count geometric = 0;
    for (unsigned i = 0; i < e; ++i) geometric += pow_count(p, i);
    return pow_count(p, e) + 2 * geometric;
}

/// N(C_{p^e}, 2):
///   odd p:       1 + (1/2)(p^{3e} - p^3)/(p^3 - 1) + 1/(p-1) ((1/2)p^{3e+1} + p^{e+1} + p^e - p - 3/2)
///   p = 2:       10 (e = 1), 76 (e = 2)
///   p = 2, e>=3: (15/14) 2^{3e} + 3 * 2^{e+1} - 116/7
inline Count corollary_cyclic_n2(std::uint64_t p, unsigned e) {
    if (!is_prime(p) || e == 0) throw std::domain_error("corollary_cyclic_n2: needs a prime p and e >= 1");
    const Rational half(1, 2);
    Rational v;
    if (p != 2) {
        const Rational pr(static_cast<unsigned long>(p));
        v = 1 + half * (detail::pow_rational(p, 3ull * e) - pr * pr * pr) / (pr * pr * pr - 1) +
            (half * detail::pow_rational(p, 3ull * e + 1) + detail::pow_rational(p, e + 1ull) +
             detail::pow_rational(p, e) - pr - Rational(3, 2)) /
                (pr - 1);
    } else if (e == 1) {
        v = 10;
    } else if (e == 2) {
        v = 76;
    } else {
        v = Rational(15, 14) * detail::pow_rational(2, 3ull * e) + 3 * detail::pow_rational(2, e + 1ull) -
            Rational(116, 7);
    }
    return detail::as_count(v, "cyclic_n2");
}

/// N(C_p, n) = 1 + 1/(p-1) sum_{d|p-1, d<=n} phi(d) (sum_lambda p^{2 sum_{t<=[n/d]} lambda_{td}} w - 1).
inline Count corollary_prime_order(std::uint64_t p, unsigned n) {
    if (!is_prime(p) || n == 0) throw std::domain_error("corollary_prime_order: needs a prime p and n >= 1");
    Rational v = 1;
    for (std::uint64_t d : divisors(p - 1)) {
        if (d > n) continue;
        Rational inner = 0;
        for_each_cycle_type(n, [&](const CycleType& t) {
            inner += cycle_weight(t) * detail::pow_rational(p, 2 * detail::multiples_sum(t, d));
        });
        v += Rational(euler_phi(d)) * (inner - 1) / Rational(static_cast<unsigned long>(p - 1));
    }
    return detail::as_count(v, "prime_order");
}

/// N(C_{p_1} x ... x C_{p_s}, 1) = prod (p_i + 2) for distinct primes.
inline Count corollary_squarefree_n1(const std::vector<std::uint64_t>& primes) {
    std::vector<std::uint64_t> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::domain_error("corollary_squarefree_n1: primes must be distinct");
    Count v = 1;
    for (std::uint64_t p : sorted) {
        if (!is_prime(p)) throw std::domain_error("corollary_squarefree_n1: " + std::to_string(p) + " is not prime");
        v *= Count(static_cast<unsigned long>(p + 2));
    }
    return v;
}

inline Count corollary_values(Corollary which, const CorollaryParams& params) {
    switch (which) {
        case Corollary::cyclic_n1: return corollary_cyclic_n1(params.p, params.e);
        case Corollary::cyclic_n2: return corollary_cyclic_n2(params.p, params.e);
        case Corollary::prime_order: return corollary_prime_order(params.p, params.n);
        case Corollary::squarefree_n1: return corollary_squarefree_n1(params.primes);
    }
    throw std::invalid_argument("corollary_values: unknown corollary");
}

}  // namespace escount

#pragma once

/**
 * @file numtheory.hpp
 * @brief Number-theoretic primitives used by the orbit counting formulas.
 *
 * Euler's totient, divisors, cycle types of permutations, multiplicative
 * orders, common primitive roots of Z*_{p^s} and the order vectors
 * ("delta vectors") of units modulo prime powers.
 *
 * Everything here works on desk-scale inputs: factorization is trial
 * division and all counts are returned as GMP integers.
 */

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace escount {

/// Arbitrary-precision nonnegative count.
using Count = mpz_class;
/// Exact fraction, used for partition-weighted sums.
using Rational = mpq_class;

struct PrimePower {
    std::uint64_t p = 0;
    unsigned e = 0;

    std::uint64_t value() const {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < e; ++i) v *= p;
        return v;
    }

    auto operator<=>(const PrimePower&) const = default;
};

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

inline Count pow_count(std::uint64_t base, std::uint64_t exp) {
    Count r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization by trial division, primes ascending. 1 -> {}.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.push_back({d, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

/// phi(n) as a machine integer; see euler_phi for the exact-count form.
inline std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::domain_error("totient: n must be positive");
    std::uint64_t r = n;
    for (const auto& f : factorize(n)) r = r / f.p * (f.p - 1);
    return r;
}

/// Euler's totient via the product formula n * prod (1 - 1/p).
inline Count euler_phi(std::uint64_t n) { return Count(static_cast<unsigned long>(totient(n))); }

/// All divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::domain_error("divisors: n must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

inline Count factorial(unsigned n) {
    Count r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// ---------------------------------------------------------------------------
// Cycle types

/// The type 1^{l_1} 2^{l_2} ... n^{l_n} of a permutation of {1..n}.
/// multiplicities[t-1] holds l_t.
struct CycleType {
    std::vector<unsigned> multiplicities;
    unsigned n = 0;

    CycleType() = default;
    CycleType(std::vector<unsigned> lambda) : multiplicities(std::move(lambda)) {
        n = static_cast<unsigned>(multiplicities.size());
        if (!valid()) throw std::invalid_argument("CycleType: sum of t*lambda_t must equal n");
    }

    /// lambda_t for 1 <= t; zero past n.
    unsigned operator[](std::size_t t) const {
        return (t >= 1 && t <= multiplicities.size()) ? multiplicities[t - 1] : 0;
    }

    bool valid() const {
        if (n == 0 || multiplicities.size() != n) return false;
        std::uint64_t total = 0;
        for (std::size_t t = 1; t <= n; ++t) total += t * multiplicities[t - 1];
        return total == n;
    }

    auto operator<=>(const CycleType&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < multiplicities.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(multiplicities[i]);
        }
        return s + ")";
    }
};

namespace detail {

template <class F>
void cycle_types_rec(std::vector<unsigned>& lambda, unsigned t, unsigned remaining, F& f) {
    const unsigned n = static_cast<unsigned>(lambda.size());
    if (t == n) {
        if (remaining % n == 0) {
            lambda[n - 1] = remaining / n;
            f(static_cast<const std::vector<unsigned>&>(lambda));
            lambda[n - 1] = 0;
        }
        return;
    }
    for (unsigned c = remaining / t + 1; c-- > 0;) {
        lambda[t - 1] = c;
        cycle_types_rec(lambda, t + 1, remaining - c * t, f);
    }
    lambda[t - 1] = 0;
}

}  // namespace detail

/// Visits every solution of l_1 + 2 l_2 + ... + n l_n = n exactly once,
/// in descending lexicographic order of (l_1, ..., l_n). For n = 3 the order
/// is (3,0,0), (1,1,0), (0,0,1).
template <class F>
void for_each_cycle_type(unsigned n, F&& f) {
    if (n == 0) throw std::domain_error("cycle_types: n must be positive");
    std::vector<unsigned> lambda(n, 0);
    auto visit = [&](const std::vector<unsigned>& v) { f(CycleType(v)); };
    detail::cycle_types_rec(lambda, 1, n, visit);
}

inline std::vector<CycleType> cycle_types(unsigned n) {
    std::vector<CycleType> out;
    for_each_cycle_type(n, [&](CycleType t) { out.push_back(std::move(t)); });
    return out;
}

/// prod_t lambda_t! * t^{lambda_t}: the centralizer order of a permutation of this type.
inline Count centralizer_order(const CycleType& t) {
    Count r = 1;
    for (unsigned len = 1; len <= t.n; ++len) {
        const unsigned l = t[len];
        if (l == 0) continue;
        r *= factorial(l) * pow_count(len, l);
    }
    return r;
}

/// Number of permutations in S_n with this cycle type.
inline Count perm_count(const CycleType& t) { return factorial(t.n) / centralizer_order(t); }

/// 1 / (l_1! ... l_n! 1^{l_1} ... n^{l_n}).
inline Rational cycle_weight(const CycleType& t) {
    Rational w(Count(1), centralizer_order(t));
    w.canonicalize();
    return w;
}

/// Cycle type of a 0-based permutation given as its image vector.
inline CycleType cycle_type_of(std::span<const unsigned> perm) {
    const std::size_t n = perm.size();
    std::vector<unsigned> lambda(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        if (seen[j]) continue;
        unsigned len = 0;
        for (std::size_t k = j; !seen[k]; k = perm[k]) {
            seen[k] = true;
            ++len;
        }
        ++lambda[len - 1];
    }
    return CycleType(std::move(lambda));
}

// ---------------------------------------------------------------------------
// Units modulo prime powers

inline std::uint64_t mod_normalize(std::int64_t i, std::uint64_t modulus) {
    const auto m = static_cast<std::int64_t>(modulus);
    const std::int64_t r = i % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Least r >= 1 with i^r = 1 (mod modulus).
inline std::uint64_t multiplicative_order(std::int64_t i, std::uint64_t modulus) {
    if (modulus == 0) throw std::domain_error("multiplicative_order: modulus must be positive");
    const std::uint64_t x = mod_normalize(i, modulus);
    if (std::gcd(x, modulus) != 1)
        throw std::domain_error("multiplicative_order: " + std::to_string(i) + " is not a unit mod " +
                                std::to_string(modulus));
    if (modulus == 1) return 1;
    // The order divides phi(modulus); test divisors in increasing order.
    for (std::uint64_t d : divisors(totient(modulus)))
        if (powmod(x, d, modulus) == 1) return d;
    throw std::logic_error("multiplicative_order: no divisor of phi(m) annihilates the unit");
}

/// Smallest alpha >= 2 generating Z*_{p^s} for every 1 <= s <= e.
inline std::uint64_t primitive_root(std::uint64_t p, unsigned e) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("primitive_root: p must be an odd prime");
    if (e == 0) throw std::domain_error("primitive_root: e must be positive");
    for (std::uint64_t alpha = 2;; ++alpha) {
        if (alpha % p == 0) continue;
        bool ok = true;
        for (unsigned s = 1; s <= e && ok; ++s) {
            const std::uint64_t ps = ipow(p, s);
            ok = multiplicative_order(static_cast<std::int64_t>(alpha), ps) == totient(ps);
        }
        if (ok) return alpha;
    }
}

/// i = sign * 5^exponent (mod 2^e), with 0 <= exponent < 2^{e-2}.
struct SignedPowerOfFive {
    int sign = 1;
    std::uint64_t exponent = 0;
    auto operator<=>(const SignedPowerOfFive&) const = default;
};

inline SignedPowerOfFive two_power_unit_decomposition(unsigned e, std::int64_t i) {
    if (e < 3) throw std::domain_error("two_power_unit_decomposition: e must be at least 3");
    const std::uint64_t m = ipow(2, e);
    const std::uint64_t x = mod_normalize(i, m);
    if (x % 2 == 0) throw std::domain_error("two_power_unit_decomposition: i must be odd");
    std::uint64_t power = 1;
    for (std::uint64_t nu = 0; nu < m / 4; ++nu) {
        if (power == x) return {1, nu};
        if ((m - power) % m == x) return {-1, nu};
        power = power * 5 % m;
    }
    throw std::logic_error("two_power_unit_decomposition: unit not reached by +-5^nu");
}

/// Index pair (k, d) naming one of the order-vector patterns of units mod p^e.
struct DeltaShape {
    unsigned k = 0;
    std::uint64_t d = 0;
    auto operator<=>(const DeltaShape&) const = default;
};

struct DeltaVector {
    std::vector<std::uint64_t> entries;
    std::optional<DeltaShape> shape;
};

/// True for the branch where patterns are (d,...,d, pd, ..., p^{e-k}d) with d | p-1.
inline bool uses_odd_prime_patterns(std::uint64_t p, unsigned e) { return p != 2 || e <= 2; }

/// All admissible (k, d) for units mod p^e, in (k, d) order.
inline std::vector<DeltaShape> admissible_shapes(std::uint64_t p, unsigned e) {
    std::vector<DeltaShape> out;
    if (uses_odd_prime_patterns(p, e)) {
        for (unsigned k = 1; k <= e; ++k)
            for (std::uint64_t d : divisors(p - 1)) out.push_back({k, d});
    } else {
        for (unsigned k = 2; k <= e; ++k)
            for (std::uint64_t d : {1u, 2u}) out.push_back({k, d});
    }
    return out;
}

inline bool is_admissible(std::uint64_t p, unsigned e, DeltaShape shape) {
    const auto all = admissible_shapes(p, e);
    return std::find(all.begin(), all.end(), shape) != all.end();
}

/// The order-vector pattern for (k, d):
///   odd p or e <= 2:  (d, ..., d [k entries], pd, p^2 d, ..., p^{e-k} d)
///   p = 2, e >= 3:    (1, d, ..., d [through entry k], 2, 4, ..., 2^{e-k})
inline std::vector<std::uint64_t> delta_pattern(std::uint64_t p, unsigned e, DeltaShape shape) {
    if (!is_admissible(p, e, shape))
        throw std::domain_error("delta_pattern: inadmissible (k,d) = (" + std::to_string(shape.k) + "," +
                                std::to_string(shape.d) + ")");
    std::vector<std::uint64_t> v(e);
    const bool odd_branch = uses_odd_prime_patterns(p, e);
    for (unsigned s = 1; s <= e; ++s) {
        if (s <= shape.k)
            v[s - 1] = (!odd_branch && s == 1) ? 1 : shape.d;
        else
            v[s - 1] = ipow(p, s - shape.k) * (odd_branch ? shape.d : 1);
    }
    return v;
}

inline unsigned two_adic_valuation(std::uint64_t x) {
    unsigned v = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++v;
    }
    return v;
}

/// Orders of i in Z*_{p^s} for s = 1..e, classified against the (k, d) patterns.
///
/// For p = 2, e >= 3 the patterns (e-1, 2) and (e, 2) coincide; the shape is
/// then taken from the decomposition i = +-5^nu (d = 1 for +, 2 for -;
/// k = v_2(nu) + 2, or e when nu = 0), which is the parametrisation the
/// census counts phi(2^{e-k}) refer to.
inline DeltaVector delta_vector(std::int64_t i, std::uint64_t p, unsigned e) {
    if (!is_prime(p)) throw std::domain_error("delta_vector: p must be prime");
    if (e == 0) throw std::domain_error("delta_vector: e must be positive");
    if (mod_normalize(i, p) == 0) throw std::domain_error("delta_vector: p divides i");

    DeltaVector out;
    out.entries.reserve(e);
    for (unsigned s = 1; s <= e; ++s) out.entries.push_back(multiplicative_order(i, ipow(p, s)));

    if (uses_odd_prime_patterns(p, e)) {
        for (const auto& shape : admissible_shapes(p, e)) {
            if (delta_pattern(p, e, shape) == out.entries) {
                if (out.shape) throw std::logic_error("delta_vector: ambiguous pattern");
                out.shape = shape;
            }
        }
    } else {
        const auto dec = two_power_unit_decomposition(e, i);
        DeltaShape shape{dec.exponent == 0 ? e : two_adic_valuation(dec.exponent) + 2,
                         dec.sign == 1 ? 1u : 2u};
        if (delta_pattern(p, e, shape) == out.entries) out.shape = shape;
    }
    if (!out.shape) throw std::logic_error("delta_vector: order vector matches no pattern");
    return out;
}

/// Number of units of Z*_{p^e} falling in each (k, d) class.
inline std::map<DeltaShape, Count> delta_census(std::uint64_t p, unsigned e) {
    std::map<DeltaShape, Count> census;
    for (const auto& shape : admissible_shapes(p, e)) census[shape] = 0;
    const std::uint64_t m = ipow(p, e);
    for (std::uint64_t i = 1; i < m; ++i) {
        if (i % p == 0) continue;
        census[*delta_vector(static_cast<std::int64_t>(i), p, e).shape] += 1;
    }
    return census;
}

}  // namespace escount

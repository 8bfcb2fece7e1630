#pragma once

/**
 * @file abelian.hpp
 * @brief Finite abelian groups as products of prime-power cyclic factors.
 *
 * A group G = <h_1> x ... x <h_s> with o(h_i) = m_i = p_i^{e_i} is stored by
 * its sorted factor list. Elements and characters are exponent vectors:
 *
 *   g = k_1 h_1 + ... + k_s h_s,        0 <= k_i < m_i
 *   chi(h_i) = omega_i^{l_i},           0 <= l_i < m_i
 *
 * where omega_i = omega^{m/m_i} for a fixed primitive m-th root of unity
 * omega. Character values are reported as exponents of omega, so no field
 * arithmetic is needed anywhere.
 *
 * An endomorphism is an s x s matrix A acting by (A k)_i = sum_j a_ij k_j
 * mod m_i. Column j is the image of h_j; well-definedness forces
 * a_ij = 0 mod m_i / gcd(m_i, m_j).
 */

#include "escount/budget.hpp"
#include "escount/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace escount {

class AbelianGroup {
public:
    /// The trivial group (s = 0).
    AbelianGroup() = default;

    explicit AbelianGroup(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
        for (const auto& f : factors_) {
            if (!is_prime(f.p)) throw std::invalid_argument("AbelianGroup: " + std::to_string(f.p) + " is not prime");
            if (f.e == 0) throw std::invalid_argument("AbelianGroup: factor exponent must be positive");
        }
        std::sort(factors_.begin(), factors_.end());
        order_ = 1;
        for (const auto& f : factors_) {
            const std::uint64_t m = f.value();
            if (order_ > (std::uint64_t{1} << 62) / m) throw std::overflow_error("AbelianGroup: order too large");
            moduli_.push_back(m);
            order_ *= m;
        }
    }

    /// C_m, split into its primary components (C12 -> C4 x C3).
    static AbelianGroup cyclic(std::uint64_t m) {
        if (m == 0) throw std::invalid_argument("AbelianGroup::cyclic: modulus must be positive");
        return AbelianGroup(factorize(m));
    }

    /// (C_p)^s.
    static AbelianGroup elementary(std::uint64_t p, unsigned s) {
        return AbelianGroup(std::vector<PrimePower>(s, PrimePower{p, 1}));
    }

    const std::vector<PrimePower>& factors() const { return factors_; }
    const std::vector<std::uint64_t>& moduli() const { return moduli_; }
    std::uint64_t modulus(std::size_t i) const { return moduli_.at(i); }
    std::size_t rank() const { return factors_.size(); }
    std::uint64_t order() const { return order_; }
    bool is_trivial() const { return factors_.empty(); }

    bool is_cyclic() const {
        for (std::size_t i = 1; i < factors_.size(); ++i)
            if (factors_[i].p == factors_[i - 1].p) return false;
        return true;
    }

    bool is_p_group() const {
        return !factors_.empty() &&
               std::all_of(factors_.begin(), factors_.end(), [&](const auto& f) { return f.p == factors_[0].p; });
    }

    bool is_elementary_abelian() const {
        return is_p_group() && std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.e == 1; });
    }

    /// Half-open index ranges [begin, end) of the factors sharing one prime.
    std::vector<std::pair<std::size_t, std::size_t>> primary_blocks() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < factors_.size();) {
            std::size_t j = i;
            while (j < factors_.size() && factors_[j].p == factors_[i].p) ++j;
            out.emplace_back(i, j);
            i = j;
        }
        return out;
    }

    /// Canonical spec text, e.g. "C2xC4xC3"; "C1" for the trivial group.
    std::string to_string() const {
        if (factors_.empty()) return "C1";
        std::string s;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            if (i) s += "x";
            s += "C" + std::to_string(moduli_[i]);
        }
        return s;
    }

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<PrimePower> factors_;
    std::vector<std::uint64_t> moduli_;
    std::uint64_t order_ = 1;
};

// ---------------------------------------------------------------------------
// Group spec parsing: group := factor ("x" factor)*, factor := "C" uint ("^" uint)?

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + msg),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline AbelianGroup parse_group(std::string_view spec) {
    std::size_t pos = 0;
    auto read_uint = [&](const char* what) {
        const std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(spec[pos] - '0');
            if (v > (UINT64_MAX - digit) / 10) throw ParseError(std::string(what) + " is too large", start);
            v = v * 10 + digit;
            ++pos;
        }
        if (pos == start) throw ParseError(std::string("expected ") + what, start);
        return std::pair{v, start};
    };

    if (spec.empty()) throw ParseError("empty group spec", 0);
    std::vector<PrimePower> factors;
    while (true) {
        if (pos >= spec.size() || (spec[pos] != 'C' && spec[pos] != 'c')) throw ParseError("expected 'C'", pos);
        ++pos;
        const auto [modulus, mod_pos] = read_uint("modulus");
        if (modulus == 0) throw ParseError("modulus must be positive", mod_pos);
        std::uint64_t power = 1;
        if (pos < spec.size() && spec[pos] == '^') {
            ++pos;
            const auto [pw, pw_pos] = read_uint("exponent");
            if (pw == 0) throw ParseError("exponent must be positive", pw_pos);
            power = pw;
        }
        const auto primary = factorize(modulus);
        if (!primary.empty() && power > 64) throw ParseError("exponent too large", pos);
        for (std::uint64_t r = 0; r < power; ++r) factors.insert(factors.end(), primary.begin(), primary.end());

        if (pos == spec.size()) break;
        if (spec[pos] != 'x') throw ParseError("expected 'x' or end of input", pos);
        ++pos;
    }
    try {
        return AbelianGroup(std::move(factors));
    } catch (const std::overflow_error&) {
        throw ParseError("group order too large", 0);
    }
}

// ---------------------------------------------------------------------------
// Elements and characters

struct GroupElement {
    std::vector<std::uint64_t> exps;
    auto operator<=>(const GroupElement&) const = default;
};

struct Character {
    std::vector<std::uint64_t> exps;
    auto operator<=>(const Character&) const = default;
};

/// Mixed-radix index of an exponent vector; first coordinate most significant,
/// so index order is lexicographic order.
inline std::uint64_t encode(const AbelianGroup& G, std::span<const std::uint64_t> exps) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < G.rank(); ++i) idx = idx * G.modulus(i) + exps[i];
    return idx;
}

inline std::vector<std::uint64_t> decode(const AbelianGroup& G, std::uint64_t idx) {
    std::vector<std::uint64_t> exps(G.rank());
    for (std::size_t i = G.rank(); i-- > 0;) {
        exps[i] = idx % G.modulus(i);
        idx /= G.modulus(i);
    }
    return exps;
}

inline GroupElement element_at(const AbelianGroup& G, std::uint64_t idx) { return {decode(G, idx)}; }
inline Character character_at(const AbelianGroup& G, std::uint64_t idx) { return {decode(G, idx)}; }

inline std::vector<GroupElement> elements(const AbelianGroup& G) {
    std::vector<GroupElement> out;
    out.reserve(G.order());
    for (std::uint64_t i = 0; i < G.order(); ++i) out.push_back(element_at(G, i));
    return out;
}

inline std::vector<Character> characters(const AbelianGroup& G) {
    std::vector<Character> out;
    out.reserve(G.order());
    for (std::uint64_t i = 0; i < G.order(); ++i) out.push_back(character_at(G, i));
    return out;
}

/// chi(g) as the exponent of omega in Z_m.
inline std::uint64_t character_value(const AbelianGroup& G, const Character& chi, const GroupElement& g) {
    const std::uint64_t m = G.order();
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        const std::uint64_t mi = G.modulus(i);
        v = (v + mulmod(chi.exps[i], g.exps[i], mi) * (m / mi)) % m;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Endomorphisms

class EndoMatrix {
public:
    EndoMatrix() = default;
    EndoMatrix(std::size_t dim, std::vector<std::uint64_t> entries) : dim_(dim), entries_(std::move(entries)) {
        if (entries_.size() != dim_ * dim_) throw std::invalid_argument("EndoMatrix: need dim*dim entries");
    }

    static EndoMatrix identity(std::size_t dim) {
        EndoMatrix a(dim, std::vector<std::uint64_t>(dim * dim, 0));
        for (std::size_t i = 0; i < dim; ++i) a(i, i) = 1;
        return a;
    }

    std::size_t dim() const { return dim_; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    std::uint64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    auto operator<=>(const EndoMatrix&) const = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i) s += ";";
            for (std::size_t j = 0; j < dim_; ++j) {
                if (j) s += ",";
                s += std::to_string((*this)(i, j));
            }
        }
        return s + "]";
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> entries_;
};

namespace detail {

inline void require_dim(const AbelianGroup& G, const EndoMatrix& A) {
    if (A.dim() != G.rank())
        throw std::invalid_argument("dimension mismatch: matrix is " + std::to_string(A.dim()) + "x" +
                                    std::to_string(A.dim()) + " but the group has " + std::to_string(G.rank()) +
                                    " factors");
}

inline void require_dim(const AbelianGroup& G, std::span<const std::uint64_t> v) {
    if (v.size() != G.rank())
        throw std::invalid_argument("dimension mismatch: vector has " + std::to_string(v.size()) +
                                    " entries but the group has " + std::to_string(G.rank()) + " factors");
}

/// Smallest allowed nonzero step for entry (i, j): m_i / gcd(m_i, m_j).
inline std::uint64_t entry_step(const AbelianGroup& G, std::size_t i, std::size_t j) {
    return G.modulus(i) / std::gcd(G.modulus(i), G.modulus(j));
}

inline void apply_into(const AbelianGroup& G, const EndoMatrix& A, std::span<const std::uint64_t> k,
                       std::span<std::uint64_t> out) {
    const std::size_t s = G.rank();
    for (std::size_t i = 0; i < s; ++i) {
        const std::uint64_t mi = G.modulus(i);
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < s; ++j) acc = (acc + mulmod(A(i, j), k[j], mi)) % mi;
        out[i] = acc;
    }
}

}  // namespace detail

/// Entries reduced and satisfying a_ij = 0 mod m_i / gcd(m_i, m_j).
inline bool is_well_formed(const AbelianGroup& G, const EndoMatrix& A) {
    if (A.dim() != G.rank()) return false;
    for (std::size_t i = 0; i < G.rank(); ++i)
        for (std::size_t j = 0; j < G.rank(); ++j)
            if (A(i, j) >= G.modulus(i) || A(i, j) % detail::entry_step(G, i, j) != 0) return false;
    return true;
}

inline GroupElement apply_endo(const AbelianGroup& G, const EndoMatrix& A, const GroupElement& g) {
    detail::require_dim(G, A);
    detail::require_dim(G, g.exps);
    GroupElement out{std::vector<std::uint64_t>(G.rank())};
    detail::apply_into(G, A, g.exps, out.exps);
    return out;
}

/// Matrix of the composite A o B (apply B first).
inline EndoMatrix compose(const AbelianGroup& G, const EndoMatrix& A, const EndoMatrix& B) {
    detail::require_dim(G, A);
    detail::require_dim(G, B);
    const std::size_t s = G.rank();
    EndoMatrix C(s, std::vector<std::uint64_t>(s * s, 0));
    for (std::size_t i = 0; i < s; ++i) {
        const std::uint64_t mi = G.modulus(i);
        for (std::size_t j = 0; j < s; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t l = 0; l < s; ++l) acc = (acc + mulmod(A(i, l), B(l, j), mi)) % mi;
            C(i, j) = acc;
        }
    }
    return C;
}

inline EndoMatrix endo_power(const AbelianGroup& G, const EndoMatrix& A, std::uint64_t r) {
    if (r == 0) throw std::domain_error("endo_power: r must be positive");
    EndoMatrix result = EndoMatrix::identity(G.rank());
    EndoMatrix base = A;
    while (r) {
        if (r & 1) result = compose(G, result, base);
        r >>= 1;
        if (r) base = compose(G, base, base);
    }
    return result;
}

/// Image index of every element index under A.
inline std::vector<std::uint64_t> element_table(const AbelianGroup& G, const EndoMatrix& A) {
    detail::require_dim(G, A);
    std::vector<std::uint64_t> table(G.order());
    std::vector<std::uint64_t> k(G.rank(), 0), img(G.rank());
    for (std::uint64_t idx = 0; idx < G.order(); ++idx) {
        detail::apply_into(G, A, k, img);
        table[idx] = encode(G, img);
        for (std::size_t i = G.rank(); i-- > 0;) {
            if (++k[i] < G.modulus(i)) break;
            k[i] = 0;
        }
    }
    return table;
}

inline bool is_bijective(const AbelianGroup& G, const EndoMatrix& A) {
    const auto table = element_table(G, A);
    std::vector<bool> hit(G.order(), false);
    for (std::uint64_t v : table) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

/// Matrix of phi^{-1}; column j is phi^{-1}(h_j), read off the inverted element table.
inline EndoMatrix invert_automorphism(const AbelianGroup& G, const EndoMatrix& A) {
    if (!is_well_formed(G, A)) throw std::invalid_argument("invert_automorphism: matrix is not a well-formed endomorphism");
    const auto table = element_table(G, A);
    std::vector<std::uint64_t> inverse(G.order(), G.order());
    for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
        if (inverse[table[idx]] != G.order())
            throw std::domain_error("invert_automorphism: " + A.to_string() + " is not an automorphism");
        inverse[table[idx]] = idx;
    }
    const std::size_t s = G.rank();
    EndoMatrix B(s, std::vector<std::uint64_t>(s * s, 0));
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<std::uint64_t> unit(s, 0);
        unit[j] = 1 % G.modulus(j);
        const auto col = decode(G, inverse[encode(G, unit)]);
        for (std::size_t i = 0; i < s; ++i) B(i, j) = col[i];
    }
    return B;
}

/// chi o phi^{-1}, given the matrix of phi^{-1}.
///
/// (chi o phi^{-1})(h_j) = chi(sum_i b_ij h_i) has omega-exponent
/// sum_i (l_i b_ij mod m_i) * m/m_i; it is an m_j-th root of unity, so the
/// exponent is a multiple of m/m_j and l'_j is the quotient.
inline Character pullback_character(const AbelianGroup& G, const EndoMatrix& A_inv, const Character& chi) {
    detail::require_dim(G, A_inv);
    detail::require_dim(G, chi.exps);
    const std::uint64_t m = G.order();
    const std::size_t s = G.rank();
    Character out{std::vector<std::uint64_t>(s)};
    for (std::size_t j = 0; j < s; ++j) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < s; ++i) {
            const std::uint64_t mi = G.modulus(i);
            v = (v + mulmod(chi.exps[i], A_inv(i, j), mi) * (m / mi)) % m;
        }
        const std::uint64_t scale = m / G.modulus(j);
        if (v % scale != 0) throw std::logic_error("pullback_character: value is not an m_j-th root of unity");
        out.exps[j] = v / scale;
    }
    return out;
}

/// Image index of every character index under chi -> chi o X, X the matrix given.
inline std::vector<std::uint64_t> character_table(const AbelianGroup& G, const EndoMatrix& X) {
    std::vector<std::uint64_t> table(G.order());
    for (std::uint64_t idx = 0; idx < G.order(); ++idx)
        table[idx] = encode(G, pullback_character(G, X, character_at(G, idx)).exps);
    return table;
}

namespace detail {

/// All automorphisms of the primary block [b, e) of G, as (e-b)x(e-b) matrices.
inline std::vector<EndoMatrix> block_automorphisms(const AbelianGroup& G, std::size_t b, std::size_t e,
                                                   const Budget& budget) {
    const std::size_t s = e - b;
    std::vector<PrimePower> sub(G.factors().begin() + static_cast<std::ptrdiff_t>(b),
                                G.factors().begin() + static_cast<std::ptrdiff_t>(e));
    const AbelianGroup H(sub);

    std::vector<std::uint64_t> step(s * s), choices(s * s);
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            step[i * s + j] = entry_step(H, i, j);
            choices[i * s + j] = H.modulus(i) / step[i * s + j];
            if (candidates > budget.max_aut_candidates / choices[i * s + j])
                throw BudgetExceeded("max_aut_candidates", budget.max_aut_candidates,
                                     "more candidate matrices for the " + std::to_string(H.factors()[0].p) +
                                         "-primary component");
            candidates *= choices[i * s + j];
        }

    std::vector<std::vector<std::uint64_t>> nonzero;
    for (std::uint64_t idx = 1; idx < H.order(); ++idx) nonzero.push_back(decode(H, idx));

    std::vector<EndoMatrix> out;
    std::vector<std::uint64_t> digit(s * s, 0);
    EndoMatrix A(s, std::vector<std::uint64_t>(s * s, 0));
    std::vector<std::uint64_t> img(s);
    for (std::uint64_t c = 0; c < candidates; ++c) {
        bool injective = true;
        for (const auto& k : nonzero) {
            apply_into(H, A, k, img);
            if (std::all_of(img.begin(), img.end(), [](std::uint64_t x) { return x == 0; })) {
                injective = false;
                break;
            }
        }
        if (injective) out.push_back(A);
        for (std::size_t pos = s * s; pos-- > 0;) {
            if (++digit[pos] < choices[pos]) {
                A(pos / s, pos % s) = digit[pos] * step[pos];
                break;
            }
            digit[pos] = 0;
            A(pos / s, pos % s) = 0;
        }
    }
    return out;
}

}  // namespace detail

/// Every automorphism of G as a reduced, well-formed matrix.
///
/// Entries coupling different primes are forced to zero, so Aut G is the
/// product of the automorphism groups of the primary components. Each
/// component is enumerated over all constraint-satisfying matrices and
/// filtered to those with trivial kernel (equivalently bijective on the
/// finite component).
inline std::vector<EndoMatrix> enumerate_automorphisms(const AbelianGroup& G, const Budget& budget = {}) {
    if (G.order() > budget.max_aut_group_order)
        throw BudgetExceeded("max_aut_group_order", budget.max_aut_group_order, "|G| = " + std::to_string(G.order()));
    const std::size_t s = G.rank();
    std::vector<EndoMatrix> result{EndoMatrix(s, std::vector<std::uint64_t>(s * s, 0))};
    for (const auto& [b, e] : G.primary_blocks()) {
        const auto block = detail::block_automorphisms(G, b, e, budget);
        std::vector<EndoMatrix> next;
        next.reserve(result.size() * block.size());
        for (const auto& partial : result)
            for (const auto& Bm : block) {
                EndoMatrix A = partial;
                for (std::size_t i = b; i < e; ++i)
                    for (std::size_t j = b; j < e; ++j) A(i, j) = Bm(i - b, j - b);
                next.push_back(std::move(A));
            }
        result = std::move(next);
    }
    return result;
}

/// nu_{phi,r}: solutions X of (A^r - I) X = 0 with X_i in Z_{m_i}, by enumeration.
inline Count count_element_solutions(const AbelianGroup& G, const EndoMatrix& A, std::uint64_t r,
                                     const Budget& budget = {}) {
    if (G.order() > budget.max_solution_space)
        throw BudgetExceeded("max_solution_space", budget.max_solution_space, "|G| = " + std::to_string(G.order()));
    const auto table = element_table(G, endo_power(G, A, r));
    std::uint64_t fixed = 0;
    for (std::uint64_t idx = 0; idx < table.size(); ++idx) fixed += table[idx] == idx;
    return Count(static_cast<unsigned long>(fixed));
}

/// mu_{phi,r}: characters chi with chi o phi^{-r} = chi, by enumeration.
inline Count count_character_solutions(const AbelianGroup& G, const EndoMatrix& A, std::uint64_t r,
                                       const Budget& budget = {}) {
    if (G.order() > budget.max_solution_space)
        throw BudgetExceeded("max_solution_space", budget.max_solution_space, "|G| = " + std::to_string(G.order()));
    const EndoMatrix inv_r = endo_power(G, invert_automorphism(G, A), r);
    std::uint64_t fixed = 0;
    for (std::uint64_t idx = 0; idx < G.order(); ++idx) {
        const Character chi = character_at(G, idx);
        fixed += pullback_character(G, inv_r, chi) == chi;
    }
    return Count(static_cast<unsigned long>(fixed));
}

/// Rank over the field Z_p by Gaussian elimination.
inline unsigned rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("rank_mod_p: p must be prime");
    for (auto& row : rows)
        for (auto& x : row) x = static_cast<std::int64_t>(mod_normalize(x, p));
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows ? rows[0].size() : 0;
    unsigned rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[pivot], rows[rank]);
        const auto inv = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(rows[rank][col]), p - 2, p));
        for (auto& x : rows[rank]) x = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(x), inv, p));
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const auto f = static_cast<std::uint64_t>(rows[r][col]);
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] = static_cast<std::int64_t>(
                    mod_normalize(rows[r][c] - static_cast<std::int64_t>(mulmod(f, rows[rank][c], p)), p));
        }
        ++rank;
    }
    return rank;
}

/// A^r - I as plain integer rows (entries not reduced).
inline std::vector<std::vector<std::int64_t>> power_minus_identity(const AbelianGroup& G, const EndoMatrix& A,
                                                                   std::uint64_t r) {
    const EndoMatrix Ar = endo_power(G, A, r);
    std::vector<std::vector<std::int64_t>> rows(G.rank(), std::vector<std::int64_t>(G.rank()));
    for (std::size_t i = 0; i < G.rank(); ++i)
        for (std::size_t j = 0; j < G.rank(); ++j)
            rows[i][j] = static_cast<std::int64_t>(Ar(i, j)) - (i == j ? 1 : 0);
    return rows;
}

/// nu_{A,r} = p^{s - rank(A^r - I)} on an elementary abelian group (C_p)^s.
inline Count elementary_fixed_count(const AbelianGroup& G, const EndoMatrix& A, std::uint64_t r) {
    if (!G.is_elementary_abelian()) throw std::domain_error("elementary_fixed_count: group is not elementary abelian");
    const std::uint64_t p = G.factors()[0].p;
    return pow_count(p, G.rank() - rank_mod_p(power_minus_identity(G, A, r), p));
}

}  // namespace escount

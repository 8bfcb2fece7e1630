#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace escount {

/// Thrown when an exhaustive enumeration would exceed its configured limit.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& limit_name, std::uint64_t limit, const std::string& needed)
        : std::runtime_error("budget exceeded: " + limit_name + " = " + std::to_string(limit) +
                             " (needed " + needed + ")"),
          limit_name_(limit_name),
          limit_(limit) {}

    const std::string& limit_name() const noexcept { return limit_name_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::string limit_name_;
    std::uint64_t limit_;
};

/// Limits on every exhaustive enumeration in the library.
struct Budget {
    /// Largest |G| whose automorphism group is enumerated.
    std::uint64_t max_aut_group_order = 64;
    /// Largest number of candidate matrices examined for one primary component.
    std::uint64_t max_aut_candidates = std::uint64_t{1} << 22;
    /// Largest |G| scanned when counting fixed elements or characters.
    std::uint64_t max_solution_space = std::uint64_t{1} << 20;
    /// Largest |Omega(G,n)| = |G|^{2n} for the naive fixed-point oracle.
    std::uint64_t max_omega = std::uint64_t{1} << 20;
    /// Largest |Omega(G,n)| for explicit orbit enumeration.
    std::uint64_t max_orbit_omega = 65536;
    /// Largest p^{s*s} for enumerating all s x s matrices over Z_p.
    std::uint64_t max_gl_candidates = std::uint64_t{1} << 22;

    /// Defaults, with ESC_BUDGET (if set to a positive integer) replacing max_omega.
    static Budget from_environment() {
        Budget b;
        if (const char* env = std::getenv("ESC_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0' || v == 0)
                throw std::invalid_argument(std::string("ESC_BUDGET must be a positive integer, got '") + env +
                                            "'");
            b.max_omega = v;
        }
        return b;
    }
};

namespace detail {

/// base^exp, saturated at cap + 1.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace detail

}  // namespace escount

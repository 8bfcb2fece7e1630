#include "escount/closed_form.hpp"
#include "escount/verify.hpp"

#include <gtest/gtest.h>

using namespace escount;

namespace {

FpExponentParams params(std::uint64_t p, unsigned e, unsigned k, std::uint64_t d, std::vector<unsigned> lambda) {
    return {p, e, k, d, CycleType(std::move(lambda))};
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t limit) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned e = 1; ipow(p, e) <= limit; ++e) out.push_back({p, e});
    }
    return out;
}

}  // namespace

TEST(Fp, SingleCycle) {
    for (std::uint64_t p : {3, 5, 7})
        for (unsigned e = 1; e <= 4; ++e) {
            for (unsigned k = 1; k < e; ++k) EXPECT_EQ(f_p(params(p, e, k, 1, {1})), k);
            EXPECT_EQ(f_p(params(p, e, e, 1, {1})), e);
        }
}

TEST(Fp, OrderAboveNVanishes) {
    EXPECT_EQ(f_p(params(7, 2, 1, 3, {2, 0})), 0u);
    EXPECT_EQ(f_p(params(7, 2, 2, 6, {0, 1})), 0u);
    EXPECT_EQ(f_p(params(5, 3, 1, 4, {1, 1, 0})), 0u);
}

TEST(Fp, Transposition) {
    for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(f_p(params(3, 3, k, 2, {0, 1})), k);
    EXPECT_EQ(f_p(params(5, 2, 1, 2, {0, 1})), 1u);
}

TEST(Fp, FullLengthPattern) {
    // k = e: e * sum_{t <= [n/d]} lambda_{td}
    EXPECT_EQ(f_p(params(3, 2, 2, 1, {1, 1, 0})), 4u);
    EXPECT_EQ(f_p(params(3, 2, 2, 2, {0, 0, 0, 1})), 2u);
    EXPECT_EQ(f_p(params(3, 2, 1, 1, {1, 1, 0})), 2u);
    EXPECT_EQ(f_p(params(3, 2, 1, 1, {0, 0, 1})), 2u);
}

TEST(Fp, Errors) {
    EXPECT_THROW(f_p(params(2, 3, 2, 1, {1})), std::domain_error);
    EXPECT_THROW(f_p(params(3, 2, 1, 4, {1})), std::domain_error);
    EXPECT_THROW(f_p(params(3, 2, 3, 1, {1})), std::domain_error);
    EXPECT_THROW(f_p(params(4, 2, 1, 1, {1})), std::domain_error);
}

TEST(F2, SingleCycle) {
    for (unsigned e = 3; e <= 6; ++e) {
        for (unsigned k = 2; k < e; ++k) {
            EXPECT_EQ(f_2(params(2, e, k, 1, {1})), k);
            EXPECT_EQ(f_2(params(2, e, k, 2, {1})), 1u);
        }
        EXPECT_EQ(f_2(params(2, e, e, 1, {1})), e);
        EXPECT_EQ(f_2(params(2, e, e, 2, {1})), 1u);
    }
}

TEST(F2, TwoFixedPoints) {
    for (unsigned e = 3; e <= 6; ++e)
        for (unsigned k = 2; k < e; ++k) EXPECT_EQ(f_2(params(2, e, k, 1, {2, 0})), 2 * k);
    // k lambda_1 + (k+1) lambda_2 while k + 1 < e.
    EXPECT_EQ(f_2(params(2, 5, 2, 1, {0, 1})), 3u);
    EXPECT_EQ(f_2(params(2, 5, 3, 1, {0, 1})), 4u);
}

TEST(F2, IdentityPattern) {
    for (unsigned e = 3; e <= 5; ++e)
        for (unsigned n = 1; n <= 5; ++n)
            for (const auto& t : cycle_types(n)) {
                std::uint64_t cycles = 0;
                for (unsigned r = 1; r <= n; ++r) cycles += t[r];
                EXPECT_EQ(f_2({2, e, e, 1, t}), e * cycles);
            }
}

TEST(F2, Errors) {
    EXPECT_THROW(f_2(params(3, 3, 2, 1, {1})), std::domain_error);
    EXPECT_THROW(f_2(params(2, 2, 2, 1, {1})), std::domain_error);
    EXPECT_THROW(f_2(params(2, 4, 1, 1, {1})), std::domain_error);
    EXPECT_THROW(f_2(params(2, 4, 2, 4, {1})), std::domain_error);
}

TEST(ShapeExponent, MatchesCycleSolutionCounts) {
    // A unit of shape (k,d) fixes p^{f} elements over its cycles of each length.
    for (const auto& [p, e] : prime_powers_up_to(32)) {
        const std::uint64_t m = ipow(p, e);
        const auto G = AbelianGroup::cyclic(m);
        for (std::uint64_t i = 1; i < m; ++i) {
            if (i % p == 0) continue;
            const auto shape = *delta_vector(static_cast<std::int64_t>(i), p, e).shape;
            const EndoMatrix A(1, {i});
            for (unsigned n = 1; n <= 4; ++n)
                for (const auto& t : cycle_types(n)) {
                    Count expected = 1;
                    for (unsigned r = 1; r <= n; ++r)
                        if (t[r]) {
                            Count nu = count_element_solutions(G, A, r);
                            Count pw;
                            mpz_pow_ui(pw.get_mpz_t(), nu.get_mpz_t(), t[r]);
                            expected *= pw;
                        }
                    ASSERT_EQ(pow_count(p, shape_exponent(p, e, shape, t)), expected)
                        << "i=" << i << " mod " << m << " type " << t.to_string();
                }
        }
    }
}

TEST(CyclicPrimePower, Examples) {
    EXPECT_EQ(n_cyclic_prime_power(2, 1, 2), 10);
    EXPECT_EQ(n_cyclic_prime_power(2, 2, 2), 76);
    EXPECT_EQ(n_cyclic_prime_power(3, 2, 1), 17);
    for (unsigned e = 3; e <= 5; ++e) EXPECT_EQ(n_cyclic_prime_power(2, e, 1), pow_count(2, e + 1) + pow_count(2, e) - 2);
    EXPECT_THROW(n_cyclic_prime_power(4, 1, 1), std::domain_error);
    EXPECT_THROW(n_cyclic_prime_power(3, 0, 1), std::domain_error);
    EXPECT_THROW(n_cyclic_prime_power(3, 1, 0), std::domain_error);
}

TEST(CyclicPrimePower, ExpandedEqualsReducedOddBranch) {
    for (std::uint64_t p : {3, 5})
        for (unsigned e = 1; e <= 3; ++e)
            for (unsigned n = 1; n <= 4; ++n)
                EXPECT_EQ(n_cyclic_prime_power_expanded(p, e, n), n_cyclic_prime_power_reduced(p, e, n))
                    << p << "^" << e << " n=" << n;
    for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {7, 2}, {11, 1}})
        for (unsigned n = 1; n <= 4; ++n)
            EXPECT_EQ(n_cyclic_prime_power_expanded(p, e, n), n_cyclic_prime_power_reduced(p, e, n));
}

TEST(CyclicPrimePower, ExpandedEqualsReducedTwoBranch) {
    for (unsigned e = 3; e <= 6; ++e)
        for (unsigned n = 1; n <= 4; ++n)
            EXPECT_EQ(n_cyclic_prime_power_expanded(2, e, n), n_cyclic_prime_power_reduced(2, e, n))
                << "2^" << e << " n=" << n;
}

TEST(CyclicPrimePower, AgreesWithGeneralFormula) {
    for (const auto& [p, e] : prime_powers_up_to(16))
        for (unsigned n = 1; n <= 3; ++n)
            EXPECT_EQ(n_cyclic_prime_power(p, e, n), n_general(AbelianGroup::cyclic(ipow(p, e)), n))
                << p << "^" << e << " n=" << n;
}

TEST(Cyclic, Examples) {
    EXPECT_EQ(n_cyclic(1, 3), 1);
    EXPECT_EQ(n_cyclic(6, 1), 20);
    EXPECT_EQ(n_cyclic(12, 1), orbit_count_naive(AbelianGroup::cyclic(12), 1));
    EXPECT_EQ(n_cyclic(30, 1), 140);
    EXPECT_THROW(n_cyclic(0, 1), std::domain_error);
    EXPECT_THROW(n_cyclic(6, 0), std::domain_error);
}

TEST(Cyclic, AgreesWithGeneralFormula) {
    for (std::uint64_t m = 1; m <= 40; ++m)
        for (unsigned n = 1; n <= 2; ++n)
            EXPECT_EQ(n_cyclic(m, n), n_general(AbelianGroup::cyclic(m), n)) << "m=" << m << " n=" << n;
}

TEST(Cyclic, PrimePowerSpecialization) {
    for (const auto& [p, e] : prime_powers_up_to(64))
        for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(n_cyclic(ipow(p, e), n), n_cyclic_prime_power(p, e, n));
}

TEST(GeneralLinear, Orders) {
    EXPECT_EQ(general_linear_order(2, 2), 6);
    EXPECT_EQ(general_linear_order(2, 3), 168);
    EXPECT_EQ(general_linear_order(3, 2), 48);
    EXPECT_EQ(general_linear_order(5, 1), 4);
    for (auto [p, s] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}, {3, 3}})
        EXPECT_EQ(Count(static_cast<unsigned long>(enumerate_general_linear(p, s).size())), general_linear_order(p, s));
}

TEST(GeneralLinear, MatchesAutomorphismEnumeration) {
    for (auto [p, s] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {3, 2}}) {
        auto gl = enumerate_general_linear(p, s);
        auto aut = enumerate_automorphisms(AbelianGroup::elementary(p, s));
        std::sort(gl.begin(), gl.end());
        std::sort(aut.begin(), aut.end());
        EXPECT_EQ(gl, aut);
    }
}

TEST(GeneralLinear, Budget) {
    Budget b;
    b.max_gl_candidates = 100;
    EXPECT_THROW(enumerate_general_linear(2, 3, b), BudgetExceeded);
    EXPECT_THROW(n_elementary_abelian(2, 3, 1, b), BudgetExceeded);
    EXPECT_THROW(enumerate_general_linear(4, 2), std::domain_error);
}

TEST(Elementary, Examples) {
    EXPECT_EQ(n_elementary_abelian(2, 2, 1), 5);
    EXPECT_EQ(n_elementary_abelian(2, 2, 2), orbit_count_naive(AbelianGroup::elementary(2, 2), 2));
    for (std::uint64_t p : {2, 3, 5, 7})
        for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(n_elementary_abelian(p, 1, n), n_cyclic_prime_power(p, 1, n));
    EXPECT_THROW(n_elementary_abelian(2, 0, 1), std::domain_error);
}

TEST(Elementary, AgreesWithGeneralFormula) {
    for (auto [p, s] : {std::pair<std::uint64_t, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}})
        for (unsigned n = 1; n <= 3; ++n)
            EXPECT_EQ(n_elementary_abelian(p, s, n), n_general(AbelianGroup::elementary(p, s), n))
                << p << "^" << s << " n=" << n;
}

TEST(CountClosedForm, Dispatch) {
    EXPECT_EQ(count_closed_form(AbelianGroup(), 4), 1);
    EXPECT_EQ(count_closed_form(AbelianGroup::cyclic(4), 2), 76);
    EXPECT_EQ(count_closed_form(AbelianGroup::elementary(2, 2), 1), 5);
    const auto G = parse_group("C4xC2");
    EXPECT_EQ(count_closed_form(G, 1), orbit_count_naive(G, 1));
    EXPECT_THROW(count_closed_form(G, 0), std::domain_error);
}

TEST(Corollaries, Examples) {
    EXPECT_EQ(corollary_values(Corollary::cyclic_n1, {3, 2, 1, {}}), 17);
    EXPECT_EQ(corollary_values(Corollary::squarefree_n1, {0, 1, 1, {2, 3, 5}}), 140);
    EXPECT_EQ(corollary_values(Corollary::cyclic_n2, {2, 1, 2, {}}), 10);
    EXPECT_EQ(corollary_values(Corollary::cyclic_n2, {2, 2, 2, {}}), 76);
    // (15/14) 512 + 48 - 116/7 = 580
    EXPECT_EQ(corollary_values(Corollary::cyclic_n2, {2, 3, 2, {}}), 580);
    EXPECT_EQ(corollary_values(Corollary::prime_order, {5, 1, 2, {}}), 85);
}

TEST(Corollaries, Errors) {
    EXPECT_THROW(corollary_cyclic_n1(4, 1), std::domain_error);
    EXPECT_THROW(corollary_cyclic_n2(3, 0), std::domain_error);
    EXPECT_THROW(corollary_prime_order(6, 1), std::domain_error);
    EXPECT_THROW(corollary_squarefree_n1({2, 2}), std::domain_error);
    EXPECT_THROW(corollary_squarefree_n1({2, 9}), std::domain_error);
}

TEST(Corollaries, AgreeWithGeneralFormulasUpTo64) {
    for (const auto& [p, e] : prime_powers_up_to(64)) {
        EXPECT_EQ(corollary_cyclic_n1(p, e), n_cyclic_prime_power(p, e, 1)) << p << "^" << e;
        EXPECT_EQ(corollary_cyclic_n2(p, e), n_cyclic_prime_power(p, e, 2)) << p << "^" << e;
    }
    for (std::uint64_t p = 2; p <= 61; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned n = 1; n <= 4; ++n) EXPECT_EQ(corollary_prime_order(p, n), n_cyclic_prime_power(p, 1, n));
        // The n = 2 expression at e = 1 and the prime-order formula coincide.
        EXPECT_EQ(corollary_cyclic_n2(p, 1), corollary_prime_order(p, 2));
    }
    const std::vector<std::vector<std::uint64_t>> sets = {{2}, {3}, {2, 3}, {2, 5}, {3, 5}, {2, 7}, {3, 7},
                                                          {2, 3, 5}, {5, 7}, {2, 3, 7}, {3, 11}, {2, 31}};
    for (const auto& primes : sets) {
        std::uint64_t m = 1;
        for (auto p : primes) m *= p;
        EXPECT_EQ(corollary_squarefree_n1(primes), n_cyclic(m, 1)) << m;
    }
}

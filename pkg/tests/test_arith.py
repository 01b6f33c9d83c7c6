import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelian3.arith import (
    MOBIUS,
    PHI,
    PILLAI,
    TAU,
    CongruenceSolution,
    Factorization,
    divisors,
    evaluate,
    ext_gcd,
    factorize,
    gcd_sum,
    gcd_sum_direct,
    is_prime,
    primes_up_to,
    sieve_multiplicative,
    smallest_prime_factor_sieve,
    solve_linear_congruence,
)


class TestExtGcd:
    def test_zero_zero_convention(self):
        assert ext_gcd(0, 0) == (0, 0, 0)

    def test_known_values(self):
        assert ext_gcd(1, 7) == (1, 1, 0)
        g, u, v = ext_gcd(6, 4)
        assert g == 2 and u * 6 + v * 4 == 2

    @given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
    def test_bezout(self, x, y):
        g, u, v = ext_gcd(x, y)
        assert g == math.gcd(x, y)
        assert u * x + v * y == g


class TestSolveLinearCongruence:
    def test_examples(self):
        assert solve_linear_congruence(2, 4, 6) == CongruenceSolution(2, 3, 2)
        assert solve_linear_congruence(2, 3, 4) is None
        assert solve_linear_congruence(1, 0, 5) == CongruenceSolution(0, 5, 1)

    def test_modulus_one(self):
        sol = solve_linear_congruence(0, 7, 1)
        assert sol == CongruenceSolution(0, 1, 1)

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            solve_linear_congruence(1, 1, 0)

    def test_exhaustive_small_moduli(self):
        # Full cross-check against brute force for every modulus <= 40.
        for modulus in range(1, 41):
            for coeff in range(modulus):
                for rhs in range(modulus):
                    truth = {u for u in range(modulus) if (coeff * u - rhs) % modulus == 0}
                    sol = solve_linear_congruence(coeff, rhs, modulus)
                    if sol is None:
                        assert truth == set()
                    else:
                        assert 0 <= sol.base_solution < sol.period
                        assert set(sol.solutions()) == truth
                        assert sol.count == len(truth)

    @given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(1, 1000))
    def test_sampled_larger_moduli(self, coeff, rhs, modulus):
        truth = {u for u in range(modulus) if (coeff * u - rhs) % modulus == 0}
        sol = solve_linear_congruence(coeff, rhs, modulus)
        if sol is None:
            assert truth == set()
        else:
            assert set(sol.solutions()) == truth


class TestFactorize:
    def test_one_is_empty(self):
        assert factorize(1).pairs == ()
        assert factorize(1).value == 1

    def test_known(self):
        assert factorize(12).pairs == ((2, 2), (3, 1))
        assert factorize(9007199254740881).pairs == ((9007199254740881, 1),)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_invariants_random(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randrange(1, 10**6)
            fact = factorize(n)
            assert fact.value == n
            primes = [p for p, _ in fact]
            assert primes == sorted(primes) and len(set(primes)) == len(primes)
            assert all(is_prime(p) for p in primes)
            assert all(e >= 1 for _, e in fact)

    def test_validation_on_construction(self):
        with pytest.raises(ValueError):
            Factorization(((4, 1),))  # not prime
        with pytest.raises(ValueError):
            Factorization(((3, 1), (2, 1)))  # out of order
        with pytest.raises(ValueError):
            Factorization(((2, 0),))  # zero exponent


class TestDivisors:
    def test_small(self):
        assert divisors(1) == [1]
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    @given(st.integers(1, 20000))
    def test_matches_scan(self, n):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


class TestSieves:
    def test_spf_small(self):
        table = smallest_prime_factor_sieve(10)
        assert table.tolist() == [0, 0, 2, 3, 2, 5, 2, 7, 2, 3, 2]

    def test_spf_rejects_tiny(self):
        with pytest.raises(ValueError):
            smallest_prime_factor_sieve(1)

    def test_spf_spot_large(self):
        table = smallest_prime_factor_sieve(10**6)
        assert table[999983] == 999983  # prime
        assert table[999982] == 2
        assert table[994009] == 997  # 997^2

    def test_primes_up_to(self):
        assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
        assert primes_up_to(1) == []
        assert len(primes_up_to(10**5)) == 9592


class TestGcdSum:
    def test_direct_small(self):
        assert gcd_sum_direct(1) == 1
        assert gcd_sum_direct(4) == 8
        assert gcd_sum_direct(6) == 15

    def test_multiplicative_route_small(self):
        assert gcd_sum(1) == 1
        assert gcd_sum(4) == 8
        assert gcd_sum(6) == 15
        assert gcd_sum(12) == 40

    def test_agreement_exhaustive(self):
        for n in range(1, 2001):
            assert gcd_sum(n) == gcd_sum_direct(n)

    @given(st.integers(2000, 10**4))
    def test_agreement_sampled(self, n):
        assert gcd_sum(n) == gcd_sum_direct(n)

    @given(st.integers(1, 3000), st.integers(1, 3000))
    def test_multiplicative(self, m, n):
        if math.gcd(m, n) == 1:
            assert gcd_sum(m * n) == gcd_sum(m) * gcd_sum(n)


class TestMultiplicativeFunctions:
    def test_evaluate_known(self):
        assert evaluate(TAU, 12) == 6
        assert evaluate(PHI, 12) == 4
        assert evaluate(MOBIUS, 30) == -1
        assert evaluate(MOBIUS, 12) == 0
        assert evaluate(TAU, 1) == 1

    def test_tau_sieve_prefix(self):
        assert sieve_multiplicative(TAU, 10) == [0, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4]

    def test_sieve_rejects_tiny(self):
        with pytest.raises(ValueError):
            sieve_multiplicative(TAU, 0)

    def test_sieve_limit_one(self):
        assert sieve_multiplicative(TAU, 1) == [0, 1]

    @pytest.mark.parametrize("fn", [TAU, PHI, PILLAI, MOBIUS], ids=lambda f: f.name)
    def test_sieve_matches_evaluate(self, fn):
        table = sieve_multiplicative(fn, 10**4)
        for n in range(1, 10**4 + 1):
            assert table[n] == evaluate(fn, n), n

    def test_phi_divisor_sum(self):
        # sum of phi over divisors telescopes to n
        for n in range(1, 400):
            assert sum(evaluate(PHI, d) for d in divisors(n)) == n

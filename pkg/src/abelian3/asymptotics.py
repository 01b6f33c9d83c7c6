"""Average order of the diagonal subgroup count s(n) (subgroups of
Z_n x Z_n x Z_n).

s splits as the Dirichlet convolution s = (n^2 tau(n)) * h with h
multiplicative and small, and the partial sums obey

    sum_{n <= x} s(n) = (x^3 / 3) (H3 (log x + 2 gamma - 1/3) + H3') + error,

where H3 = sum_n h(n)/n^3 and H3' is the z-derivative of sum_n h(n)/n^z at
z = 3. This module computes the pair two independent ways (an accelerated
Euler product with proved tail bounds, and direct series sums with an
empirical tail estimate), exposes exact sieves for s and h, and packages
exact-vs-main-term comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .arith import MultiplicativeFunction, primes_up_to, sieve_multiplicative
from .rank3 import count_total_prime_power

__all__ = [
    "AsymptoticReport",
    "Constants",
    "DivisorSumCheck",
    "H3Estimate",
    "H_COMPLEMENT",
    "S_DIAGONAL",
    "average_order_reports",
    "divisor_sum_check",
    "h3_and_h3prime",
    "h_values",
    "main_term",
    "sieve_s",
]

EULER_GAMMA = 0.5772156649015329

# Best-published exponent in the divisor-problem error term that the
# literature quotes for this average order; recorded for reference output,
# not used in any computation.
THETA_REFERENCE = Fraction(131, 416)


@dataclass(frozen=True)
class Constants:
    euler_gamma: float = EULER_GAMMA
    theta_reference: Fraction = THETA_REFERENCE


def _s_prime_power(p: int, e: int) -> int:
    return count_total_prime_power(p, e, e, e)


def _h_prime_power(p: int, e: int) -> int:
    # Convolution complement of n^2 tau(n) inside s, solved on prime powers.
    if e == 1:
        return _s_prime_power(p, 1) - 2 * p * p
    return (
        _s_prime_power(p, e)
        - 2 * p * p * _s_prime_power(p, e - 1)
        + p**4 * _s_prime_power(p, e - 2)
    )


S_DIAGONAL = MultiplicativeFunction(_s_prime_power, "s")
H_COMPLEMENT = MultiplicativeFunction(_h_prime_power, "h")


def sieve_s(limit: int) -> list[int]:
    """[s(0..limit)] with s(0) slot 0; single-threaded, exact integers."""
    return sieve_multiplicative(S_DIAGONAL, limit)


def h_values(limit: int) -> list[int]:
    """[h(0..limit)] for the convolution complement h."""
    return sieve_multiplicative(H_COMPLEMENT, limit)


@dataclass(frozen=True)
class H3Estimate:
    """The series constants by two routes, each with its own error bar.

    h3/h3prime come from the accelerated Euler product; their bounds are
    proved tail estimates. direct_h3/direct_h3prime come from summing
    h(n)/n^3 (and the log-weighted variant) to tail_terms; their bounds are
    empirical, extrapolated from the final doubling of the summation range.
    """

    h3: float
    h3prime: float
    h3_bound: float
    h3prime_bound: float
    direct_h3: float
    direct_h3prime: float
    direct_h3_bound: float
    direct_h3prime_bound: float
    prime_limit: int
    tail_terms: int


def h3_and_h3prime(prime_limit: int = 100_000, tail_terms: int = 200_000) -> H3Estimate:
    """Constants H3 and H3' of the average order, with error bounds.

    The h-series has local Euler factors f_p(z) = 1 + 2 p^(1-z) + 2 p^(-z)
    + p^(1-2z). Multiplying by (1 - p^(1-z))^2 (1 - p^(-z))^2 cancels the
    slowly decaying parts, leaving

        n_p(z) = 1 - 3 (p^2+p+1) p^(-2z) + 2 (p+1)^3 p^(-3z)
                   - 3 (p^3+p^2+p) p^(-4z) + p^(3-6z),

    so H3 = zeta(3)^4 zeta(2)^2 prod_p n_p(3) with |n_p(3) - 1| <= 3.2 p^-4
    for p >= 100: truncation at prime_limit Q carries a proved tail bound of
    order Q^-3. H3' comes from the logarithmic derivative of the same
    factorization. The direct route sums the series itself to tail_terms.
    """
    if prime_limit < 100:
        raise ValueError(f"prime_limit must be >= 100, got {prime_limit}")
    if tail_terms < 16:
        raise ValueError(f"tail_terms must be >= 16, got {tail_terms}")

    with mpmath.workdps(30):
        zeta2 = float(mpmath.zeta(2))
        zeta3 = float(mpmath.zeta(3))
        # d/dz log zeta(z) at 2 and 3
        dlog_zeta2 = float(mpmath.zeta(2, derivative=1) / mpmath.zeta(2))
        dlog_zeta3 = float(mpmath.zeta(3, derivative=1) / mpmath.zeta(3))

    logs: list[float] = []
    dlogs: list[float] = []
    for p in primes_up_to(prime_limit):
        p2 = p * p
        c2 = 3 * (p2 + p + 1)
        c3 = 2 * (p + 1) ** 3
        c4 = 3 * (p2 * p + p2 + p)
        t2 = c2 / p**6
        t3 = c3 / p**9
        t4 = c4 / p**12
        t6 = p**3 / p**18
        local = 1.0 - t2 + t3 - t4 + t6
        logs.append(math.log(local))
        # n_p'(3) = log p * (2 c2 p^-6 - 3 c3 p^-9 + 4 c4 p^-12 - 6 p^(3-18))
        dlogs.append(math.log(p) * (2 * t2 - 3 * t3 + 4 * t4 - 6 * t6) / local)

    h3 = zeta3**4 * zeta2**2 * math.exp(math.fsum(logs))
    bracket = 4 * dlog_zeta3 + 2 * dlog_zeta2 + math.fsum(dlogs)
    h3prime = h3 * bracket

    # Tail bounds. For p > Q >= 100: |n_p(3) - 1| <= 3.2 p^-4, and
    # |log n_p(3)| <= 1.01 * |n_p(3) - 1|; sum_{n > Q} n^-4 <= 1/(3 Q^3).
    q = prime_limit
    log_tail = 1.01 * 3.2 / (3 * q**3)
    h3_bound = h3 * math.expm1(log_tail)
    # |n_p'(3)| <= log p * (6.1 p^-4 + ...) <= 7 log p p^-4 for p >= 100, and
    # sum_{n > Q} log n n^-4 <= (log Q)/(3 Q^3) + 1/(9 Q^3).
    bracket_tail = 1.01 * 7 * (math.log(q) / (3 * q**3) + 1 / (9 * q**3))
    h3prime_bound = abs(h3) * bracket_tail + h3_bound * (abs(bracket) + bracket_tail)

    # Direct route. The series sum_n h(n)/n^3 IS the constant: its local
    # factors are (1 - p^-3)^-2 f_p(3), so the zeta part needs no separate
    # treatment. The derivative is -sum_n h(n) log(n)/n^3.
    hv = h_values(tail_terms)
    terms = [hv[n] / n**3 for n in range(1, tail_terms + 1)]
    log_terms = [hv[n] * math.log(n) / n**3 for n in range(1, tail_terms + 1)]
    half = tail_terms // 2
    direct_h3 = math.fsum(terms)
    direct_h3_half = math.fsum(terms[:half])
    direct_h3prime = -math.fsum(log_terms)
    direct_h3prime_half = -math.fsum(log_terms[:half])
    # Terms are positive, so both sums grow monotonically toward their
    # limits; the remainder past N is comparable to the gain over the last
    # doubling. Factor 4 is empirical headroom, not a theorem.
    direct_h3_bound = 4 * abs(direct_h3 - direct_h3_half)
    direct_h3prime_bound = 4 * abs(direct_h3prime - direct_h3prime_half)

    return H3Estimate(
        h3=h3,
        h3prime=h3prime,
        h3_bound=h3_bound,
        h3prime_bound=h3prime_bound,
        direct_h3=direct_h3,
        direct_h3prime=direct_h3prime,
        direct_h3_bound=direct_h3_bound,
        direct_h3prime_bound=direct_h3prime_bound,
        prime_limit=prime_limit,
        tail_terms=tail_terms,
    )


def main_term(x: int, h3: float, h3prime: float) -> float:
    """(x^3 / 3) (H3 (log x + 2 gamma - 1/3) + H3').

    The 2 gamma - 1/3 companion constant is inherited from the partial sums
    of n^2 tau(n): convolving their main term against h turns
    (x/d)^3 (log(x/d) + 2 gamma - 1/3) into H3 log x + H3' plus the constant
    times H3, with no further adjustment. (Quoted forms of this main term
    sometimes show 2 gamma - 1, which contradicts that derivation and misses
    the true partial sums by a relative offset of 2 H3 / (3 bracket); the
    convergence tests in this package pin the -1/3 version.)
    """
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    return x**3 / 3 * (h3 * (math.log(x) + 2 * EULER_GAMMA - 1 / 3) + h3prime)


@dataclass(frozen=True)
class AsymptoticReport:
    x: int
    exact_sum: int
    main_term: float
    relative_error: float
    error_exponent_estimate: float  # log |exact - main| / log x


def average_order_reports(
    x_values: Sequence[int],
    prime_limit: int = 100_000,
    tail_terms: int = 200_000,
    estimate: H3Estimate | None = None,
) -> list[AsymptoticReport]:
    """Exact partial sums of s against the main term, at each x.

    One sieve run covers all checkpoints. x values are deduplicated and
    sorted ascending.
    """
    xs = sorted(set(x_values))
    if not xs or xs[0] < 2:
        raise ValueError(f"need x values >= 2, got {x_values}")
    est = estimate if estimate is not None else h3_and_h3prime(prime_limit, tail_terms)
    values = sieve_s(xs[-1])
    reports = []
    acc = 0
    pos = 0
    for x in xs:
        for n in range(pos + 1, x + 1):
            acc += values[n]
        pos = x
        predicted = main_term(x, est.h3, est.h3prime)
        delta = abs(acc - predicted)
        relative = delta / predicted
        exponent = math.log(delta) / math.log(x) if delta > 0 else float("-inf")
        reports.append(
            AsymptoticReport(
                x=x,
                exact_sum=acc,
                main_term=predicted,
                relative_error=relative,
                error_exponent_estimate=exponent,
            )
        )
    return reports


@dataclass(frozen=True)
class DivisorSumCheck:
    """Classical divisor-sum partial sums against their main terms."""

    x: int
    tau_exact: int
    tau_main: float
    tau_relative_error: float
    weighted_exact: int
    weighted_main: float
    weighted_relative_error: float


def divisor_sum_check(x: int) -> DivisorSumCheck:
    """Exact sum tau(n) and sum n^2 tau(n) for n <= x, with main terms.

    Exact values come from hyperbola identities: sum tau(n) = sum floor(x/d)
    and sum n^2 tau(n) = sum d^2 S2(floor(x/d)) with S2 the square-pyramidal
    sum. Main terms: x log x + (2 gamma - 1) x and
    (x^3/3) log x + (x^3/3)(2 gamma - 1/3).
    """
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    tau_exact = 0
    weighted_exact = 0
    for d in range(1, x + 1):
        q = x // d
        tau_exact += q
        weighted_exact += d * d * (q * (q + 1) * (2 * q + 1) // 6)
    lx = math.log(x)
    tau_main = x * lx + (2 * EULER_GAMMA - 1) * x
    weighted_main = x**3 / 3 * lx + x**3 / 3 * (2 * EULER_GAMMA - 1 / 3)
    return DivisorSumCheck(
        x=x,
        tau_exact=tau_exact,
        tau_main=tau_main,
        tau_relative_error=abs(tau_exact - tau_main) / tau_main,
        weighted_exact=weighted_exact,
        weighted_main=weighted_main,
        weighted_relative_error=abs(weighted_exact - weighted_main) / weighted_main,
    )

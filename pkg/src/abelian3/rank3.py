"""Subgroups of Z_m x Z_n x Z_r.

The enumeration walks a six-parameter family (a, b, c, t, w, z): divisor
triples (a, b, c) fix the "shape" of a triangular basis

    (a, 0, 0), (s, b, 0), (u, v, c)

and (t, w, z) pick the shifts s, v, u. The derived gcd layer

    A = gcd(a, n/b), B = gcd(b, r/c), C = gcd(a, r/c),
    X = ABC / gcd(a * (r/c), ABC)

controls the admissible ranges: 0 <= t < A, 0 <= w < B gcd(t, X)/X,
0 <= z < C. Each subgroup arises from exactly one parameter choice, which is
what makes the divisor-sum counting formulas below exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .arith import PHI, divisors, evaluate, gcd_sum, solve_linear_congruence
from .config import element_bound

Group3 = tuple[int, int, int]


@dataclass(frozen=True)
class Sextuple:
    a: int
    b: int
    c: int
    t: int
    w: int
    z: int


@dataclass(frozen=True)
class DerivedParams:
    A: int
    B: int
    C: int
    X: int


@dataclass(frozen=True)
class SubgroupBasis3:
    """Triangular basis (a, 0, 0), (s, b, 0), (u, v, c) inside group."""

    a: int
    s: int
    u: int
    b: int
    v: int
    c: int
    group: Group3

    @property
    def order(self) -> int:
        m, n, r = self.group
        return (m // self.a) * (n // self.b) * (r // self.c)

    @property
    def generators(self) -> tuple[tuple[int, int, int], ...]:
        return ((self.a, 0, 0), (self.s, self.b, 0), (self.u, self.v, self.c))


def derived_params(a: int, b: int, c: int, group: Group3) -> DerivedParams:
    """The gcd layer (A, B, C, X) for one divisor triple.

    X divides both A and B; that is load-bearing for the w-range and for the
    exactness of the ABC/X^2 term in count_total, so both facts are asserted.
    """
    m, n, r = group
    if a < 1 or b < 1 or c < 1 or m % a or n % b or r % c:
        raise ValueError(f"({a}, {b}, {c}) is not a divisor triple of {group}")
    big_a = math.gcd(a, n // b)
    big_b = math.gcd(b, r // c)
    big_c = math.gcd(a, r // c)
    abc = big_a * big_b * big_c
    x = abc // math.gcd(a * (r // c), abc)
    assert big_a % x == 0 and big_b % x == 0
    assert abc % (x * x) == 0
    return DerivedParams(A=big_a, B=big_b, C=big_c, X=x)


def enumerate_sextuples(group: Group3) -> Iterator[Sextuple]:
    """Yield the parameter sextuples in ascending (a, b, c, t, w, z) order.

    Stream length equals count_total(group); materialize() turns each
    sextuple into a distinct subgroup.
    """
    m, n, r = _validated(group)
    for a in divisors(m):
        for b in divisors(n):
            for c in divisors(r):
                dp = derived_params(a, b, c, group)
                for t in range(dp.A):
                    w_count = dp.B * math.gcd(t, dp.X) // dp.X  # gcd(0, X) = X
                    for w in range(w_count):
                        for z in range(dp.C):
                            yield Sextuple(a=a, b=b, c=c, t=t, w=w, z=z)


def materialize(sx: Sextuple, group: Group3) -> SubgroupBasis3:
    """Solve the shift data (s, v, u) for one sextuple.

    s = a t / A and v = b X w / (B gcd(t, X)) are exact divisions; u comes
    from the congruence (r/c) u = (r/c) v s / b (mod a), which has exactly
    C solutions spaced a/C apart, and z picks one of them.
    """
    m, n, r = _validated(group)
    a, b, c = sx.a, sx.b, sx.c
    dp = derived_params(a, b, c, group)
    if not (0 <= sx.t < dp.A and 0 <= sx.z < dp.C):
        raise ValueError(f"{sx} outside the admissible ranges for {group}")
    g = math.gcd(sx.t, dp.X)
    if not 0 <= sx.w < dp.B * g // dp.X:
        raise ValueError(f"{sx} outside the admissible ranges for {group}")

    assert (a * sx.t) % dp.A == 0
    s = a * sx.t // dp.A
    den = dp.B * g
    assert (b * dp.X * sx.w) % den == 0
    v = b * dp.X * sx.w // den

    rc = r // c
    assert (rc * v) % b == 0
    rhs = (rc * v // b) * s
    sol = solve_linear_congruence(rc, rhs, a)
    assert sol is not None and sol.count == dp.C
    u = sol.base_solution + (a // dp.C) * sx.z
    return SubgroupBasis3(a=a, s=s, u=u, b=b, v=v, c=c, group=group)


def enumerate_subgroups(group: Group3) -> Iterator[SubgroupBasis3]:
    """Materialized bases for every subgroup, in sextuple order."""
    for sx in enumerate_sextuples(group):
        yield materialize(sx, group)


def subgroup_elements(basis: SubgroupBasis3) -> set[tuple[int, int, int]]:
    """The full element set {i (a,0,0) + j (s,b,0) + k (u,v,c)}.

    Refuses groups larger than the configured element bound; override with
    the ABELIAN3_ELEMENT_BOUND environment variable when more is needed.
    """
    m, n, r = basis.group
    total = m * n * r
    bound = element_bound()
    if total > bound:
        raise ValueError(
            f"group order {total} exceeds the element bound {bound}; "
            f"raise ABELIAN3_ELEMENT_BOUND to materialize it"
        )
    a, s, u, b, v, c = basis.a, basis.s, basis.u, basis.b, basis.v, basis.c
    elements = set()
    for k in range(r // c):
        third = k * c
        ku, kv = k * u, k * v
        for j in range(n // b):
            second = (j * b + kv) % n
            shift = j * s + ku
            for i in range(m // a):
                elements.add(((i * a + shift) % m, second, third))
    assert len(elements) == basis.order
    return elements


def count_total(group: Group3) -> int:
    """Total number of subgroups of Z_m x Z_n x Z_r.

    Sum over divisor triples of (ABC / X^2) P(X), P = Pillai's gcd-sum.
    """
    m, n, r = _validated(group)
    pillai_cache: dict[int, int] = {}
    total = 0
    for a in divisors(m):
        for b in divisors(n):
            for c in divisors(r):
                dp = derived_params(a, b, c, group)
                px = pillai_cache.get(dp.X)
                if px is None:
                    px = gcd_sum(dp.X)
                    pillai_cache[dp.X] = px
                total += (dp.A * dp.B * dp.C) // (dp.X * dp.X) * px
    return total


def count_by_order(group: Group3, delta: int) -> int:
    """Number of subgroups of order delta; delta must divide m n r."""
    m, n, r = _validated(group)
    whole = m * n * r
    if delta < 1 or whole % delta:
        raise ValueError(f"order {delta} does not divide {whole}")
    shape_product = whole // delta  # a b c for subgroups of order delta
    pillai_cache: dict[int, int] = {}
    total = 0
    for a in divisors(m):
        if shape_product % a:
            continue
        for b in divisors(n):
            if (shape_product // a) % b:
                continue
            c = shape_product // (a * b)
            if r % c:
                continue
            dp = derived_params(a, b, c, group)
            px = pillai_cache.get(dp.X)
            if px is None:
                px = gcd_sum(dp.X)
                pillai_cache[dp.X] = px
            total += (dp.A * dp.B * dp.C) // (dp.X * dp.X) * px
    return total


def count_cyclic(group: Group3) -> int:
    """Number of cyclic subgroups of Z_m x Z_n x Z_r.

    Sum of phi(a) phi(b) phi(c) / phi(lcm(a, b, c)); every summand is an
    integer (the number of cyclic subgroups whose projections have orders
    a, b, c), which is asserted.
    """
    m, n, r = _validated(group)
    phi_cache: dict[int, int] = {}

    def phi(k: int) -> int:
        val = phi_cache.get(k)
        if val is None:
            val = evaluate(PHI, k)
            phi_cache[k] = val
        return val

    total = 0
    for a in divisors(m):
        for b in divisors(n):
            for c in divisors(r):
                num = phi(a) * phi(b) * phi(c)
                den = phi(math.lcm(a, b, c))
                assert num % den == 0
                total += num // den
    return total


@lru_cache(maxsize=None)
def count_total_prime_power(p: int, e1: int, e2: int, e3: int) -> int:
    """count_total((p^e1, p^e2, p^e3)) via exponent arithmetic only.

    On prime powers every gcd in the derived layer is a min of exponents, and
    P(p^eX) = (eX + 1) p^eX - eX p^(eX - 1), so no factorization is needed.
    Memoized: sieves evaluate each (p, e) pattern exactly once.
    """
    if p < 2 or min(e1, e2, e3) < 0:
        raise ValueError(f"need a prime base and nonnegative exponents, got {(p, e1, e2, e3)}")
    total = 0
    for i in range(e1 + 1):
        for j in range(e2 + 1):
            for k in range(e3 + 1):
                rc = e3 - k
                ea = min(i, e2 - j)
                eb = min(j, rc)
                ec = min(i, rc)
                ssum = ea + eb + ec
                ex = ssum - min(i + rc, ssum)
                lead = ssum - ex
                term = (ex + 1) * p**lead
                if ex:
                    term -= ex * p ** (lead - 1)
                total += term
    return total


def _validated(group: Group3) -> Group3:
    m, n, r = group
    if m < 1 or n < 1 or r < 1:
        raise ValueError(f"group orders must be positive, got {group}")
    return m, n, r

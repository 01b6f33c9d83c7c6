"""Symbolic subgroup counts for p-groups: integer polynomials in p.

Three independent routes live here. symbolic_count specializes the
divisor-triple sum to prime powers, where every gcd becomes a min of
exponents. general_form is the closed quadratic-coefficient expression for
the equal-exponent case. type_count counts subgroups of a prescribed
isomorphism type via conjugate partitions and Gaussian binomials. Agreement
between the routes is what the test suite leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "IntPolynomial",
    "Partition",
    "gaussian_binomial",
    "general_form",
    "h_closed_form",
    "h_recurrence",
    "subpartitions",
    "symbolic_count",
    "type_count",
]


class IntPolynomial:
    """Dense integer polynomial; coefficients[k] multiplies p^k.

    Immutable by convention: coefficients is a tuple with no trailing zeros,
    so equal polynomials compare and hash equal. The zero polynomial has an
    empty tuple and degree -1.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = list(coefficients)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be ints, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[int, ...] = tuple(coeffs)

    @classmethod
    def monomial(cls, coefficient: int, degree: int) -> "IntPolynomial":
        if degree < 0:
            raise ValueError(f"degree must be >= 0, got {degree}")
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, p: int) -> int:
        out = 0
        for c in reversed(self.coefficients):
            out = out * p + c
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return IntPolynomial(merged)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coefficients])
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, ci in enumerate(self.coefficients):
            if ci:
                for j, cj in enumerate(other.coefficients):
                    out[i + j] += ci * cj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Synthetic division that must leave remainder zero."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return IntPolynomial()
        rem = list(self.coefficients)
        dcoeffs = divisor.coefficients
        lead = dcoeffs[-1]
        qlen = len(rem) - len(dcoeffs) + 1
        if qlen < 1:
            raise ValueError(f"{divisor} does not divide {self}")
        quot = [0] * qlen
        for d in range(qlen - 1, -1, -1):
            top = rem[d + len(dcoeffs) - 1]
            if top % lead:
                raise ValueError(f"{divisor} does not divide {self}")
            q = top // lead
            quot[d] = q
            if q:
                for i, c in enumerate(dcoeffs):
                    rem[d + i] -= q * c
        if any(rem):
            raise ValueError(f"{divisor} does not divide {self}")
        return IntPolynomial(quot)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "p" if mag == 1 else f"{mag} p"
            else:
                body = f"p^{k}" if mag == 1 else f"{mag} p^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)!r})"


ZERO = IntPolynomial()
ONE = IntPolynomial([1])


def symbolic_count(nu1: int, nu2: int, nu3: int) -> IntPolynomial:
    """Subgroup count of Z_p^nu1 x Z_p^nu2 x Z_p^nu3 as a polynomial in p.

    Exponent-space form of the divisor-triple sum: each triple (i, j, k) of
    exponents contributes p^(S - 2 eX) P(p^eX), which is the pair of
    monomials (eX + 1) p^(S - eX) - eX p^(S - eX - 1).
    """
    if min(nu1, nu2, nu3) < 0:
        raise ValueError(f"exponents must be >= 0, got {(nu1, nu2, nu3)}")
    acc: dict[int, int] = {}
    for i in range(nu1 + 1):
        for j in range(nu2 + 1):
            for k in range(nu3 + 1):
                rc = nu3 - k
                ea = min(i, nu2 - j)
                eb = min(j, rc)
                ec = min(i, rc)
                ssum = ea + eb + ec
                ex = ssum - min(i + rc, ssum)
                lead = ssum - ex
                acc[lead] = acc.get(lead, 0) + ex + 1
                if ex:
                    acc[lead - 1] = acc.get(lead - 1, 0) - ex
    coeffs = [0] * (max(acc) + 1)
    for deg, c in acc.items():
        coeffs[deg] = c
    return IntPolynomial(coeffs)


def general_form(nu: int) -> IntPolynomial:
    """Closed form of symbolic_count(nu, nu, nu).

    Coefficient of p^(2 nu - j) is (nu - floor((j-1)/2)) (2j - floor((j-1)/2))
    for j = 0..2 nu; note floor((0-1)/2) = -1, which makes the j = 0 term
    (nu + 1) p^(2 nu).
    """
    if nu < 0:
        raise ValueError(f"exponent must be >= 0, got {nu}")
    coeffs = [0] * (2 * nu + 1)
    for j in range(2 * nu + 1):
        half = (j - 1) // 2
        coeffs[2 * nu - j] = (nu - half) * (2 * j - half)
    return IntPolynomial(coeffs)


def _p_power_minus_one(e: int) -> IntPolynomial:
    return IntPolynomial([-1] + [0] * (e - 1) + [1])


def gaussian_binomial(r: int, k: int) -> IntPolynomial:
    """The Gaussian binomial [r, k]_p; zero polynomial when k > r.

    Product of (p^(r-k+i) - 1) for i = 1..k divided by the product of
    (p^i - 1); the quotient is exact and the division asserts as much.
    """
    if r < 0 or k < 0:
        raise ValueError(f"need r, k >= 0, got ({r}, {k})")
    if k > r:
        return ZERO
    num = ONE
    den = ONE
    for i in range(1, k + 1):
        num = num * _p_power_minus_one(r - k + i)
        den = den * _p_power_minus_one(i)
    return num.exact_div(den)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; () is the empty partition."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        previous = None
        for part in self.parts:
            if part < 1 or (previous is not None and part > previous):
                raise ValueError(f"parts must be weakly decreasing positives, got {self.parts}")
            previous = part

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> tuple[int, ...]:
        """Column lengths of the Young diagram; length equals the largest part."""
        if not self.parts:
            return ()
        return tuple(sum(1 for part in self.parts if part >= j) for j in range(1, self.parts[0] + 1))

    def contains(self, other: "Partition") -> bool:
        """Diagram containment, comparing parts with zero padding."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in lam, in lexicographic order."""

    def grow(prefix: list[int], index: int, cap: int) -> Iterator[Partition]:
        yield Partition(tuple(prefix))
        if index >= len(lam.parts):
            return
        for part in range(1, min(cap, lam.parts[index]) + 1):
            yield from grow(prefix + [part], index + 1, part)

    # Lexicographic: shorter prefixes first within each branch, parts ascending.
    yield from grow([], 0, lam.parts[0] if lam.parts else 0)


def type_count(lam: Partition, mu: Partition) -> IntPolynomial:
    """Subgroups of type mu inside an abelian p-group of type lam.

    With conjugates lam' and mu' (mu' padded with zeros), the count is the
    product over j = 1..lam_1 of
        p^(mu'_{j+1} (lam'_j - mu'_j)) * [lam'_j - mu'_{j+1}, mu'_j - mu'_{j+1}]_p.
    Raises ValueError when mu does not fit inside lam.
    """
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if not lam.parts:
        return ONE
    width = lam.parts[0]
    lam_c = lam.conjugate()
    mu_c = list(mu.conjugate())
    mu_c += [0] * (width + 1 - len(mu_c))
    out = ONE
    for j in range(1, width + 1):
        lj = lam_c[j - 1]
        mj = mu_c[j - 1]
        mj_next = mu_c[j]
        out = out * gaussian_binomial(lj - mj_next, mj - mj_next)
        exp = mj_next * (lj - mj)
        if exp:
            out = out * IntPolynomial.monomial(1, exp)
    return out


def h_closed_form(nu: int) -> IntPolynomial:
    """(3 nu - 1) p + (3 nu + 1): the conjectured prime-power values of h.

    h is the multiplicative complement of n^2 tau(n) inside the diagonal
    subgroup count (see h_recurrence, which is the defining route). The
    linear form here matches the recurrence for every checked nu but is not
    proved in general; tests pin agreement for nu <= 10 and p <= 13.
    """
    if nu < 1:
        raise ValueError(f"exponent must be >= 1, got {nu}")
    return IntPolynomial([3 * nu + 1, 3 * nu - 1])


def h_recurrence(nu: int) -> IntPolynomial:
    """h at p^nu from the convolution s = (n^2 tau) * h, solved for h.

    s(p^nu) = sum_{i+j=nu} p^(2i) (i+1) h(p^j) telescopes to
    h(p^nu) = s(p^nu) - 2 p^2 s(p^(nu-1)) + p^4 s(p^(nu-2)), with the
    s(p^(-1)) term absent for nu = 1.
    """
    if nu < 1:
        raise ValueError(f"exponent must be >= 1, got {nu}")

    def s_poly(k: int) -> IntPolynomial:
        return ONE if k == 0 else symbolic_count(k, k, k)

    p2 = IntPolynomial.monomial(2, 2)
    out = s_poly(nu) - p2 * s_poly(nu - 1)
    if nu >= 2:
        out = out + IntPolynomial.monomial(1, 4) * s_poly(nu - 2)
    return out

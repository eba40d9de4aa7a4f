"""Exact counting: perfectness, closed-form decomposition counts, lower bounds.

A case is a number of variables n+1 together with degrees (a_1, ..., a_r),
all at least 2.  Writing N = sum_j binom(a_j + n, n) for the total number of
coefficients, a case is perfect when (r + n) divides N; the quotient
k = N / (r + n) is then the expected generic rank: k summands carry
k (r + n) parameters (n per linear form plus r coefficients, after scaling),
matching N exactly.

All arithmetic here is exact integer arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "CaseSpec",
    "is_perfect",
    "pair_lower_bound",
    "VeroneseCount",
    "veronese_count",
    "binary_identifiable",
]


@dataclass(frozen=True)
class CaseSpec:
    """A projective dimension n and a tuple of degrees, sorted ascending."""

    n: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(sorted(int(d) for d in self.degrees))
        if not degs:
            raise ValueError("need at least one degree")
        if degs[0] < 2:
            raise ValueError("degrees must be at least 2")
        if self.n < 1:
            raise ValueError("need n >= 1")
        object.__setattr__(self, "degrees", degs)

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def num_vars(self) -> int:
        return self.n + 1

    @property
    def N(self) -> int:
        return sum(math.comb(a + self.n, self.n) for a in self.degrees)

    @property
    def perfect(self) -> bool:
        return self.N % (self.r + self.n) == 0

    @property
    def k(self) -> int | None:
        """Expected generic rank when the case is perfect, else None."""
        q, rem = divmod(self.N, self.r + self.n)
        return q if rem == 0 else None

    def describe(self) -> dict:
        return {"n": self.n, "degrees": list(self.degrees), "r": self.r,
                "N": self.N, "r_plus_n": self.r + self.n,
                "perfect": self.perfect, "k": self.k}


def is_perfect(n: int, degrees) -> int | None:
    """k = N / (r + n) when (r + n) divides N, else None."""
    return CaseSpec(n, tuple(degrees)).k


def pair_lower_bound(t: int) -> int:
    """Lower bound on the number of decompositions for a perfect pair of
    ternary forms of degrees (2t, 2t + 1).

    The bound is (3t - 2)(t - 1)/2 + 1; it equals 1 exactly at t = 1, which
    is the only identifiable pair of consecutive-degree ternary forms.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    return (3 * t - 2) * (t - 1) // 2 + 1


class VeroneseCount(NamedTuple):
    count: int
    forms: int
    k: int


def veronese_count(d: int, n: int) -> VeroneseCount:
    """Exact number of decompositions for s generic forms of degree d.

    With s = binom(d + n, n) - n forms, the case (d, ..., d) [s times] is
    perfect with k = s, and the decompositions of a generic vector
    correspond to the choices of s points among the d^n points cut out by
    n generic forms apolar to all components: count = binom(d^n, s).
    """
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    s = math.comb(d + n, n) - n
    total = d ** n
    if total < s:
        raise ValueError(f"d^n = {total} < s = {s}: no finite point configuration")
    return VeroneseCount(math.comb(total, s), s, s)


def binary_identifiable(degrees) -> bool:
    """Whether a perfect binary case has a unique generic decomposition.

    For n = 1 with degrees a_1 <= ... <= a_r, a perfect case is identifiable
    exactly when k <= a_1 + 1, i.e. the lowest-degree component already
    determines the points.
    """
    case = CaseSpec(1, tuple(degrees))
    k = case.k
    if k is None:
        return False
    return k <= case.degrees[0] + 1

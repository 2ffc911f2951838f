"""Divisor classes on the blow-up of the plane at n (possibly infinitely near) points.

Classes are written in the basis L, E_1, ..., E_n, with

    D = a_0 L - a_1 E_1 - ... - a_n E_n

stored as ``DivisorClass(degree=a_0, mults=(a_1, ..., a_n))``.  The pairing is
L.L = 1, E_i.E_i = -1, and all other products zero.

Everything here is exact integer arithmetic.  Python integers do not overflow,
so square roots and irrational comparisons are always done by squaring.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from math import isqrt as _isqrt
from typing import Iterable, Sequence

from .errors import InvalidArgument

__all__ = [
    "MultiplicitySequence",
    "DivisorClass",
    "SpecializationConfig",
    "genus",
    "binom2",
    "isqrt",
    "intersect_curve",
    "unload",
    "subtract_curve",
]


def genus(d: int) -> int:
    """Arithmetic genus (d-1)(d-2)/2 of a plane curve of degree d."""
    if d <= 0:
        raise InvalidArgument(f"degree must be positive, got d={d}")
    return (d - 1) * (d - 2) // 2


def binom2(x: int) -> int:
    """C(x, 2), clamped to 0 below x = 2."""
    return x * (x - 1) // 2 if x >= 2 else 0


def isqrt(x: int) -> int:
    """Largest s with s*s <= x."""
    if x < 0:
        raise InvalidArgument(f"isqrt of negative number {x}")
    return _isqrt(x)


def ceil_div(a: int, b: int) -> int:
    # b > 0 everywhere this is used
    return -(-a // b)


@dataclass(frozen=True)
class MultiplicitySequence:
    """Point multiplicities m_1 >= m_2 >= ... >= m_n >= 0.

    Input is sorted on construction, so callers may pass any order.
    """

    mults: tuple[int, ...]

    def __init__(self, mults: Iterable[int]):
        ms = tuple(sorted((int(m) for m in mults), reverse=True))
        if not ms:
            raise InvalidArgument("a multiplicity sequence needs at least one point")
        if ms[-1] < 0:
            raise InvalidArgument(f"multiplicities must be nonnegative, got {ms[-1]}")
        object.__setattr__(self, "mults", ms)

    @classmethod
    def uniform(cls, n: int, m: int) -> "MultiplicitySequence":
        if n < 1:
            raise InvalidArgument(f"need n >= 1 points, got n={n}")
        return cls([m] * n)

    @property
    def n(self) -> int:
        return len(self.mults)

    @cached_property
    def _prefix(self) -> tuple[int, ...]:
        return (0, *accumulate(self.mults))

    def prefix_sum(self, i: int) -> int:
        """M_i = m_1 + ... + m_i."""
        if not 0 <= i <= self.n:
            raise InvalidArgument(f"prefix index {i} outside 0..{self.n}")
        return self._prefix[i]

    @property
    def total(self) -> int:
        return self._prefix[-1]

    @cached_property
    def conditions(self) -> int:
        """Expected number of linear conditions, sum of C(m_i + 1, 2)."""
        return sum(binom2(m + 1) for m in self.mults)

    def is_zero(self) -> bool:
        return self.mults[0] == 0

    def uniform_value(self) -> int | None:
        """The common multiplicity if all points agree, else None."""
        return self.mults[0] if self.mults[0] == self.mults[-1] else None

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        m = self.uniform_value()
        if m is not None:
            return f"{m}^{self.n}"
        return "(" + ",".join(map(str, self.mults)) + ")"


@dataclass(frozen=True)
class DivisorClass:
    """The class degree*L - sum(mults[i] * E_{i+1})."""

    degree: int
    mults: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(a) for a in self.mults))

    @classmethod
    def fat_points(cls, t: int, mseq: MultiplicitySequence) -> "DivisorClass":
        """F_t = tL - m_1 E_1 - ... - m_n E_n."""
        return cls(t, mseq.mults)

    @property
    def n(self) -> int:
        return len(self.mults)

    def dot_line(self) -> int:
        """D.L"""
        return self.degree

    def dot_exceptional(self, i: int) -> int:
        """D.E_i for 1-based i."""
        return self.mults[i - 1]

    def is_multiple_of_line(self) -> bool:
        return all(a == 0 for a in self.mults)

    def __str__(self) -> str:
        return f"{self.degree}L - (" + ",".join(map(str, self.mults)) + ")"


@dataclass(frozen=True)
class SpecializationConfig:
    """Specialization data: the first r of n points lie on a degree-d curve.

    The proper transform of that curve has class C = dL - E_1 - ... - E_r.
    """

    n: int
    d: int
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument(f"need n >= 1 points, got n={self.n}")
        if self.d < 1:
            raise InvalidArgument(f"d must be positive, got d={self.d}")
        if not 1 <= self.r <= self.n:
            raise InvalidArgument(f"r must satisfy 1<=r<=n (got r={self.r}, n={self.n})")

    @property
    def genus(self) -> int:
        return genus(self.d)

    def curve(self) -> DivisorClass:
        return DivisorClass(self.d, (1,) * self.r + (0,) * (self.n - self.r))


def _check_length(D: DivisorClass, n: int) -> None:
    if D.n != n:
        raise InvalidArgument(f"divisor has {D.n} exceptional coefficients, configuration has n={n}")


def intersect_curve(D: DivisorClass, cfg: SpecializationConfig) -> int:
    """D.C = degree*d - (a_1 + ... + a_r)."""
    _check_length(D, cfg.n)
    return D.degree * cfg.d - sum(D.mults[: cfg.r])


def unload(D: DivisorClass) -> DivisorClass:
    """Sort the exceptional coefficients nonincreasingly and zero the negative ones."""
    return DivisorClass(D.degree, tuple(sorted((max(a, 0) for a in D.mults), reverse=True)))


def subtract_curve(D: DivisorClass, cfg: SpecializationConfig) -> DivisorClass:
    """D - C, i.e. degree drops by d and a_1..a_r each drop by 1."""
    _check_length(D, cfg.n)
    r = cfg.r
    return DivisorClass(D.degree - cfg.d, tuple(a - 1 for a in D.mults[:r]) + D.mults[r:])


def as_sequence(mults: Sequence[int] | MultiplicitySequence) -> MultiplicitySequence:
    if isinstance(mults, MultiplicitySequence):
        return mults
    return MultiplicitySequence(mults)

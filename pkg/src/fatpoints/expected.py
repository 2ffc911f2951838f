"""Expected (virtual) Hilbert function of fat points and the degrees it predicts."""

from __future__ import annotations

from math import isqrt

from .errors import InvalidArgument
from .lattice import MultiplicitySequence, binom2


def _conditions(n: int, m: int) -> int:
    if n < 1 or m < 0:
        raise InvalidArgument(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    return n * binom2(m + 1)


def virtual_dimension(t: int, conditions: int) -> int:
    """C(t+2, 2) minus the number of conditions; may be negative."""
    return binom2(t + 2) - conditions


def expected_hilbert(n: int, m: int, t: int) -> int:
    """max(0, C(t+2,2) - n C(m+1,2))."""
    if t < 0:
        raise InvalidArgument(f"degree must be nonnegative, got t={t}")
    return max(0, virtual_dimension(t, _conditions(n, m)))


def _least_degree(conditions: int, strict: bool) -> int:
    # smallest t with C(t+2,2) > conditions (strict) or >= conditions
    if conditions <= 0:
        return 0
    # C(t+2,2) ~ (t+1.5)^2 / 2, so start just below sqrt(2c) - 1.5
    t = max(0, isqrt(2 * conditions) - 2)
    while t > 0 and _passes(t - 1, conditions, strict):
        t -= 1
    while not _passes(t, conditions, strict):
        t += 1
    return t


def _passes(t: int, conditions: int, strict: bool) -> bool:
    v = virtual_dimension(t, conditions)
    return v > 0 if strict else v >= 0


def alpha_c(n: int, m: int) -> int:
    """Least t with C(t+2,2) - n C(m+1,2) > 0."""
    return _least_degree(_conditions(n, m), strict=True)


def tau_c(n: int, m: int) -> int:
    """Least t with C(t+2,2) - n C(m+1,2) >= 0."""
    return _least_degree(_conditions(n, m), strict=False)


def alpha_c_seq(mseq: MultiplicitySequence) -> int:
    """alpha_c for an arbitrary multiplicity sequence."""
    return _least_degree(mseq.conditions, strict=True)


def tau_c_seq(mseq: MultiplicitySequence) -> int:
    """tau_c for an arbitrary multiplicity sequence."""
    return _least_degree(mseq.conditions, strict=False)

"""Conjectural Hilbert function data and the corollaries that verify it.

Covers the conjectural resolution, best-bound search over specializations,
Hilbert function verification, Nagata-type checks, the V_n scanners and the
resolution cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .engine import BoundCertificate, alpha_lower_bound, tau_upper_bound
from .errors import InternalError, InvalidArgument, NoCertificate, PreconditionError
from .expected import alpha_c, expected_hilbert, tau_c_seq
from .formulas import FORMULAS
from .lattice import MultiplicitySequence, SpecializationConfig, as_sequence, ceil_div, isqrt

__all__ = [
    "Resolution",
    "conjectural_resolution",
    "BoundWitness",
    "BestBounds",
    "best_bounds",
    "merge_best",
    "HilbertVerdict",
    "verify_hilbert",
    "NagataVerdict",
    "nagata_check",
    "nagata_small_m",
    "hilbert_range_set",
    "square_hilbert_check",
    "largest_l",
    "ResolutionCase",
    "resolution_cases",
    "METHODS",
    "LITERATURE_BOUNDS",
]

METHODS = ("algorithm", "thm-a", "thm-b", "thm-c")


@dataclass(frozen=True)
class Resolution:
    """0 -> R[-a-1]^c + R[-a-2]^dd -> R[-a]^a_ + R[-a-1]^b -> I -> 0, with a_ written ``a``."""

    alpha: int
    a: int
    b: int
    c: int
    dd: int

    def __str__(self) -> str:
        return f"alpha={self.alpha}; a={self.a}, b={self.b}, c={self.c}, dd={self.dd}"


def conjectural_resolution(n: int, m: int) -> Resolution:
    if n < 1 or m < 1:
        raise InvalidArgument(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    al = alpha_c(n, m)
    h0 = expected_hilbert(n, m, al)
    h1 = expected_hilbert(n, m, al + 1)
    b = max(h1 - 3 * h0, 0)
    c = max(3 * h0 - h1, 0)
    return Resolution(al, h0, b, c, h0 + b - c - 1)


# -- best bounds ---------------------------------------------------------------


@dataclass(frozen=True)
class BoundWitness:
    """A bound with the configuration and method that produced it.

    ``d``/``r`` are None for the trivial fallback alpha >= 1.
    """

    value: int
    d: int | None
    r: int | None
    method: str
    certificate: BoundCertificate | None = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class BestBounds:
    alpha: BoundWitness
    tau: BoundWitness | None


def _ranges(n: int, d_range, r_range) -> tuple[range, range]:
    d_range = range(1, isqrt(n) + 3) if d_range is None else range(d_range[0], d_range[-1] + 1)
    r_range = range(1, n + 1) if r_range is None else range(r_range[0], r_range[-1] + 1)
    if len(d_range) == 0 or len(r_range) == 0:
        raise InvalidArgument("search ranges must be nonempty")
    if d_range[0] < 1 or r_range[0] < 1 or r_range[-1] > n:
        raise InvalidArgument(f"need d >= 1 and 1 <= r <= n={n}")
    return d_range, r_range


def _check_methods(methods: Iterable[str]) -> tuple[str, ...]:
    methods = tuple(methods)
    bad = [x for x in methods if x not in METHODS]
    if bad or not methods:
        raise InvalidArgument(f"methods must be a nonempty subset of {METHODS}, got {methods}")
    return methods


def _formula_bounds(mseq, cfg, methods) -> Iterable[tuple[str, int | None, int | None]]:
    for name in methods:
        if name == "algorithm":
            continue
        fa, ft = FORMULAS[name]
        a = t = None
        try:
            a = fa(mseq, cfg) if fa else None
        except PreconditionError:
            pass
        try:
            t = ft(mseq, cfg) if ft else None
        except PreconditionError:
            pass
        yield name, a, t


class _Best:
    def __init__(self, mseq: MultiplicitySequence):
        self.mseq = mseq
        if mseq.is_zero():
            self.alpha = BoundWitness(0, None, None, "trivial")
        else:
            self.alpha = BoundWitness(1, None, None, "trivial")
        self.tau: BoundWitness | None = None

    def offer_alpha(self, w: BoundWitness) -> None:
        if w.value > self.alpha.value:
            self.alpha = w

    def offer_tau(self, w: BoundWitness) -> None:
        if self.tau is None or w.value < self.tau.value:
            self.tau = w

    def tau_ceiling(self) -> int | None:
        # algorithm runs only need to beat the current tau
        return None if self.tau is None else self.tau.value - 1

    def verified(self) -> bool:
        return self.tau is not None and self.alpha.value >= self.tau.value


def _run_grid(best: _Best, n: int, d_range, r_range, methods, which: str, stop_when_verified: bool) -> None:
    mseq = best.mseq
    want_alpha = which in ("alpha", "both")
    want_tau = which in ("tau", "both")
    configs = [SpecializationConfig(n, d, r) for d in d_range for r in r_range]
    # formulas are cheap, so they go first and prune the algorithm runs
    for cfg in configs:
        for name, a, t in _formula_bounds(mseq, cfg, methods):
            if want_alpha and a is not None:
                best.offer_alpha(BoundWitness(a, cfg.d, cfg.r, name))
            if want_tau and t is not None:
                best.offer_tau(BoundWitness(t, cfg.d, cfg.r, name))
        if stop_when_verified and best.verified():
            return
    if "algorithm" not in methods or mseq.is_zero():
        return
    floor_tau = tau_c_seq(mseq)
    for cfg in configs:
        if want_alpha:
            cert = alpha_lower_bound(mseq, cfg)
            best.offer_alpha(BoundWitness(cert.value, cfg.d, cfg.r, "algorithm", cert))
        if want_tau:
            cap = best.tau_ceiling()
            if cap is None or cap >= floor_tau:
                try:
                    cert = tau_upper_bound(mseq, cfg, max_t=cap)
                except NoCertificate:
                    pass
                else:
                    best.offer_tau(BoundWitness(cert.value, cfg.d, cfg.r, "algorithm", cert))
        if stop_when_verified and best.verified():
            return


def best_bounds(
    n: int,
    m: int,
    d_range: Sequence[int] | None = None,
    r_range: Sequence[int] | None = None,
    methods: Iterable[str] = ("algorithm",),
    mseq: Sequence[int] | MultiplicitySequence | None = None,
    which: str = "both",
) -> BestBounds:
    """Best alpha lower bound and tau upper bound over a (d, r) grid.

    ``d_range`` and ``r_range`` are inclusive (first, last) pairs or any
    sequence whose first and last entries give the bounds.  Ties go to the
    smaller d, then the smaller r, then the earlier method in ``methods``.
    Passing ``mseq`` replaces the uniform sequence m^n.
    """
    methods = _check_methods(methods)
    mseq = MultiplicitySequence.uniform(n, m) if mseq is None else as_sequence(mseq)
    if mseq.n != n:
        raise InvalidArgument(f"sequence has {mseq.n} points, expected n={n}")
    d_range, r_range = _ranges(n, d_range, r_range)
    if which not in ("alpha", "tau", "both"):
        raise InvalidArgument(f"which must be alpha, tau or both, got {which}")

    # Run each method separately over the grid in (d, r) order, then merge with
    # the tie-break rule, so pass order cannot bias the winner.
    per_method: list[_Best] = []
    for name in methods:
        b = _Best(mseq)
        _run_grid(b, n, d_range, r_range, (name,), which, stop_when_verified=False)
        per_method.append(b)

    return merge_best([BestBounds(b.alpha, b.tau) for b in per_method])


def _key_alpha(w: BoundWitness):
    big = 1 << 62
    return (-w.value, big if w.d is None else w.d, big if w.r is None else w.r)


def _key_tau(w: BoundWitness):
    return (w.value, w.d, w.r)


def merge_best(parts: Sequence[BestBounds]) -> BestBounds:
    """Combine results from disjoint grids with the same tie-break as best_bounds.

    Equal keys keep the earliest part, so pass parts in method order.
    """
    if not parts:
        raise InvalidArgument("nothing to merge")
    alpha = min((b.alpha for b in parts), key=_key_alpha)
    taus = [b.tau for b in parts if b.tau is not None]
    return BestBounds(alpha, min(taus, key=_key_tau) if taus else None)


# -- Hilbert function verification ----------------------------------------------


@dataclass(frozen=True)
class HilbertVerdict:
    verified: bool
    alpha: BoundWitness
    tau: BoundWitness | None

    def __bool__(self) -> bool:
        return self.verified


def verify_hilbert(
    n: int,
    m: int,
    d_range: Sequence[int] | None = None,
    r_range: Sequence[int] | None = None,
    methods: Iterable[str] = METHODS,
) -> HilbertVerdict:
    """Verified when some alpha lower bound reaches some tau upper bound.

    Then alpha >= tau, which forces the expected Hilbert function.  The grid
    search stops as soon as that happens; otherwise it reports the best bounds
    found.
    """
    if n < 10 or m < 1:
        raise InvalidArgument(f"need n >= 10 and m >= 1, got n={n}, m={m}")
    methods = _check_methods(methods)
    d_range, r_range = _ranges(n, d_range, r_range)
    best = _Best(MultiplicitySequence.uniform(n, m))
    formulas = tuple(x for x in methods if x != "algorithm")
    if formulas:
        _run_grid(best, n, d_range, r_range, formulas, "both", stop_when_verified=True)
    if not best.verified() and "algorithm" in methods:
        _run_grid(best, n, d_range, r_range, ("algorithm",), "both", stop_when_verified=True)
    return HilbertVerdict(best.verified(), best.alpha, best.tau)


# -- Nagata-type checks ------------------------------------------------------------


class NagataVerdict(str, Enum):
    VERIFIED = "verified"
    NOT_COVERED = "not-covered"
    KNOWN_SQUARE = "known (square case)"

    def __bool__(self) -> bool:
        return self is not NagataVerdict.NOT_COVERED

    def __str__(self) -> str:
        return self.value


def nagata_check(n: int, m: int) -> NagataVerdict:
    """Whether alpha(n; m) >= m sqrt(n) follows from the closed-form ranges.

    With d = isqrt(n) and D = n - d^2 the ranges are m <= max(d(d-3), d(d-2)/D)
    for odd D and m <= max(d(d-3)/2, 2d^2/D) for even D > 0.  Square n is
    reported as KNOWN_SQUARE.
    """
    if n < 10 or m < 1:
        raise InvalidArgument(f"need n >= 10 and m >= 1, got n={n}, m={m}")
    d = isqrt(n)
    delta = n - d * d
    if delta == 0:
        return NagataVerdict.KNOWN_SQUARE
    if delta % 2:
        ok = m <= d * (d - 3) or m * delta <= d * (d - 2)
    else:
        ok = 2 * m <= d * (d - 3) or m * delta <= 2 * d * d
    return NagataVerdict.VERIFIED if ok else NagataVerdict.NOT_COVERED


def nagata_small_m(n: int, m: int) -> bool:
    """m <= (n - 5 sqrt(n))/2, decided as n - 2m >= 0 and (n - 2m)^2 >= 25n."""
    if n < 1 or m < 0:
        raise InvalidArgument(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    k = n - 2 * m
    return k >= 0 and k * k >= 25 * n


# -- V_n and the square case --------------------------------------------------------


def largest_l(i: int) -> int:
    """Largest j with j(j+1) <= i."""
    if i < 0:
        raise InvalidArgument(f"need i >= 0, got {i}")
    j = isqrt(i)
    while j * (j + 1) > i:
        j -= 1
    return j


def _square_window(sigma: int) -> tuple[int, int]:
    # x range for m = x + k(sigma - 1)
    if sigma % 2 == 0:
        half = sigma // 2
        return half - largest_l(sigma), half
    half = (sigma + 1) // 2
    return half - largest_l(2 * sigma), half


def square_hilbert_check(sigma: int, m: int) -> bool:
    """m = x + k(sigma-1) with k >= 0 and x in the window for n = sigma^2."""
    if sigma < 4:
        raise InvalidArgument(f"need sigma >= 4 (n = sigma^2 >= 10), got sigma={sigma}")
    if m < 1:
        return False
    lo, hi = _square_window(sigma)
    step = sigma - 1
    return any(m >= x and (m - x) % step == 0 for x in range(lo, hi + 1))


def _even_splittings(n: int) -> Iterable[tuple[int, int]]:
    """(d, eps) with d >= 3, eps >= 1 and n = d^2 + 2 eps."""
    for d in range(3, isqrt(n) + 1):
        rest = n - d * d
        if rest > 0 and rest % 2 == 0:
            yield d, rest // 2


def _range_hilbert(d: int, eps: int) -> set[int]:
    out = set()
    lo = ceil_div((d - 1) * (d - 2), 2 * eps)
    out.update(range(lo, ceil_div((d + 1) * (d + 2), 2 * eps)))
    bounds = (
        ((d - 1) * (d - 2), d * (d - 1)),
        ((d - 1) * d, d * (d + 1)),
        ((d + 1) * d, d * (d + 3)),
    )
    i = 1
    while i * eps <= d:
        for low, high in bounds:
            first = ceil_div(2 * i * (d * d + eps) + low, 2 * eps)
            last = (2 * i * d * d + high) // (2 * eps)
            out.update(range(first, last + 1))
        i += 1
    return out


def hilbert_range_set(n: int, square_topm: int = 220, include_squares: bool = True) -> set[int]:
    """All m for which the closed-form ranges verify the expected Hilbert function at n.

    For n = d^2 + 2 eps this is the finite set V_n.  When n is itself a square
    the square-case values up to ``square_topm`` are added unless
    ``include_squares`` is false.
    """
    if n < 1:
        raise InvalidArgument(f"need n >= 1, got n={n}")
    out: set[int] = set()
    for d, eps in _even_splittings(n):
        if 2 * eps <= (d + 1) * (d + 3):
            out |= _range_hilbert(d, eps)
    sigma = isqrt(n)
    if include_squares and sigma * sigma == n and sigma >= 4:
        out.update(m for m in range(1, square_topm + 1) if square_hilbert_check(sigma, m))
    out.discard(0)
    return out


# -- resolutions ---------------------------------------------------------------------


@dataclass(frozen=True)
class ResolutionCase:
    case: str  # "VI.1(a)", "VI.1(b)", "VI.1(c)" or "VI.2"
    resolution: Resolution
    d: int | None = None
    eps: int | None = None
    sign: int = 0


def _case_a(d: int, eps: int, m: int) -> Iterable[ResolutionCase]:
    for sign in (-1, 1):
        num = d * (d + sign)
        if num == 2 * eps * m:
            al = m * d + d - 1 + (1 + sign) // 2
            yield ResolutionCase("VI.1(a)", Resolution(al, al + 1, 0, al, 0), d, eps, sign)


def _case_b(d: int, eps: int, m: int) -> Iterable[ResolutionCase]:
    for sign in (-1, 1):
        num = d * (d + sign) // 2 - 1
        if num == eps * m:
            al = m * d + d - 2 + (1 + sign) // 2
            b = (m + 1) * (d - 2) + (1 + sign) // 2
            yield ResolutionCase("VI.1(b)", Resolution(al, m + 1, b, 0, b + m), d, eps, sign)


def _case_c(d: int, eps: int, m: int) -> Iterable[ResolutionCase]:
    if eps != 1:
        return
    for sign in (-1, 1):
        a = d * (d + sign) // 2
        if m == d * d + a:
            al = (m + 1) * d + d - 2 + (1 + sign) // 2
            b = al + 2 - d * (d + sign)
            yield ResolutionCase("VI.1(c)", Resolution(al, a, b, 0, a + b - 1), d, eps, sign)


def resolution_cases(n: int, m: int) -> ResolutionCase | None:
    """The first resolution case matching (n, m), or None.

    Clauses are tried as (a), (b), (c), each minus sign before plus, and every
    hit is cross-checked against conjectural_resolution.
    """
    if n < 10 or m < 1:
        raise InvalidArgument(f"need n >= 10 and m >= 1, got n={n}, m={m}")
    for clause in (_case_a, _case_b, _case_c):
        for d, eps in _even_splittings(n):
            for hit in clause(d, eps, m):
                _check_consistent(n, m, hit)
                return hit
    sigma = isqrt(n)
    if sigma * sigma == n and sigma % 2 == 0 and sigma > 3 and square_hilbert_check(sigma, m):
        return ResolutionCase("VI.2", conjectural_resolution(n, m))
    return None


def _check_consistent(n: int, m: int, hit: ResolutionCase) -> None:
    expect = conjectural_resolution(n, m)
    if hit.resolution != expect:
        raise InternalError(f"{hit.case} gives {hit.resolution} but the conjectural resolution is {expect}")


# -- documented literature values ----------------------------------------------------

# Bounds from other methods, quoted for comparison output only.
LITERATURE_BOUNDS: dict[tuple[int, int], list[tuple[str, str, int]]] = {
    (190, 100): [
        ("tau", "Hirschowitz", 1957),
        ("tau", "Gimigliano", 1900),
        ("tau", "Catalisano", 1899),
        ("tau", "Ballico", 1487),
        ("tau", "Xu", 1465),
        ("tau", "Roe", 1440),
        ("tau", "Harbourne-Holay-Fitchett", 1406),
    ],
    (1000, 13): [
        ("alpha", "Roe unloading", 421),
        ("alpha", "floor(m sqrt(n)) + 1", 412),
    ],
}

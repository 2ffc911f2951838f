"""Specialize-and-unload certification of alpha lower bounds and tau upper bounds.

Starting from D_0 = F_t = tL - sum m_i E_i, the engine repeatedly subtracts the
curve class C = dL - E_1 - ... - E_r and unloads, producing D_0, D_1, ....  At
each step the restriction of D_j to C is a line bundle of degree t_j*d - v_j on
a curve of genus g, and the vanishing criteria for such bundles decide whether
the step can be passed.

alpha: h^0(F_t) = 0 once D_I.(L - E_1) < 0 is reached with every earlier
restriction having no sections.  tau: h^1(F_t) = 0 once some D_J with known
h^1 = 0 is reached with every earlier restriction having no h^1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .errors import InternalError, InvalidArgument, NoCertificate
from .expected import alpha_c_seq, tau_c_seq
from .lattice import (
    DivisorClass,
    MultiplicitySequence,
    SpecializationConfig,
    as_sequence,
    binom2,
    ceil_div,
    subtract_curve,
    unload,
)

__all__ = [
    "Criterion",
    "TraceStep",
    "Certification",
    "BoundKind",
    "BoundCertificate",
    "certify_alpha",
    "certify_tau",
    "alpha_lower_bound",
    "tau_upper_bound",
    "unloading_chain",
    "h1_vanishes",
    "tau_search_cap",
    "format_trace",
]


class Criterion(str, Enum):
    CURVE_H0_LOW_DEGREE = "CurveH0-low-degree"
    CURVE_H0_GENUS = "CurveH0-genus"
    CURVE_H0_NEGATIVE_DEGREE = "CurveH0-negative-degree"
    CURVE_H1 = "CurveH1"
    TERMINAL_H0 = "Terminal-H0"
    TERMINAL_H1 = "Terminal-H1"
    FAILED = "Failed"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TraceStep:
    index: int
    divisor: DivisorClass
    t_j: int
    c_j: int
    v_j: int
    criterion: Criterion

    def __str__(self) -> str:
        a = ",".join(map(str, self.divisor.mults))
        return (
            f"D_{self.index} = {self.t_j}L - ({a}), D_{self.index}.C={self.c_j}, "
            f"v_{self.index}={self.v_j}, rule={self.criterion}"
        )


@dataclass(frozen=True)
class Certification:
    """Outcome of one certification attempt; truthy when certified."""

    ok: bool
    trace: tuple[TraceStep, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class BoundKind(str, Enum):
    ALPHA_LOWER = "AlphaLower"
    TAU_UPPER = "TauUpper"


@dataclass(frozen=True)
class BoundCertificate:
    """A certified bound: alpha >= value, or tau <= value.

    ``trace`` is the certification trace at ``t_witness``.  For the all-zero
    sequence the alpha certificate has value 0, t_witness -1 and no trace.
    """

    kind: BoundKind
    value: int
    t_witness: int
    trace: tuple[TraceStep, ...]
    config: SpecializationConfig
    mseq: MultiplicitySequence = field(repr=False)

    def __str__(self) -> str:
        op = ">=" if self.kind is BoundKind.ALPHA_LOWER else "<="
        name = "alpha" if self.kind is BoundKind.ALPHA_LOWER else "tau"
        return f"{name}{op}{self.value}"


def _step(D: DivisorClass, cfg: SpecializationConfig) -> DivisorClass:
    return unload(subtract_curve(D, cfg))


@dataclass(frozen=True)
class _Chain:
    """Exceptional part of D_0, D_1, ..., D_w where D_w is the first multiple of L.

    Subtracting C and unloading never looks at the degree, so the multiplicities
    are shared by every t; only the degree t - j*d varies.
    """

    mults: tuple[tuple[int, ...], ...]
    first: tuple[int, ...]  # a_1 of each D_j
    on_curve: tuple[int, ...]  # a_1 + ... + a_r, which equals v_j
    length: tuple[int, ...]  # colength sum C(a_i + 1, 2)

    def at(self, j: int) -> tuple[int, int, int]:
        if j < len(self.mults):
            return self.first[j], self.on_curve[j], self.length[j]
        return 0, 0, 0

    def divisor(self, t: int, j: int, d: int) -> DivisorClass:
        ms = self.mults[min(j, len(self.mults) - 1)]
        return DivisorClass(t - j * d, ms)


@lru_cache(maxsize=4096)
def _chain(mults: tuple[int, ...], d: int, r: int) -> _Chain:
    cfg = SpecializationConfig(len(mults), d, r)
    D = DivisorClass(0, mults)
    seq = [D.mults]
    while not D.is_multiple_of_line():
        D = _step(D, cfg)
        seq.append(D.mults)
    return _Chain(
        mults=tuple(seq),
        first=tuple(ms[0] for ms in seq),
        on_curve=tuple(sum(ms[:r]) for ms in seq),
        length=tuple(sum(binom2(a + 1) for a in ms) for ms in seq),
    )


def _chain_for(mseq: MultiplicitySequence, cfg: SpecializationConfig) -> _Chain:
    if mseq.n != cfg.n:
        raise InvalidArgument(f"sequence has {mseq.n} points, configuration has n={cfg.n}")
    return _chain(mseq.mults, cfg.d, cfg.r)


def unloading_chain(
    mseq: Sequence[int] | MultiplicitySequence, cfg: SpecializationConfig, t: int = 0
) -> list[DivisorClass]:
    """D_0, D_1, ... up to and including the first class with all multiplicities zero."""
    mseq = as_sequence(mseq)
    chain = _chain_for(mseq, cfg)
    return [chain.divisor(t, j, cfg.d) for j in range(len(chain.mults))]


def _restriction_h0_rule(t_j: int, c_j: int, v_j: int, cfg: SpecializationConfig) -> Criterion | None:
    d, g = cfg.d, cfg.genus
    if c_j <= g - 1 and t_j >= d - 2:
        return Criterion.CURVE_H0_GENUS
    if t_j < 0:
        return Criterion.CURVE_H0_NEGATIVE_DEGREE
    if 0 <= t_j < d and (t_j + 1) * (t_j + 2) <= 2 * v_j:
        return Criterion.CURVE_H0_LOW_DEGREE
    return None


def _h1_vanishes(degree: int, length: int) -> bool:
    return length == 0 or degree >= length - 1


def h1_vanishes(D: DivisorClass) -> bool:
    """Sufficient test for h^1(D) = 0 on the specialized surface.

    D is assumed unloaded (coefficients nonincreasing and nonnegative), so it
    corresponds to a complete ideal supported on a chain of free infinitely
    near points, of colength sum C(a_i + 1, 2).  Multiples of L always have
    h^1 = 0; otherwise a scheme of length l is (l-1)-regular.
    """
    return _h1_vanishes(D.degree, sum(binom2(a + 1) for a in D.mults))


class _Recorder:
    def __init__(self, chain: _Chain, t: int, d: int, keep: bool):
        self.chain, self.t, self.d, self.keep = chain, t, d, keep
        self.steps: list[TraceStep] = []

    def add(self, j: int, c_j: int, v_j: int, rule: Criterion, final: bool = False) -> None:
        if self.keep or final:
            D = self.chain.divisor(self.t, j, self.d)
            self.steps.append(TraceStep(j, D, D.degree, c_j, v_j, rule))

    def done(self, ok: bool) -> Certification:
        return Certification(ok, tuple(self.steps))


def certify_alpha(
    t: int,
    mseq: Sequence[int] | MultiplicitySequence,
    cfg: SpecializationConfig,
    keep_trace: bool = True,
) -> Certification:
    """Try to certify h^0(F_t) = 0, hence alpha(mseq) >= t + 1."""
    if t < 0:
        raise InvalidArgument(f"degree must be nonnegative, got t={t}")
    chain = _chain_for(as_sequence(mseq), cfg)
    d = cfg.d
    rec = _Recorder(chain, t, d, keep_trace)
    j = 0
    while True:
        a1, v_j, length = chain.at(j)
        t_j = t - j * d
        c_j = t_j * d - v_j
        if t_j - a1 < 0:
            rec.add(j, c_j, v_j, Criterion.TERMINAL_H0, final=True)
            return rec.done(True)
        # a multiple of L with nonnegative degree has sections
        rule = None if length == 0 else _restriction_h0_rule(t_j, c_j, v_j, cfg)
        if rule is None:
            rec.add(j, c_j, v_j, Criterion.FAILED, final=True)
            return rec.done(False)
        rec.add(j, c_j, v_j, rule)
        j += 1


def certify_tau(
    t: int,
    mseq: Sequence[int] | MultiplicitySequence,
    cfg: SpecializationConfig,
    keep_trace: bool = True,
) -> Certification:
    """Try to certify h^1(F_t) = 0, hence tau(mseq) <= t."""
    if t < 0:
        raise InvalidArgument(f"degree must be nonnegative, got t={t}")
    chain = _chain_for(as_sequence(mseq), cfg)
    d, g = cfg.d, cfg.genus
    rec = _Recorder(chain, t, d, keep_trace)
    j = 0
    while True:
        _, v_j, length = chain.at(j)
        t_j = t - j * d
        c_j = t_j * d - v_j
        if _h1_vanishes(t_j, length):
            rec.add(j, c_j, v_j, Criterion.TERMINAL_H1, final=True)
            return rec.done(True)
        if t_j >= d - 2 and c_j >= g - 1:
            rec.add(j, c_j, v_j, Criterion.CURVE_H1)
            j += 1
            continue
        rec.add(j, c_j, v_j, Criterion.FAILED, final=True)
        return rec.done(False)


def alpha_lower_bound(
    mseq: Sequence[int] | MultiplicitySequence,
    cfg: SpecializationConfig,
    keep_trace: bool = True,
) -> BoundCertificate:
    """Largest certified alpha bound, scanning t = 0, 1, ... up to the first failure."""
    mseq = as_sequence(mseq)
    if mseq.is_zero():
        return BoundCertificate(BoundKind.ALPHA_LOWER, 0, -1, (), cfg, mseq)
    cap = alpha_c_seq(mseq) + 2
    t = 0
    while certify_alpha(t + 1, mseq, cfg, keep_trace=False):
        t += 1
        if t > cap:
            raise InternalError(f"certified t={t} exceeds alpha_c + 2 = {cap} for {mseq} with {cfg}")
    last = certify_alpha(t, mseq, cfg, keep_trace)
    return BoundCertificate(BoundKind.ALPHA_LOWER, t + 1, t, last.trace, cfg, mseq)


def tau_search_cap(mseq: MultiplicitySequence, cfg: SpecializationConfig) -> int:
    """A degree at which certify_tau is guaranteed to succeed.

    With w the index of the first multiple of L in the chain, any
    t >= (w-1)d + max(d-2, ceil((M_r + g - 1)/d)) passes every curve step
    before reaching D_w.
    """
    chain = _chain_for(mseq, cfg)
    w = len(chain.mults) - 1
    need = max(cfg.d - 2, ceil_div(chain.on_curve[0] + cfg.genus - 1, cfg.d))
    return max(tau_c_seq(mseq), (w - 1) * cfg.d + need, 0)


def tau_upper_bound(
    mseq: Sequence[int] | MultiplicitySequence,
    cfg: SpecializationConfig,
    keep_trace: bool = True,
    max_t: int | None = None,
) -> BoundCertificate:
    """Least certified tau bound, scanning upward from tau_c.

    ``max_t`` truncates the scan; NoCertificate is raised if nothing at or
    below it certifies.  Without it the scan always succeeds.
    """
    mseq = as_sequence(mseq)
    start = tau_c_seq(mseq)
    cap = tau_search_cap(mseq, cfg) if max_t is None else max_t
    for t in range(start, cap + 1):
        if certify_tau(t, mseq, cfg, keep_trace=False):
            cert = certify_tau(t, mseq, cfg, keep_trace)
            return BoundCertificate(BoundKind.TAU_UPPER, t, t, cert.trace, cfg, mseq)
    raise NoCertificate(f"no tau bound for {mseq} with {cfg} in t <= {cap}")


def format_trace(trace: Sequence[TraceStep]) -> str:
    return "\n".join(str(step) for step in trace)

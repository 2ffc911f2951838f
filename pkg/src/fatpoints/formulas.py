"""Closed-form alpha and tau bounds for r-semiuniform multiplicity sequences.

With M_n = m_1 + ... + m_n written as M_n = u*r + rho (0 < rho <= r) and s the
largest integer below d with (s+1)(s+2) <= 2*rho:

    alpha_a: 1 + min(floor((M_r + g - 1)/d), s + u*d)   r <= d^2, d(d+1)/2 <= r
    tau_a:   max(ceil((rho + g - 1)/d) + u*d, u*d + d - 2)   r <= d^2
    alpha_b: s + u*d + 1                                 2r >= n + d^2
    tau_b:   max(ceil((M_r + g - 1)/d), u*d + d - 2)      2r >= n + d^2
    alpha_c: 1 + min(floor((m*r + g - 1)/d), s + u*d)     uniform m, r*d(d+1)/2 <= r^2 <= d^2*n

Each function raises PreconditionError naming the failed hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgument, PreconditionError
from .lattice import MultiplicitySequence, SpecializationConfig, as_sequence, ceil_div

__all__ = [
    "Decomposition",
    "is_semiuniform",
    "decompose",
    "thm_alpha_a",
    "thm_tau_a",
    "thm_alpha_b",
    "thm_tau_b",
    "thm_alpha_c",
    "FORMULAS",
]


@dataclass(frozen=True)
class Decomposition:
    u: int
    rho: int
    s: int
    M_r: int
    M_n: int


def is_semiuniform(mseq: Sequence[int] | MultiplicitySequence, r: int) -> bool:
    """True iff m_r + 1 >= m_1."""
    mseq = as_sequence(mseq)
    if not 1 <= r <= mseq.n:
        raise InvalidArgument(f"r must satisfy 1<=r<=n (got r={r}, n={mseq.n})")
    return mseq.mults[r - 1] + 1 >= mseq.mults[0]


def _largest_s(rho: int, d: int) -> int:
    s = 0
    while s + 1 < d and (s + 2) * (s + 3) <= 2 * rho:
        s += 1
    return s


def decompose(mseq: Sequence[int] | MultiplicitySequence, r: int, d: int) -> Decomposition:
    mseq = as_sequence(mseq)
    if not 1 <= r <= mseq.n:
        raise InvalidArgument(f"r must satisfy 1<=r<=n (got r={r}, n={mseq.n})")
    if d < 1:
        raise InvalidArgument(f"d must be positive, got d={d}")
    M_n = mseq.total
    if M_n < 1:
        raise InvalidArgument("decomposition needs a nonzero multiplicity sequence")
    u = ceil_div(M_n, r) - 1
    rho = M_n - r * u
    return Decomposition(u=u, rho=rho, s=_largest_s(rho, d), M_r=mseq.prefix_sum(r), M_n=M_n)


def _setup(mseq, cfg: SpecializationConfig) -> tuple[MultiplicitySequence, Decomposition]:
    mseq = as_sequence(mseq)
    if mseq.n != cfg.n:
        raise InvalidArgument(f"sequence has {mseq.n} points, configuration has n={cfg.n}")
    if not is_semiuniform(mseq, cfg.r):
        raise PreconditionError(f"sequence is not {cfg.r}-semiuniform")
    return mseq, decompose(mseq, cfg.r, cfg.d)


def _require(ok: bool, clause: str, cfg: SpecializationConfig) -> None:
    if not ok:
        raise PreconditionError(f"{clause} fails for n={cfg.n}, d={cfg.d}, r={cfg.r}")


def thm_alpha_a(mseq, cfg: SpecializationConfig) -> int:
    _, dec = _setup(mseq, cfg)
    d, r = cfg.d, cfg.r
    _require(r <= d * d, "r <= d^2", cfg)
    _require(d * (d + 1) <= 2 * r, "d(d+1)/2 <= r", cfg)
    return 1 + min((dec.M_r + cfg.genus - 1) // d, dec.s + dec.u * d)


def thm_tau_a(mseq, cfg: SpecializationConfig) -> int:
    _, dec = _setup(mseq, cfg)
    d = cfg.d
    _require(cfg.r <= d * d, "r <= d^2", cfg)
    return max(ceil_div(dec.rho + cfg.genus - 1, d) + dec.u * d, dec.u * d + d - 2)


def thm_alpha_b(mseq, cfg: SpecializationConfig) -> int:
    _, dec = _setup(mseq, cfg)
    d = cfg.d
    _require(2 * cfg.r >= cfg.n + d * d, "2r >= n + d^2", cfg)
    return dec.s + dec.u * d + 1


def thm_tau_b(mseq, cfg: SpecializationConfig) -> int:
    _, dec = _setup(mseq, cfg)
    d = cfg.d
    _require(2 * cfg.r >= cfg.n + d * d, "2r >= n + d^2", cfg)
    return max(ceil_div(dec.M_r + cfg.genus - 1, d), dec.u * d + d - 2)


def thm_alpha_c(n: int, m: int, cfg: SpecializationConfig) -> int:
    if cfg.n != n:
        raise InvalidArgument(f"configuration has n={cfg.n}, expected n={n}")
    if m < 1:
        raise InvalidArgument(f"need m >= 1, got m={m}")
    d, r = cfg.d, cfg.r
    _require(d * (d + 1) <= 2 * r, "r d(d+1)/2 <= r^2", cfg)
    _require(r * r <= d * d * n, "r^2 <= d^2 n", cfg)
    dec = decompose(MultiplicitySequence.uniform(n, m), r, d)
    return 1 + min((m * r + cfg.genus - 1) // d, dec.s + dec.u * d)


def _uniform_alpha_c(mseq, cfg: SpecializationConfig) -> int:
    mseq = as_sequence(mseq)
    m = mseq.uniform_value()
    if m is None:
        raise PreconditionError("part (c) needs uniform multiplicities")
    return thm_alpha_c(mseq.n, m, cfg)


# method name -> (alpha formula or None, tau formula or None), all taking (mseq, cfg)
FORMULAS = {
    "thm-a": (thm_alpha_a, thm_tau_a),
    "thm-b": (thm_alpha_b, thm_tau_b),
    "thm-c": (_uniform_alpha_c, None),
}

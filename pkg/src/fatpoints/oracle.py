"""Brute-force Hilbert function of fat points at random points over F_p.

Each point (a, b, 1) of multiplicity m contributes the C(m+1, 2) conditions
D^(i,j) f (a, b) = 0 for i + j < m, where D^(i,j) is the Hasse derivative
(coefficient of x^i y^j in f(a + x, b + y)).  On the monomial x^A y^B this is
C(A,i) C(B,j) a^(A-i) b^(B-j).  The Hilbert function in degree t is the
number of degree-t monomials minus the rank of this matrix mod p.

Random points stand in for general ones; the rank found is a lower bound for
the generic rank and equals it with high probability, so several trials are
run and the largest rank kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InternalError, InvalidArgument, TooLarge
from .expected import tau_c_seq
from .lattice import MultiplicitySequence, as_sequence, binom2, isqrt

__all__ = ["OracleConfig", "oracle_hilbert", "oracle_alpha", "oracle_tau", "matrix_rank_mod_p", "MAX_CONDITIONS"]

MAX_CONDITIONS = 5000
# products of two residues must fit in int64
_MAX_PRIME = 3037000499


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    return all(p % q for q in range(17, isqrt(p) + 1, 2))


@dataclass(frozen=True)
class OracleConfig:
    prime: int = 2**31 - 1
    seed: int = 0
    trials: int = 3

    def __post_init__(self):
        if not _is_prime(self.prime):
            raise InvalidArgument(f"modulus {self.prime} is not prime")
        if self.prime > _MAX_PRIME:
            raise InvalidArgument(f"prime must be at most {_MAX_PRIME} for int64 elimination")
        if self.trials < 1:
            raise InvalidArgument(f"trials must be >= 1, got {self.trials}")


def matrix_rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank, c:] = a[rank, c:] * inv % p
        below = a[rank + 1 :, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            a[idx, c:] = (a[idx, c:] - (a[idx, c][:, None] * a[rank, c:][None, :]) % p) % p
        rank += 1
    return rank


def _binomials_mod(t: int, p: int) -> np.ndarray:
    tab = np.zeros((t + 1, t + 1), dtype=np.int64)
    for k in range(t + 1):
        tab[k, 0] = 1
        for j in range(1, k + 1):
            tab[k, j] = (tab[k - 1, j - 1] + tab[k - 1, j]) % p
    return tab


def _powers_mod(x: int, t: int, p: int) -> np.ndarray:
    out = np.ones(t + 1, dtype=np.int64)
    for k in range(1, t + 1):
        out[k] = out[k - 1] * x % p
    return out


def _points(n: int, cfg: OracleConfig, trial: int) -> list[tuple[int, int]]:
    rng = np.random.default_rng([cfg.seed, trial])
    while True:
        pts = [tuple(int(v) for v in row) for row in rng.integers(1, cfg.prime, size=(n, 2))]
        if len(set(pts)) == n:
            return pts


def _conditions_matrix(mseq: MultiplicitySequence, t: int, pts, p: int) -> np.ndarray:
    A = np.array([a for a in range(t + 1) for b in range(t + 1 - a)], dtype=np.int64)
    B = np.array([b for a in range(t + 1) for b in range(t + 1 - a)], dtype=np.int64)
    # rows with i or j above t are zero, but the table must still be indexable
    binom = _binomials_mod(max(t, mseq.mults[0]), p)
    rows = []
    for (x, y), m in zip(pts, mseq.mults):
        px, py = _powers_mod(x, t, p), _powers_mod(y, t, p)
        for i in range(m):
            for j in range(m - i):
                ok = (A >= i) & (B >= j)
                ai, bj = np.where(ok, A - i, 0), np.where(ok, B - j, 0)
                row = binom[A, i] * binom[B, j] % p
                row = row * px[ai] % p * py[bj] % p
                rows.append(np.where(ok, row, 0))
    if not rows:
        return np.zeros((0, A.size), dtype=np.int64)
    return np.vstack(rows)


def _checked(n: int, mseq, guard: bool = True) -> MultiplicitySequence:
    mseq = as_sequence(mseq)
    if mseq.n != n:
        raise InvalidArgument(f"sequence has {mseq.n} points, expected n={n}")
    if guard and mseq.conditions > MAX_CONDITIONS:
        raise TooLarge(f"{mseq.conditions} conditions exceed the oracle limit of {MAX_CONDITIONS}")
    return mseq


def _rank(mseq: MultiplicitySequence, t: int, cfg: OracleConfig) -> int:
    if t < 0:
        raise InvalidArgument(f"degree must be nonnegative, got t={t}")
    if cfg.prime <= t:
        raise InvalidArgument(f"prime {cfg.prime} must exceed the degree t={t}")
    best = 0
    for trial in range(cfg.trials):
        pts = _points(mseq.n, cfg, trial)
        best = max(best, matrix_rank_mod_p(_conditions_matrix(mseq, t, pts, cfg.prime), cfg.prime))
    return best


def oracle_hilbert(
    n: int, mseq: Sequence[int] | MultiplicitySequence, t: int, cfg: OracleConfig | None = None
) -> int:
    """dim of degree-t forms vanishing to order m_i at n random points."""
    cfg = cfg or OracleConfig()
    mseq = _checked(n, mseq)
    return binom2(t + 2) - _rank(mseq, t, cfg)


def oracle_alpha(n: int, m: int | Sequence[int], cfg: OracleConfig | None = None) -> int:
    """Least t with a nonzero form; scanning starts at t = max m_i, below which none exist."""
    cfg = cfg or OracleConfig()
    mseq = _checked(n, [m] * n if isinstance(m, int) else m)
    t = mseq.mults[0]
    while binom2(t + 2) - _rank(mseq, t, cfg) == 0:
        t += 1
    return t


def oracle_tau(n: int, m: int | Sequence[int], cfg: OracleConfig | None = None) -> int:
    """Least t where the conditions are independent; starts at tau_c, below which they cannot be."""
    cfg = cfg or OracleConfig()
    mseq = _checked(n, [m] * n if isinstance(m, int) else m)
    need = mseq.conditions
    t = tau_c_seq(mseq)
    # a scheme of length l is (l-1)-regular, so this cap is never reached
    cap = max(t, need)
    while _rank(mseq, t, cfg) < need:
        t += 1
        if t > cap:
            raise InternalError(f"no independent degree found up to {cap} for {mseq}")
    return t

"""(n, m) grid datasets for the four coverage figures, in compressed run form.

Figure 1: pairs whose Hilbert function is verified by the closed-form ranges,
followed by one block of runs per square n (scanned slightly past topm, see
SQUARE_OVERSCAN).
Figure 2: pairs whose resolution is determined, with even squares only.
Figure 3: pairs where the uniform alpha formula with d = isqrt(n),
r = isqrt(d^2 n) reaches m sqrt(n).
Figure 4: the same test with r = floor((n + d^2)/2).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Callable, Iterable

from .conjecture import _range_hilbert, square_hilbert_check
from .errors import InvalidArgument
from .lattice import genus, isqrt

__all__ = ["PltRun", "figure_dataset", "figure_pairs", "format_plt", "format_csv", "format_json", "FORMATS"]


@dataclass(frozen=True)
class PltRun:
    """The pairs (n, m_start), ..., (n, m_start + span)."""

    span: int
    n: int
    m_start: int

    def __post_init__(self):
        if self.span < 0:
            raise InvalidArgument(f"span must be nonnegative, got {self.span}")

    def pairs(self) -> list[tuple[int, int]]:
        return [(self.n, self.m_start + i) for i in range(self.span + 1)]

    def plt(self) -> str:
        return f"\\plt {self.span} {self.n} {self.m_start}  "


def _runs(members: Callable[[int], set[int]], rows: Iterable[int], topm: int, label=lambda n: n) -> list[PltRun]:
    # A run still open at topm gets span topm - start, as the original scanner
    # printed it.
    out: list[PltRun] = []
    for row in rows:
        hit = members(row)
        start = None
        for m in range(1, topm + 1):
            if m in hit:
                if start is None:
                    start = m
            elif start is not None:
                out.append(PltRun(m - 1 - start, label(row), start))
                start = None
        if start is not None:
            out.append(PltRun(topm - start, label(row), start))
    return out


def _top_d(topn: int) -> int:
    # least d with d^2 > topn
    return isqrt(topn) + 1


def _hilbert_grid(topn: int, topm: int) -> dict[int, set[int]]:
    grid: dict[int, set[int]] = {}
    for d in range(3, _top_d(topn) + 1):
        eps = 1
        while 2 * eps <= (d + 1) * (d + 3):
            n = d * d + 2 * eps
            if n <= topn:
                grid.setdefault(n, set()).update(m for m in _range_hilbert(d, eps) if 1 <= m <= topm)
            eps += 1
    return grid


def _resolution_grid(topn: int, topm: int) -> dict[int, set[int]]:
    grid: dict[int, set[int]] = {}

    def add(n: int, m: int) -> None:
        if n <= topn and 1 <= m <= topm:
            grid.setdefault(n, set()).add(m)

    for d in range(3, _top_d(topn) + 1):
        for sign in (-1, 1):
            add(d * d + 2, d * d + d * (d + sign) // 2)
    for d in range(3, _top_d(topn) + 1):
        eps = 1
        while 2 * eps <= d * (d + 1):
            for num in (d * (d - 1), d * (d + 1), d * (d - 1) - 2, d * (d + 1) - 2):
                if num % (2 * eps) == 0:
                    add(d * d + 2 * eps, num // (2 * eps))
            eps += 1
    return grid


# The square blocks were produced with the scan run a little past topm and
# runs starting beyond topm + 1 dropped; these two offsets reproduce that.
SQUARE_OVERSCAN = 3
SQUARE_START_SLACK = 1


def _square_runs(topn: int, topm: int, even_only: bool) -> list[PltRun]:
    sigmas = [s for s in range(4, isqrt(topn) + 1) if not even_only or s % 2 == 0]
    top = topm + SQUARE_OVERSCAN

    def members(sigma: int) -> set[int]:
        return {m for m in range(1, top + 1) if square_hilbert_check(sigma, m)}

    runs = _runs(members, sigmas, top, label=lambda s: s * s)
    return [run for run in runs if run.m_start <= topm + SQUARE_START_SLACK]


def _s_value(rho: int, d: int) -> int:
    s = 0
    while (s + 1) * (s + 2) <= 2 * rho:
        s += 1
    return min(s - 1, d - 1)


def _nagata_formula_hits(n: int, topm: int, half_sum: bool) -> set[int]:
    # Unlike formulas.thm_alpha_*, the figure scanners do not check the
    # hypotheses on (d, r); they evaluate the expressions directly.
    d = isqrt(n)
    g = genus(d)
    r = (n + d * d) // 2 if half_sum else isqrt(d * d * n)
    use_b = half_sum and (n + d * d) % 2 == 0
    hits = set()
    for m in range(1, topm + 1):
        u = -(-m * n // r) - 1
        rho = m * n - u * r
        s = _s_value(rho, d)
        if use_b:
            bound = 1 + s + u * d
        else:
            bound = 1 + min((m * r + g - 1) // d, s + u * d)
        if bound * bound >= m * m * n:
            hits.add(m)
    return hits


def figure_dataset(k: int, topn: int = 220, topm: int = 220) -> list[PltRun]:
    """Runs for figure ``k`` over 10 <= n <= topn, 1 <= m <= topm."""
    if k not in (1, 2, 3, 4):
        raise InvalidArgument(f"figure must be 1..4, got {k}")
    if topn < 10 or topm < 1:
        raise InvalidArgument(f"need topn >= 10 and topm >= 1, got topn={topn}, topm={topm}")
    rows = range(10, topn + 1)
    if k in (1, 2):
        grid = _hilbert_grid(topn, topm) if k == 1 else _resolution_grid(topn, topm)
        main = _runs(lambda n: grid.get(n, set()), rows, topm)
        return main + _square_runs(topn, topm, even_only=(k == 2))
    return _runs(lambda n: _nagata_formula_hits(n, topm, half_sum=(k == 4)), rows, topm)


def figure_pairs(runs: Iterable[PltRun]) -> list[tuple[int, int]]:
    return [p for run in runs for p in run.pairs()]


def format_plt(runs: Iterable[PltRun]) -> str:
    return "".join(run.plt() + "\n" for run in runs)


def format_csv(runs: Iterable[PltRun]) -> str:
    return "n,m\n" + "".join(f"{n},{m}\n" for n, m in figure_pairs(runs))


def format_json(runs: Iterable[PltRun]) -> str:
    return json.dumps([asdict(run) for run in runs]) + "\n"


FORMATS = {"plt": format_plt, "csv": format_csv, "json": format_json}

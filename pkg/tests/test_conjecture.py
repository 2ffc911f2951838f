import pytest

from fatpoints.conjecture import (
    LITERATURE_BOUNDS,
    NagataVerdict,
    Resolution,
    best_bounds,
    conjectural_resolution,
    hilbert_range_set,
    largest_l,
    merge_best,
    nagata_check,
    nagata_small_m,
    resolution_cases,
    square_hilbert_check,
    verify_hilbert,
)
from fatpoints.errors import InvalidArgument
from fatpoints.expected import expected_hilbert
from fatpoints.lattice import isqrt


def test_resolution_examples():
    assert conjectural_resolution(18, 2) == Resolution(9, 1, 9, 0, 9)
    assert conjectural_resolution(10, 1) == Resolution(4, 5, 0, 4, 0)


def test_resolution_boundary_case():
    # find (n, m) with h(alpha+1) = 3 h(alpha) by scanning; both max clauses vanish
    hits = []
    for n in range(10, 60):
        for m in range(1, 15):
            res = conjectural_resolution(n, m)
            if expected_hilbert(n, m, res.alpha + 1) == 3 * res.a:
                hits.append(res)
    assert hits
    assert all(r.b == r.c == 0 and r.dd == r.a - 1 for r in hits)


def test_resolution_exponent_invariants():
    for n in range(10, 60):
        for m in range(1, 20):
            r = conjectural_resolution(n, m)
            assert r.a >= 1 and r.dd >= 0 and r.b * r.c == 0
            assert r.dd == r.a + r.b - r.c - 1


def test_best_bounds_algorithm():
    best = best_bounds(33, 29)
    assert (best.alpha.value, best.alpha.d, best.alpha.r) == (168, 4, 23)


def test_best_bounds_formula_b():
    best = best_bounds(38, 16, methods=["thm-b"])
    assert (best.alpha.value, best.alpha.d, best.alpha.r) == (101, 6, 37)


def test_best_bounds_zero_and_fallback():
    assert best_bounds(12, 0).alpha.value == 0
    # no formula applies on a one-point grid with d = 1, r = 1 for 5^12 part (b)
    best = best_bounds(12, 5, (1, 1), (1, 1), methods=["thm-b"])
    assert best.alpha.value == 1 and best.alpha.method == "trivial" and best.tau is None


def test_best_bounds_tie_break_prefers_small_d_then_r():
    best = best_bounds(18, 2, methods=["algorithm"])
    assert best.alpha.value == 9
    # the winner must be the first (d, r) in lexicographic order achieving 9
    from fatpoints.engine import alpha_lower_bound
    from fatpoints.lattice import MultiplicitySequence, SpecializationConfig

    first = next(
        (d, r)
        for d in range(1, isqrt(18) + 3)
        for r in range(1, 19)
        if alpha_lower_bound(MultiplicitySequence.uniform(18, 2), SpecializationConfig(18, d, r)).value == 9
    )
    assert (best.alpha.d, best.alpha.r) == first


def test_merge_best_rejects_empty():
    with pytest.raises(InvalidArgument):
        merge_best([])


def test_verify_hilbert():
    v = verify_hilbert(18, 2)
    assert v.verified and v.alpha.value >= 9 and v.tau.value == 9
    assert verify_hilbert(11, 1)
    v = verify_hilbert(33, 29)
    assert not v.verified
    assert (v.alpha.value, v.tau.value) == (168, 169)


def test_verify_hilbert_domain():
    with pytest.raises(InvalidArgument):
        verify_hilbert(9, 1)


def test_nagata_examples():
    assert [bool(nagata_check(10, m)) for m in (1, 2, 3, 4)] == [True, True, True, False]
    assert [bool(nagata_check(12, m)) for m in (1, 2)] == [True, False]
    assert nagata_check(16, 5) is NagataVerdict.KNOWN_SQUARE
    assert max(m for m in range(1, 100) if nagata_small_m(100, m)) == 25
    with pytest.raises(InvalidArgument):
        nagata_check(9, 1)


def test_nagata_even_delta():
    # n = 11: d = 3, delta = 2, m <= max(0, 9)
    assert nagata_check(11, 9) and not nagata_check(11, 10)


def test_largest_l():
    assert [largest_l(i) for i in (1, 2, 4, 6, 10, 26)] == [0, 1, 1, 2, 2, 4]


def test_square_check():
    assert square_hilbert_check(4, 4) and not square_hilbert_check(4, 3)
    assert all(square_hilbert_check(5, m) for m in (1, 2, 3))
    assert not square_hilbert_check(5, 4)
    with pytest.raises(InvalidArgument):
        square_hilbert_check(3, 1)


def test_range_set_examples():
    assert set(range(1, 10)) <= hilbert_range_set(11)
    assert {1, 2, 4, 5, 7, 8} <= hilbert_range_set(16)
    assert 3 not in hilbert_range_set(16)
    assert {1, 2, 3, 4} <= hilbert_range_set(13)
    # 17 = 3^2 + 2*4: only range (a) is nonempty, 2/8 <= m < 20/8
    assert hilbert_range_set(17) == {1, 2}
    assert hilbert_range_set(19) == {1}
    # 12 - 9 = 3 is odd, so there is no even splitting at all
    assert hilbert_range_set(12) == set()


def test_range_set_large_members():
    assert 243 in hilbert_range_set(38)
    assert 783 in hilbert_range_set(83)


def test_range_set_counts():
    ns = [n for n in range(10, 101) if any(n - d * d > 0 and (n - d * d) % 2 == 0 for d in range(3, isqrt(n) + 1))]
    pairs = [(n, m) for n in ns for m in hilbert_range_set(n, include_squares=False) if m <= 100]
    assert len(pairs) == 723
    assert sum(1 for _, m in pairs if m <= 12) == 308
    res = [(n, m) for n, m in pairs if (h := resolution_cases(n, m)) is not None and h.case.startswith("VI.1")]
    assert len(res) == 121
    assert sum(1 for _, m in res if m > 2) == 91


def test_resolution_cases_examples():
    assert resolution_cases(18, 2) is None
    hit = resolution_cases(11, 2)
    assert hit.case == "VI.1(b)" and (hit.resolution.dd, hit.resolution.b, hit.resolution.a) == (5, 3, 3)
    assert hit.resolution.alpha == 7
    assert resolution_cases(11, 3).case == "VI.1(a)"
    assert resolution_cases(11, 6).case == "VI.1(a)"
    assert resolution_cases(16, 1).case == "VI.2"
    # odd squares are not covered by the square resolution case
    assert resolution_cases(25, 1) is None


def test_resolution_cases_consistent_on_grid():
    for n in range(10, 121):
        for m in range(1, 121):
            hit = resolution_cases(n, m)
            if hit is not None:
                assert hit.resolution == conjectural_resolution(n, m)


def test_literature_constants():
    taus = [v for kind, _, v in LITERATURE_BOUNDS[(190, 100)] if kind == "tau"]
    assert taus == [1957, 1900, 1899, 1487, 1465, 1440, 1406]
    assert [v for _, _, v in LITERATURE_BOUNDS[(1000, 13)]] == [421, 412]


def test_range_members_verified_by_part_b_at_r_d2_plus_eps():
    from fatpoints.conjecture import _even_splittings, _range_hilbert
    from fatpoints.formulas import thm_alpha_b, thm_tau_b
    from fatpoints.lattice import MultiplicitySequence, SpecializationConfig

    for n in range(10, 41):
        for d, eps in _even_splittings(n):
            if 2 * eps > (d + 1) * (d + 3):
                continue
            for m in _range_hilbert(d, eps):
                if 1 <= m <= 12:
                    mseq, cfg = MultiplicitySequence.uniform(n, m), SpecializationConfig(n, d, d * d + eps)
                    assert thm_alpha_b(mseq, cfg) >= thm_tau_b(mseq, cfg)

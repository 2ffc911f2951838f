import numpy as np
import pytest

from fatpoints.engine import alpha_lower_bound, tau_upper_bound
from fatpoints.errors import InvalidArgument, TooLarge
from fatpoints.lattice import MultiplicitySequence, SpecializationConfig, binom2, isqrt
from fatpoints.oracle import OracleConfig, matrix_rank_mod_p, oracle_alpha, oracle_hilbert, oracle_tau


def test_hilbert_examples():
    assert oracle_hilbert(18, [2] * 18, 9) == 1
    assert oracle_hilbert(10, [1] * 10, 3) == 0
    # five double points force the doubled conic in degree 4
    assert oracle_hilbert(5, [2] * 5, 4) == 1


def test_alpha_tau_examples():
    assert (oracle_alpha(18, 2), oracle_tau(18, 2)) == (9, 9)
    assert (oracle_alpha(10, 1), oracle_tau(10, 1)) == (4, 3)
    assert (oracle_alpha(10, 0), oracle_tau(10, 0)) == (0, 0)


def test_rank_small_matrices():
    p = 101
    assert matrix_rank_mod_p(np.array([[1, 2], [2, 4]]), p) == 1
    assert matrix_rank_mod_p(np.array([[1, 2], [3, 4]]), p) == 2
    # singular only mod p
    assert matrix_rank_mod_p(np.array([[1, 0], [0, 101]]), p) == 1
    assert matrix_rank_mod_p(np.zeros((0, 3), dtype=np.int64), p) == 0


def test_rank_matches_float_rank_on_random_small_ints():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = rng.integers(-3, 4, size=(6, 8))
        # entries are tiny so the rank over Q and over a large prime agree generically;
        # compare against numpy's floating rank only where it is unambiguous
        assert matrix_rank_mod_p(a, 2**31 - 1) == np.linalg.matrix_rank(a)


def test_config_validation():
    with pytest.raises(InvalidArgument):
        OracleConfig(prime=100)
    with pytest.raises(InvalidArgument):
        OracleConfig(trials=0)
    with pytest.raises(InvalidArgument):
        oracle_hilbert(3, [1, 1, 1], 12, OracleConfig(prime=11))


def test_guard():
    with pytest.raises(TooLarge):
        oracle_alpha(100, 10)


def test_deterministic_seed():
    cfg = OracleConfig(seed=42, trials=1)
    assert oracle_hilbert(12, [2] * 12, 8, cfg) == oracle_hilbert(12, [2] * 12, 8, cfg)


def test_monotone_with_bounded_increments():
    values = [oracle_hilbert(11, [2] * 11, t) for t in range(0, 12)]
    assert all(0 <= b - a <= t + 2 for t, (a, b) in enumerate(zip(values, values[1:]), start=1))
    assert values[-1] == binom2(13) - 33


def test_nonuniform_sequence():
    # one triple point and nine simple points: 6 + 9 = 15 conditions on quartics
    assert oracle_hilbert(10, [3] + [1] * 9, 4) == 0
    assert oracle_hilbert(10, [3] + [1] * 9, 5) == 21 - 15


def test_sandwich_against_engine():
    for n in range(10, 15):
        for m in range(1, 4):
            a, t = oracle_alpha(n, m), oracle_tau(n, m)
            mseq = MultiplicitySequence.uniform(n, m)
            for d in range(1, isqrt(n) + 3):
                for r in range(1, n + 1):
                    cfg = SpecializationConfig(n, d, r)
                    assert alpha_lower_bound(mseq, cfg, keep_trace=False).value <= a
                    assert tau_upper_bound(mseq, cfg, keep_trace=False).value >= t

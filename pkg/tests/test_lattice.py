from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatpoints.errors import InvalidArgument
from fatpoints.lattice import (
    DivisorClass,
    MultiplicitySequence,
    SpecializationConfig,
    binom2,
    genus,
    intersect_curve,
    isqrt,
    subtract_curve,
    unload,
)


def test_genus_small_degrees():
    assert [genus(d) for d in range(1, 7)] == [0, 0, 1, 3, 6, 10]


def test_genus_rejects_nonpositive():
    with pytest.raises(InvalidArgument):
        genus(0)


def test_sequence_sorts_and_validates():
    s = MultiplicitySequence([1, 3, 2])
    assert s.mults == (3, 2, 1)
    assert s.prefix_sum(2) == 5 and s.total == 6
    assert s.conditions == 6 + 3 + 1
    with pytest.raises(InvalidArgument):
        MultiplicitySequence([2, -1])
    with pytest.raises(InvalidArgument):
        MultiplicitySequence([])


def test_uniform_sequence_str():
    assert str(MultiplicitySequence.uniform(18, 2)) == "2^18"
    assert MultiplicitySequence.uniform(4, 0).is_zero()


def test_config_message():
    with pytest.raises(InvalidArgument, match="r must satisfy 1<=r<=n"):
        SpecializationConfig(18, 4, 99)


def test_curve_class():
    C = SpecializationConfig(5, 2, 3).curve()
    assert C == DivisorClass(2, (1, 1, 1, 0, 0))


def test_subtract_and_unload_by_hand():
    cfg = SpecializationConfig(4, 1, 2)
    D = DivisorClass(3, (1, 1, 1, 0))
    D1 = subtract_curve(D, cfg)
    assert D1 == DivisorClass(2, (0, 0, 1, 0))
    assert unload(D1) == DivisorClass(2, (1, 0, 0, 0))
    assert unload(DivisorClass(0, (-1, 2, 0))) == DivisorClass(0, (2, 0, 0))


def test_length_mismatch_rejected():
    with pytest.raises(InvalidArgument):
        intersect_curve(DivisorClass(1, (1, 1)), SpecializationConfig(3, 1, 1))


def test_isqrt_large_and_negative():
    big = 10**40 + 12345
    s = isqrt(big)
    assert s * s <= big < (s + 1) ** 2
    with pytest.raises(InvalidArgument):
        isqrt(-1)


def test_binom2():
    assert [binom2(x) for x in range(-1, 5)] == [0, 0, 0, 1, 3, 6]


coeffs = st.lists(st.integers(-5, 12), min_size=1, max_size=12)


@settings(max_examples=10_000, deadline=None)
@given(deg=st.integers(-20, 40), mults=coeffs)
def test_unload_idempotent_and_preserves_positive_multiset(deg, mults):
    D = DivisorClass(deg, tuple(mults))
    U = unload(D)
    assert unload(U) == U
    assert U.degree == deg
    assert list(U.mults) == sorted(U.mults, reverse=True)
    assert Counter(a for a in U.mults if a > 0) == Counter(a for a in mults if a > 0)


@st.composite
def divisor_and_config(draw):
    n = draw(st.integers(1, 12))
    d = draw(st.integers(1, 8))
    r = draw(st.integers(1, n))
    deg = draw(st.integers(-10, 60))
    mults = tuple(draw(st.lists(st.integers(-3, 10), min_size=n, max_size=n)))
    return DivisorClass(deg, mults), SpecializationConfig(n, d, r)


@settings(max_examples=2000, deadline=None)
@given(divisor_and_config())
def test_subtract_intersect_identity(pair):
    D, cfg = pair
    D1 = subtract_curve(D, cfg)
    assert intersect_curve(D1, cfg) == intersect_curve(D, cfg) - cfg.d**2 + cfg.r


@given(st.integers(0, 10**30))
def test_isqrt_property(x):
    s = isqrt(x)
    assert s * s <= x < (s + 1) ** 2


@given(st.integers(1, 200))
def test_genus_matches_binomial(d):
    assert genus(d) == binom2(d - 1)

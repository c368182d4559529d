from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from trimorph.numtheory import (
    INDEPENDENT,
    Dependent,
    integer_root,
    mult_dependence,
    primitive_root,
    val_and_digit,
)


def test_primitive_root_examples():
    assert primitive_root(64) == (2, 6)
    assert primitive_root(36) == (6, 2)
    assert primitive_root(7) == (7, 1)
    with pytest.raises(ValueError):
        primitive_root(1)


def test_mult_dependence_examples():
    assert mult_dependence(8, 4) == Dependent(2, 3, 2)
    assert mult_dependence(2, 3) == INDEPENDENT
    assert mult_dependence(4, 16) == Dependent(4, 1, 2)
    assert mult_dependence(6, 6) == Dependent(6, 1, 1)


def test_val_and_digit_examples():
    assert val_and_digit(12, 2) == (2, 3 % 2)
    assert val_and_digit(12, 3) == (1, 4 % 3)
    assert val_and_digit(7, 3) == (0, 1)
    assert val_and_digit(54, 3) == (3, 2)


def test_integer_root_examples():
    assert integer_root(26, 3) == 2
    assert integer_root(27, 3) == 3
    assert integer_root(2**63, 63) == 2
    assert integer_root(10**18, 2) == 10**9


def _smallest_power_base(n: int) -> int:
    """Brute oracle: least b >= 2 with b^k = n for some k (n itself otherwise)."""
    b = 2
    while b * b <= n:
        v = b
        while v < n:
            v *= b
        if v == n:
            return b
        b += 1
    return n


def test_exhaustive_small():
    # The primitive root is exactly the smallest base expressing n as a power.
    for n in range(2, 3000):
        d, e = primitive_root(n)
        assert d**e == n
        assert d == _smallest_power_base(n)


@given(st.integers(2, 10**9), st.integers(1, 6))
def test_root_then_power_brackets(n, k):
    r = integer_root(n, k)
    assert r**k <= n < (r + 1) ** k


@given(st.integers(2, 50), st.integers(1, 10))
def test_primitive_root_of_powers(base, exp):
    db, eb = primitive_root(base)
    assert primitive_root(base**exp) == (db, eb * exp)


@given(st.integers(2, 500), st.integers(2, 500))
def test_dependence_matches_brute_force(p, q):
    brute = any(p**j == q**k for j in range(1, 11) for k in range(1, 11))
    dep = mult_dependence(p, q)
    assert isinstance(dep, Dependent) == brute
    if isinstance(dep, Dependent):
        assert dep.r**dep.m == p and dep.r**dep.n == q
        from math import gcd

        assert gcd(dep.m, dep.n) == 1


@given(st.integers(1, 10**9), st.integers(2, 7))
def test_val_and_digit_reconstructs(i, p):
    m, d = val_and_digit(i, p)
    assert i % p**m == 0
    assert (i // p**m) % p == d
    assert d != 0

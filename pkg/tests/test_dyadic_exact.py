from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetadet.dyadic import HALF, ONE, ZERO, Dyadic
from thetadet.exact import ExactMatrix, bareiss_det, det_exact

dyadics = st.builds(Dyadic, st.integers(-1000, 1000), st.integers(0, 6))


def leibniz(rows):
    """Determinant straight from the permutation expansion."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction(-1) ** inversions
        for i, j in enumerate(perm):
            term *= Fraction(rows[i][j])
        total += term
    return total


def test_normalization():
    assert Dyadic(4, 2) == ONE
    assert Dyadic(6, 2).numerator == 3 and Dyadic(6, 2).exponent == 1
    assert Dyadic(0, 5) == ZERO and Dyadic(0, 5).exponent == 0
    assert str(Dyadic(-3, 1)) == "-3/2"
    assert str(Dyadic(7)) == "7"


def test_negative_exponent_rejected_or_folded():
    assert Dyadic(3, -2) == Dyadic(12)


@pytest.mark.parametrize("text,value", [("5", Fraction(5)), ("-1/2", Fraction(-1, 2)), (" 3/8 ", Fraction(3, 8))])
def test_coerce_strings(text, value):
    assert Dyadic.coerce(text).to_fraction() == value


@pytest.mark.parametrize("bad", ["1/3", "x", True, 0.5, "1/0"])
def test_coerce_rejects(bad):
    with pytest.raises((ValueError, TypeError, ZeroDivisionError)):
        Dyadic.coerce(bad)


def test_coerce_fraction():
    assert Dyadic.coerce(Fraction(-5, 4)) == Dyadic(-5, 2)
    with pytest.raises(ValueError):
        Dyadic.coerce(Fraction(1, 6))


@given(dyadics, dyadics)
def test_arithmetic_matches_fraction(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)
    assert abs(a).to_fraction() == abs(fa)


@given(dyadics, st.integers(-4, 4))
def test_scaled(a, k):
    assert a.scaled(k).to_fraction() == a.to_fraction() * Fraction(2) ** k


def test_hash_consistent_with_eq():
    assert hash(Dyadic(2, 1)) == hash(ONE)
    assert len({HALF, Dyadic(2, 2), Dyadic(1, 1)}) == 1


def test_bareiss_small_cases():
    assert bareiss_det([]) == 1
    assert bareiss_det([[7]]) == 7
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
))
def test_bareiss_matches_leibniz(rows):
    assert bareiss_det(rows) == leibniz(rows)


@settings(max_examples=100)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(dyadics, min_size=n, max_size=n), min_size=n, max_size=n)
))
def test_det_exact_matches_leibniz(rows):
    m = ExactMatrix(rows)
    assert det_exact(m).to_fraction() == leibniz([[x.to_fraction() for x in r] for r in rows])


def test_matrix_helpers():
    m = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert m.dimension == 3
    assert m[1, 2] == Dyadic(6)
    assert m.minor(0) == [[5, 6], [8, 10]]
    assert det_exact(m) == Dyadic(-3)
    assert ExactMatrix.zeros(2) == [[0, 0], [0, 0]]


def test_matrix_must_be_square():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2]])

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genbrauer.exactlinalg import (
    EchelonBasis,
    QuadraticSurd,
    det,
    format_fraction,
    format_scalar,
    identity,
    inverse,
    matmul,
    nullspace,
    rank,
    rref,
    solve,
    span_closure,
    two_cos,
)

small = st.integers(min_value=-6, max_value=6)
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
surds = st.builds(QuadraticSurd, fracs, fracs, st.just(5))


def int_matrix(rows: int, cols: int):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=60, deadline=None)
@given(int_matrix(4, 4))
def test_det_matches_float_oracle(m):
    exact = det([[Fraction(x) for x in r] for r in m])
    assert float(exact) == pytest.approx(np.linalg.det(np.array(m, dtype=float)), abs=1e-6)


@settings(max_examples=60, deadline=None)
@given(int_matrix(3, 5))
def test_rank_matches_float_oracle_and_nullity(m):
    fm = [[Fraction(x) for x in r] for r in m]
    r = rank(fm)
    assert r == np.linalg.matrix_rank(np.array(m, dtype=float))
    ns = nullspace(fm)
    assert r + len(ns) == 5
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in fm)


@settings(max_examples=40, deadline=None)
@given(int_matrix(3, 3), st.lists(small, min_size=3, max_size=3))
def test_inverse_and_solve(m, b):
    fm = [[Fraction(x) for x in r] for r in m]
    if det(fm) == 0:
        assert solve(fm, b) is None or rank(fm) < 3
        return
    assert matmul(fm, inverse(fm)) == identity(3)
    x = solve(fm, b)
    assert [sum(a * c for a, c in zip(row, x)) for row in fm] == [Fraction(v) for v in b]


def test_rref_pivots():
    r, piv = rref([[Fraction(0), Fraction(2), Fraction(4)], [Fraction(0), Fraction(1), Fraction(2)]])
    assert piv == [1]
    assert r[0] == [0, 1, 2]


def test_echelon_basis_tracks_span():
    eb = EchelonBasis()
    assert eb.add({0: Fraction(1), 1: Fraction(1)}) is not None
    assert eb.add({0: Fraction(2), 1: Fraction(2)}) is None
    assert eb.add({1: Fraction(3)}) is not None
    assert eb.contains({0: Fraction(5)})
    assert len(eb) == 2


def test_span_closure_of_full_matrix_algebra():
    e12 = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
    e21 = [[Fraction(0), Fraction(0)], [Fraction(1), Fraction(0)]]
    assert len(span_closure([e12, e21])) == 4
    diag = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(2)]]
    assert len(span_closure([diag])) == 2


@settings(max_examples=80, deadline=None)
@given(surds, surds, surds)
def test_quadratic_surd_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert float(a * b) == pytest.approx(float(a) * float(b), abs=1e-9)


@settings(max_examples=80, deadline=None)
@given(surds)
def test_quadratic_surd_inverse_and_norm(a):
    if not a:
        return
    assert a * (1 / a) == 1
    assert a * a.conjugate() == a.norm()


def test_surd_equals_rational_when_irrational_part_vanishes():
    assert QuadraticSurd(Fraction(3, 2), 0) == Fraction(3, 2)
    assert hash(QuadraticSurd(Fraction(3, 2), 0)) == hash(Fraction(3, 2))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_two_cos_exact(m):
    for k in range(m):
        v = two_cos(k, m)
        assert float(v) == pytest.approx(2 * math.cos(2 * math.pi * k / m), abs=1e-12)


def test_two_cos_pentagon_identity():
    # 2cos(2pi/5) is a root of x^2 + x - 1
    x = two_cos(1, 5)
    assert x * x + x - 1 == 0


def test_formatting():
    assert format_fraction(Fraction(-7, 3)) == "-7/3"
    assert format_fraction(Fraction(4)) == "4"
    assert "-" in format_scalar(QuadraticSurd(Fraction(1), Fraction(-1), 5))
    assert "+-" not in format_scalar(QuadraticSurd(Fraction(1), Fraction(-1), 5))

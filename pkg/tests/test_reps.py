from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from genbrauer.exactlinalg import det
from genbrauer.gbrauer import Params, build_algebra
from genbrauer.groups import build_group
from genbrauer.reps import (
    b3_brauer_irreps,
    burnside_dimension,
    dihedral_irreducibles,
    dihedral_k_reps,
    dihedral_kr_split,
    is_irreducible,
    known_representations,
    lk_representation,
    regular_representation,
    scaled,
    verify_representation,
    wedderburn_lower_bound,
)


def dihedral(m: int):
    return build_algebra(build_group("dihedral", m=m))


@pytest.mark.parametrize(
    "spec",
    [dict(family="dihedral", m=m) for m in (3, 4, 5, 6)]
    + [dict(family="symmetric", n=3), dict(family="cyclotomic", m=2, n=2), dict(family="cyclotomic", m=3, n=2)],
    ids=str,
)
def test_known_representations_verify(spec):
    alg = build_algebra(build_group(spec))
    for rep in known_representations(alg, regular=False):
        assert verify_representation(alg, rep) == [], rep.name


def test_regular_representation_verifies_and_is_faithful():
    alg = dihedral(3)
    reg = regular_representation(alg)
    assert verify_representation(alg, reg) == []
    assert burnside_dimension(reg) == alg.dim


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_wedderburn_sum_is_dimension(m):
    alg = dihedral(m)
    assert wedderburn_lower_bound(alg, dihedral_irreducibles(alg)) == alg.dim


@pytest.mark.parametrize("m", [4, 6])
def test_even_determinants_nonzero_and_match_float_oracle(m):
    alg = dihedral(m)
    _, _, M0, M1 = dihedral_kr_split(alg)
    _, _, A0, A1 = dihedral_k_reps(alg)
    for M in (M0, M1, A0, A1):
        d = det(M)
        assert d != 0
        assert float(d) == pytest.approx(np.linalg.det(np.array(M, dtype=float)), rel=1e-9)


def test_known_determinant_values_i2_4():
    alg = dihedral(4)
    _, _, M0, M1 = dihedral_kr_split(alg)
    _, _, A0, A1 = dihedral_k_reps(alg)
    assert [det(M0), det(M1), det(A0), det(A1)] == [Fraction(11, 3), Fraction(21, 25), Fraction(49, 9), Fraction(121, 25)]


@pytest.mark.parametrize("m", [4, 6])
def test_k_and_kr_are_distinct_irreducibles(m):
    alg = dihedral(m)
    kr0, kr1, _, _ = dihedral_kr_split(alg)
    k0, k1, _, _ = dihedral_k_reps(alg)
    chars = set()
    for rep in (kr0, kr1, k0, k1):
        assert is_irreducible(rep)
        chars.add(rep.character(alg))
    assert len(chars) == 4


@pytest.mark.parametrize("m", [3, 5])
def test_loop_value_one_makes_the_lk_module_reducible(m):
    G = build_group("dihedral", m=m)
    alg = build_algebra(G, Params.uniform(G, 1, 1))
    rep = lk_representation(alg)
    assert verify_representation(alg, rep) == []
    assert burnside_dimension(rep) < rep.dim**2


def test_wedderburn_rejects_bad_input():
    alg = dihedral(3)
    irreps = dihedral_irreducibles(alg)
    with pytest.raises(ValueError):
        wedderburn_lower_bound(alg, irreps + [irreps[0]])
    with pytest.raises(ValueError):
        wedderburn_lower_bound(alg, [regular_representation(alg)])


def test_scaled_e_images_break_the_relations():
    alg = dihedral(4)
    rep = lk_representation(alg)
    assert verify_representation(alg, scaled(rep, 2)) != []


@pytest.mark.parametrize("m", [Fraction(3), Fraction(7, 3)])
def test_three_strand_irreducibles(m):
    alg, reps = b3_brauer_irreps(m)
    for rep in reps:
        assert verify_representation(alg, rep) == []
    assert [r.dim for r in reps] == [1, 1, 2, 3]
    assert wedderburn_lower_bound(alg, reps) == alg.dim == 15

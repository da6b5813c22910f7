from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genbrauer.diagrams import DiagramElement, e_elem, perm_elem
from genbrauer.exactlinalg import EchelonBasis
from genbrauer.gbrauer import (
    Params,
    build_algebra,
    export_structure_constants,
    group_embedding_check,
    in_trace_radical,
    rescale_check,
    semisimplicity_report,
    star_check,
)
from genbrauer.groups import build_group

DIMS = [
    (dict(family="dihedral", m=3), 15),
    (dict(family="dihedral", m=4), 24),
    (dict(family="dihedral", m=5), 35),
    (dict(family="dihedral", m=6), 48),
    (dict(family="symmetric", n=2), 3),
    (dict(family="symmetric", n=3), 15),
    (dict(family="cyclotomic", m=2, n=2), 24),
    (dict(family="cyclotomic", m=3, n=2), 57),
]


@pytest.mark.parametrize("spec,dim", DIMS, ids=str)
def test_dimension(spec, dim):
    alg = build_algebra(build_group(spec))
    assert alg.dim == dim


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_dihedral_dimension_formula(m):
    # 2m + m^2 (odd) and 4l + 4l^2 with m = 2l (even) agree: both are m^2 + 2m
    alg = build_algebra(build_group("dihedral", m=m))
    l = m // 2
    assert alg.dim == (2 * m + m * m if m % 2 else 4 * l + 4 * l * l)


@pytest.mark.parametrize("spec,dim", DIMS[:6], ids=str)
def test_defining_relations_hold_and_group_embeds(spec, dim):
    alg = build_algebra(build_group(spec))
    assert alg.relation_violations() == []
    assert group_embedding_check(alg)


def _diagram_images(n: int, tau: Fraction):
    G = build_group("symmetric", n=n)
    alg = build_algebra(G, Params.uniform(G, 1, tau), certify=False)

    def perm(g):
        p = G.elements[g]
        # the algebra's group law composes right-to-left; diagrams stack left first
        return perm_elem(tuple(sorted(range(n), key=lambda i: p[i])), tau)

    imgs = []
    for g, tail in alg.basis:
        x = perm(g)
        for h in tail:
            i, j = G.hyperplanes[h]
            x = x * e_elem(i, j, n, tau)
        imgs.append(x)
    return alg, imgs


@pytest.mark.parametrize("n", [2, 3, 4])
def test_symmetric_case_is_the_diagram_algebra(n):
    # independent oracle: with mu = 1 the algebra of S_n is the diagram algebra B_n(tau)
    tau = Fraction(7, 3)
    alg, imgs = _diagram_images(n, tau)
    eb, keys = EchelonBasis(), {}
    for x in imgs:
        eb.add({keys.setdefault(d, len(keys)): c for d, c in x.terms.items()})
    assert len(eb) == alg.dim == len(keys)

    def phi(el):
        out = DiagramElement(n, tau)
        for k, c in el.items():
            out = out + c * imgs[k]
        return out

    for a in range(alg.dim):
        for b in range(alg.dim):
            assert phi(alg.product(a, b)) == imgs[a] * imgs[b]


@pytest.mark.parametrize("spec,dim", DIMS[:6], ids=str)
def test_star_is_an_anti_involution(spec, dim):
    alg = build_algebra(build_group(spec))
    assert star_check(alg)


@pytest.mark.parametrize("m", [3, 4])
@pytest.mark.parametrize("lam", [Fraction(2), Fraction(-3, 5)])
def test_rescaling_all_parameters(m, lam):
    alg = build_algebra(build_group("dihedral", m=m))
    assert rescale_check(alg, lam)


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_generic_parameters_are_semisimple(m):
    rep = semisimplicity_report(build_algebra(build_group("dihedral", m=m)))
    assert rep["radical_dim"] == 0


@pytest.mark.parametrize("m", [3, 5])
def test_loop_value_one_is_degenerate(m):
    G = build_group("dihedral", m=m)
    rep = semisimplicity_report(build_algebra(G, Params.uniform(G, 1, 1)))
    assert rep["radical_dim"] > 0
    alg = build_algebra(G, Params.uniform(G, 1, 1))
    for v in rep["radical_basis"][:3]:
        x = {k: c for k, c in enumerate(v) if c}
        assert in_trace_radical(alg, x)


def test_radical_membership_is_not_vacuous():
    alg = build_algebra(build_group("dihedral", m=4))
    assert not in_trace_radical(alg, alg.e(0))
    assert in_trace_radical(alg, {})


@pytest.mark.parametrize("m,dim", [(4, 24), (6, 48)])
def test_hat_variant_degenerates(m, dim):
    G = build_group("dihedral", m=m)
    alg = build_algebra(G, variant="hat")
    assert alg.dim == dim
    for i in range(m):
        for j in range(m):
            if i != j and not G.r_set(i, j):
                assert in_trace_radical(alg, alg.mul(alg.e(i), alg.e(j)))


def test_param_document_round_trip_and_validation():
    G = build_group("dihedral", m=4)
    p = Params.generic(G)
    assert Params.from_doc(G, p.to_doc(G)) == p
    with pytest.raises(ValueError):
        Params.from_doc(G, {"mu": {"nope": "1"}})
    with pytest.raises(ValueError):
        Params.from_doc(G, {"m": {"H9": "1"}})


def test_generic_parameters_keep_inverse_pairs_equal():
    G = build_group("cyclotomic", m=3, n=2)
    assert Params.generic(G).star_compatible(G)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_associativity_on_random_elements(data):
    alg = build_algebra(build_group("dihedral", m=5))
    coef = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    def elem():
        ks = data.draw(st.lists(st.integers(0, alg.dim - 1), min_size=1, max_size=4))
        return {k: data.draw(coef) for k in ks}

    x, y, z = elem(), elem(), elem()
    assert alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))


def test_export_is_complete():
    alg = build_algebra(build_group("dihedral", m=3))
    doc = export_structure_constants(alg)
    assert len(doc["basis"]) == 15
    assert doc["variant"] == "standard"

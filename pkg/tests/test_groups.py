from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genbrauer.groups import GroupSpec, build_group, expected_order

SPECS = [
    dict(family="dihedral", m=3),
    dict(family="dihedral", m=4),
    dict(family="dihedral", m=6),
    dict(family="symmetric", n=3),
    dict(family="symmetric", n=4),
    dict(family="cyclotomic", m=2, n=2),
    dict(family="cyclotomic", m=3, n=2),
]


def hyperplane_count(spec: dict) -> int:
    f = spec["family"]
    if f == "dihedral":
        return spec["m"]
    n = spec["n"]
    if f == "symmetric":
        return n * (n - 1) // 2
    return n + spec["m"] * n * (n - 1) // 2


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_order_and_hyperplanes(spec):
    G = build_group(spec)
    order = {"dihedral": lambda: 2 * spec["m"], "symmetric": lambda: math.factorial(spec["n"])}.get(
        spec["family"], lambda: spec["m"] ** spec["n"] * math.factorial(spec["n"])
    )()
    assert G.order == order == expected_order(GroupSpec.from_doc(spec))
    assert len(G.hyperplanes) == hyperplane_count(spec)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_words_evaluate_back(spec):
    G = build_group(spec)
    assert len(G.closure(G.generators)) == G.order
    for g in range(G.order):
        assert G.eval_word(G.word(g)) == g


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_reflections_fix_their_hyperplane(spec):
    G = build_group(spec)
    for s in G.reflections:
        assert G.act(s, G.fixed_hyperplane[s]) == G.fixed_hyperplane[s]


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_r_set_moves_second_to_first(spec):
    G = build_group(spec)
    nh = len(G.hyperplanes)
    for i in range(nh):
        for j in range(nh):
            if i == j:
                continue
            for s in G.r_set(i, j):
                assert G.act(s, j) == i


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_edges_partition_pairs(spec):
    G = build_group(spec)
    nh = len(G.hyperplanes)
    seen = set()
    for edge in G.edges:
        assert len(edge) >= 2
        for a in edge:
            for b in edge:
                if a < b:
                    assert (a, b) not in seen
                    seen.add((a, b))
    assert len(seen) == nh * (nh - 1) // 2


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(SPECS), st.data())
def test_action_is_a_group_action(spec, data):
    G = build_group(spec)
    g = data.draw(st.integers(0, G.order - 1))
    h = data.draw(st.integers(0, G.order - 1))
    i = data.draw(st.integers(0, len(G.hyperplanes) - 1))
    assert G.act(G.mul(g, h), i) == G.act(g, G.act(h, i))
    assert G.act(G.inv[g], G.act(g, i)) == i


def test_bad_specs_rejected():
    with pytest.raises(ValueError):
        GroupSpec("dihedral", m=1)
    with pytest.raises(ValueError):
        GroupSpec("quaternion", m=2)

from __future__ import annotations

from fractions import Fraction

import pytest

from genbrauer.gbrauer import Params, build_algebra
from genbrauer.groups import build_group
from genbrauer.presentations import (
    GeneratorAssignment,
    canonical_assignment,
    check_assignment,
    check_generation,
    conjugate_e_family,
    coxeter_presentation,
    diagram_check,
    full_check,
    cyclotomic_conjugators,
    literal_exponent_lands_on,
    presentation_for,
    classical_presentation,
    type_a_comparison,
)

SPECS = [dict(family="dihedral", m=m) for m in (3, 4, 5, 6)] + [
    dict(family="symmetric", n=3),
    dict(family="cyclotomic", m=2, n=2),
    dict(family="cyclotomic", m=3, n=2),
]


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_presentation_matches_algebra_both_ways(spec):
    alg = build_algebra(build_group(spec))
    rep = full_check(alg)
    assert rep["forward_violations"] == []
    assert rep["generates"]
    assert rep["conjugates_consistent"], rep["conjugate_conflicts"]
    assert rep["reverse_violations"] == []
    assert rep["round_trip_failures"] == []


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_coxeter_presentation_for_dihedral(m):
    alg = build_algebra(build_group("dihedral", m=m))
    assert full_check(alg, "coxeter")["ok"]


def test_three_coordinate_cyclotomic_case():
    alg = build_algebra(build_group("cyclotomic", m=2, n=3), certify=False)
    assert full_check(alg)["ok"]


@pytest.mark.parametrize("m", [4, 6])
def test_uncorrected_even_relations_fail(m):
    alg = build_algebra(build_group("dihedral", m=m))
    P = presentation_for(alg, literal=True)
    bad = check_assignment(P, canonical_assignment(alg, P), alg)
    assert "E1 sandwich i=1" in bad
    assert f"E0 sandwich i={m // 2}" in bad


@pytest.mark.parametrize("m", [3, 5])
def test_uncorrected_odd_relations_hold(m):
    alg = build_algebra(build_group("dihedral", m=m))
    P = presentation_for(alg, literal=True)
    assert check_assignment(P, canonical_assignment(alg, P), alg) == []


@pytest.mark.parametrize("m", [2, 3])
def test_uncorrected_cyclotomic_sandwich_relations_fail(m):
    alg = build_algebra(build_group("cyclotomic", m=m, n=2))
    P = presentation_for(alg, literal=True)
    bad = check_assignment(P, canonical_assignment(alg, P), alg)
    assert bad and all(b.startswith("sandwich") for b in bad)


def test_type_a_relation_lists_agree():
    G = build_group("symmetric", n=3)
    tau = Fraction(7, 3)
    alg = build_algebra(G, Params.uniform(G, 1, tau))
    cmp_ = type_a_comparison(alg)
    assert cmp_["equal"]
    # the table omits the right absorption e_i s_i = e_i; only the reversal closure agrees
    assert cmp_["raw_only_coxeter"] > 0
    assert diagram_check(coxeter_presentation(alg), 3, tau) == []
    assert diagram_check(classical_presentation(3, tau), 3, tau) == []


def test_type_a_lists_differ_at_four_strands():
    # far e_i e_j commutation is absent from the table at n = 4
    G = build_group("symmetric", n=4)
    alg = build_algebra(G, Params.uniform(G, 1, Fraction(7, 3)), certify=False)
    assert not type_a_comparison(alg)["equal"]


def test_pseudo_reflection_exponent_convention():
    G = build_group("cyclotomic", m=3, n=3)
    for a in range(3):
        assert G.hyperplanes[literal_exponent_lands_on(G, 1, 3, a)] == (1, 3, (-a) % 3)
    words = cyclotomic_conjugators(G)
    assert len(words) == len(G.hyperplanes)


def test_zero_e_images_pass_relations_but_do_not_generate():
    alg = build_algebra(build_group("dihedral", m=3))
    P = presentation_for(alg)
    asg = canonical_assignment(alg, P)
    zero = GeneratorAssignment({**asg.images, "E0": {}, "E1": {}}, asg.group_names, asg.e_names)
    assert check_assignment(P, zero, alg) == []
    assert not check_generation(zero, alg)


def test_wrong_image_is_caught():
    alg = build_algebra(build_group("dihedral", m=4))
    P = presentation_for(alg)
    asg = canonical_assignment(alg, P)
    wrong = GeneratorAssignment({**asg.images, "E0": asg.images["E1"], "E1": asg.images["E0"]}, asg.group_names, asg.e_names)
    assert check_assignment(P, wrong, alg) != []


def test_conjugates_detect_inconsistent_images():
    alg = build_algebra(build_group("dihedral", m=3))
    P = presentation_for(alg)
    asg = canonical_assignment(alg, P)
    # E0 + S1 is not centralized by S0, so conjugators differing by S0 disagree
    broken = GeneratorAssignment({**asg.images, "E0": alg.add(asg.images["E0"], asg.images["S1"])}, asg.group_names, asg.e_names)
    assert not conjugate_e_family(alg, broken).consistent

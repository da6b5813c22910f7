"""Acceptance criteria, one test each.  Each test records a PASS/FAIL line with its
runtime; the lines are printed in the terminal summary (or directly when this
file is run as a script).  Algebra caches are cleared first so every runtime
includes construction."""

from __future__ import annotations

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from genbrauer import gbrauer
from genbrauer.cellular import extend_cell_datum, verify_cellular
from genbrauer.connections import (
    brauer_connection,
    brauer_phi,
    check_flat,
    check_invariance,
    cherednik_connection,
    default_phi,
    lk_connection,
    lk_phi,
    rho_connection,
    rho_phi,
)
from genbrauer.diagrams import dimension, enumerate_diagrams, verify_elementary_identities
from genbrauer.exactlinalg import det
from genbrauer.gbrauer import Params, build_algebra, in_trace_radical, semisimplicity_report
from genbrauer.groups import build_group, dihedral_reflection
from genbrauer.monodromy import n2_report, n3_report
from genbrauer.presentations import full_check, type_a_comparison
from genbrauer.reps import (
    burnside_dimension,
    dihedral_irreducibles,
    dihedral_k_reps,
    dihedral_kr_split,
    known_representations,
    lk_alpha,
    lk_representation,
    verify_representation,
    wedderburn_lower_bound,
)

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

DIHEDRAL = [3, 5, 4, 6]
FLAT_GROUPS = [dict(family="dihedral", m=m) for m in (3, 4, 5, 6)] + [
    dict(family="symmetric", n=3),
    dict(family="cyclotomic", m=2, n=2),
]


class Criterion:
    def __init__(self, number: int, title: str, limit: float) -> None:
        self.number, self.title, self.limit = number, title, limit
        self.failures: list[str] = []
        self.notes: list[str] = []

    def __enter__(self) -> "Criterion":
        gbrauer._ALG_CACHE.clear()
        self.start = time.perf_counter()
        return self

    def check(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def __exit__(self, exc_type, exc, tb) -> bool:
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"error: {exc!r}")
        if elapsed >= self.limit:
            self.failures.append(f"runtime {elapsed:.1f}s >= {self.limit:.0f}s")
        status = "PASS" if not self.failures else "FAIL"
        detail = "; ".join(self.notes + self.failures)
        line = f"criterion {self.number}: {status} {self.title} [{elapsed:.2f}s < {self.limit:.0f}s] {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
        if exc is None:
            assert not self.failures, line
        return False


def test_criterion_01_diagram_algebra():
    with Criterion(1, "diagram dimensions and elementary identities", 5) as c:
        dims = [sum(1 for _ in enumerate_diagrams(n)) for n in (2, 3, 4)]
        c.check(dims == [3, 15, 105] == [dimension(n) for n in (2, 3, 4)], f"dims {dims}")
        fails = verify_elementary_identities(4, Fraction(7, 3))
        c.check(fails == [], f"identities {fails[:3]}")
        c.note(f"dims {dims}")


def test_criterion_02_flatness():
    with Criterion(2, "flatness of every connection, perturbation detected", 30) as c:
        tau = Fraction(7, 3)
        for n in (3, 4):
            conn = brauer_connection(n, tau)
            c.check(check_flat(conn) == [] and check_invariance(conn, brauer_phi(n, tau)) == [], f"brauer n={n}")
        nreps = 0
        for spec in FLAT_GROUPS:
            alg = build_algebra(build_group(spec))
            for builder in (cherednik_connection, lk_connection):
                conn = builder(alg)
                c.check(check_flat(conn) == [], f"{conn.kind} {spec}")
                c.check(check_invariance(conn, default_phi(conn, alg=alg)) == [], f"{conn.kind} invariance {spec}")
            for rep in known_representations(alg, regular=False):
                if verify_representation(alg, rep):
                    c.check(False, f"{rep.name} unverified on {spec}")
                    continue
                conn = rho_connection(alg, rep)
                c.check(check_flat(conn) == [] and check_invariance(conn, rho_phi(rep)) == [], f"rho {rep.name} {spec}")
                nreps += 1
            alpha = [list(r) for r in lk_alpha(alg.group, alg.params)]
            alpha[0][1] += 1
            c.check(check_flat(lk_connection(alg, alpha)) != [], f"perturbed alpha still flat on {spec}")
        c.note(f"{nreps} representations")


def test_criterion_03_dimensions_and_associativity():
    with Criterion(3, "dihedral dimensions with full associativity sweep", 120) as c:
        dims = []
        for m in DIHEDRAL:
            alg = build_algebra(build_group("dihedral", m=m), certify=True)
            c.check(alg.associativity_witness() is None, f"assoc I2({m})")
            dims.append(alg.dim)
        c.check(dims == [15, 35, 24, 48], f"dims {dims}")
        c.note(f"dims {dims}")


def test_criterion_04_semisimplicity():
    with Criterion(4, "radical zero at generic parameters, degeneration at loop value one", 120) as c:
        for m in DIHEDRAL:
            alg = build_algebra(build_group("dihedral", m=m))
            c.check(semisimplicity_report(alg)["radical_dim"] == 0, f"radical I2({m})")
            if m % 2 == 0:
                _, _, M0, M1 = dihedral_kr_split(alg)
                _, _, A0, A1 = dihedral_k_reps(alg)
                dets = [det(M) for M in (M0, M1, A0, A1)]
                c.check(all(d != 0 for d in dets), f"determinants I2({m}) {dets}")
                c.note(f"I2({m}) det M0,M1,A0,A1 = {', '.join(str(d) for d in dets)}")
        for m in (3, 5):
            G = build_group("dihedral", m=m)
            alg = build_algebra(G, Params.uniform(G, 1, 1))
            rad = semisimplicity_report(alg)["radical_dim"]
            kr = lk_representation(alg)
            b = burnside_dimension(kr)
            c.check(verify_representation(alg, kr) == [], f"Kr unverified I2({m}) at tau=1")
            c.check(rad > 0 and b < kr.dim**2, f"I2({m}) tau=1 radical {rad}, Burnside {b}")
            c.note(f"I2({m}) tau=1: radical {rad}, Kr Burnside {b} < {kr.dim ** 2}")


def test_criterion_05_wedderburn():
    with Criterion(5, "Wedderburn sum equals dimension", 60) as c:
        for m in DIHEDRAL:
            alg = build_algebra(build_group("dihedral", m=m))
            total = wedderburn_lower_bound(alg, dihedral_irreducibles(alg))
            c.check(total == alg.dim, f"I2({m}) {total} != {alg.dim}")
            c.note(f"I2({m}) {total}")


def test_criterion_06_cellularity():
    with Criterion(6, "cell axioms C1, C2, C3", 60) as c:
        for m, mode in ((3, "exact"), (4, "exact"), (6, "exact"), (5, "numeric")):
            alg = build_algebra(build_group("dihedral", m=m))
            rep = verify_cellular(alg, extend_cell_datum(alg, mode))
            c.check(rep.C1 and rep.C2 and rep.C3, f"I2({m}) {mode} {rep.witnesses[:2]}")
            if mode == "numeric":
                c.check(rep.max_residual < 1e-9, f"I2({m}) residual {rep.max_residual}")
                c.note(f"I2(5) residual {rep.max_residual:.1e}")


def test_criterion_07_presentations():
    with Criterion(7, "presentations both ways, table equality, conjugates well defined", 60) as c:
        specs = [dict(family="dihedral", m=m) for m in (3, 4, 5, 6)] + [
            dict(family="symmetric", n=3),
            dict(family="cyclotomic", m=2, n=2),
            dict(family="cyclotomic", m=3, n=2),
        ]
        for spec in specs:
            rep = full_check(build_algebra(build_group(spec)))
            c.check(rep["ok"], f"{spec}: {rep}")
        G = build_group("symmetric", n=3)
        cmp_ = type_a_comparison(build_algebra(G, Params.uniform(G, 1, Fraction(7, 3))))
        c.check(cmp_["equal"], f"type A table {cmp_}")


def test_criterion_08_monodromy():
    with Criterion(8, "monodromy closed form, cubic, braid and BMW relations", 120) as c:
        r2 = n2_report(1 / 7, 3)
        c.check(r2["transport_vs_closed_form"] < 1e-6, f"n=2 closed form {r2['transport_vs_closed_form']}")
        c.check(r2["cubic_residual"] < 1e-8, f"cubic {r2['cubic_residual']}")
        r3 = n3_report(0.1, 3)
        rho4 = r3["rho4"]
        c.check(rho4["braid_residual"] < 1e-5, f"braid {rho4['braid_residual']}")
        c.check(rho4["max_bmw_residual"] < 1e-5, f"BMW {rho4['max_bmw_residual']}")
        for name in ("rho1", "rho2", "rho3"):
            c.check(r3[name]["e_norm"] < 1e-6, f"{name} E residual {r3[name]['e_norm']}")
        c.note(
            f"closed form {r2['transport_vs_closed_form']:.1e}, cubic {r2['cubic_residual']:.1e}, "
            f"rho4 BMW {rho4['max_bmw_residual']:.1e}, max E(rho1..3) {max(r3[n]['e_norm'] for n in ('rho1', 'rho2', 'rho3')):.1e}"
        )


def _hat_conditions(G, params) -> list[str]:
    """Parameter conditions for the degeneration: mu_i +- mu_{i+l} - tau_k != 0 and tau_0 (mu_1 +- mu_0) != 0."""
    m = G.spec.m
    l = m // 2
    mu = lambda i: params.mu_of(G, dihedral_reflection(G, i % m))
    bad = []
    for i in range(m):
        for k in range(m):
            tau_k = params.m_of(G, k)
            for sign in (1, -1):
                if mu(i) + sign * mu(i + l) - tau_k == 0:
                    bad.append(f"mu_{i} {'+' if sign > 0 else '-'} mu_{i + l} - tau_{k}")
    tau0 = params.m_of(G, 0)
    for sign in (1, -1):
        if tau0 * (mu(1) + sign * mu(0)) == 0:
            bad.append("tau_0 (mu_1 +- mu_0)")
    return bad


def test_criterion_09_hat_variant():
    with Criterion(9, "hat variant: e_i e_j with empty R in the trace radical", 60) as c:
        for m in (4, 6):
            G = build_group("dihedral", m=m)
            params = Params.generic(G)
            c.check(_hat_conditions(G, params) == [], f"I2({m}) parameter conditions")
            alg = build_algebra(G, params, variant="hat")
            pairs = [(i, j) for i in range(m) for j in range(m) if i != j and not G.r_set(i, j)]
            c.check(bool(pairs), f"I2({m}) no pairs")
            for i, j in pairs:
                c.check(in_trace_radical(alg, alg.mul(alg.e(i), alg.e(j))), f"I2({m}) e{i}e{j}")
            c.check(not in_trace_radical(alg, alg.e(0)), "membership test is vacuous")
            c.note(f"I2({m}) {len(pairs)} pairs")


DETERMINISM_COMMANDS = [
    ["algebra", "build", "--family", "dihedral", "--m", "4"],
    ["conn", "flat", "--which", "rho", "--family", "dihedral", "--m", "6"],
    ["rep", "verify", "--family", "dihedral", "--m", "5"],
    ["cell", "verify", "--family", "dihedral", "--m", "5", "--mode", "numeric"],
    ["present", "verify", "--family", "cyclotomic", "--m", "3", "--n", "2"],
    ["monodromy", "run", "--n", "3", "--kappa", "1/10", "--m-param", "3"],
]


def _run_cli(args: list[str]) -> bytes:
    return subprocess.run([sys.executable, "-m", "genbrauer.cli", *args], capture_output=True, check=False).stdout


def test_criterion_10_determinism():
    with Criterion(10, "repeated runs give identical output documents", 300) as c:
        for args in DETERMINISM_COMMANDS:
            first, second = _run_cli(args), _run_cli(args)
            c.check(bool(first) and first == second, " ".join(args))
        c.note(f"{len(DETERMINISM_COMMANDS)} commands run twice in fresh processes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

"""Graham-Lehrer cell data for the dihedral generalized Brauer algebras.

The group algebra part uses a matrix-unit basis built from the irreducible
representations: for an irreducible rho with invariant symmetric form B, the
elements C_{a,b} = sum_g tr(rho(g^-1) u_a u_b^T B) g satisfy
g C_{a,b} = sum_c rho(g)_{c,a} C_{c,b} and star(C_{a,b}) = C_{b,a}.
The ideal spanned by the w e_i is split into the cells Kr (odd m) or
Kr0, Kr1, K0, K1 (even m) using explicit words.

Two modes: "exact" keeps Fraction / QuadraticSurd coefficients, "numeric"
uses floats (cosines evaluated with libm) and tolerance-based checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactlinalg import EchelonBasis, format_scalar, inverse, matmul, nullspace, trace, transpose, vec_add
from .gbrauer import Algebra, Element
from .groups import Group, dihedral_reflection
from .reps import dihedral_group_irreps

TOL = 1e-9


@dataclass
class Cell:
    name: str
    labels: tuple
    elements: dict = field(repr=False)  # (S, T) -> Element


@dataclass
class CellDatum:
    cells: list[Cell]  # highest first; the order is total
    mode: str = "exact"

    def flat(self) -> list[tuple[int, object, object, Element]]:
        return [(k, s, t, c.elements[(s, t)]) for k, c in enumerate(self.cells) for s in c.labels for t in c.labels]

    def size(self) -> int:
        return sum(len(c.labels) ** 2 for c in self.cells)

    def to_doc(self, alg: Algebra) -> dict:
        fmt = (lambda x: format_scalar(x)) if self.mode == "exact" else (lambda x: repr(float(x)))
        return {
            "mode": self.mode,
            "order": [c.name for c in self.cells],
            "cells": [
                {
                    "name": c.name,
                    "labels": [str(x) for x in c.labels],
                    "elements": [
                        {"S": str(s), "T": str(t), "coefficients": {alg.describe(k): fmt(v) for k, v in sorted(c.elements[(s, t)].items())}}
                        for s in c.labels
                        for t in c.labels
                    ],
                }
                for c in self.cells
            ],
        }


# ---------------------------------------------------------------------------
# base datum on the group algebra


def _numeric_irreps(group: Group) -> list[tuple[str, list[list[list[float]]]]]:
    m = group.spec.m
    out = [("trivial", [[[1.0]], [[1.0]]]), ("sign", [[[-1.0]], [[-1.0]]])]
    if m % 2 == 0:
        out += [("chi+-", [[[1.0]], [[-1.0]]]), ("chi-+", [[[-1.0]], [[1.0]]])]
    for k in range(1, (m - 1) // 2 + 1):
        b = 4 * math.cos(math.pi * k / m) ** 2
        out.append((f"rho{k}", [[[-1.0, 1.0], [0.0, 1.0]], [[1.0, 0.0], [b, -1.0]]]))
    return out


def _invariant_form(gens: Sequence, mode: str):
    """A nonzero symmetric B with rho(s)^T B rho(s) = B for the generators."""
    d = len(gens[0])
    idx = [(i, j) for i in range(d) for j in range(i, d)]
    rows = []
    for s in gens:
        for p in range(d):
            for q in range(d):
                # (s^T B s)_{pq} - B_{pq} as a linear form in the B entries
                row = []
                for i, j in idx:
                    coef = s[i][p] * s[j][q] + (s[j][p] * s[i][q] if i != j else 0)
                    coef -= (1 if (i, j) in ((p, q), (q, p)) else 0)
                    row.append(coef)
                rows.append(row)
    if mode == "exact":
        ns = nullspace(rows)
        if len(ns) != 1:
            raise ArithmeticError("invariant form is not unique")
        v = ns[0]
    else:
        a = np.array([[float(x) for x in r] for r in rows])
        _, sv, vt = np.linalg.svd(a)
        v = list(vt[-1])
    B = [[0] * d for _ in range(d)]
    for (i, j), x in zip(idx, v):
        B[i][j] = B[j][i] = x
    return B


def _element_mats(group: Group, gens: Sequence) -> list:
    d = len(gens[0])
    one = 1.0 if isinstance(gens[0][0][0], float) else Fraction(1)
    zero = 0.0 if isinstance(one, float) else Fraction(0)
    out = []
    for g in range(group.order):
        mtx = [[one if i == j else zero for j in range(d)] for i in range(d)]
        for k in group.word(g):
            mtx = matmul(mtx, gens[k]) if not isinstance(one, float) else _fmatmul(mtx, gens[k])
        out.append(mtx)
    return out


def _fmatmul(a, b):
    return (np.array(a, dtype=float) @ np.array(b, dtype=float)).tolist()


def base_cell_datum(alg: Algebra, mode: str = "exact") -> list[Cell]:
    """Matrix-unit cells of the dihedral group algebra, linear characters first."""
    G = alg.group
    if G.spec.family != "dihedral":
        raise ValueError("dihedral group required")
    irreps = dihedral_group_irreps(G) if mode == "exact" else _numeric_irreps(G)
    cells = []
    order = sorted(irreps, key=lambda ir: len(ir[1][0]))
    for name, gens in order:
        d = len(gens[0])
        mats = _element_mats(G, gens)
        B = _invariant_form(gens, mode)
        mul = matmul if mode == "exact" else _fmatmul
        labels = tuple(range(d))
        elements = {}
        for a in labels:
            for b in labels:
                # X = u_a u_b^T B
                X = [[(B[b][j] if i == a else 0) for j in range(d)] for i in range(d)]
                x: Element = {}
                for g in range(G.order):
                    c = sum(mul(mats[G.inv[g]], X)[i][i] for i in range(d))
                    if c:
                        x = vec_add(x, alg.group_element(g), c)
                elements[(a, b)] = x
        cells.append(Cell(name, labels, elements))
    return cells


# ---------------------------------------------------------------------------
# extension over the ideal generated by the e_i


def _alt(group: Group, last: int, length: int) -> int:
    """[... s_a s_b]_length with s_last rightmost (a, b in {0, 1})."""
    other = 1 - last
    word = [last if (length - 1 - k) % 2 == 0 else other for k in range(length)]
    return group.prod(*(dihedral_reflection(group, x) for x in word))


def _ge(alg: Algebra, g: int, h: int) -> Element:
    return alg.mul(alg.group_element(g), alg.e(h))


def _coset_pair(group: Group, src: int, dst: int) -> tuple[int, int]:
    """Representatives of the two classes in G/<s_src> sending H_src to H_dst."""
    s = dihedral_reflection(group, src)
    seen, reps = set(), []
    for g in range(group.order):
        if group.act(g, src) != dst or g in seen:
            continue
        seen |= {g, group.mul(g, s)}
        reps.append(g)
    if len(reps) != 2:
        raise ArithmeticError("expected two coset classes")
    return reps[0], reps[1]


def _odd_cells(alg: Algebra) -> list[Cell]:
    G = alg.group
    m = G.spec.m
    labels = tuple(range(m))
    elements = {}
    for i in labels:
        for j in labels:
            w = next(g for g in range(G.order) if G.act(g, j) == i)
            elements[(i, j)] = _ge(alg, w, j)
    return [Cell("Kr", labels, elements)]


def _k_cell(alg: Algebra, parity: int, coef) -> Cell:
    """K0 (parity 0) or K1 (parity 1): [... s_b s_a]_i (s_{l+parity} e_parity - e_parity) and conjugates."""
    G = alg.group
    l = G.spec.m // 2
    last = 1 if parity == 0 else 0
    words = [_alt(G, last, i) for i in range(l)]
    labels = tuple(2 * i + parity for i in range(l))
    sl = dihedral_reflection(G, l + parity)
    base = alg.add(alg.mul(alg.group_element(sl), alg.e(parity)), alg.e(parity), -coef)
    col = {labels[i]: alg.mul(alg.group_element(words[i]), base) for i in range(l)}  # C_{2i,0}
    row = {labels[i]: alg.star(col[labels[i]]) for i in range(l)}  # C_{0,2i}
    elements = {}
    for j in range(l):
        for i in range(l):
            elements[(labels[j], labels[i])] = alg.mul(alg.group_element(words[j]), row[labels[i]])
    return Cell(f"K{parity}", labels, elements)


def _kr_cell(alg: Algebra, parity: int, half) -> Cell:
    G = alg.group
    m = G.spec.m
    labels = tuple(range(parity, m, 2))
    elements = {}
    for i in labels:
        for j in labels:
            w1, w2 = _coset_pair(G, j, i)
            x = alg.add(_ge(alg, w1, j), _ge(alg, w2, j))
            elements[(i, j)] = alg.scale(half, x) if not isinstance(half, float) else {k: half * v for k, v in x.items()}
    return Cell(f"Kr{parity}", labels, elements)


def extend_cell_datum(alg: Algebra, mode: str = "exact") -> CellDatum:
    cells = base_cell_datum(alg, mode)
    if alg.group.spec.m % 2:
        cells += _odd_cells(alg)
    else:
        half = Fraction(1, 2) if mode == "exact" else 0.5
        one = Fraction(1) if mode == "exact" else 1.0
        cells += [_kr_cell(alg, 0, half), _kr_cell(alg, 1, half), _k_cell(alg, 0, one), _k_cell(alg, 1, one)]
    return CellDatum(cells, mode)


# ---------------------------------------------------------------------------
# verification


@dataclass
class CellReport:
    C1: bool
    C2: bool
    C3: bool
    size: int
    rank: int
    max_residual: float = 0.0
    witnesses: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.C1 and self.C2 and self.C3

    def to_doc(self) -> dict:
        return {
            "C1": self.C1,
            "C2": self.C2,
            "C3": self.C3,
            "size": self.size,
            "rank": self.rank,
            "max_residual": self.max_residual,
            "witnesses": self.witnesses[:10],
        }


def _dense(x: Element, dim: int, mode: str):
    if mode == "exact":
        return [x.get(k, Fraction(0)) for k in range(dim)]
    return np.array([float(x.get(k, 0.0)) for k in range(dim)])


def _generators(alg: Algebra) -> list[tuple[str, Element]]:
    G = alg.group
    out = [(n, alg.group_element(g)) for n, g in zip(G.generator_names(), G.generators)]
    out += [(f"e[{G.hyperplane_label(h)}]", alg.e(h)) for h in range(len(G.hyperplanes))]
    return out


def verify_cellular(alg: Algebra, datum: CellDatum) -> CellReport:
    mode, dim = datum.mode, alg.dim
    flat = datum.flat()
    witnesses: list[str] = []
    resid = 0.0

    # (C1) the cell elements form a basis
    if mode == "exact":
        eb = EchelonBasis()
        for _, _, _, x in flat:
            eb.add(dict(x))
        rnk = len(eb)
    else:
        M = np.array([_dense(x, dim, mode) for _, _, _, x in flat]) if flat else np.zeros((0, dim))
        rnk = int(np.linalg.matrix_rank(M, tol=TOL)) if flat else 0
    c1 = rnk == dim and len(flat) == dim
    if not c1:
        witnesses.append(f"C1: {len(flat)} elements of rank {rnk}, algebra dimension {dim}")

    # (C2) star swaps S and T
    c2 = True
    for k, s, t, x in flat:
        y = alg.star(x)
        target = datum.cells[k].elements[(t, s)]
        diff = vec_add(y, target, -1)
        if mode == "exact":
            bad = bool(diff)
        else:
            r = max((abs(float(v)) for v in diff.values()), default=0.0)
            resid = max(resid, r)
            bad = r > TOL
        if bad:
            c2 = False
            witnesses.append(f"C2: star({datum.cells[k].name}[{s},{t}])")

    if not c1:
        return CellReport(c1, c2, False, len(flat), rnk, resid, witnesses)

    # coordinates in the cell basis
    if mode == "exact":
        inv = inverse(transpose([_dense(x, dim, mode) for _, _, _, x in flat]))
        coords = lambda v: [sum((row[j] * v[j] for j in range(dim) if v[j]), Fraction(0)) for row in inv]
    else:
        inv = np.linalg.inv(np.array([_dense(x, dim, mode) for _, _, _, x in flat]).T)
        coords = lambda v: inv @ v
    pos = {(k, s, t): n for n, (k, s, t, _) in enumerate(flat)}

    # (C3) a C_{S,T} = sum_{S'} r_a(S', S) C_{S',T} + lower cells
    c3 = True
    for gname, a in _generators(alg):
        for k, cell in enumerate(datum.cells):
            r_table: dict = {}
            for s in cell.labels:
                for t in cell.labels:
                    v = coords(_dense(alg.mul(a, cell.elements[(s, t)]), dim, mode))
                    for n, (k2, s2, t2, _) in enumerate(flat):
                        c = v[n]
                        size = abs(float(c)) if mode == "numeric" else (1.0 if c else 0.0)
                        if k2 < k or (k2 == k and t2 != t):
                            if size > (TOL if mode == "numeric" else 0):
                                c3 = False
                                resid = max(resid, size) if mode == "numeric" else resid
                                witnesses.append(f"C3: {gname} * {cell.name}[{s},{t}] hits {datum.cells[k2].name}[{s2},{t2}]")
                        elif k2 == k:
                            key = (s2, s)
                            if key in r_table:
                                diff = abs(float(r_table[key] - c)) if mode == "numeric" else (r_table[key] != c)
                                if mode == "numeric":
                                    resid = max(resid, diff)
                                    diff = diff > TOL
                                if diff:
                                    c3 = False
                                    witnesses.append(f"C3: {gname} * {cell.name}: coefficient r({s2},{s}) depends on T")
                            else:
                                r_table[key] = c
    return CellReport(c1, c2, c3, len(flat), rnk, resid, witnesses)


def swapped(datum: CellDatum, a: tuple, b: tuple) -> CellDatum:
    """Copy of the datum with two cell elements exchanged ((cell index, S, T) each)."""
    cells = [Cell(c.name, c.labels, dict(c.elements)) for c in datum.cells]
    (ka, sa, ta), (kb, sb, tb) = a, b
    x, y = cells[ka].elements[(sa, ta)], cells[kb].elements[(sb, tb)]
    cells[ka].elements[(sa, ta)], cells[kb].elements[(sb, tb)] = y, x
    return CellDatum(cells, datum.mode)


def cell_module_dimensions(datum: CellDatum) -> list[int]:
    return [len(c.labels) for c in datum.cells]

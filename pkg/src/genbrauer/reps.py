"""Matrix representations of the generalized Brauer algebras.

A representation stores one matrix per group generator and one per hyperplane
(the image of e_i).  Scalars are Fractions or exact ``QuadraticSurd`` values, so
every check below is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlinalg import (
    Matrix,
    det,
    format_scalar,
    identity,
    matadd,
    matmul,
    scalar_mul,
    span_closure,
    trace,
    two_cos,
    zeros,
)
from .gbrauer import Algebra, Element, Params, build_algebra
from .groups import Group, build_group, dihedral_reflection


@dataclass(eq=False)
class Representation:
    name: str
    group: Group
    gen_mats: tuple[Matrix, ...]  # aligned with group.generators
    e_mats: tuple[Matrix, ...]  # aligned with group.hyperplanes
    _elements: dict[int, Matrix] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if len(self.gen_mats) != len(self.group.generators):
            raise ValueError("one matrix per group generator required")
        if len(self.e_mats) != len(self.group.hyperplanes):
            raise ValueError("one matrix per hyperplane required")
        d = self.dim
        for mtx in list(self.gen_mats) + list(self.e_mats):
            if len(mtx) != d or any(len(r) != d for r in mtx):
                raise ValueError(f"{self.name}: all matrices must be {d}x{d}")
        for g in self.gen_mats:
            if det(g) == 0:
                raise ValueError(f"{self.name}: group generator image is singular")

    @property
    def dim(self) -> int:
        return len(self.gen_mats[0]) if self.gen_mats else len(self.e_mats[0])

    def element_matrix(self, g: int) -> Matrix:
        """Image of a group element, via its shortest generator word."""
        if self._elements is None:
            G = self.group
            self._elements = {g2: self._word_matrix(G.word(g2)) for g2 in range(G.order)}
        return self._elements[g]

    def _word_matrix(self, word) -> Matrix:
        out = identity(self.dim)
        for k in word:
            out = matmul(out, self.gen_mats[k])
        return out

    def e_matrix(self, h: int) -> Matrix:
        return self.e_mats[h]

    def token_matrix(self, kind: str, x: int) -> Matrix:
        return self.element_matrix(x) if kind == "g" else self.e_mats[x]

    def ops_matrix(self, ops) -> Matrix:
        out = identity(self.dim)
        for kind, x in ops:
            out = matmul(out, self.token_matrix(kind, x))
        return out

    def basis_matrix(self, alg: Algebra, k: int) -> Matrix:
        g, tail = alg.basis[k]
        return self.ops_matrix([("g", g)] + [("e", t) for t in tail])

    def image(self, alg: Algebra, x: Element) -> Matrix:
        out = zeros(self.dim, self.dim)
        for k, c in x.items():
            out = matadd(out, self.basis_matrix(alg, k), c)
        return out

    def character(self, alg: Algebra) -> tuple:
        return tuple(trace(self.basis_matrix(alg, k)) for k in range(alg.dim))

    def generator_images(self) -> list[Matrix]:
        return list(self.gen_mats) + list(self.e_mats)

    def restrict(self, idx: Sequence[int], name: str) -> "Representation":
        """Restriction to the coordinate subspace ``idx`` (caller ensures invariance)."""
        sub = lambda mt: [[mt[i][j] for j in idx] for i in idx]
        return Representation(name, self.group, tuple(sub(x) for x in self.gen_mats), tuple(sub(x) for x in self.e_mats))

    def to_doc(self) -> dict:
        grid = lambda mt: [[format_scalar(x) for x in row] for row in mt]
        G = self.group
        return {
            "name": self.name,
            "dim": self.dim,
            "generators": {n: grid(mt) for n, mt in zip(G.generator_names(), self.gen_mats)},
            "e": {G.hyperplane_label(h): grid(mt) for h, mt in enumerate(self.e_mats)},
        }


def _is_zero(mt: Matrix) -> bool:
    return all(not x for row in mt for x in row)


def verify_representation(alg: Algebra, rep: Representation) -> list[str]:
    """Defining relations (and group multiplication) violated by ``rep``; empty iff a homomorphism."""
    if rep.group is not alg.group:
        raise ValueError("representation and algebra are over different groups")
    G = alg.group
    bad: list[str] = []
    for g in range(G.order):
        for k, s in enumerate(G.generators):
            if matmul(rep.element_matrix(g), rep.gen_mats[k]) != rep.element_matrix(G.mul(g, s)):
                bad.append(f"group law at {G.element_label(g)}*{G.generator_names()[k]}")
                break
        if bad:
            break
    for label, terms in alg.relation_instances():
        acc = zeros(rep.dim, rep.dim)
        for c, ops in terms:
            acc = matadd(acc, rep.ops_matrix(ops), c)
        if not _is_zero(acc):
            bad.append(label)
    return bad


def burnside_dimension(rep: Representation) -> int:
    """Dimension of the unital algebra generated by the image; equals dim^2 iff absolutely irreducible."""
    return len(span_closure(rep.generator_images()))


def is_irreducible(rep: Representation) -> bool:
    return burnside_dimension(rep) == rep.dim**2


# ---------------------------------------------------------------------------
# representations induced from the group (e_i -> 0)


def induced_representation(alg: Algebra, gen_mats: Sequence[Matrix], name: str) -> Representation:
    d = len(gen_mats[0])
    zero = zeros(d, d)
    return Representation(name, alg.group, tuple(gen_mats), tuple(zero for _ in alg.group.hyperplanes))


def regular_representation(alg: Algebra) -> Representation:
    """Left multiplication on the algebra itself (columns are images of basis vectors)."""
    G = alg.group

    def left(x) -> Matrix:
        out = zeros(alg.dim, alg.dim)
        for b in range(alg.dim):
            for r, c in alg.mul(x, alg.basis_element(b)).items():
                out[r][b] = c
        return out

    gens = tuple(left(alg.group_element(g)) for g in G.generators)
    es = tuple(left(alg.e(h)) for h in range(len(G.hyperplanes)))
    return Representation("regular", G, gens, es)


def sign_characters(group: Group) -> list[tuple[str, list[Matrix]]]:
    """Rational one-dimensional group characters: generators to +-1 (pseudo reflections of order > 2 go to 1)."""
    orders = []
    for s in group.generators:
        k, x = 1, s
        while x != group.identity:
            x, k = group.mul(x, s), k + 1
        orders.append(k)
    out = []
    seen = set()
    for signs in ((1,) * len(orders), (-1,) * len(orders)):
        vals = tuple(sv if o == 2 else 1 for sv, o in zip(signs, orders))
        if vals not in seen:
            seen.add(vals)
            out.append(("trivial" if signs[0] == 1 else "sign", [[[Fraction(v)]] for v in vals]))
    return out


def dihedral_group_irreps(group: Group) -> list[tuple[str, list[Matrix]]]:
    """All complex irreducible representations of I2(m), on the generators s0, s1."""
    if group.spec.family != "dihedral":
        raise ValueError("dihedral group required")
    m = group.spec.m
    one, neg = [[Fraction(1)]], [[Fraction(-1)]]
    out = [("trivial", [one, one]), ("sign", [neg, neg])]
    if m % 2 == 0:
        out += [("chi+-", [one, neg]), ("chi-+", [neg, one])]
    for k in range(1, (m - 1) // 2 + 1):
        b = 2 + two_cos(k, m)  # = 4 cos^2(pi k / m)
        s0 = [[Fraction(-1), Fraction(1)], [Fraction(0), Fraction(1)]]
        s1 = [[Fraction(1), Fraction(0)], [b, Fraction(-1)]]
        out.append((f"rho{k}", [s0, s1]))
    return out


def dihedral_induced_irreps(alg: Algebra) -> list[Representation]:
    return [induced_representation(alg, mats, name) for name, mats in dihedral_group_irreps(alg.group)]


# ---------------------------------------------------------------------------
# the generalized Lawrence-Krammer representation


@dataclass(frozen=True)
class LKData:
    alpha: tuple[tuple[Fraction, ...], ...]  # alpha[i][j], diagonal holds m_i
    iota: tuple[Matrix, ...]  # permutation matrices of the generators


def lk_alpha(group: Group, params: Params) -> list[list[Fraction]]:
    """alpha[i][j] = sum of mu_s over s with s(H_j) = H_i; alpha[i][i] = m_i."""
    nh = len(group.hyperplanes)
    out = [[Fraction(0)] * nh for _ in range(nh)]
    for i in range(nh):
        for j in range(nh):
            if i == j:
                out[i][i] = params.m_of(group, i)
            else:
                out[i][j] = sum((params.mu_of(group, s) for s in group.r_set(i, j)), Fraction(0))
    return out


def permutation_matrix(group: Group, g: int) -> Matrix:
    nh = len(group.hyperplanes)
    out = zeros(nh, nh)
    for h in range(nh):
        out[group.act(g, h)][h] = Fraction(1)
    return out


def projector_matrices(alpha: Sequence[Sequence]) -> list[Matrix]:
    """p_i with p_i(v_j) = alpha[i][j] v_i: row i of the matrix is alpha[i]."""
    nh = len(alpha)
    out = []
    for i in range(nh):
        p = zeros(nh, nh)
        p[i] = list(alpha[i])
        out.append(p)
    return out


def lk_data(group: Group, params: Params) -> LKData:
    alpha = lk_alpha(group, params)
    iota = tuple(permutation_matrix(group, g) for g in group.generators)
    return LKData(tuple(tuple(r) for r in alpha), iota)


def lk_representation(alg: Algebra, alpha: Sequence[Sequence] | None = None) -> Representation:
    """Generalized Lawrence-Krammer representation on the span of the hyperplanes.

    ``alpha`` overrides the coefficient table (used to demonstrate failures).
    """
    G = alg.group
    data = lk_data(G, alg.params)
    table = alpha if alpha is not None else data.alpha
    return Representation("LK", G, data.iota, tuple(projector_matrices(table)))


def marin_alpha(group: Group) -> list[list[int]]:
    """#{r : r u r = s} over reflections r, indexed by hyperplanes (symmetric groups)."""
    nh = len(group.hyperplanes)
    refl = {group.fixed_hyperplane[s]: s for s in group.reflections}
    out = [[0] * nh for _ in range(nh)]
    for i in range(nh):
        for j in range(nh):
            if i != j:
                out[i][j] = sum(1 for r in group.reflections if group.prod(r, refl[j], r) == refl[i])
    return out


# ---------------------------------------------------------------------------
# even dihedral: parity splits of the LK space and the signed space W


def _require_even_dihedral(alg: Algebra) -> int:
    spec = alg.group.spec
    if spec.family != "dihedral" or spec.m % 2:
        raise ValueError("even dihedral group required")
    return spec.m // 2


def dihedral_kr_split(alg: Algebra) -> tuple[Representation, Representation, Matrix, Matrix]:
    """(Kr0, Kr1, M0, M1): the LK space split into even and odd hyperplanes."""
    l = _require_even_dihedral(alg)
    lk = lk_representation(alg)
    even, odd = list(range(0, 2 * l, 2)), list(range(1, 2 * l, 2))
    alpha = lk_alpha(alg.group, alg.params)
    M0 = [[alpha[i][j] for j in even] for i in even]
    M1 = [[alpha[i][j] for j in odd] for i in odd]
    return lk.restrict(even, "Kr0"), lk.restrict(odd, "Kr1"), M0, M1


def _unit_direction(m: int, j: int) -> tuple[float, float]:
    return (math.cos(j * math.pi / m), math.sin(j * math.pi / m))


def _geometric_matrix(group: Group, g: int) -> list[list[float]]:
    """Real 2x2 matrix of g = r^t s^f (r: rotation by 2pi/m, s: reflection in H_0)."""
    m = group.spec.m
    t, f = group.elements[g]
    c, s = math.cos(2 * math.pi * t / m), math.sin(2 * math.pi * t / m)
    rot = [[c, -s], [s, c]]
    if f:
        return [[rot[0][0], -rot[0][1]], [rot[1][0], -rot[1][1]]]
    return rot


def direction_sign(group: Group, g: int, j: int) -> int:
    """epsilon with g(u_j) = epsilon * u_{g(j)}, u_j the unit direction along H_j."""
    m = group.spec.m
    a = _geometric_matrix(group, g)
    u = _unit_direction(m, j)
    img = (a[0][0] * u[0] + a[0][1] * u[1], a[1][0] * u[0] + a[1][1] * u[1])
    v = _unit_direction(m, group.act(g, j))
    dot = img[0] * v[0] + img[1] * v[1]
    if abs(abs(dot) - 1) > 1e-9:
        raise ArithmeticError("direction not mapped to a line direction")
    return 1 if dot > 0 else -1


def signed_permutation_matrix(group: Group, g: int) -> Matrix:
    m = group.spec.m
    out = zeros(m, m)
    for j in range(m):
        out[group.act(g, j)][j] = Fraction(direction_sign(group, g, j))
    return out


def k_alpha(alg: Algebra) -> list[list[Fraction]]:
    """Coefficients of p_a(w_b) on w_a in the signed space W."""
    G = alg.group
    m = G.spec.m
    out = [[Fraction(0)] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if a == b:
                out[a][a] = alg.params.m_of(G, a)
            else:
                out[a][b] = sum((alg.params.mu_of(G, s) * direction_sign(G, s, b) for s in G.r_set(a, b)), Fraction(0))
    return out


def dihedral_w_representation(alg: Algebra) -> Representation:
    _require_even_dihedral(alg)
    G = alg.group
    gens = tuple(signed_permutation_matrix(G, g) for g in G.generators)
    return Representation("W", G, gens, tuple(projector_matrices(k_alpha(alg))))


def dihedral_k_reps(alg: Algebra) -> tuple[Representation, Representation, Matrix, Matrix]:
    """(K0, K1, A0, A1): the signed space W split into even and odd hyperplanes."""
    l = _require_even_dihedral(alg)
    w = dihedral_w_representation(alg)
    even, odd = list(range(0, 2 * l, 2)), list(range(1, 2 * l, 2))
    alpha = k_alpha(alg)
    A0 = [[alpha[i][j] for j in even] for i in even]
    A1 = [[alpha[i][j] for j in odd] for i in odd]
    return w.restrict(even, "K0"), w.restrict(odd, "K1"), A0, A1


def dihedral_irreducibles(alg: Algebra) -> list[Representation]:
    """The full list of irreducibles used for the dimension count of B(I2(m))."""
    reps = dihedral_induced_irreps(alg)
    if alg.group.spec.m % 2:
        reps.append(lk_representation(alg))
    else:
        kr0, kr1, _, _ = dihedral_kr_split(alg)
        k0, k1, _, _ = dihedral_k_reps(alg)
        reps += [kr0, kr1, k0, k1]
    return reps


# ---------------------------------------------------------------------------
# Wedderburn counting


def known_representations(alg: Algebra, regular: bool = True) -> list[Representation]:
    """Every representation this package can write down for ``alg`` (each still to be verified)."""
    G = alg.group
    if G.spec.family == "dihedral":
        reps = dihedral_irreducibles(alg)
        if G.spec.m % 2 == 0:
            reps.append(lk_representation(alg))
    else:
        reps = [induced_representation(alg, mats, name) for name, mats in sign_characters(G)]
        reps.append(lk_representation(alg))
    if regular:
        reps.append(regular_representation(alg))
    return reps


def wedderburn_lower_bound(alg: Algebra, reps: Sequence[Representation]) -> int:
    """Sum of squared dimensions of verified, irreducible, pairwise distinct representations."""
    seen: dict[tuple, str] = {}
    total = 0
    for rep in reps:
        bad = verify_representation(alg, rep)
        if bad:
            raise ValueError(f"{rep.name} is not a representation: {bad[:3]}")
        if not is_irreducible(rep):
            raise ValueError(f"{rep.name} is reducible")
        ch = rep.character(alg)
        if ch in seen:
            raise ValueError(f"{rep.name} has the same character as {seen[ch]}")
        seen[ch] = rep.name
        total += rep.dim**2
    return total


# ---------------------------------------------------------------------------
# the four irreducibles of the classical B_3(m)


def b3_brauer_irreps(m_param) -> tuple[Algebra, list[Representation]]:
    """rho1..rho4 of B_3(m), realised over the algebra of S_3 with mu = 1 and e_i^2 = m e_i."""
    from .diagrams import rho4_matrices

    G = build_group("symmetric", n=3)
    alg = build_algebra(G, Params.uniform(G, 1, m_param))
    one, neg = [[Fraction(1)]], [[Fraction(-1)]]
    reps = [
        induced_representation(alg, [one, one], "rho1"),
        induced_representation(alg, [neg, neg], "rho2"),
        induced_representation(
            alg,
            [[[Fraction(-1), Fraction(1)], [Fraction(0), Fraction(1)]], [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(-1)]]],
            "rho3",
        ),
    ]
    mats = rho4_matrices(m_param)
    gens = tuple(mats[("s", i, i + 1)] for i in (1, 2))
    es = tuple(mats[("e",) + tuple(G.hyperplanes[h])] for h in range(len(G.hyperplanes)))
    reps.append(Representation("rho4", G, gens, es))
    return alg, reps


def scaled(rep: Representation, c) -> Representation:
    """Same group images, e-images multiplied by c (used in negative tests)."""
    return Representation(rep.name + "*", rep.group, rep.gen_mats, tuple(scalar_mul(c, x) for x in rep.e_mats))

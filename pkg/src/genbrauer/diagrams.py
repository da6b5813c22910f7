"""The classical Brauer algebra B_n(tau) as a diagram algebra.

A diagram is a perfect matching on 2n nodes: top nodes 0..n-1 and bottom
nodes n..2n-1, stored as a fixed-point-free involution ``pairs`` with
``pairs[x]`` the partner of x.  The product a*b stacks a above b (the bottom
of a is glued to the top of b); each closed loop contributes a factor tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator

from .exactlinalg import format_fraction, to_fraction


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    pairs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.pairs) // 2

    def __post_init__(self) -> None:
        p = self.pairs
        if len(p) % 2:
            raise ValueError("need an even number of nodes")
        for x, y in enumerate(p):
            if y == x or p[y] != x:
                raise ValueError("not a fixed-point-free involution")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "BrauerDiagram":
        arr = [-1] * (2 * n)
        for a, b in pairs:
            arr[a], arr[b] = b, a
        return cls(tuple(arr))

    @classmethod
    def identity(cls, n: int) -> "BrauerDiagram":
        return cls.from_pairs(n, [(i, n + i) for i in range(n)])

    def pair_list(self) -> list[tuple[int, int]]:
        """1-based node pairs: top nodes 1..n, bottom nodes n+1..2n."""
        return sorted((x + 1, y + 1) for x, y in enumerate(self.pairs) if x < y)

    def flip(self) -> "BrauerDiagram":
        """Mirror top and bottom (the anti-involution)."""
        n = self.n
        swap = lambda x: x + n if x < n else x - n
        return BrauerDiagram(tuple(swap(self.pairs[swap(x)]) for x in range(2 * n)))


def compose(a: BrauerDiagram, b: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack a above b; return the resulting diagram and the number of closed loops."""
    n = a.n
    if b.n != n:
        raise ValueError(f"size mismatch {a.n} vs {b.n}")
    # nodes: a's 0..2n-1, b's shifted by 2n; a's bottom n+i is glued to b's top i
    def partner(x: int) -> int:
        if x < 2 * n:
            return a.pairs[x]
        return b.pairs[x - 2 * n] + 2 * n

    def glued(x: int) -> int | None:
        # middle row: a-bottom (n..2n-1) glued to b-top (2n..3n-1)
        if n <= x < 2 * n:
            return x + n
        if 2 * n <= x < 3 * n:
            return x - n
        return None

    outer = list(range(n)) + list(range(3 * n, 4 * n))
    result = [-1] * (2 * n)
    relabel = lambda x: x if x < n else x - 2 * n
    visited_mid: set[int] = set()
    for start in outer:
        if result[relabel(start)] != -1:
            continue
        x = partner(start)
        while True:
            g = glued(x)
            if g is None:
                break
            visited_mid.add(x)
            visited_mid.add(g)
            x = partner(g)
        result[relabel(start)] = relabel(x)
        result[relabel(x)] = relabel(start)
    loops = 0
    for x in range(n, 3 * n):
        if x in visited_mid:
            continue
        loops += 1
        y = x
        while True:
            visited_mid.add(y)
            z = partner(y)
            visited_mid.add(z)
            y = glued(z)
            if y == x:
                break
    return BrauerDiagram(tuple(result)), loops


def enumerate_diagrams(n: int) -> Iterator[BrauerDiagram]:
    def matchings(nodes: list[int]):
        if not nodes:
            yield []
            return
        first, rest = nodes[0], nodes[1:]
        for k, other in enumerate(rest):
            for tail in matchings(rest[:k] + rest[k + 1 :]):
                yield [(first, other)] + tail

    for mt in matchings(list(range(2 * n))):
        yield BrauerDiagram.from_pairs(n, mt)


def dimension(n: int) -> int:
    if n < 1:
        raise ValueError("n >= 1")
    return sum(1 for _ in enumerate_diagrams(n))


def double_factorial_odd(n: int) -> int:
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


class DiagramElement:
    """Sparse rational combination of Brauer diagrams at a fixed tau."""

    __slots__ = ("n", "tau", "terms")

    def __init__(self, n: int, tau, terms: dict[BrauerDiagram, Fraction] | None = None) -> None:
        self.n = n
        self.tau = to_fraction(tau)
        self.terms = {d: c for d, c in (terms or {}).items() if c}

    def _same(self, other: "DiagramElement") -> None:
        if other.n != self.n or other.tau != self.tau:
            raise ValueError("elements live in different Brauer algebras")

    def __add__(self, other: "DiagramElement") -> "DiagramElement":
        self._same(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return DiagramElement(self.n, self.tau, out)

    def __neg__(self) -> "DiagramElement":
        return DiagramElement(self.n, self.tau, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "DiagramElement") -> "DiagramElement":
        return self + (-other)

    def __rmul__(self, c) -> "DiagramElement":
        c = to_fraction(c)
        return DiagramElement(self.n, self.tau, {d: c * x for d, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, DiagramElement):
            return self.__rmul__(other)
        self._same(other)
        out: dict[BrauerDiagram, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                d, loops = compose(a, b)
                out[d] = out.get(d, 0) + ca * cb * self.tau**loops
        return DiagramElement(self.n, self.tau, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, DiagramElement) and (self.n, self.tau, self.terms) == (other.n, other.tau, other.terms)

    def __hash__(self):
        return hash((self.n, self.tau, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def flip(self) -> "DiagramElement":
        return DiagramElement(self.n, self.tau, {d.flip(): c for d, c in self.terms.items()})

    def to_doc(self) -> dict:
        return {
            "n": self.n,
            "tau": format_fraction(self.tau),
            "terms": [{"pairs": d.pair_list(), "coef": format_fraction(c)} for d, c in sorted(self.terms.items())],
        }

    def __repr__(self) -> str:
        return f"DiagramElement(n={self.n}, tau={self.tau}, {len(self.terms)} terms)"


def diagram_element(d: BrauerDiagram, tau, coef=1) -> DiagramElement:
    return DiagramElement(d.n, tau, {d: to_fraction(coef)})


def one(n: int, tau) -> DiagramElement:
    return diagram_element(BrauerDiagram.identity(n), tau)


def s_elem(i: int, j: int, n: int, tau) -> DiagramElement:
    """Transposition of strands i and j (1-based)."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("need distinct strands in 1..n")
    perm = list(range(n))
    perm[i - 1], perm[j - 1] = j - 1, i - 1
    return diagram_element(BrauerDiagram.from_pairs(n, [(k, n + perm[k]) for k in range(n)]), tau)


def e_elem(i: int, j: int, n: int, tau) -> DiagramElement:
    """Bar diagram: i joined to j on top and on bottom, identity elsewhere."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("need distinct strands in 1..n")
    a, b = i - 1, j - 1
    pairs = [(a, b), (n + a, n + b)] + [(k, n + k) for k in range(n) if k not in (a, b)]
    return diagram_element(BrauerDiagram.from_pairs(n, pairs), tau)


def perm_elem(perm: tuple[int, ...], tau) -> DiagramElement:
    """Permutation diagram sending strand k to perm[k] (0-based images)."""
    n = len(perm)
    return diagram_element(BrauerDiagram.from_pairs(n, [(k, n + perm[k]) for k in range(n)]), tau)


# ---------------------------------------------------------------------------
# identity sweeps


def verify_elementary_identities(n: int, tau) -> list[str]:
    """Check the six elementary s/e identities on all admissible index tuples."""
    if n < 3:
        raise ValueError("n >= 3")
    s = lambda i, j: s_elem(i, j, n, tau)
    e = lambda i, j: e_elem(i, j, n, tau)
    t = to_fraction(tau)
    fails = []
    idx = range(1, n + 1)
    for i, j in permutations(idx, 2):
        if e(i, j) != e(j, i):
            fails.append(f"symmetric e{i}{j} = e{j}{i}")
        if e(i, j) * e(i, j) != t * e(i, j):
            fails.append(f"quadratic e{i}{j}^2 = tau e{i}{j}")
        for k, l in permutations(idx, 2):
            if {i, j} & {k, l}:
                continue
            if e(i, j) * s(k, l) != s(k, l) * e(i, j):
                fails.append(f"disjoint e{i}{j} s{k}{l} commute")
            if e(i, j) * e(k, l) != e(k, l) * e(i, j):
                fails.append(f"disjoint e{i}{j} e{k}{l} commute")
        for k in idx:
            if k in (i, j):
                continue
            lhs = e(i, j) * e(i, k)
            if lhs != s(j, k) * e(i, k) or lhs != e(i, j) * s(j, k):
                fails.append(f"overlap e{i}{j} e{i}{k}")
            if s(i, j) * e(j, k) != e(i, k) * s(i, j):
                fails.append(f"conjugate s{i}{j} e{j}{k}")
    return fails


def classical_relations(n: int) -> list[tuple[str, list[tuple[Fraction, tuple[str, ...]]], list[tuple[Fraction, tuple[str, ...]]]]]:
    """The B_n(tau) presentation on s1..s_{n-1}, e1..e_{n-1}, with tau as the symbol 'tau'.

    Each relation is (label, lhs, rhs) with sides given as lists of
    (coefficient, word); coefficient 'tau' is encoded by the marker word entry.
    """
    one_ = Fraction(1)
    rels = []
    S = lambda i: f"s{i}"
    E = lambda i: f"e{i}"
    for i in range(1, n - 1):
        rels.append(("braid", [(one_, (S(i), S(i + 1), S(i)))], [(one_, (S(i + 1), S(i), S(i + 1)))]))
    for i in range(2, n):
        rels.append(("s s e down", [(one_, (S(i), S(i - 1), E(i)))], [(one_, (E(i - 1), S(i), S(i - 1)))]))
    for i in range(1, n - 1):
        rels.append(("s s e up", [(one_, (S(i), S(i + 1), E(i)))], [(one_, (E(i + 1), S(i), S(i + 1)))]))
    for i, j in combinations(range(1, n), 2):
        if j - i >= 2:
            rels.append(("far s commute", [(one_, (S(i), S(j)))], [(one_, (S(j), S(i)))]))
    for i in range(1, n):
        rels.append(("involution", [(one_, (S(i), S(i)))], [(one_, ())]))
        rels.append(("s e absorb", [(one_, (S(i), E(i)))], [(one_, (E(i),))]))
    for i in range(1, n - 1):
        rels.append(("e s e up", [(one_, (E(i), S(i + 1), E(i)))], [(one_, (E(i),))]))
    for i in range(2, n):
        rels.append(("e s e down", [(one_, (E(i), S(i - 1), E(i)))], [(one_, (E(i),))]))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                rels.append(("far s e commute", [(one_, (S(i), E(j)))], [(one_, (E(j), S(i)))]))
    for i in range(1, n):
        rels.append(("e square", [(one_, (E(i), E(i)))], [(TAU, (E(i),))]))
    return rels


class _TauMarker:
    def __repr__(self) -> str:
        return "tau"


TAU = _TauMarker()


def evaluate_word(word: tuple[str, ...], n: int, tau) -> DiagramElement:
    out = one(n, tau)
    for g in word:
        i = int(g[1:])
        x = s_elem(i, i + 1, n, tau) if g[0] == "s" else e_elem(i, i + 1, n, tau)
        out = out * x
    return out


def evaluate_side(side, n: int, tau) -> DiagramElement:
    out = DiagramElement(n, tau)
    for c, w in side:
        coef = to_fraction(tau) if c is TAU else c
        out = out + coef * evaluate_word(w, n, tau)
    return out


def verify_classical_relations(n: int, tau) -> list[str]:
    """Classical B_n(tau) relations that fail in the diagram algebra."""
    fails = []
    for label, lhs, rhs in classical_relations(n):
        if evaluate_side(lhs, n, tau) != evaluate_side(rhs, n, tau):
            fails.append(f"{label}: {lhs} = {rhs}")
    return fails


def rho4_matrices(m_param) -> dict[tuple[str, int, int], list[list[Fraction]]]:
    """The three-dimensional representation of B_3(m) on v12, v23, v13.

    s_ij fixes v_ij and swaps the other two basis vectors along s_ij v_jk = v_ik;
    e_ij v_ij = m v_ij and e_ij v_jk = v_ij for the two other vectors.
    """
    m = to_fraction(m_param)
    labels = [(1, 2), (2, 3), (1, 3)]
    pos = {p: k for k, p in enumerate(labels)}
    key = lambda a, b: pos[(min(a, b), max(a, b))]
    out = {}
    for i, j in labels:
        (k,) = {1, 2, 3} - {i, j}
        s = [[Fraction(0)] * 3 for _ in range(3)]
        e = [[Fraction(0)] * 3 for _ in range(3)]
        s[key(i, j)][key(i, j)] = Fraction(1)
        s[key(i, k)][key(j, k)] = Fraction(1)
        s[key(j, k)][key(i, k)] = Fraction(1)
        e[key(i, j)][key(i, j)] = m
        e[key(i, j)][key(j, k)] = Fraction(1)
        e[key(i, j)][key(i, k)] = Fraction(1)
        out[("s", i, j)] = s
        out[("e", i, j)] = e
    return out


def rho4_module_check(m_param) -> list[str]:
    """Compare rho4 with the action of B_3(m) on the left ideal spanned by e_ij-type vectors.

    The vectors u_ij = e_ij * x, with x = s13 e12 ... are realised inside the diagram
    algebra: u_ij is the diagram with a cap on strands i,j at the top and a fixed
    bottom pattern.  Left multiplication must reproduce the rho4 matrices.
    """
    tau = to_fraction(m_param)
    n = 3
    # fix the bottom half: cap on bottom strands (1,2), strand 3 through
    def u(i: int, j: int) -> BrauerDiagram:
        (k,) = {1, 2, 3} - {i, j}
        return BrauerDiagram.from_pairs(n, [(i - 1, j - 1), (n, n + 1), (k - 1, n + 2)])

    labels = [(1, 2), (2, 3), (1, 3)]
    basis = [u(i, j) for i, j in labels]
    mats = rho4_matrices(m_param)
    fails = []
    for (kind, i, j), mat_ in mats.items():
        g = s_elem(i, j, n, tau) if kind == "s" else e_elem(i, j, n, tau)
        for col, b in enumerate(basis):
            img = g * diagram_element(b, tau)
            expect = DiagramElement(n, tau, {basis[r]: mat_[r][col] for r in range(3)})
            if img != expect:
                fails.append(f"{kind}{i}{j} on v{labels[col][0]}{labels[col][1]}")
    return fails

"""Finite pseudo reflection groups: symmetric S_n, dihedral I2(m), cyclotomic G(m,1,n).

Each group is enumerated once into integer-indexed tables (multiplication,
inverse, action on hyperplanes) so all later queries are O(1) lookups.

Encodings
---------
dihedral     (t, f) = r^t s^f, r the rotation by 2pi/m, s the reflection in the
             line at angle 0.  Hyperplane j is the line at angle j*pi/m and the
             reflection fixing it is s_j = (j, 1).
symmetric    a permutation of 0..n-1 stored as its tuple of images.
             Hyperplane (i, j), 1-based with i < j, is ker(x_i - x_j).
cyclotomic   (sigma, a) acting on coordinates by z_i -> xi^{a_i} z_{sigma^-1(i)}.
             Hyperplanes are (i,) for ker z_i and (i, j, a) with i < j for
             ker(z_i - xi^a z_j); positions are 1-based.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable

Hyperplane = Hashable

FAMILIES = ("dihedral", "symmetric", "cyclotomic")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    m: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "dihedral" and (self.m is None or self.m < 2):
            raise ValueError("dihedral needs m >= 2")
        if self.family == "symmetric" and (self.n is None or self.n < 2):
            raise ValueError("symmetric needs n >= 2")
        if self.family == "cyclotomic" and (self.m is None or self.n is None or self.m < 2 or self.n < 1):
            raise ValueError("cyclotomic needs m >= 2 and n >= 1")

    @classmethod
    def from_doc(cls, doc: dict) -> "GroupSpec":
        return cls(doc["family"], doc.get("m"), doc.get("n"))

    def to_doc(self) -> dict:
        out: dict = {"family": self.family}
        if self.m is not None:
            out["m"] = self.m
        if self.n is not None:
            out["n"] = self.n
        return out

    def __str__(self) -> str:
        if self.family == "dihedral":
            return f"I2({self.m})"
        if self.family == "symmetric":
            return f"S{self.n}"
        return f"G({self.m},1,{self.n})"


# ---------------------------------------------------------------------------
# family-specific arithmetic on encodings


def _dihedral_ops(m: int):
    def mul(g, h):
        t1, f1 = g
        t2, f2 = h
        return ((t1 + (t2 if f1 == 0 else -t2)) % m, (f1 + f2) % 2)

    def act(g, j):
        t, f = g
        return ((j if f == 0 else -j) + 2 * t) % m

    hyperplanes = list(range(m))
    reflections = [((k, 1), k) for k in range(m)]
    generators = [(0, 1), (1, 1)]
    return mul, act, (0, 0), hyperplanes, reflections, generators


def _symmetric_ops(n: int):
    def mul(p, q):
        return tuple(p[q[i]] for i in range(n))

    def act(p, h):
        i, j = p[h[0] - 1] + 1, p[h[1] - 1] + 1
        return (i, j) if i < j else (j, i)

    def transposition(i, j):
        img = list(range(n))
        img[i - 1], img[j - 1] = j - 1, i - 1
        return tuple(img)

    hyperplanes = list(combinations(range(1, n + 1), 2))
    reflections = [(transposition(i, j), (i, j)) for i, j in hyperplanes]
    generators = [transposition(i, i + 1) for i in range(1, n)]
    return mul, act, tuple(range(n)), hyperplanes, reflections, generators


def normalize_cyclotomic(i: int, j: int, a: int, m: int) -> tuple[int, int, int]:
    """H_{i,j;a} = H_{j,i;-a}; return the form with i < j."""
    return (i, j, a % m) if i < j else (j, i, (-a) % m)


def _cyclotomic_ops(m: int, n: int):
    def mul(g, h):
        sg, ag = g
        sh, ah = h
        sg_inv = [0] * n
        for i, x in enumerate(sg):
            sg_inv[x] = i
        sigma = tuple(sg[sh[i]] for i in range(n))
        a = tuple((ag[i] + ah[sg_inv[i]]) % m for i in range(n))
        return (sigma, a)

    def act(g, h):
        sigma, a = g
        if len(h) == 1:
            return (sigma[h[0] - 1] + 1,)
        i, j, b = h
        p, q = sigma[i - 1], sigma[j - 1]
        return normalize_cyclotomic(p + 1, q + 1, b + a[p] - a[q], m)

    ident = (tuple(range(n)), (0,) * n)

    def pair_reflection(i, j, a):
        sigma = list(range(n))
        sigma[i - 1], sigma[j - 1] = j - 1, i - 1
        exps = [0] * n
        exps[i - 1] = a % m
        exps[j - 1] = (-a) % m
        return (tuple(sigma), tuple(exps))

    def axis_power(i, k):
        exps = [0] * n
        exps[i - 1] = k % m
        return (tuple(range(n)), tuple(exps))

    hyperplanes: list = [(i,) for i in range(1, n + 1)]
    hyperplanes += [(i, j, a) for i, j in combinations(range(1, n + 1), 2) for a in range(m)]
    reflections = [(pair_reflection(i, j, a), (i, j, a)) for i, j in combinations(range(1, n + 1), 2) for a in range(m)]
    reflections += [(axis_power(i, k), (i,)) for i in range(1, n + 1) for k in range(1, m)]
    generators = [axis_power(1, 1)] + [pair_reflection(i, i + 1, 0) for i in range(1, n)]
    return mul, act, ident, hyperplanes, reflections, generators


# ---------------------------------------------------------------------------
# codimension-2 edges, decided combinatorially per family


def _edges_dihedral(hyperplanes):
    return [frozenset(hyperplanes)]


def _edges_symmetric(hyperplanes):
    seen: set[frozenset] = set()
    out = []
    for a, b in combinations(hyperplanes, 2):
        common = set(a) & set(b)
        if common:
            i, j, k = sorted(set(a) | set(b))
            edge = frozenset({(i, j), (j, k), (i, k)})
        else:
            edge = frozenset({a, b})
        if edge not in seen:
            seen.add(edge)
            out.append(edge)
    return out


def _edges_cyclotomic(hyperplanes, m):
    def coords(h):
        return set(h[:1]) if len(h) == 1 else {h[0], h[1]}

    def big(i, j):
        i, j = min(i, j), max(i, j)
        return frozenset([(i,), (j,)] + [(i, j, a) for a in range(m)])

    seen: set[frozenset] = set()
    out = []
    for x, y in combinations(hyperplanes, 2):
        cx, cy = coords(x), coords(y)
        if len(x) == 1 and len(y) == 1:
            edge = big(x[0], y[0])
        elif len(x) == 1 or len(y) == 1:
            ax, pr = (x, y) if len(x) == 1 else (y, x)
            edge = big(pr[0], pr[1]) if ax[0] in coords(pr) else frozenset({x, y})
        elif cx == cy:
            edge = big(x[0], x[1])
        elif cx & cy:
            # z_p = xi^b z_q and z_q = xi^c z_r give z_p = xi^(b+c) z_r
            def rel(h, p):
                # exponent e with z_p = xi^e z_other along h
                return h[2] if h[0] == p else -h[2]

            (shared,) = cx & cy
            (p,) = cx - {shared}
            (r,) = cy - {shared}
            e = rel(x, p) - rel(y, r)
            third = normalize_cyclotomic(p, r, e, m)
            edge = frozenset({x, y, third})
        else:
            edge = frozenset({x, y})
        if edge not in seen:
            seen.add(edge)
            out.append(edge)
    return out


# ---------------------------------------------------------------------------


@dataclass
class Group:
    spec: GroupSpec
    elements: list = field(repr=False)
    mul_table: list[list[int]] = field(repr=False)
    inv: list[int] = field(repr=False)
    identity: int
    hyperplanes: list = field(repr=False)
    act_table: list[list[int]] = field(repr=False)
    reflections: list[int] = field(repr=False)
    fixed_hyperplane: dict[int, int] = field(repr=False)
    generators: list[int] = field(repr=False)
    edges: list[frozenset[int]] = field(repr=False)

    def __post_init__(self) -> None:
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.hindex = {h: i for i, h in enumerate(self.hyperplanes)}
        self.edge_of: dict[tuple[int, int], int] = {}
        for k, edge in enumerate(self.edges):
            for a, b in combinations(sorted(edge), 2):
                self.edge_of[(a, b)] = k
                self.edge_of[(b, a)] = k
        self._stab: dict[int, list[int]] = {}
        self._words: dict[int, tuple[int, ...]] | None = None
        self._classes: list[list[int]] | None = None
        self._orbits: list[list[int]] | None = None
        self._rsets: dict[tuple[int, int], list[int]] = {}

    # -- basic group structure ------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, g: int, h: int) -> int:
        return self.mul_table[g][h]

    def prod(self, *gs: int) -> int:
        out = self.identity
        for g in gs:
            out = self.mul_table[out][g]
        return out

    def conj(self, w: int, g: int) -> int:
        return self.mul_table[self.mul_table[w][g]][self.inv[w]]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        out = self.identity
        for _ in range(k):
            out = self.mul_table[out][g]
        return out

    def act(self, g: int, h: int) -> int:
        return self.act_table[g][h]

    def element(self, enc) -> int:
        return self.index[enc]

    def hyperplane(self, hid) -> int:
        if self.spec.family == "cyclotomic" and len(hid) == 3:
            hid = normalize_cyclotomic(hid[0], hid[1], hid[2], self.spec.m)
        if self.spec.family == "symmetric":
            hid = tuple(sorted(hid))
        return self.hindex[hid]

    def reflection_for(self, hid) -> int:
        """The (order-2 or generating) pseudo reflection attached to a hyperplane id."""
        h = self.hyperplane(hid)
        cands = [s for s in self.reflections if self.fixed_hyperplane[s] == h]
        if self.spec.family == "cyclotomic" and len(self.hyperplanes[h]) == 1:
            # the generator s_i : z_i -> xi z_i
            i = self.hyperplanes[h][0]
            exps = [0] * self.spec.n
            exps[i - 1] = 1
            return self.index[(tuple(range(self.spec.n)), tuple(exps))]
        return cands[0]

    # -- words ------------------------------------------------------------------
    def word(self, g: int) -> tuple[int, ...]:
        """A shortest word in ``generators`` (as positions) evaluating to g."""
        if self._words is None:
            words = {self.identity: ()}
            queue = deque([self.identity])
            while queue:
                x = queue.popleft()
                for k, s in enumerate(self.generators):
                    y = self.mul_table[x][s]
                    if y not in words:
                        words[y] = words[x] + (k,)
                        queue.append(y)
            self._words = words
        return self._words[g]

    def eval_word(self, word) -> int:
        return self.prod(*(self.generators[k] for k in word))

    def alternating(self, first: int, second: int, length: int) -> int:
        """[a b a ...]_length with a = first leftmost."""
        out = self.identity
        for k in range(length):
            out = self.mul_table[out][first if k % 2 == 0 else second]
        return out

    # -- reflection data ----------------------------------------------------------
    def pointwise_stabilizer(self, h: int) -> list[int]:
        """Subgroup generated by the pseudo reflections fixing hyperplane h."""
        if h not in self._stab:
            gens = [s for s in self.reflections if self.fixed_hyperplane[s] == h]
            self._stab[h] = sorted(self.closure(gens))
        return self._stab[h]

    def closure(self, gens) -> set[int]:
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul_table[x][g]
                    if y not in out:
                        out.add(y)
                        nxt.append(y)
            frontier = nxt
        return out

    def r_set(self, i: int, j: int) -> list[int]:
        """Pseudo reflections s with s(H_j) = H_i, for i != j."""
        if i == j:
            raise ValueError("R(i,i) is not defined; use pointwise_stabilizer")
        key = (i, j)
        if key not in self._rsets:
            self._rsets[key] = [s for s in self.reflections if self.act_table[s][j] == i]
        return self._rsets[key]

    def commuting(self, i: int, j: int) -> bool:
        """True when the edge through H_i and H_j has exactly these two members."""
        return len(self.edges[self.edge_of[(i, j)]]) == 2

    def edge_containing(self, i: int, j: int) -> frozenset[int]:
        return self.edges[self.edge_of[(i, j)]]

    def reflection_classes(self) -> list[list[int]]:
        if self._classes is None:
            self._classes = _orbits(self.reflections, lambda s: [self.conj(g, s) for g in self.generators])
        return self._classes

    def hyperplane_orbits(self) -> list[list[int]]:
        if self._orbits is None:
            self._orbits = _orbits(range(len(self.hyperplanes)), lambda h: [self.act_table[g][h] for g in self.generators])
        return self._orbits

    def class_of(self, s: int) -> int:
        return next(k for k, c in enumerate(self.reflection_classes()) if s in c)

    def orbit_of(self, h: int) -> int:
        return next(k for k, o in enumerate(self.hyperplane_orbits()) if h in o)

    # -- naming -------------------------------------------------------------------
    def hyperplane_label(self, h: int) -> str:
        hid = self.hyperplanes[h]
        fam = self.spec.family
        if fam == "dihedral":
            return f"H{hid}"
        if fam == "symmetric":
            return f"H{hid[0]}{hid[1]}"
        if len(hid) == 1:
            return f"H{hid[0]}"
        return f"H{hid[0]}{hid[1]};{hid[2]}"

    def element_label(self, g: int) -> str:
        w = self.word(g)
        names = self.generator_names()
        return "1" if not w else "*".join(names[k] for k in w)

    def generator_names(self) -> list[str]:
        if self.spec.family == "dihedral":
            return ["s0", "s1"]
        if self.spec.family == "symmetric":
            return [f"s{i}" for i in range(1, self.spec.n)]
        return [f"S{i}" for i in range(self.spec.n)]

    def class_name(self, k: int) -> str:
        s = min(self.reflection_classes()[k])
        fam = self.spec.family
        if fam == "dihedral":
            rep = min(self.reflection_classes()[k], key=lambda x: self.fixed_hyperplane[x])
            return f"s{self.hyperplanes[self.fixed_hyperplane[rep]]}"
        if fam == "symmetric":
            return "transposition"
        enc = self.elements[s]
        if list(enc[0]) == list(range(self.spec.n)):
            return f"axis^{max(enc[1])}"
        return "pair"

    def class_names(self) -> list[str]:
        return [self.class_name(k) for k in range(len(self.reflection_classes()))]

    def orbit_name(self, k: int) -> str:
        return self.hyperplane_label(min(self.hyperplane_orbits()[k]))

    def orbit_names(self) -> list[str]:
        return [self.orbit_name(k) for k in range(len(self.hyperplane_orbits()))]


def _orbits(items, neighbours: Callable) -> list[list[int]]:
    seen: set = set()
    out = []
    for x in items:
        if x in seen:
            continue
        orb = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for z in neighbours(y):
                    if z not in orb:
                        orb.add(z)
                        nxt.append(z)
            frontier = nxt
        seen |= orb
        out.append(sorted(orb))
    return out


_CACHE: dict[GroupSpec, Group] = {}


def build_group(spec: GroupSpec | dict | str, m: int | None = None, n: int | None = None) -> Group:
    if isinstance(spec, dict):
        spec = GroupSpec.from_doc(spec)
    elif isinstance(spec, str):
        spec = GroupSpec(spec, m, n)
    if spec in _CACHE:
        return _CACHE[spec]
    if spec.family == "dihedral":
        mul, act, ident, hyps, refl, gens = _dihedral_ops(spec.m)
        edges_raw = _edges_dihedral(hyps)
    elif spec.family == "symmetric":
        mul, act, ident, hyps, refl, gens = _symmetric_ops(spec.n)
        edges_raw = _edges_symmetric(hyps)
    else:
        mul, act, ident, hyps, refl, gens = _cyclotomic_ops(spec.m, spec.n)
        edges_raw = _edges_cyclotomic(hyps, spec.m)

    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    elements.sort()
    index = {e: i for i, e in enumerate(elements)}
    size = len(elements)
    mul_table = [[index[mul(a, b)] for b in elements] for a in elements]
    ident_idx = index[ident]
    inv = [row.index(ident_idx) for row in mul_table]
    hindex = {h: i for i, h in enumerate(hyps)}
    act_table = [[hindex[act(g, h)] for h in hyps] for g in elements]
    reflections = sorted(index[e] for e, _ in refl)
    fixed = {index[e]: hindex[h] for e, h in refl}
    edges = [frozenset(hindex[h] for h in e) for e in edges_raw]
    group = Group(
        spec=spec,
        elements=elements,
        mul_table=mul_table,
        inv=inv,
        identity=ident_idx,
        hyperplanes=hyps,
        act_table=act_table,
        reflections=reflections,
        fixed_hyperplane=fixed,
        generators=[index[g] for g in gens],
        edges=edges,
    )
    assert size == expected_order(spec)
    _CACHE[spec] = group
    return group


def expected_order(spec: GroupSpec) -> int:
    from math import factorial

    if spec.family == "dihedral":
        return 2 * spec.m
    if spec.family == "symmetric":
        return factorial(spec.n)
    return spec.m ** spec.n * factorial(spec.n)


def dihedral_reflection(group: Group, k: int) -> int:
    """s_k, the reflection fixing the line at angle k*pi/m."""
    return group.index[(k % group.spec.m, 1)]


def dihedral_alt(group: Group, first: int, length: int) -> int:
    """[s_a s_b s_a ...]_length starting with s_first on the left (a, b in {0, 1})."""
    a = dihedral_reflection(group, first)
    b = dihedral_reflection(group, 1 - first)
    return group.alternating(a, b, length)

"""The generalized Brauer algebra B_G(Y) attached to a pseudo reflection group.

Generators are the group elements w and one e_i per reflection hyperplane,
subject to

  (1) s e_i = e_i s = e_i for every pseudo reflection s fixing H_i pointwise
  (2) e_i^2 = m_i e_i
  (3) w e_j = e_{w(j)} w
  (4) e_i e_j = e_j e_i when the edge through H_i, H_j has no third member
  (5) otherwise, if R(i,j) is nonempty, e_i e_j = (sum_{s in R(i,j)} mu_s s) e_j
  (6) otherwise e_i e_j = 0; the "hat" variant replaces this by e_i e_j = e_j e_i

where R(i,j) is the set of pseudo reflections carrying H_j to H_i.

Construction.  The candidate spanning set consists of words w e_T with T a set
of pairwise commuting hyperplanes.  Words related by absorbing a stabilizer
element (w e_T = w h e_{h^-1 T} for h fixing some H_t, t in T, pointwise) are
identified up front.  Left multiplication by every generator is then defined
by rewriting, and the subspace D of relation defects (closed under those left
multiplications) is computed exactly.  The quotient V/D is a faithful left
module isomorphic to the algebra, so the surviving words form a basis and the
structure constants are read off by acting on them.  For the dihedral groups D
turns out to be zero; the associativity sweep re-certifies the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactlinalg import EchelonBasis, SparseVec, rank, to_fraction, trace_form_radical, vec_add, vec_scale, format_fraction
from .groups import Group, GroupSpec, build_group

Element = dict  # basis index -> Fraction

GENERIC_MU = [Fraction(1), Fraction(2, 3), Fraction(5, 7), Fraction(3, 11), Fraction(13, 17), Fraction(19, 23)]
GENERIC_M = [Fraction(7, 3), Fraction(11, 5), Fraction(17, 13), Fraction(29, 19), Fraction(31, 37)]


class AssociativityError(RuntimeError):
    def __init__(self, witness: tuple[int, int, int], message: str) -> None:
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Params:
    """Parameter data: mu per reflection class and m per hyperplane orbit."""

    mu: tuple[Fraction, ...]
    m: tuple[Fraction, ...]

    @classmethod
    def generic(cls, group: Group) -> "Params":
        classes = group.reflection_classes()
        mu = []
        for k, cls_ in enumerate(classes):
            # keep mu_s = mu_{s^-1} so the anti-involution exists
            s = cls_[0]
            partner = group.class_of(group.inv[s])
            mu.append(mu[partner] if partner < k else GENERIC_MU[k % len(GENERIC_MU)])
        ms = [GENERIC_M[k % len(GENERIC_M)] for k in range(len(group.hyperplane_orbits()))]
        return cls(tuple(mu), tuple(ms))

    @classmethod
    def uniform(cls, group: Group, mu, m) -> "Params":
        return cls(
            tuple(to_fraction(mu) for _ in group.reflection_classes()),
            tuple(to_fraction(m) for _ in group.hyperplane_orbits()),
        )

    @classmethod
    def from_doc(cls, group: Group, doc: dict | None) -> "Params":
        base = cls.generic(group)
        if not doc:
            return base
        cnames, onames = group.class_names(), group.orbit_names()
        mu, ms = list(base.mu), list(base.m)
        for name, val in (doc.get("mu") or {}).items():
            if name not in cnames:
                raise ValueError(f"unknown reflection class {name!r}; expected one of {cnames}")
            mu[cnames.index(name)] = to_fraction(val)
        for name, val in (doc.get("m") or {}).items():
            if name not in onames:
                raise ValueError(f"unknown hyperplane orbit {name!r}; expected one of {onames}")
            ms[onames.index(name)] = to_fraction(val)
        return cls(tuple(mu), tuple(ms))

    def to_doc(self, group: Group) -> dict:
        return {
            "mu": {n: format_fraction(x) for n, x in zip(group.class_names(), self.mu)},
            "m": {n: format_fraction(x) for n, x in zip(group.orbit_names(), self.m)},
        }

    def scaled(self, lam) -> "Params":
        lam = to_fraction(lam)
        return Params(tuple(lam * x for x in self.mu), tuple(lam * x for x in self.m))

    def mu_of(self, group: Group, s: int) -> Fraction:
        return self.mu[group.class_of(s)]

    def m_of(self, group: Group, h: int) -> Fraction:
        return self.m[group.orbit_of(h)]

    def star_compatible(self, group: Group) -> bool:
        return all(self.mu_of(group, s) == self.mu_of(group, group.inv[s]) for s in group.reflections)


Word = tuple[int, tuple[int, ...]]  # (group element, sorted tail of hyperplanes)


@dataclass
class Algebra:
    group: Group
    params: Params
    variant: str = "standard"
    basis: list[Word] = field(default_factory=list, repr=False)

    def __post_init__(self) -> None:
        if self.variant not in ("standard", "hat"):
            raise ValueError("variant must be 'standard' or 'hat'")
        G = self.group
        self._mu = {s: self.params.mu_of(G, s) for s in G.reflections}
        self._m = [self.params.m_of(G, h) for h in range(len(G.hyperplanes))]
        self._enumerate_words()
        self._lcache: dict[tuple[str, int], dict[int, SparseVec]] = {}
        self._compute_defects()
        self._table: list[list[SparseVec | None]] = [[None] * self.dim for _ in range(self.dim)]

    # -- construction -------------------------------------------------------------
    def commutes(self, i: int, j: int) -> bool:
        G = self.group
        if G.commuting(i, j):
            return True
        return self.variant == "hat" and not G.r_set(i, j)

    def _enumerate_words(self) -> None:
        G = self.group
        nh = len(G.hyperplanes)
        tails: list[tuple[int, ...]] = [()]

        def extend(cur: tuple[int, ...], start: int) -> None:
            for h in range(start, nh):
                if all(self.commutes(h, t) for t in cur):
                    nxt = cur + (h,)
                    tails.append(nxt)
                    extend(nxt, h + 1)

        extend((), 0)
        tails.sort(key=lambda t: (len(t), t))
        self.tails = tails
        # identify words under w e_T = w h e_{h^-1 T}, h in a stabilizer of some H_t, t in T
        comp: dict[Word, int] = {}
        reps: list[Word] = []
        for T in tails:
            for g in range(G.order):
                start = (g, T)
                if start in comp:
                    continue
                cid = len(reps)
                comp[start] = cid
                frontier = [start]
                members = [start]
                while frontier:
                    nxt = []
                    for w, tail in frontier:
                        for t in tail:
                            for h in G.pointwise_stabilizer(t):
                                hinv = G.inv[h]
                                y = (G.mul(w, h), tuple(sorted(G.act(hinv, x) for x in tail)))
                                if y not in comp:
                                    comp[y] = cid
                                    members.append(y)
                                    nxt.append(y)
                    frontier = nxt
                reps.append(min(members, key=lambda x: (len(x[1]), x[1], x[0])))
        self._comp = comp
        self.words: list[Word] = reps  # candidate spanning set V

    def word_index(self, g: int, tail: Iterable[int]) -> int:
        return self._comp[(g, tuple(sorted(tail)))]

    def _insert_left(self, j: int, tail: tuple[int, ...]) -> list[tuple[Fraction, int, tuple[int, ...]]]:
        """e_j e_T as a list of (coefficient, group element x, tail T') meaning coef * x e_T'."""
        G = self.group
        if j in tail:
            return [(self._m[j], G.identity, tail)]
        for k in tail:
            if not self.commutes(j, k):
                return [(self._mu[s], s, tail) for s in G.r_set(j, k)]
        return [(Fraction(1), G.identity, tuple(sorted(tail + (j,))))]

    def _left_word(self, kind: str, x: int, w: int) -> SparseVec:
        """Left multiplication of candidate word w by a group element ('g', x) or e_x ('e', x)."""
        key = (kind, x)
        cache = self._lcache.setdefault(key, {})
        if w in cache:
            return cache[w]
        G = self.group
        h, tail = self.words[w]
        if kind == "g":
            out = {self._comp[(G.mul(x, h), tail)]: Fraction(1)}
        else:
            j = G.act(G.inv[h], x)
            out: SparseVec = {}
            for c, y, t in self._insert_left(j, tail):
                idx = self._comp[(G.mul(h, y), t)]
                out[idx] = out.get(idx, 0) + c
            out = {k: v for k, v in out.items() if v}
        cache[w] = out
        return out

    def _left(self, kind: str, x: int, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for w, c in v.items():
            out = vec_add(out, self._left_word(kind, x, w), c)
        return out

    def _apply(self, ops: Sequence[tuple[str, int]], v: SparseVec) -> SparseVec:
        """Apply a word of generators (leftmost acts last)."""
        for kind, x in reversed(ops):
            v = self._left(kind, x, v)
        return v

    def relation_instances(self) -> list[tuple[str, list[tuple[Fraction, list[tuple[str, int]]]]]]:
        """All defining relations as (label, sum of coef * word) expected to vanish."""
        G = self.group
        one = Fraction(1)
        rels = []
        nh = len(G.hyperplanes)
        for i in range(nh):
            for s in G.reflections:
                if G.fixed_hyperplane[s] == i:
                    rels.append((f"(1) s e_{i} = e_{i}", [(one, [("g", s), ("e", i)]), (-one, [("e", i)])]))
                    rels.append((f"(1) e_{i} s = e_{i}", [(one, [("e", i), ("g", s)]), (-one, [("e", i)])]))
            rels.append((f"(2) e_{i}^2", [(one, [("e", i), ("e", i)]), (-self._m[i], [("e", i)])]))
            for w in G.generators:
                rels.append((f"(3) w e_{i}", [(one, [("g", w), ("e", i)]), (-one, [("e", G.act(w, i)), ("g", w)])]))
        for i in range(nh):
            for j in range(nh):
                if i == j:
                    continue
                R = G.r_set(i, j)
                if G.commuting(i, j):
                    if i < j:
                        rels.append((f"(4) e_{i} e_{j}", [(one, [("e", i), ("e", j)]), (-one, [("e", j), ("e", i)])]))
                elif R:
                    terms = [(one, [("e", i), ("e", j)])] + [(-self._mu[s], [("g", s), ("e", j)]) for s in R]
                    rels.append((f"(5) e_{i} e_{j}", terms))
                elif self.variant == "standard":
                    rels.append((f"(6) e_{i} e_{j}", [(one, [("e", i), ("e", j)])]))
                elif i < j:
                    rels.append((f"(6') e_{i} e_{j}", [(one, [("e", i), ("e", j)]), (-one, [("e", j), ("e", i)])]))
        return rels

    def _compute_defects(self) -> None:
        G = self.group
        D = EchelonBasis()
        fresh: list[SparseVec] = []
        for _, terms in self.relation_instances():
            for w in range(len(self.words)):
                v: SparseVec = {}
                for c, ops in terms:
                    v = vec_add(v, self._apply(ops, {w: Fraction(1)}), c)
                if v:
                    r = D.add(v)
                    if r is not None:
                        fresh.append(r)
        gens = [("g", g) for g in G.generators] + [("e", i) for i in range(len(G.hyperplanes))]
        while fresh:
            nxt = []
            for v in fresh:
                for kind, x in gens:
                    r = D.add(self._left(kind, x, v))
                    if r is not None:
                        nxt.append(r)
            fresh = nxt
        self._defects = D
        pivots = set(D.pivots())
        survivors = [w for w in range(len(self.words)) if w not in pivots]
        self.basis = [self.words[w] for w in survivors]
        self._basis_pos = {w: k for k, w in enumerate(survivors)}
        self.spanning_size = len(self.words)
        self.defect_dim = len(D)

    def _to_basis(self, v: SparseVec) -> Element:
        r = self._defects.reduce(v)
        return {self._basis_pos[w]: c for w, c in r.items()}

    def _from_basis(self, x: Element) -> SparseVec:
        return {self._comp[self.basis[k]]: c for k, c in x.items()}

    # -- public element API -------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    def unit(self) -> Element:
        return self.group_element(self.group.identity)

    def group_element(self, g: int) -> Element:
        return self._to_basis({self._comp[(g, ())]: Fraction(1)})

    def e(self, h: int) -> Element:
        return self._to_basis({self._comp[(self.group.identity, (h,))]: Fraction(1)})

    def basis_element(self, k: int) -> Element:
        return {k: Fraction(1)}

    def left_generator(self, kind: str, x: int, a: Element) -> Element:
        return self._to_basis(self._left(kind, x, self._from_basis(a)))

    def product(self, a: int, b: int) -> Element:
        """Structure constants x_a x_b (memoised)."""
        cached = self._table[a][b]
        if cached is None:
            g, tail = self.basis[a]
            ops = [("g", g)] + [("e", t) for t in tail]
            cached = self._to_basis(self._apply(ops, {self._comp[self.basis[b]]: Fraction(1)}))
            self._table[a][b] = cached
        return cached

    def table(self) -> list[list[Element]]:
        return [[self.product(a, b) for b in range(self.dim)] for a in range(self.dim)]

    def mul(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for a, ca in x.items():
            for b, cb in y.items():
                out = vec_add(out, self.product(a, b), ca * cb)
        return out

    def add(self, x: Element, y: Element, scale=Fraction(1)) -> Element:
        return vec_add(x, y, to_fraction(scale))

    def scale(self, c, x: Element) -> Element:
        return vec_scale(to_fraction(c), x)

    def prod(self, *xs: Element) -> Element:
        out = self.unit()
        for x in xs:
            out = self.mul(out, x)
        return out

    def normal_form(self, tokens: Sequence[tuple[str, int]]) -> Element:
        """Evaluate a word of tokens ('g', element) / ('e', hyperplane) in the basis."""
        v = {self._comp[(self.group.identity, ())]: Fraction(1)}
        return self._to_basis(self._apply(list(tokens), v))

    def star(self, x: Element) -> Element:
        """Anti-involution w -> w^-1, e_i -> e_i."""
        if not self.params.star_compatible(self.group):
            raise ValueError("anti-involution needs mu_s = mu_{s^-1} for every pseudo reflection")
        out: Element = {}
        for k, c in x.items():
            g, tail = self.basis[k]
            tokens = [("e", t) for t in reversed(tail)] + [("g", self.group.inv[g])]
            out = vec_add(out, self.normal_form(tokens), c)
        return out

    def describe(self, k: int) -> str:
        g, tail = self.basis[k]
        G = self.group
        parts = [] if g == G.identity and tail else [G.element_label(g)]
        parts += [f"e[{G.hyperplane_label(t)}]" for t in tail]
        return "*".join(parts)

    def format_element(self, x: Element) -> dict[str, str]:
        return {self.describe(k): format_fraction(c) for k, c in sorted(x.items())}

    # -- certification --------------------------------------------------------------------
    def associativity_witness(self) -> tuple[int, int, int] | None:
        n = self.dim
        tab = self.table()
        for a in range(n):
            for b in range(n):
                ab = tab[a][b]
                for c in range(n):
                    left: Element = {}
                    for d, x in ab.items():
                        left = vec_add(left, tab[d][c], x)
                    right: Element = {}
                    for d, x in tab[b][c].items():
                        right = vec_add(right, tab[a][d], x)
                    if left != right:
                        return (a, b, c)
        return None

    def certify(self) -> None:
        w = self.associativity_witness()
        if w is not None:
            a, b, c = w
            raise AssociativityError(
                w, f"associativity fails at ({self.describe(a)}, {self.describe(b)}, {self.describe(c)})"
            )

    def relation_violations(self) -> list[str]:
        """Defining relations that fail on the unit (should be empty once built)."""
        bad = []
        one = {self._comp[(self.group.identity, ())]: Fraction(1)}
        for label, terms in self.relation_instances():
            v: SparseVec = {}
            for c, ops in terms:
                v = vec_add(v, self._apply(ops, one), c)
            if self._to_basis(v):
                bad.append(label)
        return bad


_ALG_CACHE: dict[tuple, Algebra] = {}


def build_algebra(group: Group | GroupSpec | dict, params: Params | None = None, variant: str = "standard", certify: bool = True) -> Algebra:
    if not isinstance(group, Group):
        group = build_group(group)
    params = params or Params.generic(group)
    key = (group.spec, params, variant)
    if key in _ALG_CACHE:
        alg = _ALG_CACHE[key]
    else:
        alg = Algebra(group, params, variant)
        _ALG_CACHE[key] = alg
    if certify and not getattr(alg, "_certified", False):
        alg.certify()
        alg._certified = True
    return alg


# ---------------------------------------------------------------------------
# reports


def semisimplicity_report(alg: Algebra) -> dict:
    gram, radical = trace_form_radical(alg.table(), alg.dim)
    r = rank(gram)
    return {"dim": alg.dim, "gram_rank": r, "radical_dim": alg.dim - r, "radical_basis": radical}


def in_trace_radical(alg: Algebra, x: Element) -> bool:
    """tr(L_x L_y) = 0 for every basis y."""
    tab = alg.table()
    n = alg.dim
    tvec = [sum((tab[d][c].get(c, Fraction(0)) for c in range(n)), Fraction(0)) for d in range(n)]
    for b in range(n):
        xy = alg.mul(x, {b: Fraction(1)})
        if sum((c * tvec[d] for d, c in xy.items()), Fraction(0)) != 0:
            return False
    return True


def group_embedding_check(alg: Algebra) -> bool:
    G = alg.group
    group_pos = {}
    for k, (g, tail) in enumerate(alg.basis):
        if not tail:
            group_pos[k] = g
    if len(group_pos) != G.order:
        return False

    def project(x: Element) -> dict[int, Fraction]:
        return {group_pos[k]: c for k, c in x.items() if k in group_pos}

    for a in range(alg.dim):
        for b in range(alg.dim):
            pa = project({a: Fraction(1)})
            pb = project({b: Fraction(1)})
            expect: dict[int, Fraction] = {}
            for g, c in pa.items():
                for h, d in pb.items():
                    gh = G.mul(g, h)
                    expect[gh] = expect.get(gh, 0) + c * d
            expect = {k: v for k, v in expect.items() if v}
            if project(alg.product(a, b)) != expect:
                return False
    return True


def rescale_check(alg: Algebra, lam) -> bool:
    """B(lam*mu, lam*m) -> B(mu, m), w -> w, E_i -> lam e_i, preserves structure constants."""
    lam = to_fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    other = build_algebra(alg.group, alg.params.scaled(lam), alg.variant)
    images = []
    for g, tail in other.basis:
        tokens = [("g", g)] + [("e", t) for t in tail]
        images.append(vec_scale(lam ** len(tail), alg.normal_form(tokens)))
    if rank_of_elements(alg, images) != alg.dim or other.dim != alg.dim:
        return False
    for a in range(other.dim):
        for b in range(other.dim):
            lhs = alg.mul(images[a], images[b])
            rhs: Element = {}
            for d, c in other.product(a, b).items():
                rhs = vec_add(rhs, images[d], c)
            if lhs != rhs:
                return False
    return True


def rank_of_elements(alg: Algebra, xs: Sequence[Element]) -> int:
    eb = EchelonBasis()
    for x in xs:
        eb.add(x)
    return len(eb)


def star_check(alg: Algebra) -> bool:
    """star is an involutive anti-automorphism on the basis."""
    stars = [alg.star({k: Fraction(1)}) for k in range(alg.dim)]
    for k in range(alg.dim):
        back: Element = {}
        for j, c in stars[k].items():
            back = vec_add(back, stars[j], c)
        if back != {k: Fraction(1)}:
            return False
    for a in range(alg.dim):
        for b in range(alg.dim):
            lhs: Element = {}
            for d, c in alg.product(a, b).items():
                lhs = vec_add(lhs, stars[d], c)
            if lhs != alg.mul(stars[b], stars[a]):
                return False
    return True


def export_structure_constants(alg: Algebra) -> dict:
    entries = []
    for a in range(alg.dim):
        for b in range(alg.dim):
            for c, x in sorted(alg.product(a, b).items()):
                entries.append([a, b, c, format_fraction(x)])
    return {
        "group": alg.group.spec.to_doc(),
        "params": alg.params.to_doc(alg.group),
        "variant": alg.variant,
        "basis": [alg.describe(k) for k in range(alg.dim)],
        "constants": entries,
    }

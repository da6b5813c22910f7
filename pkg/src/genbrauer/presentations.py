"""Canonical presentations by generators S_i, E_i and their comparison with the built algebras.

A presentation is a list of relations lhs = rhs between linear combinations
of words in the generator names.  Presented algebras are never built; a
presentation is compared with a built algebra B by
  * evaluating every relation under a generator assignment into B,
  * checking that the images generate B,
  * assigning every generator of B (group elements and all e_h) to words in
    the presentation's generators and checking the defining relations of B
    and the round trip through that assignment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactlinalg import EchelonBasis, format_fraction
from .gbrauer import Algebra, Element
from .groups import Group

Word = tuple[str, ...]
LinComb = list[tuple[Fraction, Word]]
ONE = Fraction(1)


@dataclass
class Relation:
    label: str
    lhs: LinComb
    rhs: LinComb

    def normalized(self) -> frozenset:
        side = lambda s: tuple(sorted((c, w) for c, w in s if c))
        return frozenset([side(self.lhs), side(self.rhs)])

    def reversed(self) -> "Relation":
        rev = lambda s: [(c, tuple(reversed(w))) for c, w in s]
        return Relation(self.label + " (reversed)", rev(self.lhs), rev(self.rhs))


@dataclass
class Presentation:
    name: str
    group_gens: list[str]
    e_gens: list[str]
    relations: list[Relation] = field(default_factory=list)

    @property
    def generators(self) -> list[str]:
        return self.group_gens + self.e_gens

    def add(self, label: str, lhs, rhs) -> None:
        self.relations.append(Relation(label, _lc(lhs), _lc(rhs)))

    def star_closure(self) -> set[frozenset]:
        """Normalized relations together with their word reversals."""
        out = set()
        for r in self.relations:
            out.add(r.normalized())
            out.add(r.reversed().normalized())
        return out

    def to_doc(self) -> dict:
        fmt = lambda s: [{"coef": format_fraction(c), "word": list(w)} for c, w in s]
        return {
            "name": self.name,
            "generators": self.generators,
            "relations": [{"label": r.label, "lhs": fmt(r.lhs), "rhs": fmt(r.rhs)} for r in self.relations],
        }


def _lc(x) -> LinComb:
    """Accept a word, a list of (coef, word), or the integer 0."""
    if isinstance(x, int) and x == 0:
        return []
    if isinstance(x, tuple):
        return [(ONE, x)]
    return [(Fraction(c), tuple(w)) for c, w in x]


def _alt(a: str, b: str, length: int) -> Word:
    """[a b a ...]_length."""
    return tuple(a if k % 2 == 0 else b for k in range(length))


def _inverse_word(w: Word, orders: dict[str, int]) -> Word:
    out: list[str] = []
    for x in reversed(w):
        out += [x] * (orders[x] - 1)
    return tuple(out)


# ---------------------------------------------------------------------------
# evaluation in a built algebra


@dataclass
class GeneratorAssignment:
    images: dict[str, Element]
    group_names: list[str] = field(default_factory=list)  # aligned with group.generators
    e_names: list[str] = field(default_factory=list)  # aligned with group.generators

    def evaluate(self, alg: Algebra, word: Word, cache: dict | None = None) -> Element:
        cache = {} if cache is None else cache
        if word in cache:
            return cache[word]
        if not word:
            out = alg.unit()
        else:
            out = alg.mul(self.evaluate(alg, word[:-1], cache), self.images[word[-1]])
        cache[word] = out
        return out

    def evaluate_lc(self, alg: Algebra, lc: LinComb, cache: dict) -> Element:
        out: Element = {}
        for c, w in lc:
            out = alg.add(out, self.evaluate(alg, w, cache), c)
        return out


def check_assignment(P: Presentation, asg: GeneratorAssignment, alg: Algebra) -> list[str]:
    """Relations of P violated by the images (empty iff the assignment extends to a homomorphism)."""
    missing = [g for g in P.generators if g not in asg.images]
    if missing:
        raise ValueError(f"no image for {missing}")
    cache: dict = {}
    bad = []
    for r in P.relations:
        if asg.evaluate_lc(alg, r.lhs, cache) != asg.evaluate_lc(alg, r.rhs, cache):
            bad.append(r.label)
    return bad


def generated_dimension(images: Sequence[Element], alg: Algebra) -> int:
    """Dimension of the unital subalgebra generated by ``images``."""
    eb = EchelonBasis()
    frontier = []
    for x in [alg.unit()]:
        if eb.add(dict(x)) is not None:
            frontier.append(x)
    while frontier:
        nxt = []
        for x in frontier:
            for g in images:
                y = alg.mul(g, x)
                if y and eb.add(dict(y)) is not None:
                    nxt.append(y)
        frontier = nxt
    return len(eb)


def check_generation(asg: GeneratorAssignment, alg: Algebra) -> bool:
    return generated_dimension(list(asg.images.values()), alg) == alg.dim


# ---------------------------------------------------------------------------
# generator-level helpers shared by the families


def _names(G: Group) -> tuple[list[str], list[str]]:
    gens = G.generator_names()
    return gens, [("E" if n[0] == "S" else "e") + n[1:] for n in gens]


def _generator_hyperplanes(G: Group) -> list[int]:
    return [G.fixed_hyperplane[s] for s in G.generators]


def _orders(G: Group, names: list[str]) -> dict[str, int]:
    out = {}
    for n, s in zip(names, G.generators):
        k, x = 1, s
        while x != G.identity:
            x, k = G.mul(x, s), k + 1
        out[n] = k
    return out


def group_word(G: Group, g: int, names: list[str] | None = None) -> Word:
    names = names or _names(G)[0]
    return tuple(names[k] for k in G.word(g))


def _word_element(G: Group, w: Word, names: list[str] | None = None) -> int:
    names = names or _names(G)[0]
    return G.prod(*(G.generators[names.index(x)] for x in w))


def canonical_assignment(alg: Algebra, P: Presentation) -> GeneratorAssignment:
    """S_i -> generator s_i, E_i -> e of the hyperplane fixed by s_i."""
    G = alg.group
    images = {}
    for name, s, h in zip(P.group_gens, G.generators, _generator_hyperplanes(G)):
        images[name] = alg.group_element(s)
    for name, h in zip(P.e_gens, _generator_hyperplanes(G)):
        images[name] = alg.e(h)
    return GeneratorAssignment(images, list(P.group_gens), list(P.e_gens))


def _mu(alg: Algebra, g: int) -> Fraction:
    return alg.params.mu_of(alg.group, g)


def _tau(alg: Algebra, h: int) -> Fraction:
    return alg.params.m_of(alg.group, h)


def _sandwich_rhs(alg: Algebra, w: int, h: int, e_name: str, names: list[str]) -> LinComb:
    """E w E = (sum_{t in R(w^-1 H, H)} mu_t w t) E for the generator E of hyperplane h, read off the defining relations."""
    G = alg.group
    src = G.act(G.inv[w], h)
    if src == h:
        raise ValueError("w must move the hyperplane")
    if G.commuting(src, h):
        raise ValueError("commuting pair: no sandwich relation")
    return [(_mu(alg, t), group_word(G, G.mul(w, t), names) + (e_name,)) for t in G.r_set(src, h)]


# ---------------------------------------------------------------------------
# dihedral presentations with generators S0, S1, E0, E1


def dihedral_presentation(alg: Algebra, literal: bool = False) -> Presentation:
    """B' for I2(m).  ``literal`` keeps the uncorrected forms of the even-case sandwich relations."""
    G = alg.group
    if G.spec.family != "dihedral":
        raise ValueError("dihedral group required")
    m = G.spec.m
    P = Presentation(f"B'({G.spec})", ["S0", "S1"], ["E0", "E1"])
    P.add("braid", _alt("S0", "S1", m), _alt("S1", "S0", m))
    P.add("S0^2", ("S0", "S0"), ())
    P.add("S1^2", ("S1", "S1"), ())
    for i in "01":
        P.add(f"S{i}E{i}", (f"S{i}", f"E{i}"), (f"E{i}",))
        P.add(f"E{i}S{i}", (f"E{i}", f"S{i}"), (f"E{i}",))
    t0, t1 = _tau(alg, 0), _tau(alg, 1)
    if m % 2:
        k = (m - 1) // 2
        mu = _mu(alg, G.reflections[0])
        P.add("E0^2", ("E0", "E0"), [(t0, ("E0",))])
        P.add("E1^2", ("E1", "E1"), [(t1, ("E1",))])
        for i in range(1, k + 1):
            P.add(f"E0 sandwich i={i}", ("E0",) + _alt("S1", "S0", 2 * i - 1) + ("E0",), [(mu, ("E0",))])
            P.add(f"E1 sandwich i={i}", ("E1",) + _alt("S0", "S1", 2 * i - 1) + ("E1",), [(mu, ("E1",))])
        P.add("transfer E0 to E1", _alt("S0", "S1", 2 * k) + ("E0",), ("E1",) + _alt("S0", "S1", 2 * k))
        return P
    k = m // 2
    c = _alt("S0", "S1", 2 * k)
    for g in range(G.order):
        w = group_word(G, g, P.group_gens)
        P.add(f"orthogonal E1 w E0, w={'.'.join(w) or '1'}", ("E1",) + w + ("E0",), 0)
        P.add(f"orthogonal E0 w E1, w={'.'.join(w) or '1'}", ("E0",) + w + ("E1",), 0)
    c_el = _word_element(G, c, P.group_gens)
    for i in range(1, k + 1):
        for e, first, second in (("E0", "S1", "S0"), ("E1", "S0", "S1")):
            if e == "E1" and literal:
                first, second = "S1", "S0"
            w = _alt(first, second, 2 * i - 1)
            r = _word_element(G, w, P.group_gens)
            h = 0 if e == "E0" else 1
            if G.act(r, h) == h and not literal:
                # at i = k the word fixes the hyperplane: E w E = tau w E
                rhs = [(_tau(alg, h), w + (e,))]
            else:
                rhs = [(_mu(alg, r), (e,)), (_mu(alg, G.mul(r, c_el)), c + (e,))]
            P.add(f"{e} sandwich i={i}", (e,) + w + (e,), rhs)
    P.add("E0 commutes", _alt("S1", "S0", 2 * k - 1) + ("E0",), ("E0",) + _alt("S1", "S0", 2 * k - 1))
    P.add("E1 commutes", _alt("S0", "S1", 2 * k - 1) + ("E1",), ("E1",) + _alt("S0", "S1", 2 * k - 1))
    P.add("E0^2", ("E0", "E0"), [(t0, ("E0",))])
    P.add("E1^2", ("E1", "E1"), [(t1, ("E1",))])
    return P


# ---------------------------------------------------------------------------
# Coxeter presentation on s_i, e_i (dihedral and symmetric groups)


def coxeter_matrix(G: Group) -> list[list[int]]:
    n = len(G.generators)
    out = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                x = G.mul(G.generators[i], G.generators[j])
                k, y = 1, x
                while y != G.identity:
                    y, k = G.mul(y, x), k + 1
                out[i][j] = k
    return out


def coxeter_presentation(alg: Algebra) -> Presentation:
    """Relations (1)-(10) on s_i, e_i for a finite Coxeter group."""
    G = alg.group
    if G.spec.family == "cyclotomic":
        raise ValueError("real reflection group required")
    s, e = _names(G)
    M = coxeter_matrix(G)
    hyp = _generator_hyperplanes(G)
    n = len(s)
    P = Presentation(f"Coxeter({G.spec})", s, e)
    for i in range(n):
        P.add("involution", (s[i], s[i]), ())
    for i in range(n):
        for j in range(n):
            if i != j:
                P.add("braid", _alt(s[i], s[j], M[i][j]), _alt(s[j], s[i], M[i][j]))
    for i in range(n):
        P.add("absorb", (s[i], e[i]), (e[i],))
        P.add("absorb", (e[i], s[i]), (e[i],))
        P.add("quadratic", (e[i], e[i]), [(_tau(alg, hyp[i]), (e[i],))])
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            mij = M[i][j]
            if mij == 2:
                P.add("commute", (s[i], e[j]), (e[j], s[i]))
                P.add("commute", (e[i], e[j]), (e[j], e[i]))
            elif mij % 2:
                k = (mij - 1) // 2
                for l in range(1, k + 1):
                    w = _alt(s[j], s[i], 2 * l - 1)
                    r = _word_element(G, w)
                    P.add("odd sandwich", (e[i],) + w + (e[i],), [(_mu(alg, r), (e[i],))])
                P.add("odd transfer", _alt(s[i], s[j], 2 * k) + (e[i],), (e[j],) + _alt(s[i], s[j], 2 * k))
            else:
                k = mij // 2
                sub = [g for g in G.closure([G.generators[i], G.generators[j]])]
                for g in sorted(sub):
                    w = _parabolic_word(G, g, i, j, s)
                    P.add("orthogonal", (e[i],) + w + (e[j],), 0)
                c = _alt(s[i], s[j], 2 * k)
                c_el = _word_element(G, c)
                for l in range(1, k + 1):
                    w = _alt(s[j], s[i], 2 * l - 1)
                    r = _word_element(G, w)
                    rp = G.mul(G.inv[c_el], r)
                    if G.act(r, hyp[i]) == hyp[i]:
                        P.add("even sandwich", (e[i],) + w + (e[i],), [(_tau(alg, hyp[i]), w + (e[i],))])
                    else:
                        P.add("even sandwich", (e[i],) + w + (e[i],), [(_mu(alg, r), (e[i],)), (_mu(alg, rp), c + (e[i],))])
                P.add("even transfer", _alt(s[i], s[j], 2 * k - 1) + (e[j],), (e[j],) + _alt(s[i], s[j], 2 * k - 1))
    return P


def _parabolic_word(G: Group, g: int, i: int, j: int, names: list[str]) -> Word:
    """Shortest word in s_i, s_j for an element of the parabolic subgroup they generate."""
    frontier = {G.identity: ()}
    seen = dict(frontier)
    while g not in seen:
        nxt = {}
        for x, w in frontier.items():
            for k in (i, j):
                y = G.mul(x, G.generators[k])
                if y not in seen and y not in nxt:
                    nxt[y] = w + (names[k],)
        seen.update(nxt)
        frontier = nxt
    return seen[g]


def classical_presentation(n: int, tau) -> Presentation:
    """The classical B_n(tau) relation table, with the same generator names."""
    from .diagrams import TAU, classical_relations

    P = Presentation(f"B_{n}(tau)", [f"s{i}" for i in range(1, n)], [f"e{i}" for i in range(1, n)])
    t = Fraction(tau)
    for label, lhs, rhs in classical_relations(n):
        conv = lambda side: [((t if c is TAU else c), w) for c, w in side]
        P.relations.append(Relation(label, conv(lhs), conv(rhs)))
    return P


def type_a_comparison(alg: Algebra) -> dict:
    """Compare the Coxeter relation list with the B_n(tau) table, both closed under reversal."""
    G = alg.group
    if G.spec.family != "symmetric":
        raise ValueError("symmetric group required")
    tau = alg.params.m[0]
    cox = coxeter_presentation(alg).star_closure()
    tab = classical_presentation(G.spec.n, tau).star_closure()
    return {
        "equal": cox == tab,
        "only_coxeter": len(cox - tab),
        "only_table": len(tab - cox),
        "raw_only_coxeter": len({r.normalized() for r in coxeter_presentation(alg).relations} - {r.normalized() for r in classical_presentation(G.spec.n, tau).relations}),
    }


def diagram_check(P: Presentation, n: int, tau) -> list[str]:
    """Evaluate a type-A presentation in the diagram algebra B_n(tau)."""
    from .diagrams import evaluate_side

    bad = []
    for r in P.relations:
        if evaluate_side(r.lhs, n, tau) != evaluate_side(r.rhs, n, tau):
            bad.append(r.label)
    return bad


# ---------------------------------------------------------------------------
# G(m,1,n) presentation on S_0..S_{n-1}, E_0..E_{n-1}


def cyclotomic_presentation(alg: Algebra, literal: bool = False) -> Presentation:
    """B' for G(m,1,n); ``literal`` keeps the uncorrected sandwich relations.

    The corrected sandwich relations read the coefficients off the defining
    relations: E w E = (sum_{t in R(w^-1 H, H)} mu_t w t) E.
    """
    G = alg.group
    if G.spec.family != "cyclotomic":
        raise ValueError("G(m,1,n) required")
    m, n = G.spec.m, G.spec.n
    S = [f"S{i}" for i in range(n)]
    E = [f"E{i}" for i in range(n)]
    P = Presentation(f"B'({G.spec})", S, E)
    hyp = _generator_hyperplanes(G)
    orders = _orders(G, S)
    P.add("S0^m", ("S0",) * m, ())
    for i in range(1, n):
        P.add(f"S{i}^2", (S[i], S[i]), ())
    P.add("S0S1S0S1", ("S0", "S1", "S0", "S1"), ("S1", "S0", "S1", "S0"))
    for i in range(n):
        for j in range(i + 2, n):
            P.add("far", (S[i], S[j]), (S[j], S[i]))
    for i in range(1, n - 1):
        P.add("braid", (S[i], S[i + 1], S[i]), (S[i + 1], S[i], S[i + 1]))
    P.add("E0^2", ("E0", "E0"), [(_tau(alg, hyp[0]), ("E0",))])
    for i in range(1, n):
        P.add(f"E{i}^2", (E[i], E[i]), [(_tau(alg, hyp[i]), (E[i],))])
    for i in range(m):
        w = ("S1",) + ("S0",) * i + ("S1",)
        P.add(f"S1 S0^{i} S1 E0", w + ("E0",), ("E0",) + w)
        w = ("S0",) * i + ("S1",) + ("S0",) * i
        P.add(f"S0^{i} S1 S0^{i} E1", w + ("E1",), ("E1",) + w)
    for i in range(2, n):
        P.add("Si E0", (S[i], "E0"), ("E0", S[i]))
    for i in range(1, n - 1):
        P.add("Si Si+1 Ei", (S[i], S[i + 1], E[i]), (E[i + 1], S[i], S[i + 1]))
    for i in range(n):
        for j in range(n):
            if abs(i - j) >= 2 and i >= 1:
                P.add("Si Ej", (S[i], E[j]), (E[j], S[i]))
    for i in range(n):
        P.add("absorb SiEi", (S[i], E[i]), (E[i],))
        P.add("absorb EiSi", (E[i], S[i]), (E[i],))
    mu_pair = _mu(alg, G.generators[1])
    for i in range(1, m):
        lhs = ("E1",) + ("S0",) * i + ("E1",)
        if literal:
            rhs = [(_mu(alg, G.power(G.generators[0], i)), ("E1",))]
        else:
            rhs = _sandwich_rhs(alg, G.power(G.generators[0], i), hyp[1], "E1", S)
        P.add(f"sandwich E1 S0^{i} E1", lhs, rhs)
    s1 = G.generators[1]
    if literal:
        terms = []
        for i in range(1, m):
            w = ("S1",) + ("S0",) * i + ("S1",) + _inverse_word(("S0",) * i, orders)
            terms.append((mu_pair, w + ("E0",)))
        P.add("sandwich E0 S1 E0", ("E0", "S1", "E0"), terms)
    else:
        P.add("sandwich E0 S1 E0", ("E0", "S1", "E0"), _sandwich_rhs(alg, s1, hyp[0], "E0", S))
    for i in range(n):
        for j in range(i + 2, n):
            P.add("far E commute", (E[i], E[j]), (E[j], E[i]))
    for i in range(1, n - 1):
        P.add(f"adjacent E{i}E{i+1}", (E[i], E[i + 1]), [(mu_pair, (S[i], S[i + 1], S[i], E[i + 1]))])
    # "for any word W": one word per group element
    for g in range(G.order):
        w = group_word(G, g, S)
        P.add(f"orthogonal E0 W E1, W={'.'.join(w) or '1'}", ("E0",) + w + ("E1",), 0)
        P.add(f"orthogonal E1 W E0, W={'.'.join(w) or '1'}", ("E1",) + w + ("E0",), 0)
    return P


# ---------------------------------------------------------------------------
# the reverse direction: every generator of B as a word in the presentation


@dataclass
class ConjugateFamily:
    """e_h -> W E W^-1 for each hyperplane h, with every alternative W checked."""

    words: dict[int, tuple[Word, str]]  # hyperplane -> (W, base E name)
    consistent: bool
    conflicts: list[str]


def _conjugate_word(W: Word, e_name: str, orders: dict[str, int]) -> Word:
    return W + (e_name,) + _inverse_word(W, orders)


def _all_conjugators(G: Group, base: int, target: int) -> list[int]:
    return [g for g in range(G.order) if G.act(g, base) == target]


def conjugate_e_family(alg: Algebra, asg: GeneratorAssignment, preferred: dict[int, tuple[Word, str]] | None = None) -> ConjugateFamily:
    """Words W E W^-1 for every e_h; checks all conjugators give the same element of B.

    ``preferred`` supplies explicit words (e.g. the closed forms for G(m,1,n));
    hyperplanes without one use a shortest word.
    """
    G = alg.group
    S, E = asg.group_names, asg.e_names
    orders = _orders(G, S)
    base_planes = _generator_hyperplanes(G)
    words: dict[int, tuple[Word, str]] = {}
    conflicts = []
    cache: dict = {}
    for h in range(len(G.hyperplanes)):
        k = next(k for k, b in enumerate(base_planes) if G.orbit_of(b) == G.orbit_of(h))
        b, e_name = base_planes[k], E[k]
        if preferred and h in preferred:
            W, e_name = preferred[h]
            b = base_planes[E.index(e_name)]
            if G.act(_word_element(G, W, S), b) != h:
                conflicts.append(f"preferred word for {G.hyperplane_label(h)} lands elsewhere")
            cands = _all_conjugators(G, b, h)
        else:
            cands = _all_conjugators(G, b, h)
            W = group_word(G, min(cands, key=lambda g: (len(G.word(g)), g)), S)
        words[h] = (W, e_name)
        ref = asg.evaluate(alg, _conjugate_word(W, e_name, orders), cache)
        for g in cands:
            alt = asg.evaluate(alg, _conjugate_word(group_word(G, g, S), e_name, orders), cache)
            if alt != ref:
                conflicts.append(f"{G.hyperplane_label(h)} via {G.element_label(g)}")
    return ConjugateFamily(words, not conflicts, conflicts)


def cyclotomic_conjugators(G: Group) -> dict[int, tuple[Word, str]]:
    """Closed-form conjugators for G(m,1,n).

    Axis i: W = S_{i-1}...S_1 from E_0.  Pair (i,j;a): W = T_j^{-a} S_{j-1}...S_{i+1}
    from E_i, with T_j = S_{j-1}...S_1 S_0 S_1...S_{j-1} (the pseudo reflection on
    coordinate j).  The exponent is -a because T_j^a sends H_{i,j;0} to H_{i,j;-a}.
    """
    m, n = G.spec.m, G.spec.n
    out: dict[int, tuple[Word, str]] = {}
    for i in range(1, n + 1):
        out[G.hyperplane((i,))] = (tuple(f"S{k}" for k in range(i - 1, 0, -1)), "E0")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            T = tuple(f"S{k}" for k in range(j - 1, 0, -1)) + ("S0",) + tuple(f"S{k}" for k in range(1, j))
            for a in range(m):
                W = T * ((-a) % m) + tuple(f"S{k}" for k in range(j - 1, i, -1))
                out[G.hyperplane((i, j, a))] = (W, f"E{i}")
    return out


def literal_exponent_lands_on(G: Group, i: int, j: int, a: int) -> int:
    """Hyperplane reached from H_{i,i+1;0} by T_j^{+a} S_{j-1}...S_{i+1} (uncorrected exponent)."""
    T = tuple(f"S{k}" for k in range(j - 1, 0, -1)) + ("S0",) + tuple(f"S{k}" for k in range(1, j))
    W = T * a + tuple(f"S{k}" for k in range(j - 1, i, -1))
    return G.act(_word_element(G, W), G.hyperplane((i, i + 1, 0)))


def dihedral_alternating_conjugators(G: Group) -> dict[int, tuple[Word, str]]:
    """E_{2i} = w E_0 w^-1 with w = [S1 S0 ...]_{2i-1}; E_{2i-1} from E_1 with w = [S1 S0 ...]_{2i-2}."""
    m = G.spec.m
    out: dict[int, tuple[Word, str]] = {}
    if m % 2:
        return out
    for i in range(1, m // 2):
        out[2 * i] = (_alt("S1", "S0", 2 * i - 1), "E0")
    for i in range(2, m // 2 + 1):
        out[2 * i - 1] = (_alt("S1", "S0", 2 * i - 2), "E1")
    return out


@dataclass
class ReverseReport:
    family: ConjugateFamily
    relation_violations: list[str]
    round_trip_failures: list[str]

    @property
    def ok(self) -> bool:
        return self.family.consistent and not self.relation_violations and not self.round_trip_failures


def reverse_check(alg: Algebra, asg: GeneratorAssignment, preferred: dict[int, tuple[Word, str]] | None = None) -> ReverseReport:
    """Assign every generator of B to a presentation word, then check B's relations and the round trip."""
    G = alg.group
    S = asg.group_names
    orders = _orders(G, S)
    fam = conjugate_e_family(alg, asg, preferred)
    cache: dict = {}
    g_img = {g: asg.evaluate(alg, group_word(G, g, S), cache) for g in range(G.order)}
    e_img = {h: asg.evaluate(alg, _conjugate_word(W, en, orders), cache) for h, (W, en) in fam.words.items()}
    bad = []
    for label, terms in alg.relation_instances():
        acc: Element = {}
        for c, ops in terms:
            x = alg.unit()
            for kind, v in ops:
                x = alg.mul(x, g_img[v] if kind == "g" else e_img[v])
            acc = alg.add(acc, x, c)
        if acc:
            bad.append(label)
    trip = []
    for g in range(G.order):
        if g_img[g] != alg.group_element(g):
            trip.append(G.element_label(g))
    for h in range(len(G.hyperplanes)):
        if e_img[h] != alg.e(h):
            trip.append(G.hyperplane_label(h))
    return ReverseReport(fam, bad, trip)


def presentation_for(alg: Algebra, kind: str = "auto", literal: bool = False) -> Presentation:
    fam = alg.group.spec.family
    if kind == "coxeter" or (kind == "auto" and fam == "symmetric"):
        return coxeter_presentation(alg)
    if fam == "dihedral":
        return dihedral_presentation(alg, literal)
    if fam == "cyclotomic":
        return cyclotomic_presentation(alg, literal)
    raise ValueError(f"no presentation for {fam}")


def preferred_words(alg: Algebra) -> dict[int, tuple[Word, str]] | None:
    fam = alg.group.spec.family
    if fam == "cyclotomic":
        return cyclotomic_conjugators(alg.group)
    if fam == "dihedral":
        return dihedral_alternating_conjugators(alg.group)
    return None


def full_check(alg: Algebra, kind: str = "auto") -> dict:
    P = presentation_for(alg, kind)
    asg = canonical_assignment(alg, P)
    forward = check_assignment(P, asg, alg)
    gen = check_generation(asg, alg)
    rev = reverse_check(alg, asg, preferred_words(alg) if kind != "coxeter" else None)
    return {
        "presentation": P.name,
        "relations": len(P.relations),
        "forward_violations": forward,
        "generates": gen,
        "conjugates_consistent": rev.family.consistent,
        "conjugate_conflicts": rev.family.conflicts[:10],
        "reverse_violations": rev.relation_violations[:10],
        "round_trip_failures": rev.round_trip_failures[:10],
        "ok": not forward and gen and rev.ok,
    }

"""Hyperplane-indexed connection coefficient tables.

A connection is a list X_i, one coefficient per reflection hyperplane.  The
scalar kappa and the logarithmic forms are never represented: flatness is the
commutator condition [X_i, sum_{j in L} X_j] = 0 over codimension-2 edges L,
and invariance is X_{w(i)} phi(w) = phi(w) X_i for the group generators w.
The same checks run on matrices, on elements of a generalized Brauer algebra,
and on elements of the diagram algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .diagrams import DiagramElement, e_elem, perm_elem, s_elem
from .exactlinalg import Matrix, matadd, matmul, scalar_mul, zeros
from .gbrauer import Algebra
from .groups import Group, build_group
from .reps import Representation, lk_alpha, permutation_matrix, projector_matrices


@dataclass(frozen=True)
class Backend:
    """Ring operations for coefficients."""

    name: str
    mul: Callable[[Any, Any], Any]
    add: Callable[[Any, Any, Fraction], Any]  # add(x, y, c) = x + c*y
    zero: Callable[[], Any]
    size: Callable[[Any], float]  # 0 iff the argument is zero


def matrix_backend(dim: int) -> Backend:
    def size(x: Matrix) -> float:
        return max((abs(float(v)) for row in x for v in row), default=0.0) if any(v for row in x for v in row) else 0.0

    return Backend("matrix", matmul, lambda x, y, c=Fraction(1): matadd(x, y, c), lambda: zeros(dim, dim), size)


def algebra_backend(alg: Algebra) -> Backend:
    return Backend("algebra", alg.mul, lambda x, y, c=Fraction(1): alg.add(x, y, c), dict, lambda x: float(len(x)))


def diagram_backend(n: int, tau) -> Backend:
    return Backend(
        "diagram",
        lambda x, y: x * y,
        lambda x, y, c=Fraction(1): x + c * y,
        lambda: DiagramElement(n, tau),
        lambda x: float(len(x.terms)),
    )


@dataclass
class Connection:
    kind: str
    group: Group  # supplies hyperplanes, edges and the action
    coeffs: list  # per hyperplane
    backend: Backend

    def __post_init__(self) -> None:
        if len(self.coeffs) != len(self.group.hyperplanes):
            raise ValueError("every hyperplane needs a coefficient")

    def scaled(self, c) -> "Connection":
        c = Fraction(c)
        zero = self.backend.zero()
        return Connection(self.kind, self.group, [self.backend.add(zero, x, c) for x in self.coeffs], self.backend)

    def commutator(self, x, y):
        b = self.backend
        return b.add(b.mul(x, y), b.mul(y, x), Fraction(-1))


@dataclass(frozen=True)
class FlatnessResidual:
    edge: tuple[str, ...]
    member: str
    size: float

    def to_doc(self) -> dict:
        return {"edge": list(self.edge), "member": self.member, "residual": self.size}


def check_flat(conn: Connection) -> list[FlatnessResidual]:
    """Nonzero [X_i, sum_{j in L} X_j] over every edge L and member i (empty iff flat)."""
    G, b = conn.group, conn.backend
    out = []
    for edge in G.edges:
        members = sorted(edge)
        total = b.zero()
        for j in members:
            total = b.add(total, conn.coeffs[j])
        for i in members:
            r = conn.commutator(conn.coeffs[i], total)
            size = b.size(r)
            if size:
                out.append(FlatnessResidual(tuple(G.hyperplane_label(h) for h in members), G.hyperplane_label(i), size))
    return out


def check_invariance(conn: Connection, phi: Sequence) -> list[str]:
    """Violations of X_{w(i)} phi(w) = phi(w) X_i for generators w (phi aligned with group.generators)."""
    G, b = conn.group, conn.backend
    bad = []
    names = G.generator_names()
    for k, w in enumerate(G.generators):
        for i in range(len(G.hyperplanes)):
            lhs = b.mul(conn.coeffs[G.act(w, i)], phi[k])
            rhs = b.mul(phi[k], conn.coeffs[i])
            if b.size(b.add(lhs, rhs, Fraction(-1))):
                bad.append(f"{names[k]} on {G.hyperplane_label(i)}")
    return bad


def _reflections_on(G: Group, h: int) -> list[int]:
    return [s for s in G.reflections if G.fixed_hyperplane[s] == h]


# ---------------------------------------------------------------------------
# the named connections


def cherednik_connection(alg: Algebra) -> Connection:
    """X_v = sum over pseudo reflections s fixing H_v of mu_s s, in the group part of the algebra."""
    G = alg.group
    coeffs = []
    for h in range(len(G.hyperplanes)):
        x: dict = {}
        for s in _reflections_on(G, h):
            x = alg.add(x, alg.group_element(s), alg.params.mu_of(G, s))
        coeffs.append(x)
    return Connection("cherednik", G, coeffs, algebra_backend(alg))


def formal_connection(alg: Algebra) -> Connection:
    """X_v = sum_s mu_s s - e_v inside the generalized Brauer algebra itself."""
    cher = cherednik_connection(alg)
    G = alg.group
    coeffs = [alg.add(x, alg.e(h), Fraction(-1)) for h, x in enumerate(cher.coeffs)]
    return Connection("formal", G, coeffs, algebra_backend(alg))


def brauer_connection(n: int, tau) -> Connection:
    """X_{ij} = s_{ij} - e_{ij} in the diagram algebra B_n(tau)."""
    G = build_group("symmetric", n=n)
    coeffs = [s_elem(i, j, n, tau) - e_elem(i, j, n, tau) for i, j in G.hyperplanes]
    return Connection("brauer", G, coeffs, diagram_backend(n, tau))


def brauer_phi(n: int, tau) -> list[DiagramElement]:
    G = build_group("symmetric", n=n)
    return [perm_elem(G.elements[g], tau) for g in G.generators]


def lk_connection(alg: Algebra, alpha: Sequence[Sequence] | None = None, m_override: dict[int, Fraction] | None = None) -> Connection:
    """X_v = sum_s mu_s iota(s) - p_v on the span of the hyperplanes.

    ``alpha`` replaces the coefficient table; ``m_override`` replaces diagonal
    entries (used to show the conditions are necessary).
    """
    G = alg.group
    table = [list(r) for r in (alpha if alpha is not None else lk_alpha(G, alg.params))]
    for h, val in (m_override or {}).items():
        table[h][h] = Fraction(val)
    proj = projector_matrices(table)
    nh = len(G.hyperplanes)
    coeffs = []
    for h in range(nh):
        x = zeros(nh, nh)
        for s in _reflections_on(G, h):
            x = matadd(x, permutation_matrix(G, s), alg.params.mu_of(G, s))
        coeffs.append(matadd(x, proj[h], Fraction(-1)))
    return Connection("lk", G, coeffs, matrix_backend(nh))


def lk_phi(alg: Algebra) -> list[Matrix]:
    return [permutation_matrix(alg.group, g) for g in alg.group.generators]


def rho_connection(alg: Algebra, rep: Representation) -> Connection:
    """X_v = sum_s mu_s rho(s) - rho(e_v)."""
    G = alg.group
    coeffs = []
    for h in range(len(G.hyperplanes)):
        x = zeros(rep.dim, rep.dim)
        for s in _reflections_on(G, h):
            x = matadd(x, rep.element_matrix(s), alg.params.mu_of(G, s))
        coeffs.append(matadd(x, rep.e_matrix(h), Fraction(-1)))
    return Connection(f"rho({rep.name})", G, coeffs, matrix_backend(rep.dim))


def rho_phi(rep: Representation) -> list[Matrix]:
    return list(rep.gen_mats)


def build_connection(kind: str, alg: Algebra | None = None, rep: Representation | None = None, n: int | None = None, tau=None) -> Connection:
    if kind == "cherednik":
        return cherednik_connection(alg)
    if kind == "formal":
        return formal_connection(alg)
    if kind == "lk":
        return lk_connection(alg)
    if kind == "rho":
        return rho_connection(alg, rep)
    if kind == "brauer":
        return brauer_connection(n, tau)
    raise ValueError(f"unknown connection kind {kind!r}")


def default_phi(conn: Connection, alg: Algebra | None = None, rep: Representation | None = None, tau=None) -> list:
    """The group-to-units map matching a connection's coefficient ring."""
    if conn.kind == "brauer":
        return brauer_phi(conn.group.spec.n, tau)
    if conn.kind in ("cherednik", "formal"):
        return [alg.group_element(g) for g in conn.group.generators]
    if conn.kind == "lk":
        return lk_phi(alg)
    return rho_phi(rep)


def matrices_equal(a: Connection, b: Connection) -> bool:
    return a.coeffs == b.coeffs


def scalar_multiple(conn: Connection, c) -> Connection:
    if conn.backend.name == "matrix":
        return Connection(conn.kind, conn.group, [scalar_mul(c, x) for x in conn.coeffs], conn.backend)
    return conn.scaled(c)

"""Numeric monodromy of realized flat connections along generator paths.

The connection is kappa * sum_i X_i d f_i / f_i with f_i a complex linear form.
Parallel transport solves Phi' = (kappa * sum_i X_i f_i'(z)/f_i(z)) Phi along a
piecewise-analytic path, Phi(0) = 1.  A generator path for hyperplane H runs
from the base point p straight toward its projection pr onto H, turns half way
around H in the complex normal direction, and returns along the reflected
segment to s_H(p).  The monodromy image is rho(s_H)^{-1} T.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from .exactlinalg import Matrix, matadd, zeros
from .gbrauer import Algebra, Params, build_algebra
from .groups import build_group
from .reps import Representation, b3_brauer_irreps, regular_representation


# ---------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class Segment:
    """z(t), z'(t) for t in [0, 1]."""

    z: Callable[[float], np.ndarray]
    dz: Callable[[float], np.ndarray]
    kind: str


def line(a: np.ndarray, b: np.ndarray) -> Segment:
    a, b = np.asarray(a, complex), np.asarray(b, complex)
    d = b - a
    return Segment(lambda t: a + t * d, lambda t: d, "line")


def arc(center: np.ndarray, start: np.ndarray, angle: float) -> Segment:
    """t -> center + exp(i angle t) (start - center)."""
    c, r = np.asarray(center, complex), np.asarray(start, complex) - np.asarray(center, complex)
    return Segment(
        lambda t: c + cmath.exp(1j * angle * t) * r,
        lambda t: 1j * angle * cmath.exp(1j * angle * t) * r,
        "arc",
    )


@dataclass(frozen=True)
class Path:
    segments: tuple[Segment, ...]

    def start(self) -> np.ndarray:
        return self.segments[0].z(0.0)

    def end(self) -> np.ndarray:
        return self.segments[-1].z(1.0)

    def reversed(self) -> "Path":
        segs = []
        for s in reversed(self.segments):
            segs.append(Segment(lambda t, s=s: s.z(1.0 - t), lambda t, s=s: -s.dz(1.0 - t), s.kind))
        return Path(tuple(segs))

    def then(self, other: "Path") -> "Path":
        return Path(self.segments + other.segments)

    def min_distance(self, forms: Sequence[np.ndarray], samples: int = 200) -> float:
        """Smallest |f(z)|/|f| over sample points (distance to the nearest hyperplane)."""
        best = math.inf
        for seg in self.segments:
            for t in np.linspace(0.0, 1.0, samples):
                z = seg.z(t)
                for f in forms:
                    best = min(best, abs(np.dot(f, z)) / np.linalg.norm(f))
        return best


@dataclass(frozen=True)
class RealizedConnection:
    """Per-hyperplane (linear form, complex matrix); kappa applied at integration time."""

    forms: tuple[np.ndarray, ...]
    mats: tuple[np.ndarray, ...]
    reflections: tuple[np.ndarray, ...]  # unitary reflection s_H on the coordinate space
    rho_reflections: tuple[np.ndarray, ...]  # rho(s_H)

    @property
    def dim(self) -> int:
        return self.mats[0].shape[0]


class PathError(ValueError):
    pass


def integrate(conn: RealizedConnection, kappa: float, path: Path, tol: float = 1e-10) -> np.ndarray:
    """Parallel transport along ``path`` by adaptive Runge-Kutta (DOP853)."""
    d = conn.dim
    if path.min_distance(conn.forms) < 1e-6:
        raise PathError("path meets a hyperplane")
    phi = np.eye(d, dtype=complex)
    for seg in path.segments:
        def rhs(t, y, seg=seg):
            z, dz = seg.z(t), seg.dz(t)
            a = np.zeros((d, d), dtype=complex)
            for f, x in zip(conn.forms, conn.mats):
                a += x * (np.dot(f, dz) / np.dot(f, z))
            return (kappa * a @ y.reshape(d, d)).ravel()

        sol = solve_ivp(rhs, (0.0, 1.0), phi.ravel(), method="DOP853", rtol=tol, atol=tol)
        if not sol.success:
            raise PathError(f"integration failed: {sol.message}")
        phi = sol.y[:, -1].reshape(d, d)
    return phi


def generator_path(
    forms: Sequence[np.ndarray], reflection: np.ndarray, base: np.ndarray, v: int, turn: float = math.pi, eps_scale: float = 1.0
) -> Path:
    """Approach H_v, half-turn around it, return along the reflected approach segment.

    ``eps_scale`` < 1 shrinks the turning radius (a homotopic path).
    """
    base = np.asarray(base, complex)
    f = forms[v]
    normal = np.conj(f) / np.dot(f, np.conj(f))
    pr = base - np.dot(f, base) * normal
    others = [g for k, g in enumerate(forms) if k != v]
    dist = min((abs(np.dot(g, pr)) / np.linalg.norm(g) for g in others), default=math.inf)
    full = np.linalg.norm(base - pr)
    eps = min(full, dist / 2) * eps_scale
    q = pr + (eps / full) * (base - pr)
    segs = []
    if eps < full:
        segs.append(line(base, q))
    turn_seg = arc(pr, q, turn)
    segs.append(turn_seg)
    sq = turn_seg.z(1.0)
    sp = reflection @ base
    if eps < full:
        segs.append(line(sq, sp))
    path = Path(tuple(segs))
    if np.linalg.norm(path.end() - sp) > 1e-12:
        raise PathError("path does not end at the reflected base point")
    return path


def monodromy_generator(conn: RealizedConnection, kappa: float, v: int, base: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    path = generator_path(conn.forms, conn.reflections[v], base, v)
    T = integrate(conn, kappa, path, tol)
    return np.linalg.solve(conn.rho_reflections[v], T)


# ---------------------------------------------------------------------------
# realizations of s - e connections for the classical Brauer algebra


def to_complex(m: Matrix) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in m], dtype=complex)


def brauer_realization(rep: Representation, alg: Algebra) -> RealizedConnection:
    """X_{ij} = rho(s_ij) - rho(e_ij) over the braid arrangement z_i = z_j in C^n."""
    G = alg.group
    n = G.spec.n
    forms, mats, refl, rrefl = [], [], [], []
    for h, (i, j) in enumerate(G.hyperplanes):
        f = np.zeros(n, dtype=complex)
        f[i - 1], f[j - 1] = 1, -1
        s = G.reflection_for((i, j))
        mats.append(to_complex(matadd(rep.element_matrix(s), rep.e_matrix(h), Fraction(-1))))
        perm = np.eye(n, dtype=complex)
        perm[[i - 1, j - 1]] = perm[[j - 1, i - 1]]
        forms.append(f)
        refl.append(perm)
        rrefl.append(to_complex(rep.element_matrix(s)))
    return RealizedConnection(tuple(forms), tuple(mats), tuple(refl), tuple(rrefl))


def base_point(n: int) -> np.ndarray:
    return np.arange(1, n + 1, dtype=complex)


def braid_generators(rep: Representation, alg: Algebra, kappa: float, tol: float = 1e-10) -> list[np.ndarray]:
    """Monodromy images of the standard generators (walls z_k = z_{k+1})."""
    conn = brauer_realization(rep, alg)
    G = alg.group
    n = G.spec.n
    return [monodromy_generator(conn, kappa, G.hyperplane((k, k + 1)), base_point(n), tol) for k in range(1, n)]


# ---------------------------------------------------------------------------
# BMW parameters and relation check


@dataclass(frozen=True)
class BMWParams:
    q: complex
    l: complex
    tau: complex
    J: complex  # (l - l^-1)/(1 - tau), equal to q^-1 - q

    @classmethod
    def from_kappa(cls, kappa: float, m_param: float) -> "BMWParams":
        q = cmath.exp(1j * math.pi * kappa)
        l = q ** (m_param - 1)
        a = 1 / q - q
        tau = (q ** (1 - m_param) - q ** (m_param - 1) + a) / a
        return cls(q, l, tau, a)


def e_from_x(x: np.ndarray, p: BMWParams) -> np.ndarray:
    d = x.shape[0]
    a = 1 / p.q - p.q
    return p.l / a * (x @ x + a * x - np.eye(d))


def bmw_relations(n: int) -> list[tuple[str, Callable]]:
    """The BMW relation list for generators X_1..X_{n-1}, E_1..E_{n-1}, closed under word reversal.

    Each entry maps (X, E, params) to a residual matrix (lists are 0-based).
    """
    rels: list[tuple[str, Callable]] = []
    r = range(n - 1)
    for i in r:
        rels.append((f"l(X{i+1}^2+J X{i+1}-1) = J E{i+1}", lambda X, E, p, i=i: p.l * (X[i] @ X[i] + p.J * X[i] - np.eye(len(X[i]))) - p.J * E[i]))
        rels.append((f"X{i+1}E{i+1} = l^-1 E{i+1}", lambda X, E, p, i=i: X[i] @ E[i] - E[i] / p.l))
        rels.append((f"E{i+1}X{i+1} = l^-1 E{i+1}", lambda X, E, p, i=i: E[i] @ X[i] - E[i] / p.l))
        rels.append((f"E{i+1}^2 = tau E{i+1}", lambda X, E, p, i=i: E[i] @ E[i] - p.tau * E[i]))
    for i in range(n - 2):
        j = i + 1
        rels.append((f"X{i+1}X{j+1}X{i+1} = X{j+1}X{i+1}X{j+1}", lambda X, E, p, i=i, j=j: X[i] @ X[j] @ X[i] - X[j] @ X[i] @ X[j]))
        # X_i X_{i+1} E_i = E_{i+1} X_i X_{i+1} and its reversal
        rels.append((f"X{i+1}X{j+1}E{i+1} = E{j+1}X{i+1}X{j+1}", lambda X, E, p, i=i, j=j: X[i] @ X[j] @ E[i] - E[j] @ X[i] @ X[j]))
        rels.append((f"E{i+1}X{j+1}X{i+1} = X{j+1}X{i+1}E{j+1}", lambda X, E, p, i=i, j=j: E[i] @ X[j] @ X[i] - X[j] @ X[i] @ E[j]))
        # X_{i+1} X_i E_{i+1} = E_i X_{i+1} X_i and its reversal
        rels.append((f"X{j+1}X{i+1}E{j+1} = E{i+1}X{j+1}X{i+1}", lambda X, E, p, i=i, j=j: X[j] @ X[i] @ E[j] - E[i] @ X[j] @ X[i]))
        rels.append((f"E{j+1}X{i+1}X{j+1} = X{i+1}X{j+1}E{i+1}", lambda X, E, p, i=i, j=j: E[j] @ X[i] @ X[j] - X[i] @ X[j] @ E[i]))
        rels.append((f"E{i+1}X{j+1}E{i+1} = l E{i+1}", lambda X, E, p, i=i, j=j: E[i] @ X[j] @ E[i] - p.l * E[i]))
        rels.append((f"E{j+1}X{i+1}E{j+1} = l E{j+1}", lambda X, E, p, i=i, j=j: E[j] @ X[i] @ E[j] - p.l * E[j]))
    for i in r:
        for j in r:
            if abs(i - j) >= 2:
                rels.append((f"X{i+1}X{j+1} = X{j+1}X{i+1}", lambda X, E, p, i=i, j=j: X[i] @ X[j] - X[j] @ X[i]))
                rels.append((f"X{i+1}E{j+1} = E{j+1}X{i+1}", lambda X, E, p, i=i, j=j: X[i] @ E[j] - E[j] @ X[i]))
    return rels


def bmw_check(X: Sequence[np.ndarray], kappa: float, m_param: float) -> dict[str, float]:
    """Max-abs residual of every BMW relation for E_i derived from X_i."""
    p = BMWParams.from_kappa(kappa, m_param)
    E = [e_from_x(x, p) for x in X]
    n = len(X) + 1
    return {label: float(np.max(np.abs(f(X, E, p)))) for label, f in bmw_relations(n)}


def cubic_residual(x: np.ndarray, kappa: float, m_param: float) -> float:
    p = BMWParams.from_kappa(kappa, m_param)
    d = x.shape[0]
    I = np.eye(d)
    r = (x - p.q ** (1 - m_param) * I) @ (x + I / p.q) @ (x - p.q * I)
    return float(np.max(np.abs(r)))


# ---------------------------------------------------------------------------
# the two worked cases


def b2_algebra(m_param) -> Algebra:
    G = build_group("symmetric", n=2)
    return build_algebra(G, Params.uniform(G, 1, m_param))


def n2_closed_form(alg: Algebra, kappa: float, m_param) -> np.ndarray:
    """Left multiplication by T(1) = sum_k exp(i pi kappa lambda_k) eps_k on B_2(m)."""
    m = Fraction(m_param)
    G = alg.group
    s = alg.group_element(G.generators[0])
    e = alg.e(0)
    one = alg.unit()
    eps0 = alg.scale(1 / m, e)
    eps1 = alg.scale(Fraction(1, 2), alg.add(one, s, Fraction(-1)))
    eps2 = alg.add(alg.scale(Fraction(1, 2), alg.add(one, s)), eps0, Fraction(-1))
    reg = regular_representation(alg)
    out = np.zeros((alg.dim, alg.dim), dtype=complex)
    for lam, eps in ((1 - float(m), eps0), (-1.0, eps1), (1.0, eps2)):
        out += cmath.exp(1j * math.pi * kappa * lam) * to_complex(reg.image(alg, eps))
    return out


def n2_report(kappa: float, m_param, tol: float = 1e-10) -> dict:
    alg = b2_algebra(m_param)
    reg = regular_representation(alg)
    conn = brauer_realization(reg, alg)
    path = generator_path(conn.forms, conn.reflections[0], base_point(2), 0)
    T = integrate(conn, kappa, path, tol)
    closed = n2_closed_form(alg, kappa, m_param)
    psi = np.linalg.solve(conn.rho_reflections[0], T)
    psi_closed = np.linalg.solve(conn.rho_reflections[0], closed)
    p = BMWParams.from_kappa(kappa, float(m_param))
    expected_eigs = sorted([p.q ** (1 - float(m_param)), -1 / p.q, p.q], key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    eigs = sorted(np.linalg.eigvals(psi), key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    return {
        "transport_vs_closed_form": float(np.max(np.abs(T - closed))),
        "monodromy_vs_closed_form": float(np.max(np.abs(psi - psi_closed))),
        "eigenvalue_error": float(max(abs(a - b) for a, b in zip(eigs, expected_eigs))),
        "cubic_residual": cubic_residual(psi, kappa, float(m_param)),
        "bmw": bmw_check([psi], kappa, float(m_param)),
        "det": abs(complex(np.linalg.det(psi))),
    }


def n3_report(kappa: float, m_param, tol: float = 1e-10) -> dict:
    alg, reps = b3_brauer_irreps(m_param)
    out = {}
    for rep in reps:
        X = braid_generators(rep, alg, kappa, tol)
        p = BMWParams.from_kappa(kappa, float(m_param))
        E = [e_from_x(x, p) for x in X]
        res = bmw_check(X, kappa, float(m_param))
        out[rep.name] = {
            "dim": rep.dim,
            "max_bmw_residual": max(res.values()),
            "braid_residual": res["X1X2X1 = X2X1X2"],
            "e_norm": float(max(np.max(np.abs(e)) for e in E)),
            "relations": res,
            "min_abs_det": float(min(abs(np.linalg.det(x)) for x in X)),
        }
    return out

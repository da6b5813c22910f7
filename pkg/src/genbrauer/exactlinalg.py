"""Exact rational linear algebra.

Matrices are plain lists of rows holding ``Fraction`` entries; sparse vectors
are ``dict[int, Fraction]`` with no stored zeros.  Everything here is pure and
works on immutable inputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]
SparseVec = dict[int, Fraction]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def shape(m: Matrix) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matadd(a: Matrix, b: Matrix, scale: Fraction = Fraction(1)) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scalar_mul(c, a: Matrix) -> Matrix:
    c = to_fraction(c)
    return [[c * x for x in row] for row in a]


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def _integer_rows(m: Matrix) -> list[list[int]]:
    rows = []
    for row in m:
        den = lcm(*[x.denominator for x in row]) if row else 1
        rows.append([int(x * den) for x in row])
    return rows


def rank(m: Matrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination on integer-scaled rows."""
    a = _integer_rows(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nrows:
            break
    return r


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [row[:] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0}."""
    ncols = shape(m)[1]
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Sequence) -> list[Fraction] | None:
    """One solution of m x = b, or None if inconsistent."""
    nrows, ncols = shape(m)
    aug = [row[:] + [to_fraction(bi)] for row, bi in zip(m, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [row[:] + ident for row, ident in zip(m, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def det(m: Matrix) -> Fraction:
    a = [row[:] for row in m]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


# ---------------------------------------------------------------------------
# sparse vectors and incremental echelon bases


def vec_add(u: SparseVec, v: SparseVec, scale: Fraction = Fraction(1)) -> SparseVec:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + scale * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_scale(c: Fraction, v: SparseVec) -> SparseVec:
    return {k: c * x for k, x in v.items()} if c else {}


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of sparse vectors.

    Each stored vector is normalised to have coefficient 1 at its pivot, and
    no other stored vector has a nonzero entry at that pivot (fully reduced),
    so ``reduce`` is a single pass.  Pivots are the largest index of a vector.
    """

    def __init__(self) -> None:
        self.rows: dict[int, SparseVec] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVec) -> SparseVec:
        # stored rows vanish at every other pivot, so one pass suffices
        out = dict(v)
        for p in [k for k in v if k in self.rows]:
            out = vec_add(out, self.rows[p], -out[p])
        return out

    def add(self, v: SparseVec) -> SparseVec | None:
        """Insert v; return the new reduced row, or None if v was dependent."""
        r = self.reduce(v)
        if not r:
            return None
        p = max(r)
        inv = 1 / r[p]
        r = {k: x * inv for k, x in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                self.rows[q] = vec_add(row, r, -c)
        self.rows[p] = r
        return r

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)

    def pivots(self) -> list[int]:
        return sorted(self.rows)


# ---------------------------------------------------------------------------
# algebra-level helpers


def structure_trace_vector(table: Sequence[Sequence[SparseVec]], dim: int) -> list[Fraction]:
    """t[d] = trace of left multiplication by basis element d."""
    return [sum((table[d][c].get(c, Fraction(0)) for c in range(dim)), Fraction(0)) for d in range(dim)]


def trace_form_radical(table: Sequence[Sequence[SparseVec]], dim: int) -> tuple[Matrix, list[list[Fraction]]]:
    """Gram matrix of (a, b) -> tr(L_{x_a x_b}) and a basis of its radical.

    ``table[a][b]`` is the sparse product x_a x_b in the given basis.
    """
    t = structure_trace_vector(table, dim)
    gram = [[sum((c * t[d] for d, c in table[a][b].items()), Fraction(0)) for b in range(dim)] for a in range(dim)]
    return gram, nullspace(gram)


def flatten(m: Matrix) -> SparseVec:
    n = len(m[0]) if m else 0
    return {i * n + j: x for i, row in enumerate(m) for j, x in enumerate(row) if x}


def unflatten(v: SparseVec, rows: int, cols: int) -> Matrix:
    out = zeros(rows, cols)
    for k, x in v.items():
        out[k // cols][k % cols] = x
    return out


def span_closure(generators: Sequence[Matrix]) -> list[Matrix]:
    """Basis of the unital matrix algebra generated by ``generators``."""
    if not generators:
        raise ValueError("need at least one generator to fix the matrix size")
    d = len(generators[0])
    basis = EchelonBasis()
    found: list[Matrix] = []
    frontier: list[Matrix] = []
    for g in [identity(d)] + list(generators):
        if basis.add(flatten(g)) is not None:
            found.append(g)
            frontier.append(g)
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = matmul(g, x)
                if basis.add(flatten(y)) is not None:
                    found.append(y)
                    nxt.append(y)
        frontier = nxt
        if len(found) == d * d:
            break
    return found


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# exact scalars in a real quadratic field Q(sqrt d)


class QuadraticSurd:
    """a + b*sqrt(d) with rational a, b and a fixed squarefree d > 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 5) -> None:
        self.a = to_fraction(a)
        self.b = to_fraction(b)
        self.d = d

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if other.d != self.d and other.b and self.b:
                raise ValueError(f"mixing Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        return QuadraticSurd(other, 0, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticSurd(self.a + o.a, self.b + o.b, self.d if self.b else o.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        d = self.d if self.b else o.d
        return QuadraticSurd(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return self * QuadraticSurd(o.a / n, -o.b / n, o.d)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        out = QuadraticSurd(1, 0, self.d)
        base = self if k >= 0 else 1 / self
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, QuadraticSurd)):
            o = self._coerce(other)
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d**0.5

    def __complex__(self) -> complex:
        return complex(float(self))

    def __repr__(self) -> str:
        return f"QuadraticSurd({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        return format_scalar(self)


def format_scalar(x) -> str:
    if isinstance(x, QuadraticSurd):
        if x.b == 0:
            return format_fraction(x.a)
        sign = "-" if x.b < 0 else "+"
        return f"{format_fraction(x.a)}{sign}{format_fraction(abs(x.b))}*sqrt({x.d})"
    return format_fraction(to_fraction(x))


def two_cos(k: int, m: int):
    """Exact 2*cos(2*pi*k/m) when it lies in Q or a real quadratic field."""
    import math

    x = 2 * math.cos(2 * math.pi * k / m)
    for d in (1, 2, 3, 5):
        root = math.sqrt(d)
        for b2 in range(-4, 5):
            if d == 1 and b2:
                continue
            a2 = round(2 * (x - b2 / 2 * root))
            if abs(a2 / 2 + b2 / 2 * root - x) < 1e-12:
                if b2 == 0:
                    return Fraction(a2, 2)
                return QuadraticSurd(Fraction(a2, 2), Fraction(b2, 2), d)
    raise NotImplementedError(f"2cos(2pi*{k}/{m}) is not quadratic")

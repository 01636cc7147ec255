"""
Exact integer linear algebra on small lattices.

Vectors are tuples of Python ints and matrices are sequences of rows, so
everything here is arbitrary precision and nothing ever touches a float.

>>> primitive((2, 4))
(1, 2)
>>> smith_normal_form([(0, 1), (-2, -1), (2, -1)]).diag
(1, 2)
>>> hj_expand(5, 3)
[2, 3]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .errors import BadParameters, RankMismatch, ZeroVector

Vector = tuple[int, ...]
IntegerMatrix = Sequence[Sequence[int]]


def primitive(v: Sequence[int]) -> Vector:
    """Divide ``v`` by the gcd of its coordinates (signs are kept)."""
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ZeroVector(f"zero vector {tuple(v)} has no primitive generator")
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return reduce(gcd, v, 0) == 1


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def scale(c: int, a: Sequence[int]) -> Vector:
    return tuple(c * x for x in a)


def neg(a: Sequence[int]) -> Vector:
    return tuple(-x for x in a)


def det2(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != 2 or len(b) != 2:
        raise RankMismatch(f"det2 needs two rank-2 vectors, got {tuple(a)}, {tuple(b)}")
    return a[0] * b[1] - a[1] * b[0]


def cross(a: Sequence[int], b: Sequence[int]) -> Vector:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def determinant(rows: IntegerMatrix) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise RankMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``diag`` (length min(rows, cols), zeros last)."""

    diag: tuple[int, ...]
    rank: int

    @property
    def nonzero(self) -> tuple[int, ...]:
        return self.diag[: self.rank]


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_decomposition(m: IntegerMatrix, ncols: int | None = None):
    """Return ``(D, U, V)`` with ``U * m * V == D`` and U, V unimodular.

    ``ncols`` is only needed when ``m`` has no rows. Pivoting is
    deterministic: smallest nonzero absolute value, first in row-major order.
    """
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else (ncols or 0)
    if any(len(r) != cols for r in a):
        raise RankMismatch("ragged integer matrix")
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):  # col_dst -= q * col_src
        for r in a:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    for t in range(min(rows, cols)):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, a[i][t] // a[t][t])
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, a[t][j] // a[t][t])
                    if a[t][j]:
                        dirty = True
            if not dirty:
                bad = next(
                    (
                        i
                        for i in range(t + 1, rows)
                        for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]
                    ),
                    None,
                )
                if bad is None:
                    break
                add_row(bad, t, -1)
                continue
            # move the smallest entry of row/column t onto the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cands)
            swap_rows(t, i)
            swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


def smith_normal_form(m: IntegerMatrix) -> SmithForm:
    d, _, _ = smith_decomposition(m)
    k = min(len(d), len(d[0]) if d else 0)
    diag = tuple(d[i][i] for i in range(k))
    return SmithForm(diag=diag, rank=sum(1 for x in diag if x))


def matrix_rank(m: IntegerMatrix) -> int:
    if not m:
        return 0
    return smith_normal_form(m).rank


def invariant_factors(divisors: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors (>1) of the direct sum of Z/d over ``divisors``."""
    ds = [abs(d) for d in divisors if abs(d) != 1]
    if not ds:
        return ()
    n = len(ds)
    diag = smith_normal_form([[ds[i] if i == j else 0 for j in range(n)] for i in range(n)])
    return tuple(x for x in diag.diag if x > 1)


def span_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Basis of the saturated lattice span(vectors) ∩ Z^dim."""
    vectors = [tuple(x) for x in vectors]
    if not vectors:
        return []
    _, _, v = smith_decomposition(vectors)
    r = smith_normal_form(vectors).rank
    vinv = inverse_unimodular(v)
    return [tuple(vinv[i]) for i in range(r)]


def kernel_basis(rows: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Saturated integer basis of {x in Z^dim : r·x = 0 for every row r}."""
    rows = [tuple(r) for r in rows if any(r)]
    if not rows:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    d, _, v = smith_decomposition(rows)
    r = sum(1 for i in range(min(len(d), dim)) if d[i][i])
    return [tuple(v[i][j] for i in range(dim)) for j in range(r, dim)]


def inverse_unimodular(m: IntegerMatrix) -> list[list[int]]:
    det = determinant(m)
    if abs(det) != 1:
        raise BadParameters(f"matrix with determinant {det} is not unimodular")
    inv = _inverse_rational(m)
    return [[int(x) for x in row] for row in inv]


def _inverse_rational(m: IntegerMatrix) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def adjugate(m: IntegerMatrix) -> list[list[int]]:
    """Integer adjugate: adjugate(m) * m == det(m) * I."""
    n = len(m)
    if n == 1:
        return [[1]]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for k, row in enumerate(map(list, m)) if k != i]
            out[j][i] = (-1) ** (i + j) * determinant(minor)
    return out


def solve_rational(basis: Sequence[Sequence[int]], x: Sequence[int]) -> list[Fraction]:
    """Coordinates of ``x`` in a square basis given as rows (x = Σ c_i b_i)."""
    n = len(basis)
    cols = [[basis[j][i] for j in range(n)] for i in range(n)]
    inv = _inverse_rational(cols)
    return [sum(inv[i][j] * x[j] for j in range(n)) for i in range(n)]


def complete_basis(rows: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Extend a basis of a saturated sublattice to a basis of Z^dim.

    The returned list starts with ``rows`` unchanged.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    d, u, v = smith_decomposition(rows)
    k = len(rows)
    if any(d[i][i] != 1 for i in range(k)):
        raise BadParameters("rows do not span a saturated sublattice")
    vinv = inverse_unimodular(v)
    return rows + [tuple(vinv[i]) for i in range(k, dim)]


def hj_expand(d: int, k: int) -> list[int]:
    """Hirzebruch-Jung continued fraction d/k = a1 - 1/(a2 - 1/(...)), a_i >= 2."""
    if d < 2 or not 0 < k < d or gcd(d, k) != 1:
        raise BadParameters(f"hj_expand needs d >= 2, 0 < k < d, gcd(d, k) = 1; got ({d}, {k})")
    out = []
    while k:
        a = -(-d // k)
        out.append(a)
        d, k = k, a * k - d
    return out


def hj_value(coeffs: Sequence[int]) -> Fraction:
    """Evaluate a1 - 1/(a2 - 1/(... - 1/al)) exactly."""
    val = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        val = a - 1 / val
    return val


def format_vector(v: Sequence[int]) -> str:
    """Render a vector in the standard basis, e.g. ``(1, -2, 0) -> 'e1-2e2'``."""
    parts = []
    for i, c in enumerate(v, start=1):
        if c == 0:
            continue
        coeff = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{coeff}e{i}")
    return "".join(parts) or "0"

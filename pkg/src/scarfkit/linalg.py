"""Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``. Everything here is small dense
Gauss-Jordan elimination; callers work at desk scale.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[Fraction, ...]


def as_fraction(x) -> Fraction:
    """Accept ints, Fractions, and ``"p/q"`` strings. Floats are rejected."""
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(x)


def as_vector(xs: Sequence) -> Vector:
    return tuple(as_fraction(x) for x in xs)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Each row scaled by the lcm of its denominators; row spaces are unchanged."""
    out = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _echelon(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form over the integers, with pivot columns."""
    m = _integer_rows(rows)
    if not m:
        return m, []
    pivots: list[int] = []
    r = 0
    for c in range(len(m[0])):
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        a = m[r][c]
        for k in range(r + 1, len(m)):
            b = m[k][c]
            if b:
                row = [a * x - b * y for x, y in zip(m[k], m[r])]
                g = 0
                for x in row:
                    g = gcd(g, x)
                m[k] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def _columns_matrix(columns: Sequence[Vector]) -> list[list[Fraction]]:
    dim = len(columns[0])
    return [[col[i] for col in columns] for i in range(dim)]


def rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return len(_echelon(vectors)[1])


def nullspace(columns: Sequence[Vector]) -> list[Vector]:
    """Basis of {λ : Σ λ_j columns[j] = 0}."""
    k = len(columns)
    if k == 0:
        return []
    m, pivots = rref(_columns_matrix(columns))
    free = [j for j in range(k) if j not in pivots]
    basis = []
    for f in free:
        lam = [Fraction(0)] * k
        lam[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            lam[pc] = -row[f]
        basis.append(tuple(lam))
    return basis


def solve(columns: Sequence[Vector], target: Vector) -> Vector | None:
    """Coefficients y with Σ y_j columns[j] = target, assuming independent columns.

    Returns None if the system is inconsistent. Raises if the columns are
    dependent, since the answer would not be unique.
    """
    k = len(columns)
    if k == 0:
        return () if all(t == 0 for t in target) else None
    aug = [row + [t] for row, t in zip(_columns_matrix(columns), target)]
    m, pivots = _echelon(aug)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("columns are linearly dependent")
    y = [Fraction(0)] * k
    for r in range(k - 1, -1, -1):
        row = m[r]
        acc = row[k] - sum(row[j] * y[j] for j in range(r + 1, k))
        y[r] = Fraction(acc) / row[r]
    return tuple(y)


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((k for k in range(c, n) if m[k][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for k in range(c + 1, n):
            if m[k][c] != 0:
                f = m[k][c] * inv
                m[k] = [a - f * b for a, b in zip(m[k], m[c])]
    return d


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def fmt(x: Fraction) -> str:
    """Rational as a ``"p/q"`` string (``"p"`` when integral)."""
    return str(x)

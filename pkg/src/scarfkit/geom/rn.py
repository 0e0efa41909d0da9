"""Chains in ℝⁿ, intersection numbers, and the affine form of the coloring theorems.

Points are tuples of Fractions and every predicate is exact. A geometric
m-chain is a ``Mod2Chain`` whose vertices are such points.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .. import linalg
from ..chains2 import Mod2Chain, faces
from ..complexes import SimplexFamily, from_triangulation, is_chain_simplex, subsets
from ..solver import SolverError
from .lattice import freudenthal, integer_points, t_map

Point = tuple[Fraction, ...]
GeometricChain = Mod2Chain


class GeneralPositionError(ValueError):
    pass


def point(v: Sequence) -> Point:
    return linalg.as_vector(v)


def geometric_chain(simplices: Iterable[Iterable[Sequence]], dimension: int | None = None) -> Mod2Chain:
    return Mod2Chain.of([[point(p) for p in s] for s in simplices], dimension)


def ambient_dimension(*chains: Mod2Chain) -> int:
    dims = {len(p) for c in chains for p in c.vertices()}
    if len(dims) != 1:
        raise ValueError("chains must live in one ambient space")
    return dims.pop()


# ---------------------------------------------------------------- hulls


def _lifted(points: Sequence[Point]) -> list[Point]:
    return [tuple(p) + (Fraction(1),) for p in points]


def affinely_independent(points: Sequence[Point]) -> bool:
    pts = list(points)
    return len(set(pts)) == len(pts) and linalg.rank(_lifted(pts)) == len(pts)


def barycentric(points: Sequence[Point], z: Sequence) -> tuple[Fraction, ...] | None:
    """Affine coefficients of z over affinely independent points, or None off their span."""
    return linalg.solve(_lifted(points), tuple(z) + (Fraction(1),))


def in_hull(points: Sequence[Point], z: Sequence) -> bool:
    """z ∈ conv(points), via Carathéodory: some affinely independent subset carries z."""
    pts = list(dict.fromkeys(points))
    z = tuple(z)
    if affinely_independent(pts):
        lam = barycentric(pts, z)
        return lam is not None and all(x >= 0 for x in lam)
    for k in range(1, min(len(pts) - 1, len(z) + 1) + 1):
        for sub in combinations(pts, k):
            if not affinely_independent(sub):
                continue
            lam = barycentric(sub, z)
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def segment_meets_hull(p: Point, q: Point, points: Sequence[Point]) -> bool:
    """conv{p, q} ∩ conv(points) ≠ ∅.

    For a generic facet crossed transversally this is one square solve of
    p + t(q - p) = Σ λ_k x_k; otherwise 0 must lie in the hull of differences.
    """
    pts = list(dict.fromkeys(points))
    if p not in pts and q not in pts and affinely_independent(pts + [p, q]):
        return False  # disjoint faces of one simplex
    if len(pts) == len(p) and affinely_independent(pts):
        d = tuple(a - b for a, b in zip(q, p))
        cols = [tuple(x) + (Fraction(1),) for x in pts] + [tuple(-a for a in d) + (Fraction(0),)]
        if linalg.rank(cols) == len(cols):
            sol = linalg.solve(cols, tuple(p) + (Fraction(1),))
            return sol is not None and all(x >= 0 for x in sol[:-1]) and 0 <= sol[-1] <= 1
    zero = (Fraction(0),) * len(p)
    diffs = [tuple(a - b for a, b in zip(e, x)) for e in (p, q) for x in pts]
    return in_hull(diffs, zero)


# ---------------------------------------------------------------- general position


def _point_violation(sigma: tuple, z: Point) -> tuple | None:
    for tau in faces(sigma, len(sigma) - 2):
        if in_hull(tau, z):
            return (sigma, (z,))
    return None


def _segment_violation(tau: tuple, omega: tuple) -> tuple | None:
    p, q = omega
    if in_hull(tau, p) or in_hull(tau, q):
        return (tau, omega)
    for ups in faces(tau, len(tau) - 2):
        if segment_meets_hull(p, q, ups):
            return (tau, omega)
    return None


def _violation(c: Mod2Chain, d: Mod2Chain) -> tuple | None:
    n = ambient_dimension(c, d)
    for sigma in c:
        for omega in d:
            if c.dimension == n and d.dimension == 0:
                bad = _point_violation(sigma, omega[0])
            elif c.dimension == n - 1 and d.dimension == 1:
                bad = _segment_violation(sigma, omega)
            elif c.dimension == n and d.dimension == 1:
                bad = _point_violation(sigma, omega[0]) or _point_violation(sigma, omega[1])
                for tau in faces(sigma, len(sigma) - 2):
                    bad = bad or _segment_violation(tau, omega)
            else:
                raise ValueError(f"unsupported dimension pair ({c.dimension}, {d.dimension}) in ℝ^{n}")
            if bad:
                return bad
    return None


def general_position(c: Mod2Chain, d: Mod2Chain) -> bool:
    """Supported pairs: (n, 0), (n-1, 1) and the layered (n, 1) condition."""
    return _violation(c, d) is None


def intersection_number(c: Mod2Chain, d: Mod2Chain) -> int:
    n = ambient_dimension(c, d)
    if (c.dimension, d.dimension) not in ((n, 0), (n - 1, 1)):
        raise ValueError(f"intersection numbers are defined for (n, 0) and (n-1, 1) pairs, got "
                         f"({c.dimension}, {d.dimension}) in ℝ^{n}")
    bad = _violation(c, d)
    if bad:
        raise GeneralPositionError(f"not in general position: {bad[0]!r} and {bad[1]!r}")
    total = 0
    for sigma in c:
        for omega in d:
            if d.dimension == 0:
                total += in_hull(sigma, omega[0])
            else:
                total += segment_meets_hull(omega[0], omega[1], sigma)
    return total % 2


# ---------------------------------------------------------------- affine colorings


def _check_simplex(w: Sequence[Point], z: Point) -> None:
    n = len(w) - 1
    if any(len(p) != n for p in w) or not affinely_independent(w):
        raise ValueError("w must be n+1 affinely independent points in ℝⁿ")
    if not in_hull(w, z):
        raise ValueError(f"z = {z!r} is not in the simplex spanned by w")


def affine_scarf(
    D: SimplexFamily, c: Mapping[Hashable, Sequence], w: Sequence[Sequence], z: Sequence
) -> tuple[frozenset, tuple]:
    """(C, σ) with c(σ) ∪ {w_i : i ∉ C} an affinely independent (n+1)-set whose hull holds z.

    Exhaustive over the top simplices of the envelope, larger C first; the
    answer is re-verified before it is returned.
    """
    w = [point(p) for p in w]
    z = point(z)
    _check_simplex(w, z)
    if not is_chain_simplex(D):
        raise ValueError("D is not a chain-simplex")
    cols = {x: point(v) for x, v in c.items()}
    I = frozenset(D.I)
    for C in sorted((A for A in subsets(D.I) if A), key=lambda A: (-len(A), sorted(A))):
        for sigma in D.top(C):
            pts = [cols[x] for x in sigma] + [w[i] for i in sorted(I - C)]
            if affinely_independent(pts):
                lam = barycentric(pts, z)
                if lam is not None and all(x >= 0 for x in lam):
                    return C, sigma
    raise SolverError("theorem violated: no envelope simplex carries z")


# ---------------------------------------------------------------- triangulations of Γ


def centered_simplex(n: int) -> list[Point]:
    """w_1..w_n the unit vectors and w_0 = -(w_1 + ... + w_n), so Σ w_i = 0."""
    w0 = tuple(Fraction(-1) for _ in range(n))
    return [w0] + [tuple(Fraction(int(k == i)) for k in range(n)) for i in range(n)]


def affine_coordinates(w: Sequence[Point], x: Sequence) -> tuple[Fraction, ...]:
    """Barycentric coordinates a_i(x) with respect to the vertices w."""
    return barycentric(w, point(x))


def linear_coordinates(w: Sequence[Point], v: Sequence) -> tuple[Fraction, ...]:
    """l_i(v) = a_i(v) - a_i(0)."""
    a = affine_coordinates(w, v)
    a0 = affine_coordinates(w, (Fraction(0),) * len(w[0]))
    return tuple(x - y for x, y in zip(a, a0))


class Triangulation:
    """A triangulation of Γ = conv(w): named vertices with positions, and top simplices."""

    def __init__(self, w: Sequence[Sequence], positions: Mapping[Hashable, Sequence], tops: Sequence[Sequence]):
        self.w = [point(p) for p in w]
        self.positions = {x: point(p) for x, p in positions.items()}
        self.tops = [tuple(t) for t in tops]
        bary = {x: affine_coordinates(self.w, p) for x, p in self.positions.items()}
        self.family = from_triangulation(bary, self.tops)

    @property
    def n(self) -> int:
        return len(self.w) - 1

    def on_face(self, i: int) -> list[Hashable]:
        """Vertices lying in the facet Γ_i opposite to w_i."""
        return [x for x, p in sorted(self.positions.items()) if affine_coordinates(self.w, p)[i] == 0]


def freudenthal_triangulation(n: int, N: int, w: Sequence[Sequence] | None = None) -> Triangulation:
    w = centered_simplex(n) if w is None else [point(p) for p in w]
    positions = {
        a: tuple(sum(Fraction(a[i], N) * w[i][k] for i in range(n + 1)) for k in range(n))
        for a in integer_points(n, N)
    }
    tops = [[t_map(v, N) for v in s] for s in freudenthal(n, N)]
    return Triangulation(w, positions, tops)


def _predicate_failure(T: Triangulation, c: Mapping, test) -> tuple | None:
    for i in range(T.n + 1):
        for x in T.on_face(i):
            if not test(i, point(c[x])):
                return (i, x)
    return None


def vector_hedgehog(T: Triangulation, c: Mapping[Hashable, Sequence], z: Sequence) -> tuple:
    """An n-simplex σ of T whose colors c(σ) contain z in their hull.

    Requires a_i(c(x)) <= 0 for x on Γ_i. Solved through the affine theorem
    with w_{i+1} in the role of w_i; on the boundary of Γ, where that route may
    stop short of C = I, the top simplices are searched directly.
    """
    z = point(z)
    bad = _predicate_failure(T, c, lambda i, v: affine_coordinates(T.w, v)[i] <= 0)
    if bad:
        raise SolverError(f"hedgehog predicate fails at (i, x) = {bad!r}")
    shifted = [T.w[(i + 1) % (T.n + 1)] for i in range(T.n + 1)]
    C, sigma = affine_scarf(T.family, c, shifted, z)
    if C != frozenset(range(T.n + 1)):
        found = [s for s in T.family.top(range(T.n + 1)) if in_hull([point(c[x]) for x in s], z)]
        if not found:
            raise SolverError("theorem violated: no simplex of T carries z")
        sigma = found[0]
    if not in_hull([point(c[x]) for x in sigma], z):
        raise SolverError("theorem violated: returned simplex misses z")
    return sigma


def inward_tangent(T: Triangulation, c: Mapping[Hashable, Sequence]) -> tuple:
    """An n-simplex σ of T with 0 in the hull of c(σ); requires l_i(c(x)) >= 0 on Γ_i."""
    if any(sum(p[k] for p in T.w) != 0 for k in range(T.n)):
        raise ValueError("Γ must have its barycenter at 0")
    bad = _predicate_failure(T, c, lambda i, v: linear_coordinates(T.w, v)[i] >= 0)
    if bad:
        raise SolverError(f"inward tangent predicate fails at (i, x) = {bad!r}")
    zero = (Fraction(0),) * T.n
    C, tau = affine_scarf(T.family, c, T.w, zero)
    pts = [point(c[x]) for x in tau] + [T.w[k] for k in range(T.n + 1) if k not in C]
    lam = barycentric(pts, zero)
    if any(a != 0 for a in lam[len(tau):]):
        raise SolverError("theorem violated: a vertex of Γ carries weight")
    for s in T.family.top(range(T.n + 1)):
        if set(tau) <= set(s) and in_hull([point(c[x]) for x in s], zero):
            return s
    raise SolverError("theorem violated: no n-simplex extends the solution")

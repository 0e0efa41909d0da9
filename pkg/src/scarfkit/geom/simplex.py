"""The standard simplex: grids, sub-simplices Δ(σ, C), and fixed point approximation."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.optimize import linprog

from .. import linalg
from ..orders import OrderFamily, coordinate_orders, min_under
from ..solver import Labelling, OrderCofaces, classical_labelling, walk
from .lattice import integer_points

Point = tuple[Fraction, ...]


class ApproximationWarning(RuntimeWarning):
    pass


def simplex_grid(n: int, k: int) -> list[Point]:
    """Barycentric lattice of step 1/k in Δⁿ."""
    return [tuple(Fraction(a, k) for a in p) for p in integer_points(n, k)]


def barycenter(n: int) -> Point:
    return tuple(Fraction(1, n + 1) for _ in range(n + 1))


def max_norm(x: Sequence, y: Sequence) -> float:
    return max(abs(float(a) - float(b)) for a, b in zip(x, y))


# ---------------------------------------------------------------- Δ(σ, C)


@dataclass(frozen=True)
class SubSimplex:
    """x_i >= lower_i for all i, sum x = 1; lower_i = m_ii on C and 0 elsewhere."""

    lower: Point
    C: frozenset

    @property
    def ratio(self) -> Fraction:
        return 1 - sum(self.lower)

    @property
    def nonempty(self) -> bool:
        return self.ratio >= 0

    def vertices(self) -> list[Point]:
        r = self.ratio
        return [
            tuple(m + (r if k == j else 0) for k, m in enumerate(self.lower))
            for j in range(len(self.lower))
        ]

    def centroid(self) -> Point:
        r = self.ratio / len(self.lower)
        return tuple(m + r for m in self.lower)

    def contains(self, x: Sequence) -> bool:
        return sum(x) == 1 and all(a >= m for a, m in zip(x, self.lower))

    def diameter(self) -> Fraction:
        """In the max norm; the simplex is a translate of ratio·Δⁿ."""
        return self.ratio if len(self.lower) > 1 else Fraction(0)


def sub_simplex(f: OrderFamily, sigma: Iterable[Point], C: Iterable[int]) -> SubSimplex:
    sigma = list(sigma)
    C = frozenset(C)
    dim = len(f.X[0])
    lower = tuple(
        Fraction(min_under(f, sigma, i)[i]) if i in C and sigma else Fraction(0)
        for i in range(dim)
    )
    return SubSimplex(lower, C)


# ---------------------------------------------------------------- colorings


def kkm_scarf_coloring(oracle: Callable, X: Iterable[Sequence]) -> dict:
    """c(x) = least i with x_i <= f(x)_i."""
    out = {}
    for x in X:
        y = oracle(x)
        for i, (a, b) in enumerate(zip(x, y)):
            if a <= b:
                out[x] = i
                break
        else:
            raise AssertionError(f"no coordinate with x_i <= f(x)_i at {x!r}")
    return out


# ---------------------------------------------------------------- oracles


def constant_oracle(p: Sequence) -> Callable:
    p = linalg.as_vector(p)
    return lambda x: p


def identity_oracle(x):
    return tuple(x)


def rotation_oracle(x):
    """f(x)_i = x_{i-1}: a cyclic shift of coordinates."""
    x = tuple(x)
    return x[-1:] + x[:-1]


def piecewise_kakutani(x) -> list[Point]:
    """On Δ¹: {e0} left of the midpoint, {e1} right of it, the whole edge at it."""
    e0, e1 = (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
    h = Fraction(1, 2)
    if x[0] < h:
        return [e0]
    if x[0] > h:
        return [e1]
    return [e0, e1]


def whole_simplex_kakutani(x) -> list[Point]:
    n1 = len(x)
    return [tuple(Fraction(int(k == j)) for k in range(n1)) for j in range(n1)]


def constant_kakutani(p: Sequence) -> Callable:
    p = linalg.as_vector(p)
    return lambda x: [p]


BROUWER_ORACLES = {"identity": identity_oracle, "rotation": rotation_oracle}
KAKUTANI_ORACLES = {"piecewise": piecewise_kakutani, "whole": whole_simplex_kakutani}


def hull_distance(z: Sequence, vertices: Sequence[Sequence]) -> float:
    """Max-norm distance from z to the convex hull of vertices, by a small LP."""
    V = np.array([[float(a) for a in v] for v in vertices])
    zf = np.array([float(a) for a in z])
    if len(V) == 1:
        return float(np.max(np.abs(V[0] - zf)))
    k, d = V.shape
    # variables: λ_1..λ_k, t; minimize t with |Vᵀλ - z| <= t
    c = np.zeros(k + 1)
    c[-1] = 1.0
    A = np.vstack([np.hstack([V.T, -np.ones((d, 1))]), np.hstack([-V.T, -np.ones((d, 1))])])
    ub = np.concatenate([zf, -zf])
    eq = np.hstack([np.ones((1, k)), np.zeros((1, 1))])
    res = linprog(c, A_ub=A, b_ub=ub, A_eq=eq, b_eq=[1.0], bounds=[(0, None)] * (k + 1), method="highs")
    return max(float(res.fun), 0.0)


# ---------------------------------------------------------------- approximation


@dataclass
class Level:
    grid: int
    point: Point
    residual: float
    C: frozenset
    sigma: tuple
    diameter: Fraction
    cell_point: Point | None = None

    def to_json(self) -> dict:
        return {
            "grid": self.grid,
            "point": [str(a) for a in self.point],
            "cell_point": None if self.cell_point is None else [str(a) for a in self.cell_point],
            "residual": self.residual,
            "C": sorted(self.C),
            "diameter": str(self.diameter),
        }


@dataclass
class Approximation:
    point: Point
    residual: float
    converged: bool
    levels: list[Level] = field(default_factory=list)

    @property
    def grid(self) -> int:
        return self.levels[-1].grid

    def to_json(self) -> dict:
        return {
            "point": [str(a) for a in self.point],
            "point_float": [float(a) for a in self.point],
            "residual": self.residual,
            "converged": self.converged,
            "levels": [lv.to_json() for lv in self.levels],
        }


def density_schedule(max_grid: int, start: int = 2) -> list[int]:
    """Grid denominators start, 2·start, ... up to max_grid; max_grid itself is always included."""
    if max_grid < 1:
        raise ValueError("max_grid must be positive")
    ks, k = [], max(1, start)
    while k < max_grid:
        ks.append(k)
        k *= 2
    ks.append(max_grid)
    return ks


def _best(candidates: Iterable[Point], residual: Callable[[Point], float]) -> tuple[Point, float]:
    best = None
    for p in candidates:
        r = residual(p)
        if best is None or r < best[1]:
            best = (p, r)
    return best


def _run(step: Callable[[int], Level], epsilon: float, schedule: Sequence[int]) -> Approximation:
    levels: list[Level] = []
    for k in schedule:
        levels.append(step(k))
        if levels[-1].residual <= epsilon:
            lv = levels[-1]
            return Approximation(lv.point, lv.residual, True, levels)
    best = min(levels, key=lambda lv: lv.residual)
    warnings.warn(
        f"schedule exhausted with residual {best.residual:.3g} > {epsilon:g}", ApproximationWarning, stacklevel=3
    )
    return Approximation(best.point, best.residual, False, levels)


def _exact(v: Sequence) -> Point:
    return tuple(Fraction(a) for a in v)


def affine_refinement(oracle: Callable, sigma: Sequence[Point]) -> Point | None:
    """Fixed point of the affine interpolant of f on the n-simplex σ, if it lies in Δⁿ.

    Solves Σ λ_j (f(x_j) - x_j) = 0 with Σ λ_j = 1; exact for affine f.
    """
    n1 = len(sigma[0])
    if len(sigma) != n1:
        return None
    cols = [tuple(fy - xy for fy, xy in zip(_exact(oracle(x)), x)) + (Fraction(1),) for x in sigma]
    target = (Fraction(0),) * n1 + (Fraction(1),)
    try:
        lam = linalg.solve(cols, target)
    except ValueError:
        return None
    if lam is None:
        return None
    z = tuple(sum(l * x[i] for l, x in zip(lam, sigma)) for i in range(n1))
    return z if all(a >= 0 for a in z) else None


def brouwer_level(oracle: Callable, n: int, k: int) -> Level:
    X = simplex_grid(n, k)
    f = coordinate_orders(X)
    c = kkm_scarf_coloring(oracle, f.X)
    (C, sigma), _ = walk(OrderCofaces(f), classical_labelling(c, f.I), 0)
    box = sub_simplex(f, sigma, C)

    def residual(p):
        return max_norm(oracle(p), p)

    cands = [box.centroid(), *box.vertices(), *sorted(sigma)]
    refined = affine_refinement(oracle, sorted(sigma))
    if refined is not None:
        cands.append(refined)
    point, r = _best(cands, residual)
    return Level(k, point, r, C, tuple(sorted(sigma)), box.diameter(), box.centroid())


def brouwer_approximate(
    oracle: Callable, n: int, epsilon: float = 1e-3, schedule: Sequence[int] | None = None
) -> Approximation:
    """Scarf colorings of grids of growing density; each level returns a point of Δ(σ, C)."""
    schedule = density_schedule(64) if schedule is None else schedule
    return _run(lambda k: brouwer_level(oracle, n, k), epsilon, schedule)


# ---------------------------------------------------------------- Kakutani


def _unit(n1: int, j: int) -> Point:
    return tuple(Fraction(int(k == j)) for k in range(n1))


def lex_good(b: Point) -> Callable[[frozenset], bool]:
    """b' = b + Σ_k ε^{k+1} e_k lies in the open cone of the set, for small ε > 0.

    Rows of (S⁻¹b | S⁻¹) must be lexicographically positive; they are never
    zero, so every basis is either good or not and ties cannot occur.
    """
    n1 = len(b)

    def good(S: frozenset) -> bool:
        if len(S) != n1:
            return False
        cols = sorted(S)
        if linalg.rank(cols) < n1:
            return False
        rows = [list(linalg.solve(cols, b))]
        rows += [list(linalg.solve(cols, _unit(n1, k))) for k in range(n1)]
        for r in range(n1):
            for entry in (row[r] for row in rows):
                if entry != 0:
                    if entry < 0:
                        return False
                    break
        return True

    return good


def kakutani_level(oracle: Callable, n: int, k: int) -> Level:
    n1 = n + 1
    b = barycenter(n)
    X = simplex_grid(n, k)
    f = coordinate_orders(X)
    sel = {x: linalg.as_vector(oracle(x)[0]) for x in f.X}

    def residual(p):
        return hull_distance(p, oracle(p))

    fixed = [x for x in f.X if sel[x] == x]
    if fixed:
        x = fixed[0]
        return Level(k, x, residual(x), frozenset(range(n1)), (x,), Fraction(0), x)
    color = {x: tuple(s - a + bb for s, a, bb in zip(sel[x], x, b)) for x in f.X}
    lab = Labelling(color.__getitem__, lambda j: _unit(n1, j), lex_good(b))
    (C, sigma), _ = walk(OrderCofaces(f), lab, 0)
    box = sub_simplex(f, sigma, C)
    cols = [color[x] for x in sorted(sigma)] + [_unit(n1, j) for j in range(n1) if j not in C]
    y = linalg.solve(cols, b)
    weights = y[: len(sigma)]
    total = sum(weights)
    cands = [box.centroid(), *sorted(sigma)]
    if total > 0:
        z = tuple(sum(w * sel[x][i] for w, x in zip(weights, sorted(sigma))) / total for i in range(n1))
        cands.insert(0, z)
    point, r = _best(cands, residual)
    return Level(k, point, r, C, tuple(sorted(sigma)), box.diameter(), box.centroid())


def kakutani_approximate(
    oracle: Callable, n: int, epsilon: float = 1e-2, schedule: Sequence[int] | None = None
) -> Approximation:
    """Vector colorings f(x) - x + b on grids, with f(x) the first listed vertex of F(x)."""
    schedule = density_schedule(256) if schedule is None else schedule
    return _run(lambda k: kakutani_level(oracle, n, k), epsilon, schedule)

"""Families of linear orders on a finite set and their dominant sets.

An ``OrderFamily`` holds, for every index i in I = {0..n}, a permutation of X
read as ascending in the order <_i. Internally each order is a row of a rank
matrix so that "y beats every minimum" is a vectorized comparison.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np

from .tokens import IndexToken, canonical, jsonable, unjson

Cell = frozenset


class OrderError(ValueError):
    pass


class OrderFamily:
    def __init__(self, X: Sequence[Hashable], orders: Sequence[Sequence[Hashable]]):
        self.X = tuple(X)
        if len(set(self.X)) != len(self.X):
            raise OrderError("duplicate elements in X")
        self.orders = tuple(tuple(o) for o in orders)
        if not self.orders:
            raise OrderError("need at least one order")
        self._pos = {x: k for k, x in enumerate(self.X)}
        ranks = np.empty((len(self.orders), len(self.X)), dtype=np.int64)
        for i, o in enumerate(self.orders):
            if len(o) != len(self.X) or set(o) != set(self.X):
                raise OrderError(f"order {i} is not a permutation of X")
            for r, x in enumerate(o):
                ranks[i, self._pos[x]] = r
        self.ranks = ranks
        self.ranks.setflags(write=False)

    @property
    def I(self) -> tuple[int, ...]:
        return tuple(range(len(self.orders)))

    @property
    def n(self) -> int:
        return len(self.orders) - 1

    def rank(self, i: int, x) -> int:
        return int(self.ranks[i, self._pos[x]])

    def less(self, i: int, x, y) -> bool:
        return self.rank(i, x) < self.rank(i, y)

    def __repr__(self) -> str:
        return f"OrderFamily(|X|={len(self.X)}, |I|={len(self.orders)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, OrderFamily) and (self.X, self.orders) == (other.X, other.orders)

    def __hash__(self) -> int:
        return hash((self.X, self.orders))

    # -- JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "X": [jsonable(x) for x in self.X],
            "I": len(self.orders),
            "orders": [[jsonable(x) for x in o] for o in self.orders],
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrderFamily":
        orders = [[unjson(x) for x in o] for o in data["orders"]]
        if len(orders) != data["I"]:
            raise OrderError(f"expected {data['I']} orders, got {len(orders)}")
        return cls([unjson(x) for x in data["X"]], orders)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


class ExtendedOrderFamily(OrderFamily):
    """Orders on X ∪ I in which i comes first in <_i and X precedes I - i."""

    def __init__(self, base: OrderFamily, X, orders):
        super().__init__(X, orders)
        self.base = base


# ---------------------------------------------------------------- dominance


def min_under(f: OrderFamily, sigma: Iterable, i: int):
    sigma = list(sigma)
    if not sigma:
        raise OrderError("min of an empty set")
    return min(sigma, key=lambda x: f.rank(i, x))


def _min_ranks(f: OrderFamily, sigma, C) -> dict[int, int]:
    return {i: min(f.rank(i, x) for x in sigma) for i in C}


def _beaters(f: OrderFamily, mins: dict[int, int], C) -> np.ndarray:
    """Boolean mask of y with min_i σ <_i y for every i in C."""
    mask = np.ones(len(f.X), dtype=bool)
    for i in C:
        mask &= f.ranks[i] > mins[i]
    return mask


def is_dominant(f: OrderFamily, sigma: Iterable, C: Iterable[int]) -> bool:
    sigma = list(sigma)
    C = list(C)
    if not C:
        return False
    if not sigma:
        return True
    return not _beaters(f, _min_ranks(f, sigma, C), C).any()


def classify(f: OrderFamily, sigma: Iterable, C: Iterable[int]) -> str:
    sigma = set(sigma)
    C = set(C)
    if not C:
        raise OrderError("C must be nonempty")
    if len(sigma) == len(C) and is_dominant(f, sigma, C):
        return "cell"
    if len(sigma) + 1 == len(C) and is_dominant(f, sigma, C):
        return "face"
    return "neither"


def pivot_neighbors(f: OrderFamily, sigma: Iterable, C: Iterable[int]) -> tuple[list[Cell], list[frozenset]]:
    """C-cells containing the C-face sigma, and index sets D = C - j with sigma a D-cell.

    For the empty face with |C| = 1 the down list holds the empty index set,
    standing for the (-1)-simplex of the empty complex.
    """
    sigma = frozenset(sigma)
    C = frozenset(C)
    if classify(f, sigma, C) != "face":
        raise OrderError(f"{canonical(sigma)!r} is not a {sorted(C)}-face")
    if not sigma:
        (i,) = C
        top = f.X[int(np.argmax(f.ranks[i]))] if f.X else None
        return ([frozenset({top})] if top is not None else []), [frozenset()]
    mins = _min_ranks(f, sigma, C)
    argmins = {i: min(sigma, key=lambda x: f.rank(i, x)) for i in C}
    by_elem: dict = {}
    for i in sorted(C):
        by_elem.setdefault(argmins[i], []).append(i)
    (pair,) = [v for v in by_elem.values() if len(v) == 2]
    up: list[Cell] = []
    down: list[frozenset] = []
    for j in pair:
        rest = C - {j}
        mask = _beaters(f, mins, rest)
        if not mask.any():
            down.append(rest)
        else:
            cand = np.flatnonzero(mask)
            best = cand[int(np.argmax(f.ranks[j][cand]))]
            up.append(sigma | {f.X[best]})
    return up, down


def enumerate_cells(f: OrderFamily, C: Iterable[int]) -> set[Cell]:
    """All C-cells, grown level by level (subsets of dominant sets are dominant)."""
    C = frozenset(C)
    if not C:
        raise OrderError("C must be nonempty")
    if len(C) > len(f.X):
        return set()
    level = {frozenset()}
    for _ in range(len(C)):
        nxt = set()
        for s in level:
            for x in f.X:
                if x not in s:
                    t = s | {x}
                    if t not in nxt and is_dominant(f, t, C):
                        nxt.add(t)
        level = nxt
    return level


def brute_cells(f: OrderFamily, C: Iterable[int]) -> set[Cell]:
    """Same as enumerate_cells but over all |C|-subsets; kept as an oracle."""
    C = frozenset(C)
    return {frozenset(s) for s in combinations(f.X, len(C)) if is_dominant(f, s, C)}


# ---------------------------------------------------------------- constructions


def coordinate_orders(points: Sequence[Sequence]) -> OrderFamily:
    """<_i sorts by coordinate i; ties go to the earlier point in the input."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if len(set(pts)) != len(pts):
        raise OrderError("duplicate points")
    if not pts:
        raise OrderError("need at least one point")
    dim = len(pts[0])
    orders = [
        [pts[k] for k in sorted(range(len(pts)), key=lambda k: (pts[k][i], k))]
        for i in range(dim)
    ]
    return OrderFamily(pts, orders)


def cyclic_shift(x: Sequence, i: int) -> tuple:
    x = tuple(x)
    return x[i:] + x[:i]


def lex_shift_orders(D: Sequence[Sequence[int]], n: int) -> OrderFamily:
    pts = [tuple(p) for p in D]
    if len(set(pts)) != len(pts):
        raise OrderError("duplicate points")
    orders = [sorted(pts, key=lambda p: cyclic_shift(p, i)) for i in range(n + 1)]
    return OrderFamily(pts, orders)


def extend_orders(f: OrderFamily) -> ExtendedOrderFamily:
    """Orders on X ∪ I: i first in <_i, then X as before, then I - i ascending."""
    toks = [IndexToken(i) for i in f.I]
    if set(toks) & set(f.X):
        raise OrderError("index tokens collide with X")
    orders = [
        [toks[i]] + list(f.orders[i]) + [toks[k] for k in f.I if k != i]
        for i in f.I
    ]
    return ExtendedOrderFamily(f, list(f.X) + toks, orders)

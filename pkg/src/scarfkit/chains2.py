"""Chains with coefficients in F2 over abstract simplices.

A simplex is a canonical tuple of vertices (see ``tokens.canonical``); the
empty tuple is the (-1)-simplex. A chain is a set of simplices of one
dimension, added by symmetric difference.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from .tokens import canonical, sort_key

Simplex = tuple


def simplex(*vertices: Hashable) -> Simplex:
    return canonical(vertices)


@dataclass(frozen=True)
class Mod2Chain:
    dimension: int
    simplices: frozenset

    def __post_init__(self):
        if self.dimension < -1:
            raise ValueError("chain dimension must be >= -1")
        for s in self.simplices:
            if len(s) != self.dimension + 1:
                raise ValueError(
                    f"simplex {s!r} has dimension {len(s) - 1}, chain has {self.dimension}"
                )

    @classmethod
    def of(cls, simplices: Iterable[Iterable[Hashable]], dimension: int | None = None) -> "Mod2Chain":
        """Build a chain, cancelling repeated simplices in pairs."""
        acc: set = set()
        for s in simplices:
            s = tuple(s)
            cs = canonical(s)
            if len(cs) != len(s):
                raise ValueError(f"repeated vertex in {s!r}")
            acc ^= {cs}
        if dimension is None:
            dims = {len(s) - 1 for s in acc}
            if len(dims) > 1:
                raise ValueError("mixed dimensions in chain")
            if not dims:
                raise ValueError("dimension required for the zero chain")
            dimension = dims.pop()
        return cls(dimension, frozenset(acc))

    @classmethod
    def zero(cls, dimension: int) -> "Mod2Chain":
        return cls(dimension, frozenset())

    def __add__(self, other: "Mod2Chain") -> "Mod2Chain":
        if self.dimension != other.dimension:
            raise ValueError("cannot add chains of different dimension")
        return Mod2Chain(self.dimension, self.simplices ^ other.simplices)

    __sub__ = __add__

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self.simplices, key=lambda s: [sort_key(v) for v in s]))

    def __len__(self) -> int:
        return len(self.simplices)

    def __bool__(self) -> bool:
        return bool(self.simplices)

    def vertices(self) -> tuple:
        return canonical(v for s in self.simplices for v in s)

    def to_json(self) -> list:
        return [list(s) for s in self]

    def __repr__(self) -> str:
        body = " + ".join("{" + ",".join(map(repr, s)) + "}" for s in self) or "0"
        return f"Mod2Chain[{self.dimension}]({body})"


def boundary(c: Mod2Chain) -> Mod2Chain:
    if c.dimension < 0:
        raise ValueError("cannot take boundary of (-1)-chain")
    acc: set = set()
    for s in c.simplices:
        for k in range(len(s)):
            acc ^= {s[:k] + s[k + 1:]}
    return Mod2Chain(c.dimension - 1, frozenset(acc))


def star_product(alpha: Mod2Chain, gamma: Mod2Chain) -> Mod2Chain:
    """Bilinear join: each pair (σ, K) contributes σ ∪ K."""
    acc: set = set()
    for s in alpha.simplices:
        ss = set(s)
        for k in gamma.simplices:
            if ss.intersection(k):
                raise ValueError("star product requires disjoint supports")
            acc ^= {canonical(ss.union(k))}
    return Mod2Chain(alpha.dimension + gamma.dimension + 1, frozenset(acc))


def push_forward(phi: Mapping | Callable, c: Mod2Chain) -> Mod2Chain:
    """Image chain; simplices on which phi is not injective contribute 0."""
    f = phi.__getitem__ if isinstance(phi, Mapping) else phi
    acc: set = set()
    for s in c.simplices:
        image = canonical(f(v) for v in s)
        if len(image) == len(s):
            acc ^= {image}
    return Mod2Chain(c.dimension, frozenset(acc))


def faces(s: Simplex, dimension: int) -> Iterator[Simplex]:
    """All faces of the given dimension (including ∅ when dimension = -1)."""
    yield from combinations(s, dimension + 1)


def chain_to_json(c: Mod2Chain) -> str:
    return json.dumps(c.to_json())


def chain_from_json(text: str, dimension: int | None = None) -> Mod2Chain:
    data = json.loads(text)
    return Mod2Chain.of([tuple(_freeze(v) for v in s) for s in data], dimension)


def _freeze(v):
    return tuple(_freeze(x) for x in v) if isinstance(v, list) else v

"""Vertex tokens and the deterministic total order used everywhere.

Vertices and ground elements are opaque hashable values. Mixed-type
collections (e.g. grid points together with index tokens) are ordered by
``sort_key``, which ranks index tokens after ordinary vertices and groups
ordinary vertices by type name so that ints and strings never get compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable


@dataclass(frozen=True, order=True)
class IndexToken:
    """An element of the index set I, kept apart from ordinary vertices."""

    index: int

    def __repr__(self) -> str:
        return f"I{self.index}"


def sort_key(v: Any) -> tuple:
    if isinstance(v, IndexToken):
        return (1, "", v.index)
    return (0, type(v).__name__, v)


def canonical(vertices: Iterable[Hashable]) -> tuple:
    """Sorted tuple without duplicates."""
    return tuple(sorted(set(vertices), key=sort_key))


def tokens(indices: Iterable[int]) -> tuple[IndexToken, ...]:
    return tuple(IndexToken(i) for i in sorted(indices))


def jsonable(x):
    """JSON form of a vertex: tuples become lists, rationals 'p/q' strings."""
    from fractions import Fraction

    if isinstance(x, tuple):
        return [jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, IndexToken):
        return f"I{x.index}"
    return x


def unjson(x):
    if isinstance(x, list):
        return tuple(unjson(v) for v in x)
    return x

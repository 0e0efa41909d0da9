"""Simplex-families: a complex D(A) of dimension |A| - 1 for every A ⊆ I.

Complexes are stored by their maximal simplices; faces are generated on
demand. D(∅) is always the complex {∅}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from . import linalg
from .chains2 import Mod2Chain, boundary
from .orders import OrderFamily, enumerate_cells
from .tokens import IndexToken, canonical, jsonable, sort_key, unjson

Index = frozenset


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    """Outcome of a structural check; falsy on failure, with a witness."""

    ok: bool
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def subsets(I: Iterable[int]) -> list[frozenset]:
    I = sorted(I)
    return [frozenset(c) for k in range(len(I) + 1) for c in combinations(I, k)]


def _maximal(simplices: Iterable[tuple]) -> frozenset:
    ss = sorted({canonical(s) for s in simplices}, key=len, reverse=True)
    kept: list[tuple] = []
    for s in ss:
        fs = set(s)
        if not any(fs <= set(k) for k in kept):
            kept.append(s)
    return frozenset(kept)


class SimplexFamily:
    def __init__(self, size: int, complexes: Mapping[Iterable[int], Iterable[Iterable[Hashable]]]):
        self.I = tuple(range(size))
        self._max: dict[frozenset, frozenset] = {}
        for A, simplices in complexes.items():
            A = frozenset(A)
            if not A <= set(self.I):
                raise FamilyError(f"index set {sorted(A)} not inside I")
            mx = _maximal(tuple(s) for s in simplices)
            if any(len(s) > len(A) for s in mx):
                raise FamilyError(f"D({sorted(A)}) has dimension above {len(A) - 1}")
            if A:
                self._max[A] = mx
        self._max[frozenset()] = frozenset({()})

    @property
    def n(self) -> int:
        return len(self.I) - 1

    def maximal(self, A: Iterable[int]) -> frozenset:
        return self._max.get(frozenset(A), frozenset())

    def top(self, A: Iterable[int]) -> list[tuple]:
        """The d(A)-simplices of D(A), in canonical order."""
        A = frozenset(A)
        return _ordered(s for s in self.maximal(A) if len(s) == len(A))

    def faces(self, A: Iterable[int], dim: int) -> list[tuple]:
        out = set()
        for s in self.maximal(A):
            if len(s) >= dim + 1:
                out.update(combinations(s, dim + 1))
        return _ordered(out)

    def contains(self, A: Iterable[int], s: Iterable) -> bool:
        s = set(s)
        return any(s <= set(m) for m in self.maximal(A))

    def vertices(self) -> tuple:
        return canonical(v for mx in self._max.values() for s in mx for v in s)

    def vertices_of(self, A: Iterable[int]) -> tuple:
        return canonical(v for s in self.maximal(A) for v in s)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplexFamily) and self.I == other.I and all(
            self.maximal(A) == other.maximal(A) for A in subsets(self.I)
        )

    def __repr__(self) -> str:
        sizes = {tuple(sorted(A)): len(self.top(A)) for A in subsets(self.I) if A}
        return f"SimplexFamily(I={len(self.I)}, tops={sizes})"

    # -- JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "I": len(self.I),
            "complexes": {
                str(sum(1 << i for i in A)): [[jsonable(v) for v in s] for s in _ordered(self.maximal(A))]
                for A in subsets(self.I) if A and self.maximal(A)
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "SimplexFamily":
        size = data["I"]
        cx = {}
        for mask, simplices in data["complexes"].items():
            bits = int(mask)
            if bits >> size:
                raise FamilyError(f"bitmask {mask} outside I")
            A = frozenset(i for i in range(size) if bits >> i & 1)
            cx[A] = [tuple(unjson(v) for v in s) for s in simplices]
        return cls(size, cx)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _ordered(simplices: Iterable[tuple]) -> list[tuple]:
    return sorted(simplices, key=lambda s: [sort_key(v) for v in s])


# ---------------------------------------------------------------- chains


def fundamental_chain(D: SimplexFamily, A: Iterable[int]) -> Mod2Chain:
    A = frozenset(A)
    return Mod2Chain(len(A) - 1, frozenset(D.top(A)))


def is_pseudo_simplex(D: SimplexFamily) -> Check:
    for A in subsets(D.I):
        if not A:
            continue
        e = len(A) - 2
        Bs = [A - {i} for i in sorted(A)]
        candidates = set(D.faces(A, e))
        for B in Bs:
            candidates.update(D.top(B))
        tops = D.top(A)
        for s in _ordered(candidates):
            ss = set(s)
            r = sum(1 for t in tops if ss <= set(t))
            q = sum(1 for B in Bs if D.contains(B, s))
            if r + q != 2:
                return Check(False, (sorted(A), s, r, q))
    return Check(True)


def is_chain_simplex(D: SimplexFamily) -> Check:
    for A in subsets(D.I):
        if not A:
            continue
        lhs = boundary(fundamental_chain(D, A))
        rhs = Mod2Chain.zero(len(A) - 2)
        for i in sorted(A):
            rhs = rhs + fundamental_chain(D, A - {i})
        if lhs != rhs:
            return Check(False, (sorted(A), lhs + rhs))
    return Check(True)


# ---------------------------------------------------------------- envelope


def envelope(D: SimplexFamily) -> SimplexFamily:
    """E(A) = Δ(A) for proper A; E(I) has top simplices σ * (I - A), σ top in D(A)."""
    if any(isinstance(v, IndexToken) for v in D.vertices()):
        raise FamilyError("family vertices collide with index tokens")
    I = frozenset(D.I)
    cx: dict[frozenset, list] = {}
    for A in subsets(D.I):
        if A and A != I:
            cx[A] = [tuple(IndexToken(i) for i in sorted(A))]
    cx[I] = [
        s + tuple(IndexToken(i) for i in sorted(I - A))
        for A in subsets(D.I) if A
        for s in D.top(A)
    ]
    return SimplexFamily(len(D.I), cx)


def envelope_tops(D: SimplexFamily) -> list[tuple[frozenset, tuple]]:
    """Pairs (A, σ) behind the top simplices of E(I)."""
    return [(A, s) for A in subsets(D.I) if A for s in D.top(A)]


def extension_map(c: Mapping, I: Iterable[int]) -> dict:
    """c on the family's vertices, the identity on index tokens."""
    phi = dict(c)
    for i in I:
        phi[IndexToken(i)] = i
    return phi


# ---------------------------------------------------------------- constructions


def _support(coords: Sequence[Fraction]) -> frozenset:
    return frozenset(i for i, x in enumerate(coords) if x != 0)


def validate_triangulation(vertices: Mapping[Hashable, Sequence], tops: Sequence[Sequence[Hashable]]) -> None:
    """Raise FamilyError unless tops triangulate the standard simplex.

    Vertices are given in barycentric coordinates. Checked: every top simplex
    is full-dimensional, volumes add up to the simplex, and every facet lies in
    two top simplices unless it sits on the boundary, where it lies in one.
    """
    coords = {k: linalg.as_vector(v) for k, v in vertices.items()}
    dims = {len(v) for v in coords.values()}
    if len(dims) != 1:
        raise FamilyError("invalid triangulation: mixed coordinate lengths")
    d = dims.pop()
    for k, v in coords.items():
        if sum(v) != 1 or any(x < 0 for x in v):
            raise FamilyError(f"invalid triangulation: vertex {k!r} is not in the simplex")
    total = Fraction(0)
    for t in tops:
        if len(t) != d or len(set(t)) != d:
            raise FamilyError(f"invalid triangulation: {tuple(t)!r} is not a top simplex")
        vol = abs(linalg.det([coords[v] for v in t]))
        if vol == 0:
            raise FamilyError(f"invalid triangulation: {tuple(t)!r} is flat")
        total += vol
    if total != 1:
        raise FamilyError(f"invalid triangulation: volumes sum to {total}, not 1")
    facets: dict[tuple, int] = {}
    for t in tops:
        for f in combinations(canonical(t), d - 1):
            facets[f] = facets.get(f, 0) + 1
    for f, k in facets.items():
        on_boundary = bool(frozenset(range(d)) - frozenset().union(*(_support(coords[v]) for v in f)))
        if k != (1 if on_boundary else 2):
            raise FamilyError(f"invalid triangulation: facet {f!r} lies in {k} top simplices")


def from_triangulation(vertices: Mapping[Hashable, Sequence], tops: Sequence[Sequence[Hashable]]) -> SimplexFamily:
    """D_T(A) = the part of the triangulation lying in the face spanned by A."""
    validate_triangulation(vertices, tops)
    coords = {k: linalg.as_vector(v) for k, v in vertices.items()}
    d = len(next(iter(coords.values())))
    cx = {}
    for A in subsets(range(d)):
        if not A:
            continue
        pieces = [tuple(v for v in t if _support(coords[v]) <= A) for t in tops]
        cx[A] = [p for p in pieces if len(p) == len(A)]
    return SimplexFamily(d, cx)


def from_order_family(f: OrderFamily) -> SimplexFamily:
    """T(A) = all subsets of A-cells."""
    return SimplexFamily(len(f.I), {A: [canonical(c) for c in enumerate_cells(f, A)] for A in subsets(f.I) if A})


def classify_coloring(D: SimplexFamily, c: Mapping[Hashable, int]) -> str:
    I = frozenset(D.I)
    sperner = True
    scarf = True
    for A in subsets(D.I):
        if not A:
            continue
        for v in D.vertices_of(A):
            if c[v] not in A:
                sperner = False
            if A != I and c[v] in A:
                scarf = False
    if sperner and scarf:
        return "both"
    return "alexander_sperner" if sperner else "scarf" if scarf else "neither"

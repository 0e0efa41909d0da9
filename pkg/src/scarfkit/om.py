"""Oriented matroids presented by their signed circuits.

Everything is exhaustive search over small ground sets, so operations that
enumerate subsets refuse ground sets above ``ground_cap()`` elements
(default 16, override with the ``SCARF_GROUND_CAP`` environment variable).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Hashable, Iterable, Mapping, Sequence

from . import linalg
from .tokens import canonical, sort_key


class MatroidError(ValueError):
    pass


def ground_cap() -> int:
    return int(os.environ.get("SCARF_GROUND_CAP", "16"))


def _check_cap(n: int) -> None:
    if n > ground_cap():
        raise MatroidError(
            f"ground set of size {n} exceeds the cap {ground_cap()} (set SCARF_GROUND_CAP)"
        )


@dataclass(frozen=True)
class SignedSubset:
    plus: frozenset = frozenset()
    minus: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(self.plus))
        object.__setattr__(self, "minus", frozenset(self.minus))
        if self.plus & self.minus:
            raise ValueError("positive and negative parts must be disjoint")

    @classmethod
    def from_signs(cls, signs: Mapping[Hashable, int]) -> "SignedSubset":
        return cls(
            frozenset(e for e, s in signs.items() if s > 0),
            frozenset(e for e, s in signs.items() if s < 0),
        )

    @property
    def support(self) -> frozenset:
        return self.plus | self.minus

    def __neg__(self) -> "SignedSubset":
        return SignedSubset(self.minus, self.plus)

    def __call__(self, e) -> int:
        """Sign of e: +1, -1, or 0 off the support."""
        return 1 if e in self.plus else -1 if e in self.minus else 0

    def restrict(self, elements: Iterable) -> "SignedSubset":
        keep = frozenset(elements)
        return SignedSubset(self.plus & keep, self.minus & keep)

    def key(self) -> tuple:
        """Lexicographic key: elements in ground order, '+' before '-'."""
        return tuple((sort_key(e), 0 if e in self.plus else 1) for e in canonical(self.support))

    def is_canonical(self) -> bool:
        """The orientation whose least support element is positive."""
        return not self.support or canonical(self.support)[0] in self.plus

    def __repr__(self) -> str:
        p = ",".join(map(str, canonical(self.plus)))
        m = ",".join(map(str, canonical(self.minus)))
        return f"({{{p}}},{{{m}}})"


def orthogonal(s: SignedSubset, t: SignedSubset) -> bool:
    common = s.support & t.support
    if not common:
        return True
    products = {s(e) * t(e) for e in common}
    return products == {1, -1}


def _sorted_signed(items: Iterable[SignedSubset]) -> list[SignedSubset]:
    return sorted(items, key=SignedSubset.key)


@dataclass(frozen=True)
class OrientedMatroid:
    ground: tuple
    circuits: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "ground", canonical(self.ground))
        object.__setattr__(self, "circuits", frozenset(self.circuits))
        g = set(self.ground)
        for c in self.circuits:
            if not c.support <= g:
                raise MatroidError(f"circuit {c!r} uses elements outside the ground set")

    def sorted_circuits(self) -> list[SignedSubset]:
        return _sorted_signed(self.circuits)

    def to_json(self) -> dict:
        return {
            "ground": list(self.ground),
            "circuits": [
                {"plus": list(canonical(c.plus)), "minus": list(canonical(c.minus))}
                for c in self.sorted_circuits()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "OrientedMatroid":
        """Accepts {"ground", "circuits": [{"plus", "minus"}]} or {"vectors": {id: [p/q, ...]}}."""
        if "vectors" in data:
            return circuits_from_vectors({k: linalg.as_vector(v) for k, v in data["vectors"].items()})
        circuits = [SignedSubset(c.get("plus", ()), c.get("minus", ())) for c in data["circuits"]]
        return cls(tuple(data["ground"]), frozenset(circuits))

    @cached_property
    def _supports(self) -> frozenset:
        return frozenset(c.support for c in self.circuits)

    def is_independent(self, xs: Iterable) -> bool:
        xs = frozenset(xs)
        return not any(s <= xs for s in self._supports)

    @cached_property
    def _bases_and_rank(self) -> tuple[tuple[frozenset, ...], int]:
        _check_cap(len(self.ground))
        level = [frozenset()]
        maximal: list[frozenset] = []
        while level:
            nxt: set[frozenset] = set()
            for s in level:
                grown = False
                for e in self.ground:
                    if e not in s:
                        t = s | {e}
                        if self.is_independent(t):
                            nxt.add(t)
                            grown = True
                if not grown:
                    maximal.append(s)
            level = list(nxt)
        sizes = {len(b) for b in maximal}
        if len(sizes) != 1:
            raise MatroidError(f"not a matroid: bases of sizes {sorted(sizes)}")
        ordered = tuple(sorted(maximal, key=lambda b: [sort_key(e) for e in canonical(b)]))
        return ordered, sizes.pop()

    @property
    def rank(self) -> int:
        return self._bases_and_rank[1]

    def is_basis(self, xs: Iterable) -> bool:
        xs = frozenset(xs)
        return len(xs) == self.rank and xs <= set(self.ground) and self.is_independent(xs)

    def delete(self, e) -> "OrientedMatroid":
        """Restriction to ground - e."""
        return OrientedMatroid(
            tuple(x for x in self.ground if x != e),
            frozenset(c for c in self.circuits if e not in c.support),
        )

    def fundamental_circuit(self, basis: Iterable, u) -> SignedSubset:
        """The circuit with support inside basis + u that contains u, oriented u -> '+'."""
        basis = frozenset(basis)
        found = [c for c in self.circuits if u in c.plus and c.support <= basis | {u}]
        if len(found) != 1:
            raise MatroidError(f"no unique fundamental circuit for {u!r} in {canonical(basis)!r}")
        return found[0]


def bases(m: OrientedMatroid) -> tuple[tuple[frozenset, ...], int]:
    """All bases (in canonical order) and the rank."""
    return m._bases_and_rank


# ---------------------------------------------------------------- realization


def circuits_from_vectors(cfg: Mapping[Hashable, Sequence]) -> OrientedMatroid:
    """Signed circuits of a rational vector configuration."""
    vecs = {k: linalg.as_vector(v) for k, v in cfg.items()}
    ground = canonical(vecs)
    _check_cap(len(ground))
    if not ground:
        return OrientedMatroid((), frozenset())
    dims = {len(v) for v in vecs.values()}
    if len(dims) != 1:
        raise MatroidError("degenerate configuration: vectors of different dimensions")
    dim = dims.pop()
    for k in ground:
        if all(x == 0 for x in vecs[k]):
            raise MatroidError(f"degenerate configuration: zero vector {k!r}")
    for a, b in combinations(ground, 2):
        if linalg.rank([vecs[a], vecs[b]]) < 2:
            raise MatroidError(f"degenerate configuration: {a!r} and {b!r} are proportional")
    circuits: set[SignedSubset] = set()
    supports: list[frozenset] = []
    for size in range(3, min(dim + 1, len(ground)) + 1):
        for sub in combinations(ground, size):
            fs = frozenset(sub)
            if any(s <= fs for s in supports):
                continue
            ker = linalg.nullspace([vecs[k] for k in sub])
            if len(ker) != 1 or any(x == 0 for x in ker[0]):
                continue
            c = SignedSubset.from_signs({k: linalg.sign(x) for k, x in zip(sub, ker[0])})
            circuits.update((c, -c))
            supports.append(fs)
    return OrientedMatroid(ground, frozenset(circuits))


# ---------------------------------------------------------------- axioms


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "axiom": self.axiom,
            "witness": [repr(w) for w in self.witness],
        }


def _weak_elimination_ok(m: OrientedMatroid, s: SignedSubset, t: SignedSubset, u) -> bool:
    allowed_p = (s.plus | t.plus) - {u}
    allowed_m = (s.minus | t.minus) - {u}
    return any(w.plus <= allowed_p and w.minus <= allowed_m for w in m.circuits)


def validate_axioms(m: OrientedMatroid, strong: bool = True) -> AxiomReport:
    cs = m.sorted_circuits()
    for c in cs:
        if not c.support:
            return AxiomReport(False, "i", (c,))
    for c in cs:
        if -c not in m.circuits:
            return AxiomReport(False, "ii", (c,))
    for s in cs:
        for t in cs:
            if s.support <= t.support and t != s and t != -s:
                return AxiomReport(False, "iii", (s, t))
    for s in cs:
        for t in cs:
            if t == -s:
                continue
            for u in canonical((s.plus & t.minus) | (s.minus & t.plus)):
                if not _weak_elimination_ok(m, s, t, u):
                    return AxiomReport(False, "iv", (s, t, u))
    if strong:
        for s in cs:
            for t in cs:
                for u in canonical((s.plus & t.minus) | (s.minus & t.plus)):
                    for v in canonical((s.plus - t.minus) | (s.minus - t.plus)):
                        if _strong_candidates(m, s, t, u, v) == []:
                            return AxiomReport(False, "strong elimination", (s, t, u, v))
    return AxiomReport(True)


def _strong_candidates(m, s, t, u, v) -> list[SignedSubset]:
    allowed_p = (s.plus | t.plus) - {u}
    allowed_m = (s.minus | t.minus) - {u}
    return [
        w for w in m.circuits
        if v in w.support and w.plus <= allowed_p and w.minus <= allowed_m
    ]


def strong_eliminate(m: OrientedMatroid, sigma: SignedSubset, tau: SignedSubset, u, v) -> SignedSubset:
    """Lexicographically least circuit eliminating u from sigma, tau and keeping v.

    Only the position of u is gated; v merely has to lie in sigma's support.
    """
    if sigma not in m.circuits or tau not in m.circuits:
        raise MatroidError("not an elimination position: arguments must be circuits")
    if u not in (sigma.plus & tau.minus) | (sigma.minus & tau.plus):
        raise MatroidError("not an elimination position")
    if v not in sigma.support or v == u:
        raise MatroidError("not an elimination position")
    found = _strong_candidates(m, sigma, tau, u, v)
    if not found:
        raise MatroidError("axiom failure: no circuit satisfies strong elimination")
    return min(found, key=SignedSubset.key)


# ---------------------------------------------------------------- hulls


def hull_witness(m: OrientedMatroid, xs: Iterable, y) -> SignedSubset | None:
    xs = frozenset(xs)
    found = [c for c in m.circuits if c.minus == {y} and c.plus <= xs]
    return min(found, key=SignedSubset.key) if found else None


def convex_hull_contains(m: OrientedMatroid, xs: Iterable, y) -> bool:
    xs = frozenset(xs)
    return y in xs or hull_witness(m, xs, y) is not None


def is_acyclic(m: OrientedMatroid) -> bool:
    return not any(not c.minus for c in m.circuits)


def is_nondegenerate_point(m: OrientedMatroid, b) -> bool:
    """b lies in the hull of no set of fewer than rank elements of ground - b."""
    return all(len(c.plus) >= m.rank for c in m.circuits if c.minus == {b})


# ---------------------------------------------------------------- cocircuits


def span(m: OrientedMatroid, xs: Iterable) -> frozenset:
    xs = frozenset(xs)
    out = set(xs)
    for c in m.circuits:
        rest = c.support - xs
        if len(rest) == 1:
            out |= rest
    return frozenset(out)


def cocircuits(m: OrientedMatroid) -> frozenset:
    """Both orientations of the cocircuit of every hyperplane."""
    all_bases, r = bases(m)
    ground = set(m.ground)
    seen: set[frozenset] = set()
    out: set[SignedSubset] = set()
    for basis in all_bases:
        for e in canonical(basis):
            x = basis - {e}
            h = span(m, x)
            if h in seen:
                continue
            seen.add(h)
            signs = {e: 1}
            for u in ground - h - {e}:
                c = m.fundamental_circuit(basis, u)
                # c has u positive; the cocircuit sign of u is minus the sign of e in c
                signs[u] = -c(e)
            tau = SignedSubset.from_signs(signs)
            out.update((tau, -tau))
    for tau in out:
        for c in m.circuits:
            if not orthogonal(tau, c):
                raise MatroidError(f"inconsistent matroid: cocircuit {tau!r} not orthogonal to {c!r}")
    return frozenset(out)


# ---------------------------------------------------------------- Todd


def todd_circuit(m: OrientedMatroid, sigma: SignedSubset, tau: SignedSubset, w) -> tuple[SignedSubset, bool]:
    """The circuit of Todd's theorem and whether it is forced to be unique."""
    if sigma not in m.circuits or tau not in m.circuits:
        raise MatroidError("Todd preconditions fail: arguments must be circuits")
    if w not in tau.support or w in sigma.support:
        raise MatroidError("Todd preconditions fail: w must lie in tau's support only")
    if not any(sigma(e) == -tau(e) for e in sigma.support & tau.support):
        raise MatroidError("Todd preconditions fail: no opposite-sign common element")
    allowed_p = (sigma.plus | tau.plus) - sigma.minus
    allowed_m = (sigma.minus | tau.minus) - sigma.plus
    found = [
        c for c in m.circuits
        if c.plus <= allowed_p and c.minus <= allowed_m and c(w) == tau(w)
    ]
    if not found:
        raise MatroidError("axiom failure: no circuit satisfies Todd's theorem")
    unique = tau.support <= sigma.support | {w}
    if unique:
        if len(found) != 1:
            raise MatroidError(f"axiom failure: Todd circuit not unique ({found!r})")
        if not (sigma.support - tau.support) <= found[0].support:
            raise MatroidError("axiom failure: Todd circuit misses part of sigma's support")
    return min(found, key=SignedSubset.key), unique


# ---------------------------------------------------------------- extensions


def lex_extension(m: OrientedMatroid, ordered_basis: Sequence, p) -> OrientedMatroid:
    """One-point lexicographic extension of m by p along ordered_basis.

    The cocircuits of the extension are read off from those of m (a cocircuit
    missing every a_i keeps p on its hyperplane; otherwise p takes the sign of
    the first a_i it contains). Circuits through p are then found by
    brute force as the minimal signed sets orthogonal to all of them.
    """
    if p in m.ground:
        raise MatroidError(f"new element {p!r} collides with the ground set")
    seq = list(ordered_basis)
    if len(set(seq)) != len(seq) or not set(seq) <= set(m.ground) or not m.is_independent(seq):
        raise MatroidError("ordered basis is not an independent sequence of m")
    _check_cap(len(m.ground) + 1)
    r = m.rank
    extended: list[SignedSubset] = []
    for tau in cocircuits(m):
        first = next((a for a in seq if a in tau.support), None)
        if first is None:
            extended.append(tau)
        else:
            signs = {e: tau(e) for e in tau.support}
            signs[p] = tau(first)
            extended.append(SignedSubset.from_signs(signs))
    old = set(m.circuits)
    supports = [c.support for c in old]
    new: set[SignedSubset] = set()
    for size in range(1, r + 1):
        for rest in combinations(m.ground, size):
            fs = frozenset(rest) | {p}
            if any(s <= fs for s in supports):
                continue
            relevant = [t for t in extended if t.support & fs]
            hits = []
            for signs in product((1, -1), repeat=size):
                cand = SignedSubset.from_signs({p: 1, **dict(zip(rest, signs))})
                if all(orthogonal(cand, t) for t in relevant):
                    hits.append(cand)
            if len(hits) > 1:
                raise MatroidError(f"inconsistent extension: several sign patterns on {canonical(fs)!r}")
            if hits:
                for c in hits:
                    new.update((c, -c))
                supports.append(fs)
    return OrientedMatroid(tuple(m.ground) + (p,), frozenset(old | new))


def exchange_unique(m: OrientedMatroid, b, basis: Iterable, w):
    """The unique v in basis with b in conv(basis - v + w)."""
    basis = frozenset(basis)
    if w in basis or w == b:
        raise MatroidError("framework violated: w must lie outside the basis and differ from b")
    if not is_acyclic(m):
        raise MatroidError("framework violated: matroid is not acyclic")
    if not is_nondegenerate_point(m, b):
        raise MatroidError("framework violated: b is degenerate")
    if not convex_hull_contains(m, basis, b):
        raise MatroidError("framework violated: b is not in the hull of the basis")
    found = [v for v in canonical(basis) if convex_hull_contains(m, (basis - {v}) | {w}, b)]
    if len(found) != 1:
        raise MatroidError(f"framework violated: {len(found)} exchange candidates")
    return found[0]

"""Coloring theorems as executable searches.

Top simplices of the envelope E(I) are handled as pairs (A, σ) standing for
σ * (I - A), with σ a top simplex of D(A) and A nonempty. A facet of such a
simplex is a pair (C, τ) standing for τ * (I - C) with |τ| = |C| - 1; its
cofaces are read off either from an explicit simplex-family or, without
materializing anything, from the pivot rule of an order family.

Brute-force solvers list every solution so that parity can be checked;
path-following solvers walk the pivot graph from the simplex containing the
facet I - i and return the simplex where the walk stops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from . import linalg, om
from .complexes import SimplexFamily, classify_coloring, is_chain_simplex, subsets
from .om import OrientedMatroid, SignedSubset
from .orders import OrderFamily, enumerate_cells, extend_orders, is_dominant, pivot_neighbors
from .tokens import IndexToken, canonical, jsonable, sort_key

Top = tuple  # (A: frozenset, sigma: frozenset)


class SolverError(ValueError):
    pass


# ---------------------------------------------------------------- frameworks


@dataclass(frozen=True, order=True)
class Perturbed:
    """Fresh ground element added by the lexicographic extension."""

    name: str = "p"


@dataclass(frozen=True)
class MatroidFramework:
    matroid: OrientedMatroid
    basis: tuple  # v_0 .. v_n, labelled by I
    b: Hashable

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        m = self.matroid
        if len(set(self.basis)) != len(self.basis):
            raise SolverError("basis elements must be distinct")
        if self.b in self.basis or self.b not in m.ground:
            raise SolverError("b must be a ground element outside the basis")
        if not m.is_basis(self.basis):
            raise SolverError("B is not a basis of the matroid")
        if not om.is_acyclic(m):
            raise SolverError("framework hypothesis fails: matroid is not acyclic")
        if not om.convex_hull_contains(m, self.basis, self.b):
            raise SolverError("framework hypothesis fails: b is not in the hull of B")

    @property
    def I(self) -> tuple[int, ...]:
        return tuple(range(len(self.basis)))

    @property
    def nondegenerate(self) -> bool:
        return om.is_nondegenerate_point(self.matroid, self.b)

    def relabel(self, basis: Sequence) -> "MatroidFramework":
        return MatroidFramework(self.matroid, tuple(basis), self.b)


def good_basis(fr: MatroidFramework, S: Iterable) -> bool:
    S = frozenset(S)
    return fr.b not in S and fr.matroid.is_basis(S) and om.convex_hull_contains(fr.matroid, S, fr.b)


def delta_cochain(fr: MatroidFramework, i: int, epsilon: Iterable) -> int:
    eps = frozenset(epsilon)
    v = fr.basis[i]
    if v in eps:
        raise SolverError("element collision: v_i already in the set")
    return int(good_basis(fr, eps | {v}))


def coboundary_delta(fr: MatroidFramework, i: int, sigma: Iterable) -> int:
    """Sum of δ_i over the facets of sigma; faces containing v_i count 0."""
    sigma = frozenset(sigma)
    v = fr.basis[i]
    return sum(delta_cochain(fr, i, sigma - {s}) for s in sigma if v not in sigma - {s}) % 2


# ---------------------------------------------------------------- solutions


@dataclass(frozen=True)
class Solution:
    C: frozenset
    tau: tuple
    basis: tuple
    coeffs: tuple | None = None
    witness: SignedSubset | None = None

    def to_json(self) -> dict:
        return {
            "C": sorted(self.C),
            "tau": [jsonable(v) for v in self.tau],
            "basis": [jsonable(v) for v in self.basis],
            "coeffs": [linalg.fmt(y) for y in self.coeffs] if self.coeffs is not None else [],
        }


def _solution_key(s: Solution) -> tuple:
    return (len(s.C), sorted(s.C), [sort_key(v) for v in s.tau])


# ---------------------------------------------------------------- geometry of E(I)


class FamilyCofaces:
    """Top simplices and facet adjacency of E(I) for an explicit family."""

    def __init__(self, D: SimplexFamily):
        self.D = D
        self.I = frozenset(D.I)
        self._tops = {A: frozenset(frozenset(s) for s in D.top(A)) for A in subsets(D.I) if A}
        self._up: dict[tuple, list[frozenset]] = {}
        for A, tops in self._tops.items():
            for s in tops:
                for x in s:
                    self._up.setdefault((A, s - {x}), []).append(s)

    def tops(self, A) -> list[frozenset]:
        return sorted(self._tops.get(frozenset(A), ()), key=_set_key)

    def cofaces(self, C: frozenset, tau: frozenset) -> list[Top]:
        out = [(C, s) for s in self._up.get((C, tau), [])]
        for j in sorted(C):
            A = C - {j}
            if A and tau in self._tops.get(A, ()):
                out.append((A, tau))
        return out

    def start(self, i: int) -> Top:
        tops = self.tops({i})
        if len(tops) != 1:
            raise SolverError(f"D({{{i}}}) must have exactly one vertex, has {len(tops)}")
        return (frozenset({i}), tops[0])


class OrderCofaces:
    """The same interface computed from an order family's pivot rule."""

    def __init__(self, f: OrderFamily):
        self.f = f
        self.I = frozenset(f.I)

    def tops(self, A) -> list[frozenset]:
        return sorted(enumerate_cells(self.f, A), key=_set_key)

    def cofaces(self, C: frozenset, tau: frozenset) -> list[Top]:
        up, down = pivot_neighbors(self.f, tau, C)
        return [(C, s) for s in up] + [(A, tau) for A in down if A]

    def start(self, i: int) -> Top:
        up, _ = pivot_neighbors(self.f, frozenset(), {i})
        if len(up) != 1:
            raise SolverError("the order family has no elements")
        return (frozenset({i}), up[0])


def geometry(D: SimplexFamily | OrderFamily):
    if isinstance(D, OrderFamily):
        return OrderCofaces(D)
    return FamilyCofaces(D)


def _set_key(s) -> list:
    return [sort_key(v) for v in canonical(s)]


def _facets(top: Top, I: frozenset) -> list[tuple]:
    """Facets of a top simplex: each is (C, tau, removed vertex)."""
    A, s = top
    out = [(A, s - {x}, x) for x in canonical(s)]
    out += [(A | {j}, s, IndexToken(j)) for j in sorted(I - A)]
    return out


# ---------------------------------------------------------------- the walk


class Labelling:
    """Colors of the vertices of E(I) and the notion of a good color set.

    ``color(x)`` gives the color of a family vertex, ``label(j)`` the color of
    the index token j, and ``good`` decides whether an (n+1)-set of colors is
    a solution.
    """

    def __init__(self, color: Callable, label: Callable[[int], Hashable], good: Callable[[frozenset], bool]):
        self.color = color
        self.label = label
        self.good = good

    def image(self, A: frozenset, tau: Iterable, I: frozenset) -> tuple | None:
        """φ(τ * (I - A)) if φ is injective on it, else None."""
        cols = [self.color(x) for x in tau] + [self.label(j) for j in sorted(I - A)]
        s = frozenset(cols)
        return s if len(s) == len(cols) else None

    def is_solution(self, top: Top, I: frozenset) -> bool:
        img = self.image(top[0], top[1], I)
        return img is not None and self.good(img)

    def doors(self, top: Top, I: frozenset, i: int) -> list[tuple]:
        """Facets F with φ(F) + v_i good, excluding the facet I - i."""
        v = self.label(i)
        out = []
        for C, tau, _ in _facets(top, I):
            if not tau and C == {i}:
                continue
            img = self.image(C, tau, I)
            if img is not None and v not in img and self.good(img | {v}):
                out.append((C, tau))
        return out


def classical_labelling(c: Mapping, I: Iterable[int]) -> Labelling:
    full = frozenset(I)
    return Labelling(c.__getitem__, lambda j: j, lambda s: s == full)


def matroid_labelling(fr: MatroidFramework, c: Mapping) -> Labelling:
    return Labelling(c.__getitem__, lambda j: fr.basis[j], lambda s: good_basis(fr, s))


def walk(geo, lab: Labelling, i: int = 0, max_steps: int | None = None) -> tuple[Top, list[Top]]:
    """Follow the pivot path from the simplex containing I - i to its far end."""
    I = geo.I
    cur = geo.start(i)
    path = [cur]
    entered = None
    seen = {(cur[0], cur[1])}
    while True:
        if lab.is_solution(cur, I):
            return cur, path
        doors = [d for d in lab.doors(cur, I, i) if d != entered]
        if len(doors) != 1:
            raise SolverError(
                f"framework/pseudo-simplex violated: {len(doors)} exits at {_fmt_top(cur)}"
            )
        C, tau = doors[0]
        nxt = [t for t in geo.cofaces(C, tau) if t != cur]
        if len(nxt) != 1:
            raise SolverError(f"framework/pseudo-simplex violated: facet has {len(nxt) + 1} cofaces")
        cur = nxt[0]
        if cur in seen:
            raise SolverError("pivot path revisits a simplex")
        seen.add(cur)
        path.append(cur)
        entered = (C, tau)
        if max_steps is not None and len(path) > max_steps:
            raise SolverError("pivot path exceeded the step limit")


def _fmt_top(top: Top) -> str:
    return f"(A={sorted(top[0])}, σ={canonical(top[1])!r})"


@dataclass
class PivotGraph:
    vertices: list
    edges: list  # (facet, top, top)
    start: Top
    terminal: Top
    degree: dict = field(default_factory=dict)


def build_pivot_graph(fr: MatroidFramework, D: SimplexFamily | OrderFamily, c: Mapping, i: int = 0) -> PivotGraph:
    """The graph G_i on all top simplices of E(I), with its degree contract checked."""
    geo = geometry(D)
    lab = matroid_labelling(fr, c)
    I = geo.I
    tops = [(A, s) for A in subsets(sorted(I)) if A for s in geo.tops(A)]
    start = geo.start(i)
    degree = {}
    edges = {}
    for t in tops:
        ds = lab.doors(t, I, i)
        degree[t] = len(ds)
        for d in ds:
            edges.setdefault(d, set()).add(t)
    for t in tops:
        good = lab.is_solution(t, I)
        if degree[t] == 0 and not good and t != start:
            continue  # not a vertex of G_i
        expected = (0 if good else 1) if t == start else (1 if good else 2)
        if degree[t] != expected:
            raise SolverError(
                f"framework/pseudo-simplex violated: degree {degree[t]} != {expected} at {_fmt_top(t)}"
            )
    edge_list = []
    for d, ts in edges.items():
        if len(ts) != 2:
            raise SolverError("framework/pseudo-simplex violated: an edge does not join two simplices")
        a, b = sorted(ts, key=lambda t: (sorted(t[0]), _set_key(t[1])))
        edge_list.append((d, a, b))
    # walk the graph itself rather than the geometry
    adj: dict = {}
    for d, a, b in edge_list:
        adj.setdefault(a, []).append((d, b))
        adj.setdefault(b, []).append((d, a))
    cur, came = start, None
    while True:
        nxt = [(d, t) for d, t in adj.get(cur, []) if d != came]
        if not nxt:
            break
        came, cur = nxt[0]
    vertices = [t for t in tops if degree[t] > 0 or t == start]
    return PivotGraph(vertices, edge_list, start, cur, degree)


# ---------------------------------------------------------------- classical solvers


def _check_chain_simplex(D):
    if isinstance(D, SimplexFamily):
        chk = is_chain_simplex(D)
        if not chk:
            raise SolverError(f"chain-simplex violated: {chk.witness!r}")


def solve_classical_any(D: SimplexFamily, c: Mapping) -> list[tuple[frozenset, tuple]]:
    """All (A, σ) with A nonempty, σ a top simplex of D(A), and c(σ) = A."""
    _check_chain_simplex(D)
    geo = geometry(D)
    out = []
    for A in subsets(sorted(geo.I)):
        if not A:
            continue
        for s in geo.tops(A):
            if len(s) == len(A) and frozenset(c[x] for x in s) == A:
                out.append((A, canonical(s)))
    if len(out) % 2 == 0:
        raise SolverError(f"chain-simplex violated: {len(out)} solutions")
    return out


def _full_cells(D, c) -> list[tuple]:
    geo = geometry(D)
    return [canonical(s) for s in geo.tops(geo.I) if frozenset(c[x] for x in s) == geo.I]


def solve_classical_AS(D: SimplexFamily, c: Mapping) -> list[tuple]:
    kind = classify_coloring(D, c)
    if kind not in ("alexander_sperner", "both"):
        raise SolverError("coloring is not an Alexander-Sperner coloring")
    _check_chain_simplex(D)
    out = _full_cells(D, c)
    if len(out) % 2 == 0:
        raise SolverError(f"chain-simplex violated: {len(out)} solutions")
    return out


def solve_scarf_dual(D: SimplexFamily, c: Mapping) -> list[tuple]:
    kind = classify_coloring(D, c)
    if kind not in ("scarf", "both"):
        raise SolverError("coloring is not a Scarf coloring")
    _check_chain_simplex(D)
    out = _full_cells(D, c)
    if len(out) % 2 == 0:
        raise SolverError(f"chain-simplex violated: {len(out)} solutions")
    return out


def classical_path(D: SimplexFamily | OrderFamily, c: Mapping, i: int = 0) -> tuple[frozenset, tuple]:
    """One (A, σ) with c(σ) = A, found by walking from the simplex containing I - i."""
    geo = geometry(D)
    (A, s), _ = walk(geo, classical_labelling(c, geo.I), i)
    return A, canonical(s)


# ---------------------------------------------------------------- matroid solvers


def _basis_of(fr: MatroidFramework, C: frozenset, tau, c: Mapping) -> frozenset:
    return frozenset(c[x] for x in tau) | {fr.basis[j] for j in fr.I if j not in C}


def _check_colors(fr: MatroidFramework, D, c: Mapping):
    ground = set(fr.matroid.ground) - {fr.b}
    verts = D.X if isinstance(D, OrderFamily) else D.vertices()
    for v in verts:
        if c[v] not in ground:
            raise SolverError(f"color of {v!r} is not an element of M - b")


def solve_matroid_nd(
    fr: MatroidFramework,
    D: SimplexFamily | OrderFamily,
    c: Mapping,
    mode: str = "brute",
    index: int = 0,
) -> list[Solution]:
    """Solutions (C, τ) with c(τ) ∪ {v_i : i ∉ C} a good basis.

    ``brute`` lists all of them and checks the count is odd; ``path`` returns
    the single solution reached by walking the pivot graph G_index.
    """
    if not fr.nondegenerate:
        raise SolverError("degenerate framework: use general solver")
    if len(fr.I) != fr.matroid.rank:
        raise SolverError("|I| must equal the rank of the matroid")
    _check_colors(fr, D, c)
    geo = geometry(D)
    if mode == "path":
        (C, s), _ = walk(geo, matroid_labelling(fr, c), index)
        return [_matroid_solution(fr, C, s, c)]
    if mode != "brute":
        raise SolverError(f"unknown mode {mode!r}")
    _check_chain_simplex(D)
    out = []
    for C in subsets(sorted(geo.I)):
        if not C:
            continue
        for s in geo.tops(C):
            cols = [c[x] for x in s]
            if len(set(cols)) != len(cols):
                continue
            S = _basis_of(fr, C, s, c)
            if len(S) == len(fr.I) and good_basis(fr, S):
                out.append(_matroid_solution(fr, C, s, c))
    if len(out) % 2 == 0:
        raise SolverError(f"chain-simplex violated: {len(out)} solutions")
    return sorted(out, key=_solution_key)


def _matroid_solution(fr, C, s, c) -> Solution:
    S = _basis_of(fr, frozenset(C), s, c)
    return Solution(frozenset(C), canonical(s), canonical(S), None, om.hull_witness(fr.matroid, S, fr.b))


def perturbation_index(fr: MatroidFramework) -> int:
    for i, v in enumerate(fr.basis):
        if fr.matroid.is_basis((set(fr.basis) - {v}) | {fr.b}):
            return i
    raise SolverError("b parallel to basis structure: no v_i can be exchanged for b")


def perturbed_framework(fr: MatroidFramework) -> tuple[MatroidFramework, OrientedMatroid]:
    """(L - b with p in the role of b, L) for the lexicographic extension L."""
    j = perturbation_index(fr)
    p = Perturbed()
    while p in fr.matroid.ground:
        p = Perturbed(p.name + "'")
    order = [fr.b] + [v for k, v in enumerate(fr.basis) if k != j]
    L = om.lex_extension(fr.matroid, order, p)
    return MatroidFramework(L.delete(fr.b), fr.basis, p), L


def solve_matroid_general(
    fr: MatroidFramework,
    D: SimplexFamily | OrderFamily,
    c: Mapping,
    mode: str = "brute",
    index: int = 0,
    force_perturbation: bool = False,
) -> Solution:
    """One solution, through the lexicographic extension when b is degenerate."""
    _check_colors(fr, D, c)
    if fr.nondegenerate and not force_perturbation:
        return solve_matroid_nd(fr, D, c, mode, index)[0]
    fr2, _ = perturbed_framework(fr)
    sols = solve_matroid_nd(fr2, D, c, mode, index)
    s = sols[0]
    if not good_basis(fr, s.basis):
        raise SolverError("theorem violated: perturbed solution is not good in the original matroid")
    return Solution(s.C, s.tau, s.basis, None, om.hull_witness(fr.matroid, s.basis, fr.b))


def solve_generalized_scarf(f: OrderFamily, fr: MatroidFramework, phi: Mapping, mode: str = "brute") -> frozenset:
    """σ ⊆ X ∪ I dominant for I in the extended orders with φ(σ) good."""
    for i, v in enumerate(fr.basis):
        if phi.get(IndexToken(i), v) != v:
            raise SolverError(f"phi must send index {i} to v_{i}")
    if not f.X:
        sigma = frozenset(IndexToken(i) for i in f.I)
    else:
        c = {x: phi[x] for x in f.X}
        s = solve_matroid_general(fr, f, c, mode)
        sigma = frozenset(s.tau) | {IndexToken(i) for i in f.I if i not in s.C}
    ext = extend_orders(f)
    colors = {**{IndexToken(i): v for i, v in enumerate(fr.basis)}, **{x: phi[x] for x in f.X}}
    if len(sigma) != len(f.I) or not is_dominant(ext, sigma, f.I):
        raise SolverError("theorem violated: result is not an I-cell of the extended orders")
    if not good_basis(fr, {colors[x] for x in sigma}):
        raise SolverError("theorem violated: result does not map to a good basis")
    return sigma


# ---------------------------------------------------------------- vector solvers


class ParallelTarget(SolverError):
    """b points along a ground vector, so it cannot be its own matroid element."""


def direction(v: Sequence) -> tuple:
    """v scaled by a positive number so that its largest absolute entry is 1."""
    v = linalg.as_vector(v)
    top = max((abs(x) for x in v), default=Fraction(0))
    if top == 0:
        raise SolverError("zero vector in a vector coloring")
    return tuple(x / top for x in v)


def vector_framework(c: Mapping, b: Sequence, basis: Sequence[Sequence] | None = None):
    """Realized framework for a vector coloring; returns (fr, coloring by ground id, id -> vector).

    Positive multiples name one ground element, since cone conditions do not
    see positive scaling.
    """
    b = linalg.as_vector(b)
    dim = len(b)
    if any(x < 0 for x in b) or all(x == 0 for x in b):
        raise SolverError("b must have nonnegative coordinates and be nonzero")
    if basis is None:
        basis = [tuple(Fraction(int(k == i)) for k in range(dim)) for i in range(dim)]
    basis = [linalg.as_vector(v) for v in basis]
    ids: dict[tuple, Hashable] = {}
    vectors: dict[Hashable, tuple] = {}
    for i, v in enumerate(basis):
        if direction(v) in ids:
            raise SolverError("basis vectors must not be parallel")
        ids[direction(v)] = f"v{i}"
        vectors[f"v{i}"] = v
    colored = {}
    k = 0
    for x in sorted(c, key=sort_key):
        vec = linalg.as_vector(c[x])
        if len(vec) != dim:
            raise SolverError(f"color of {x!r} has dimension {len(vec)}, expected {dim}")
        d = direction(vec)
        if d not in ids:
            ids[d] = f"c{k}"
            vectors[f"c{k}"] = vec
            k += 1
        colored[x] = ids[d]
    if direction(b) in ids:
        raise ParallelTarget(f"b is parallel to {ids[direction(b)]}")
    vectors["b"] = b
    try:
        m = om.circuits_from_vectors(vectors)
    except om.MatroidError as e:
        raise SolverError(str(e)) from None
    if not om.is_acyclic(m.delete("b")) or not om.is_acyclic(m):
        raise SolverError("framework hypothesis fails: nonnegative solutions are unbounded")
    fr = MatroidFramework(m, tuple(f"v{i}" for i in range(dim)), "b")
    return fr, colored, vectors


def _vector_solution(D, c, b, basis, mode) -> Solution:
    fr, colored, vectors = vector_framework(c, b, basis)
    s = solve_matroid_general(fr, D, colored, mode)
    basis_vecs = [vectors[f"v{i}"] for i in fr.I]
    cols = [linalg.as_vector(c[x]) for x in s.tau] + [basis_vecs[i] for i in fr.I if i not in s.C]
    return Solution(s.C, s.tau, tuple(cols), None, s.witness)


def solve_vector(
    D: SimplexFamily | OrderFamily,
    c: Mapping,
    b: Sequence,
    basis: Sequence[Sequence] | None = None,
    mode: str = "brute",
    max_shrink: int = 60,
) -> Solution:
    """(C, τ) with c(τ) ∪ {v_i : i ∉ C} a basis and b a nonnegative combination of it.

    When b is parallel to a ground vector it is moved inside the cone of the
    basis by δ·Σ v_i, with δ = 2^-k shrinking until the answer checks exactly
    for the original b; by closedness of cones some δ > 0 works.
    """
    b = linalg.as_vector(b)
    try:
        s = _vector_solution(D, c, b, basis, mode)
    except ParallelTarget:
        dim = len(b)
        bvecs = [linalg.as_vector(v) for v in basis] if basis is not None else [
            tuple(Fraction(int(k == i)) for k in range(dim)) for i in range(dim)]
        shift = tuple(sum(v[k] for v in bvecs) for k in range(dim))
        for k in range(1, max_shrink + 1):
            delta = Fraction(1, 2 ** k)
            try:
                s = _vector_solution(D, c, tuple(x + delta * y for x, y in zip(b, shift)), basis, mode)
            except ParallelTarget:
                continue
            y = linalg.solve(list(s.basis), b)
            if y is not None and all(v >= 0 for v in y):
                break
        else:
            raise SolverError("theorem violated: no perturbation of b produced a valid basis")
    y = linalg.solve(list(s.basis), b)
    if y is None or any(v < 0 for v in y):
        raise SolverError("theorem violated: b is not a nonnegative combination of the basis")
    return Solution(s.C, s.tau, s.basis, y, s.witness)


# ---------------------------------------------------------------- hedgehog


def hedgehog_cocircuits(fr: MatroidFramework) -> list[SignedSubset]:
    """η_i: the cocircuit of span(B - v_i), oriented so that η_i(v_i) = +."""
    cocs = om.cocircuits(fr.matroid)
    out = []
    for i, v in enumerate(fr.basis):
        H = om.span(fr.matroid, set(fr.basis) - {v})
        (eta,) = [t for t in cocs if t.support == set(fr.matroid.ground) - H and t(v) == 1]
        out.append(eta)
    return out


def hedgehog_violations(fr: MatroidFramework, D: SimplexFamily, c: Mapping) -> list[tuple[int, Hashable]]:
    etas = hedgehog_cocircuits(fr)
    bad = []
    for i in fr.I:
        for C in subsets(fr.I):
            if i in C or not C:
                continue
            for v in D.vertices_of(C):
                if etas[i](c[v]) > 0 and (i, v) not in bad:
                    bad.append((i, v))
    return bad


def solve_hedgehog(fr: MatroidFramework, D: SimplexFamily, c: Mapping, mode: str = "brute") -> Solution:
    """A top simplex τ of D(I) with c(τ) a good basis, for a hedgehog coloring."""
    for w in fr.matroid.circuits:
        if w.minus == {fr.b} and w.plus < set(fr.basis):
            raise SolverError("b lies in the hull of a proper subset of B")
    bad = hedgehog_violations(fr, D, c)
    if bad:
        raise SolverError(f"coloring fails the hedgehog predicate at {bad!r}")
    n1 = len(fr.basis)
    shifted = fr.relabel([fr.basis[(i + 1) % n1] for i in range(n1)])
    s = solve_matroid_general(shifted, D, c, mode)
    if s.C != frozenset(fr.I):
        raise SolverError(f"theorem violated: shifted solution has C = {sorted(s.C)}")
    return s

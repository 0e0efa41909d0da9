"""Seeded random instances and the property suites run by ``check-invariants``.

Every suite takes a ``random.Random`` and a case count and returns a
``SuiteReport``. Oracles here are independent of the code under test where a
cheap one exists: hull membership by exact linear solves, cell counts by
subset enumeration, and so on. Mutations swap in a known-bad implementation
so that a suite can be shown to fail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import linalg, om
from .chains2 import Mod2Chain, boundary, push_forward, star_product
from .complexes import SimplexFamily, from_order_family, subsets
from .geom import lattice, rn
from .orders import OrderFamily, brute_cells, is_dominant, pivot_neighbors
from .tokens import sort_key
from .solver import (
    SolverError,
    build_pivot_graph,
    solve_classical_AS,
    solve_classical_any,
    solve_matroid_nd,
    solve_scarf_dual,
    vector_framework,
)

SIZES = {
    "default": {
        "chains": 1000,
        "pivot_parity": 200,
        "odd_counts": 200,
        "path_vs_brute": 100,
        "axioms": 300,
        "lex_extension": 100,
        "freudenthal": 4,
        "intersection": 500,
    },
    "small": {
        "chains": 100,
        "pivot_parity": 20,
        "odd_counts": 20,
        "path_vs_brute": 10,
        "axioms": 30,
        "lex_extension": 10,
        "freudenthal": 3,
        "intersection": 50,
    },
}

MUTATIONS = ("boundary-drop-face", "pivot-drop-down", "lex-flip-p")


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: int = 0
    witness: object = None
    _witness_size: int | None = field(default=None, repr=False)

    def record(self, ok: bool, witness=None, size: int = 0) -> None:
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self._witness_size is None or size < self._witness_size:
            self.witness = witness
            self._witness_size = size

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": self.failures, "witness": self.witness}


# ---------------------------------------------------------------- generators


def random_chain(rng: random.Random, vertices, dim: int, density: float = 0.4) -> Mod2Chain:
    pool = list(combinations(sorted(vertices), dim + 1))
    return Mod2Chain(dim, frozenset(s for s in pool if rng.random() < density))


def random_order_family(rng: random.Random, max_x: int = 6, max_i: int = 3) -> OrderFamily:
    X = list(range(rng.randint(1, max_x)))
    orders = []
    for _ in range(rng.randint(1, max_i)):
        o = X[:]
        rng.shuffle(o)
        orders.append(o)
    return OrderFamily(X, orders)


def random_pseudo_simplex(rng: random.Random, max_i: int = 3) -> SimplexFamily:
    """Either the cell family of random orders or a Freudenthal triangulation."""
    if rng.random() < 0.6:
        f = random_order_family(rng, 6, max_i)
        while len(f.I) < 2:
            f = random_order_family(rng, 6, max_i)
        return from_order_family(f)
    n = rng.randint(1, max_i - 1)
    return lattice.freudenthal_family(n, rng.randint(1, 3))


def _allowed_colors(D: SimplexFamily, kind: str) -> dict:
    I = frozenset(D.I)
    allowed = {v: set(I) for v in D.vertices()}
    for A in subsets(D.I):
        if not A:
            continue
        for v in D.vertices_of(A):
            if kind == "alexander_sperner":
                allowed[v] &= A
            elif kind == "scarf" and A != I:
                allowed[v] -= A
    return allowed


def random_coloring(rng: random.Random, D: SimplexFamily, kind: str = "any") -> dict | None:
    allowed = _allowed_colors(D, kind)
    if any(not a for a in allowed.values()):
        return None
    return {v: rng.choice(sorted(a)) for v, a in sorted(allowed.items())}


def random_vector(rng: random.Random, dim: int, lo: int, hi: int) -> tuple:
    while True:
        v = tuple(Fraction(rng.randint(lo, hi)) for _ in range(dim))
        if any(v):
            return v


def _parallel(u, v) -> bool:
    return linalg.rank([u, v]) < 2


def random_configuration(rng: random.Random, dim: int, count: int, lo: int = -3, hi: int = 3) -> dict:
    """count pairwise non-parallel nonzero integer vectors."""
    out: dict = {}
    while len(out) < count:
        v = random_vector(rng, dim, lo, hi)
        if all(not _parallel(v, u) for u in out.values()):
            out[f"e{len(out)}"] = v
    return out


@dataclass
class VectorInstance:
    D: SimplexFamily
    colors: dict  # vertex -> vector
    b: tuple


def random_vector_instance(rng: random.Random, max_i: int = 3) -> VectorInstance:
    """A nondegenerate vector framework with standard basis and nonnegative colors."""
    while True:
        D = random_pseudo_simplex(rng, max_i)
        dim = len(D.I)
        basis = [tuple(Fraction(int(k == i)) for k in range(dim)) for i in range(dim)]
        b = tuple(Fraction(rng.randint(1, 5)) for _ in range(dim))
        if any(_parallel(b, e) for e in basis):
            continue
        pool: list = []
        while len(pool) < rng.randint(2, 5):
            v = random_vector(rng, dim, 0, 4)
            if all(not _parallel(v, u) for u in pool + basis + [b]):
                pool.append(v)
        choices = pool + basis
        colors = {v: rng.choice(choices) for v in D.vertices()}
        try:
            fr, _, _ = vector_framework(colors, b)
        except (SolverError, om.MatroidError):
            continue
        if fr.nondegenerate:
            return VectorInstance(D, colors, b)


def good_vector_sets(inst: VectorInstance) -> set[tuple[frozenset, tuple]]:
    """Brute force: (C, τ) with c(τ) ∪ {e_i : i ∉ C} a basis carrying b with nonnegative weights."""
    dim = len(inst.D.I)
    out = set()
    for C in subsets(inst.D.I):
        if not C:
            continue
        for tau in inst.D.top(C):
            cols = [inst.colors[x] for x in tau] + [
                tuple(Fraction(int(k == i)) for k in range(dim)) for i in range(dim) if i not in C
            ]
            if len(set(cols)) != dim or linalg.rank(cols) < dim:
                continue
            y = linalg.solve(cols, inst.b)
            if y is not None and all(v >= 0 for v in y):
                out.add((frozenset(C), tuple(tau)))
    return out


def random_point(rng: random.Random, n: int, span: int = 4, den: int = 3) -> tuple:
    return tuple(Fraction(rng.randint(-span * den, span * den), den) for _ in range(n))


def random_geometric_pair(rng: random.Random, n: int) -> tuple[Mod2Chain, Mod2Chain]:
    """An n-chain and a 1-chain in ℝⁿ in general position; some simplices are flat."""
    while True:
        simplices = []
        for _ in range(rng.randint(1, 3)):
            pts = [random_point(rng, n) for _ in range(n + 1)]
            if rng.random() < 0.2:
                a, b = pts[0], pts[1]
                t = Fraction(rng.randint(1, 4), 5)
                pts[-1] = tuple(x + t * (y - x) for x, y in zip(a, b))
            simplices.append(pts)
        segs = [[random_point(rng, n), random_point(rng, n)] for _ in range(rng.randint(1, 3))]
        try:
            c = rn.geometric_chain(simplices, n)
            d = rn.geometric_chain(segs, 1)
        except ValueError:
            continue
        if c and d and rn.general_position(c, d):
            return c, d


# ---------------------------------------------------------------- suites


def _bad_boundary(c: Mod2Chain) -> Mod2Chain:
    acc: set = set()
    for s in c.simplices:
        for k in range(1, len(s)):
            acc ^= {s[:k] + s[k + 1:]}
    return Mod2Chain(c.dimension - 1, frozenset(acc))


def suite_chains(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    bd = _bad_boundary if mutate == "boundary-drop-face" else boundary
    sq = SuiteReport("chains2.boundary_squared")
    leib = SuiteReport("chains2.leibniz")
    nat = SuiteReport("chains2.naturality")
    for _ in range(count):
        d = rng.randint(1, 4)
        c = random_chain(rng, range(7), d)
        sq.record(not bd(bd(c)), {"chain": c.to_json()}, len(c))

        a = random_chain(rng, range(4), rng.randint(0, 2))
        g = random_chain(rng, range(4, 8), rng.randint(0, 2))
        lhs = bd(star_product(a, g))
        rhs = star_product(bd(a), g) + star_product(a, bd(g))
        leib.record(lhs == rhs, {"alpha": a.to_json(), "gamma": g.to_json()}, len(a) + len(g))

        phi = {v: rng.randint(0, 4) for v in range(7)}
        c = random_chain(rng, range(7), rng.randint(1, 3))
        ok = push_forward(phi, bd(c)) == bd(push_forward(phi, c))
        nat.record(ok, {"chain": c.to_json(), "phi": phi}, len(c))
    return [sq, leib, nat]


def pivot_parity_failures(f: OrderFamily, mutate: str | None = None) -> list:
    """C-faces whose cofaces fail r + s = 2, checked against brute-force cell lists."""
    bad = []
    for C in subsets(f.I):
        if not C:
            continue
        cells = brute_cells(f, C)
        lower = {j: brute_cells(f, C - {j}) if len(C) > 1 else set() for j in C}
        for size in range(len(C)):
            for sigma in combinations(f.X, size):
                sigma = frozenset(sigma)
                if len(sigma) + 1 != len(C) or not is_dominant(f, sigma, C):
                    continue
                r = sum(1 for cell in cells if sigma < cell)
                s = sum(1 for j in C if sigma in lower[j])
                if not sigma:
                    s += 1  # the (-1)-simplex of the empty complex
                up, down = pivot_neighbors(f, sigma, C)
                if mutate == "pivot-drop-down":
                    down = []
                if r + s != 2 or len(up) + len(down) != 2 or len(up) != r:
                    bad.append({"C": sorted(C), "sigma": sorted(sigma), "r": r, "s": s})
    return bad


def suite_pivot_parity(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    rep = SuiteReport("orders.pivot_parity")
    for _ in range(count):
        f = random_order_family(rng)
        bad = pivot_parity_failures(f, mutate)
        rep.record(not bad, {"family": f.to_json(), "face": bad[0] if bad else None}, len(f.X))
    return [rep]


def _count(fn, *args) -> int:
    try:
        return len(fn(*args))
    except SolverError:
        return 0


def suite_odd_counts(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    reps = {k: SuiteReport(f"solver.odd_count.{k}") for k in ("any", "alexander_sperner", "scarf", "matroid")}
    for kind in ("any", "alexander_sperner", "scarf"):
        done = 0
        while done < count:
            D = random_pseudo_simplex(rng)
            c = random_coloring(rng, D, kind)
            if c is None:
                continue
            done += 1
            I = frozenset(D.I)
            if kind == "any":
                k = sum(
                    1 for A in subsets(D.I) if A for s in D.top(A) if frozenset(c[x] for x in s) == A
                )
                solved = _count(solve_classical_any, D, c)
            else:
                k = sum(1 for s in D.top(I) if frozenset(c[x] for x in s) == I)
                solver = solve_classical_AS if kind == "alexander_sperner" else solve_scarf_dual
                solved = _count(solver, D, c)
            reps[kind].record(k % 2 == 1 and solved == k, {"family": D.to_json(), "count": k}, len(D.vertices()))
    for _ in range(count):
        inst = random_vector_instance(rng)
        brute = good_vector_sets(inst)
        fr, colored, _ = vector_framework(inst.colors, inst.b)
        solved = _count(solve_matroid_nd, fr, inst.D, colored)
        reps["matroid"].record(
            len(brute) % 2 == 1 and solved == len(brute),
            {"family": inst.D.to_json(), "count": len(brute)},
            len(inst.D.vertices()),
        )
    return list(reps.values())


def suite_path_vs_brute(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    rep = SuiteReport("solver.path_vs_brute")
    for _ in range(count):
        inst = random_vector_instance(rng)
        brute = good_vector_sets(inst)
        fr, colored, _ = vector_framework(inst.colors, inst.b)
        bad = None
        for i in fr.I:
            try:
                g = build_pivot_graph(fr, inst.D, colored, i)
                ok = (frozenset(g.terminal[0]), frozenset(g.terminal[1])) in {
                    (C, frozenset(t)) for C, t in brute
                }
            except SolverError as e:
                ok, g = False, str(e)
            if not ok:
                bad = {"index": i, "family": inst.D.to_json()}
                break
        rep.record(bad is None, bad, len(inst.D.vertices()))
    return [rep]


def _vkey(v):
    return sort_key(v)


def suite_axioms(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    rep = SuiteReport("om.axioms")
    for _ in range(count):
        dim = rng.randint(1, 4)
        cfg = random_configuration(rng, dim, rng.randint(1, 7 if dim > 1 else 1))
        m = om.circuits_from_vectors(cfg)
        r = om.validate_axioms(m, strong=True)
        rep.record(r.ok, {"vectors": {k: [str(x) for x in v] for k, v in cfg.items()}, "axiom": r.axiom}, len(cfg))
    return [rep]


LEX_LAMBDA = Fraction(1, 1000)


def lex_perturbed(cfg: dict, ordered_basis: list, lam: Fraction = LEX_LAMBDA) -> tuple:
    """p = a_1 + λ a_2 + λ² a_3 + ..."""
    dim = len(next(iter(cfg.values())))
    return tuple(sum(lam**k * cfg[a][i] for k, a in enumerate(ordered_basis)) for i in range(dim))


def random_lex_instance(rng: random.Random) -> tuple[dict, list]:
    while True:
        dim = rng.randint(1, 3)
        cfg = random_configuration(rng, dim, rng.randint(dim, 6 if dim > 1 else 1))
        m = om.circuits_from_vectors(cfg)
        if m.rank != dim:
            continue
        basis = sorted(rng.choice(om.bases(m)[0]), key=_vkey)
        rng.shuffle(basis)
        return cfg, basis


def suite_lex_extension(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    rep = SuiteReport("om.lex_extension")
    done = 0
    while done < count:
        cfg, basis = random_lex_instance(rng)
        p = lex_perturbed(cfg, basis)
        try:
            realized = om.circuits_from_vectors({**cfg, "p": p})
        except om.MatroidError:
            continue  # p parallel to an element; not a valid perturbation
        done += 1
        m = om.circuits_from_vectors(cfg)
        abstract = om.lex_extension(m, basis, "p")
        circuits = set(abstract.circuits)
        if mutate == "lex-flip-p":
            circuits = {
                om.SignedSubset(c.plus ^ {"p"}, c.minus ^ {"p"}) if "p" in c.support else c for c in circuits
            }
        rep.record(
            circuits == set(realized.circuits),
            {"vectors": {k: [str(x) for x in v] for k, v in cfg.items()}, "basis": basis},
            len(cfg),
        )
    return [rep]


def freudenthal_three_way(n: int, N: int) -> dict:
    dominance = lattice.i_cells_by_dominance(n, N)
    closed = lattice.i_cells_closed_form(n, N)
    tri = lattice.freudenthal(n, N)
    images = {frozenset(lattice.s_map(p) for p in c) for c in dominance}
    return {
        "n": n,
        "N": N,
        "dominance": len(dominance),
        "closed_form": len(closed),
        "triangulation": len(tri),
        "agree": dominance == closed and images == set(tri) and len(tri) == N**n,
    }


def suite_freudenthal(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    rep = SuiteReport("geom.freudenthal")
    for n in range(1, 4):
        for N in range(1, count + 1):
            r = freudenthal_three_way(n, N)
            rep.record(r["agree"], r, n * N)
    return [rep]


def suite_intersection(rng: random.Random, count: int, mutate: str | None = None) -> list[SuiteReport]:
    rep = SuiteReport("geom.intersection_duality")
    for k in range(count):
        n = 2 + k % 2
        c, d = random_geometric_pair(rng, n)
        lhs = rn.intersection_number(boundary(c), d)
        rhs = rn.intersection_number(c, boundary(d))
        rep.record(lhs == rhs, {"c": [[list(map(str, p)) for p in s] for s in c],
                                 "d": [[list(map(str, p)) for p in s] for s in d]}, len(c) + len(d))
    return [rep]


SUITES: dict[str, Callable] = {
    "chains": suite_chains,
    "pivot_parity": suite_pivot_parity,
    "odd_counts": suite_odd_counts,
    "path_vs_brute": suite_path_vs_brute,
    "axioms": suite_axioms,
    "lex_extension": suite_lex_extension,
    "freudenthal": suite_freudenthal,
    "intersection": suite_intersection,
}


def check_invariants(seed: int = 0, sizes: str | dict = "default", mutate: str | None = None,
                     only: list[str] | None = None) -> dict:
    if mutate is not None and mutate not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutate!r}; choose from {', '.join(MUTATIONS)}")
    table = SIZES[sizes] if isinstance(sizes, str) else sizes
    reports: list[SuiteReport] = []
    for name, fn in SUITES.items():
        if only and name not in only:
            continue
        rng = random.Random(f"{seed}:{name}")
        reports.extend(fn(rng, table[name], mutate))
    return {
        "seed": seed,
        "mutate": mutate,
        "ok": all(r.ok for r in reports),
        "suites": [r.to_json() for r in reports],
    }

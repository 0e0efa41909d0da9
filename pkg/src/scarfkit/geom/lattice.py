"""Integer points of the scaled simplex, the operators S_i, and Freudenthal triangulations."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from ..chains2 import Mod2Chain, push_forward
from ..complexes import SimplexFamily, from_triangulation
from ..orders import enumerate_cells, lex_shift_orders
from ..tokens import canonical

Point = tuple[int, ...]


def integer_points(n: int, N: int) -> list[Point]:
    """All a in Z^{n+1} with a_i >= 0 and sum N, in lexicographic order."""
    if n == 0:
        return [(N,)]
    return [(a,) + rest for a in range(N + 1) for rest in integer_points(n - 1, N - a)]


def s_operator(a: Sequence[int], i: int) -> Point:
    """Subtract 1 at i and add 1 at i - 1 (indices mod n + 1)."""
    x = list(a)
    x[i] -= 1
    x[(i - 1) % len(x)] += 1
    return tuple(x)


def sigma_iota(a: Sequence[int], iota: Sequence[int]) -> list[Point]:
    """Terms α(0..n) of α(0) = a, α(k) = S_{ι(k)}(α(k-1)); iota[0] is unused."""
    seq = [tuple(a)]
    for k in range(1, len(iota)):
        seq.append(s_operator(seq[-1], iota[k]))
    return seq


def _iotas(n: int):
    for p in permutations(range(1, n + 1)):
        yield (0,) + p


def i_cells_closed_form(n: int, N: int) -> set[frozenset]:
    """All sets a + σ(ι) inside D with ι(0) = 0."""
    D = set(integer_points(n, N))
    out = set()
    for a in D:
        for iota in _iotas(n):
            cell = sigma_iota(a, iota)
            if all(p in D for p in cell):
                out.add(frozenset(cell))
    return out


def is_I_cell(sigma: Iterable[Sequence[int]], N: int | None = None) -> bool:
    """Whether sigma is a + σ(ι) ⊆ D for some a in sigma and ι with ι(0) = 0."""
    sigma = {tuple(p) for p in sigma}
    if not sigma:
        return False
    n = len(next(iter(sigma))) - 1
    if N is None:
        N = sum(next(iter(sigma)))
    if len(sigma) != n + 1 or any(sum(p) != N or min(p) < 0 for p in sigma):
        return False
    return any(
        set(sigma_iota(a, iota)) == sigma
        for a in sigma for iota in _iotas(n)
    )


def lex_shift_family(n: int, N: int):
    return lex_shift_orders(integer_points(n, N), n)


def i_cells_by_dominance(n: int, N: int) -> set[frozenset]:
    return enumerate_cells(lex_shift_family(n, N), range(n + 1))


# ---------------------------------------------------------------- Freudenthal


def s_map(x: Sequence[int]) -> Point:
    """s(x)_i = x_0 + ... + x_{i-1} for i = 1..n."""
    out, acc = [], 0
    for xi in x[:-1]:
        acc += xi
        out.append(acc)
    return tuple(out)


def t_map(y: Sequence[int], N: int) -> Point:
    """Inverse of s on the hyperplane of coordinate sum N."""
    y = tuple(y)
    if not y:
        return (N,)
    return (y[0],) + tuple(y[k + 1] - y[k] for k in range(len(y) - 1)) + (N - y[-1],)


def in_gamma(y: Sequence[int], N: int) -> bool:
    """N >= y_n >= ... >= y_1 >= 0."""
    seq = (0,) + tuple(y) + (N,)
    return all(seq[k] <= seq[k + 1] for k in range(len(seq) - 1))


def freudenthal(n: int, N: int) -> list[frozenset]:
    """Top simplices u + Γ(ω) of the Freudenthal triangulation of Γ."""
    if n < 1 or N < 1:
        raise ValueError("need n >= 1 and N >= 1")
    out = set()
    for x in integer_points(n, N):
        u = s_map(x)
        for omega in permutations(range(n)):
            verts = [u]
            cur = list(u)
            for k in omega:
                cur[k] += 1
                verts.append(tuple(cur))
            if all(in_gamma(v, N) for v in verts):
                out.add(frozenset(verts))
    return sorted(out, key=lambda s: sorted(s))


def verify_isomorphism(n: int, N: int) -> bool:
    """s maps the I-cells bijectively onto Freudenthal simplices and s_*(T⟦I⟧) = F⟦I⟧."""
    cells = i_cells_by_dominance(n, N)
    tri = set(freudenthal(n, N))
    images = {frozenset(s_map(p) for p in c) for c in cells}
    if len(images) != len(cells) or images != tri:
        return False
    T = Mod2Chain.of([canonical(c) for c in cells], n)
    F = Mod2Chain.of([canonical(s) for s in tri], n)
    return push_forward(s_map, T) == F


def freudenthal_family(n: int, N: int) -> SimplexFamily:
    """D_T for the Freudenthal triangulation, with vertices named by integer points of D."""
    tops = [[t_map(v, N) for v in s] for s in freudenthal(n, N)]
    verts = {p: tuple(Fraction(x, N) for x in p) for p in integer_points(n, N)}
    return from_triangulation(verts, tops)

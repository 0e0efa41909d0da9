import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scarfkit import invariants
from scarfkit.chains2 import Mod2Chain, boundary, push_forward
from scarfkit.complexes import (
    FamilyError,
    SimplexFamily,
    classify_coloring,
    envelope,
    extension_map,
    from_order_family,
    from_triangulation,
    fundamental_chain,
    is_chain_simplex,
    is_pseudo_simplex,
    subsets,
)
from scarfkit.geom import lattice
from scarfkit.orders import OrderFamily
from scarfkit.tokens import IndexToken

h = Fraction(1, 2)


def test_fundamental_chain_of_singleton(two_point_T):
    assert fundamental_chain(two_point_T, {0}) == Mod2Chain.of([("y",)])


def test_fundamental_chain_of_empty_set(two_point_T):
    c = fundamental_chain(two_point_T, set())
    assert c.dimension == -1 and c.simplices == {()}


def test_freudenthal_family_has_four_triangles():
    assert len(fundamental_chain(lattice.freudenthal_family(2, 2), {0, 1, 2})) == 4


def test_triangulations_are_pseudo_simplices():
    assert is_pseudo_simplex(lattice.freudenthal_family(2, 3))
    assert is_pseudo_simplex(lattice.freudenthal_family(3, 2))


def test_order_family_is_pseudo_simplex(two_point_T):
    assert is_pseudo_simplex(two_point_T)


def test_deleting_a_top_simplex_breaks_both_checks():
    D = lattice.freudenthal_family(2, 2)
    cx = {A: list(D.maximal(A)) for A in subsets(D.I) if A}
    cx[frozenset(D.I)] = D.top(D.I)[1:]
    broken = SimplexFamily(3, cx)
    assert not is_pseudo_simplex(broken)
    assert not is_chain_simplex(broken)


def test_pseudo_simplex_is_chain_simplex(two_point_T, lattice12):
    assert is_chain_simplex(two_point_T)
    assert is_chain_simplex(from_order_family(lattice12))


def test_envelope(two_point_T):
    E = envelope(two_point_T)
    i0, i1 = IndexToken(0), IndexToken(1)
    assert E.top({0}) == [(i0,)] and E.top({1}) == [(i1,)]
    assert set(E.top({0, 1})) == {("x", "y"), ("y", i1), ("x", i0)}
    assert is_chain_simplex(E)
    I = Mod2Chain.of([(i0, i1)])
    assert boundary(fundamental_chain(E, {0, 1})) == boundary(I)


def test_envelope_proper_faces_are_full_simplices():
    E = envelope(lattice.freudenthal_family(2, 2))
    for A in subsets(range(3)):
        if A and len(A) < 3:
            assert E.top(A) == [tuple(IndexToken(i) for i in sorted(A))]


def test_envelope_tops_are_joins():
    D = lattice.freudenthal_family(2, 2)
    E = envelope(D)
    expected = {tuple(s) + tuple(IndexToken(i) for i in sorted(set(range(3)) - A))
                for A in subsets(range(3)) if A for s in D.top(A)}
    assert {frozenset(s) for s in E.top({0, 1, 2})} == {frozenset(s) for s in expected}


def test_envelope_collision():
    D = SimplexFamily(1, {frozenset({0}): [(IndexToken(0),)]})
    with pytest.raises(FamilyError):
        envelope(D)


def test_trivial_triangulation():
    verts = {k: tuple(int(i == k) for i in range(3)) for k in range(3)}
    D = from_triangulation(verts, [(0, 1, 2)])
    for A in subsets(range(3)):
        if A:
            assert D.top(A) == [tuple(sorted(A))]


def test_split_edge():
    D = from_triangulation({"l": (1, 0), "m": (h, h), "r": (0, 1)}, [("l", "m"), ("m", "r")])
    assert len(D.top({0, 1})) == 2
    assert D.top({0}) == [("l",)] and D.top({1}) == [("r",)]


def test_invalid_triangulations():
    verts = {"l": (1, 0), "m": (h, h), "r": (0, 1)}
    with pytest.raises(FamilyError, match="volumes"):
        from_triangulation(verts, [("l", "m")])
    with pytest.raises(FamilyError, match="not in the simplex"):
        from_triangulation({"l": (2, -1), "r": (0, 1)}, [("l", "r")])


def test_order_family_constructions(two_point_T, lattice12):
    assert two_point_T.top({0, 1}) == [("x", "y")]
    T = from_order_family(lattice12)
    assert set(T.top({0, 1})) == {((0, 2), (1, 1)), ((1, 1), (2, 0))}
    single = from_order_family(OrderFamily(["x", "y", "z"], [["z", "x", "y"]]))
    assert single.top({0}) == [("y",)]


def test_classify_coloring(two_point_T):
    assert classify_coloring(two_point_T, {"x": 1, "y": 0}) == "alexander_sperner"
    assert classify_coloring(two_point_T, {"x": 0, "y": 1}) == "scarf"
    assert classify_coloring(two_point_T, {"x": 0, "y": 0}) == "neither"
    single = from_order_family(OrderFamily(["x", "y"], [["x", "y"]]))
    assert classify_coloring(single, {"x": 0, "y": 0}) == "both"


def test_json_round_trip():
    D = lattice.freudenthal_family(2, 2)
    assert SimplexFamily.from_json(D.to_json()) == D


# ---------------------------------------------------------------- properties

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_order_families_give_pseudo_simplices(seed):
    f = invariants.random_order_family(random.Random(seed))
    assert is_pseudo_simplex(from_order_family(f))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_envelope_preserves_structure(seed):
    D = invariants.random_pseudo_simplex(random.Random(seed))
    E = envelope(D)
    assert is_pseudo_simplex(E)
    I = frozenset(D.I)
    full = Mod2Chain.of([tuple(IndexToken(i) for i in sorted(I))])
    assert boundary(fundamental_chain(E, I)) == boundary(full)


@settings(max_examples=40, deadline=None)
@given(seeds, st.randoms(use_true_random=False))
def test_bijective_extensions_push_to_the_simplex(seed, rng):
    D = invariants.random_pseudo_simplex(random.Random(seed))
    c = {v: rng.choice(D.I) for v in D.vertices()}
    phi = extension_map(c, D.I)
    E = envelope(D)
    image = push_forward(phi, fundamental_chain(E, D.I))
    assert image == Mod2Chain.of([tuple(D.I)])

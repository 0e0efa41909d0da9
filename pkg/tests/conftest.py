from fractions import Fraction

import pytest

from scarfkit import om
from scarfkit.complexes import from_order_family
from scarfkit.geom import lattice
from scarfkit.orders import OrderFamily, lex_shift_orders
from scarfkit.solver import MatroidFramework


@pytest.fixture
def two_point():
    """X = {x, y} with x <_0 y and y <_1 x."""
    return OrderFamily(["x", "y"], [["x", "y"], ["y", "x"]])


@pytest.fixture
def two_point_T(two_point):
    return from_order_family(two_point)


@pytest.fixture
def lattice12():
    """Lexicographic shift orders on the integer points of 2·Δ¹."""
    return lex_shift_orders(lattice.integer_points(1, 2), 1)


@pytest.fixture
def m3():
    return om.circuits_from_vectors({"v0": (1, 0), "v1": (0, 1), "b": (1, 1)})


@pytest.fixture
def m4():
    return om.circuits_from_vectors({"v0": (1, 0), "v1": (0, 1), "b": (1, 1), "a": (2, 1)})


@pytest.fixture
def fr4(m4):
    return MatroidFramework(m4, ("v0", "v1"), "b")


def F(*xs):
    return tuple(Fraction(x) for x in xs)

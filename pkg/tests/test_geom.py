import math
import random
import warnings
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scarfkit.chains2 import boundary
from scarfkit.complexes import subsets
from scarfkit.geom import lattice, rn, simplex
from scarfkit.invariants import random_geometric_pair
from scarfkit.orders import coordinate_orders, is_dominant
from scarfkit.solver import SolverError

# ---------------------------------------------------------------- lattice


def test_s_operator():
    assert lattice.s_operator((2, 0, 0), 0) == (1, 0, 1)


def test_sigma_iota():
    assert lattice.sigma_iota((0, 1, 1), (0, 1, 2)) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert lattice.sigma_iota((1, 1), (0, 1)) == [(1, 1), (2, 0)]


@pytest.mark.parametrize("n,N,count", [(1, 2, 2), (2, 2, 4), (2, 1, 1), (1, 3, 3), (3, 3, 27)])
def test_cell_counts_agree(n, N, count):
    assert len(lattice.i_cells_closed_form(n, N)) == count
    assert len(lattice.freudenthal(n, N)) == count
    assert lattice.i_cells_by_dominance(n, N) == lattice.i_cells_closed_form(n, N)


@pytest.mark.parametrize("n,N", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_isomorphism(n, N):
    assert lattice.verify_isomorphism(n, N)


def test_is_I_cell():
    assert lattice.is_I_cell([(0, 1, 1), (1, 0, 1), (1, 1, 0)])
    assert not lattice.is_I_cell([(2, 0, 0), (0, 2, 0), (0, 0, 2)])


def test_s_and_t_inverse():
    for a in lattice.integer_points(3, 3):
        assert lattice.t_map(lattice.s_map(a), 3) == a
        assert lattice.in_gamma(lattice.s_map(a), 3)


def test_freudenthal_rejects_bad_sizes():
    with pytest.raises(ValueError):
        lattice.freudenthal(0, 2)


# ---------------------------------------------------------------- Δ(σ, C)


@pytest.fixture
def segment():
    return coordinate_orders(simplex.simplex_grid(1, 2))


def test_single_point_has_ratio_zero(segment):
    assert simplex.sub_simplex(segment, [segment.X[0]], range(2)).ratio == 0


def test_ratio_of_two_points(segment):
    box = simplex.sub_simplex(segment, segment.X[:2], range(2))
    assert box.ratio == F(1, 2)
    assert box.contains((F(1, 4), F(3, 4)))


def test_empty_C_is_whole_simplex(segment):
    assert simplex.sub_simplex(segment, segment.X[:1], []).ratio == 1


def test_kkm_coloring():
    b = simplex.barycenter(2)
    assert simplex.kkm_scarf_coloring(simplex.constant_oracle((1, 0, 0)), [b]) == {b: 0}
    assert simplex.kkm_scarf_coloring(simplex.identity_oracle, [b]) == {b: 0}
    assert simplex.kkm_scarf_coloring(simplex.constant_oracle((0, 0, 1)), [b]) == {b: 2}


@pytest.mark.parametrize("k", [3, 4, 6])
def test_dominant_boxes_are_small(k):
    # ε' is the covering radius of the grid, d the diameter of Δ², r its inradius
    f = coordinate_orders(simplex.simplex_grid(2, k))
    eps_dense = math.sqrt(2) / (k * math.sqrt(3))
    bound = eps_dense * math.sqrt(2) / (1 / math.sqrt(6)) * (1 + 1e-9)
    for C in subsets(range(3)):
        if not C:
            continue
        for size in range(1, len(C) + 1):
            for sigma in combinations(f.X, size):
                if is_dominant(f, sigma, C):
                    box = simplex.sub_simplex(f, sigma, C)
                    assert float(box.ratio) * math.sqrt(2) < bound


def test_density_schedule():
    assert simplex.density_schedule(64) == [2, 4, 8, 16, 32, 64]
    assert simplex.density_schedule(10) == [2, 4, 8, 10]


def test_hull_distance():
    assert simplex.hull_distance((0.5, 0.5), [(1, 0), (0, 1)]) == pytest.approx(0)
    assert simplex.hull_distance((0.5, 0.5), [(1, 0)]) == pytest.approx(0.5)


# ---------------------------------------------------------------- Brouwer / Kakutani


def test_brouwer_identity():
    a = simplex.brouwer_approximate(simplex.identity_oracle, 2, 1e-3, [4])
    assert a.converged and a.residual == 0


def test_brouwer_rotation():
    a = simplex.brouwer_approximate(simplex.rotation_oracle, 2, 1e-3, [4, 8])
    assert a.point == simplex.barycenter(2)


def test_brouwer_constant():
    p = (F(1, 3), F(1, 2), F(1, 6))
    a = simplex.brouwer_approximate(simplex.constant_oracle(p), 2, 1e-3, [6])
    assert a.point == p


def test_brouwer_residual_within_box():
    p = (F(2, 7), F(3, 7), F(2, 7))
    for k in [4, 8, 16]:
        lv = simplex.brouwer_level(simplex.constant_oracle(p), 2, k)
        assert lv.residual <= float(lv.diameter) + 1e-12


def test_brouwer_warns_when_exhausted():
    with pytest.warns(simplex.ApproximationWarning):
        a = simplex.brouwer_approximate(simplex.rotation_oracle, 2, -1.0, [3])
    assert not a.converged


def test_kakutani_piecewise():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", simplex.ApproximationWarning)
        a = simplex.kakutani_approximate(simplex.piecewise_kakutani, 1, 1e-2, [4])
    assert a.point == (F(1, 2), F(1, 2))


def test_kakutani_whole_and_constant():
    assert simplex.kakutani_approximate(simplex.whole_simplex_kakutani, 1, 1e-2, [4]).residual == 0
    p = (F(1, 5), F(4, 5))
    a = simplex.kakutani_approximate(simplex.constant_kakutani(p), 1, 1e-2, [4, 8])
    assert max(abs(x - y) for x, y in zip(a.point, p)) <= 1e-2


def test_lex_good_is_decisive():
    good = simplex.lex_good(simplex.barycenter(1))
    e0, e1 = (F(1), F(0)), (F(0), F(1))
    assert good(frozenset([e0, e1]))
    assert not good(frozenset([e0]))


# ---------------------------------------------------------------- ℝⁿ


TRIANGLE = [[(0, 0), (2, 0), (0, 2)]]


@pytest.mark.parametrize("z,expected", [((F(1, 2), F(1, 2)), 1), ((3, 3), 0)])
def test_point_in_triangle(z, expected):
    assert rn.intersection_number(rn.geometric_chain(TRIANGLE), rn.geometric_chain([[z]])) == expected


def test_duality_example():
    c = rn.geometric_chain(TRIANGLE)
    omega = rn.geometric_chain([[(F(1, 2), F(1, 2)), (3, 3)]])
    assert rn.intersection_number(boundary(c), omega) == 1
    assert rn.intersection_number(c, boundary(omega)) == 1


def test_general_position_violation():
    c = rn.geometric_chain(TRIANGLE)
    with pytest.raises(rn.GeneralPositionError):
        rn.intersection_number(c, rn.geometric_chain([[(1, 0)]]))


def test_unsupported_dimensions():
    c = rn.geometric_chain(TRIANGLE)
    with pytest.raises(ValueError):
        rn.intersection_number(c, c)


def test_in_hull_degenerate_points():
    pts = [rn.point(p) for p in [(0, 0), (1, 1), (2, 2)]]
    assert rn.in_hull(pts, (F(3, 2), F(3, 2)))
    assert not rn.in_hull(pts, (1, 0))


@pytest.fixture
def tri22():
    return rn.freudenthal_triangulation(2, 2)


def test_affine_scarf_inclusion(tri22):
    C, sigma = rn.affine_scarf(tri22.family, tri22.positions, tri22.w, tri22.w[0])
    assert C == frozenset(range(3))
    assert sigma == ((1, 0, 1), (1, 1, 0), (2, 0, 0))


def test_affine_scarf_line():
    T = rn.freudenthal_triangulation(1, 3)
    C, sigma = rn.affine_scarf(T.family, T.positions, T.w, (F(1, 2),))
    assert rn.in_hull([T.positions[x] for x in sigma], (F(1, 2),))


def test_affine_scarf_rejects_outside_point(tri22):
    with pytest.raises(ValueError):
        rn.affine_scarf(tri22.family, tri22.positions, tri22.w, (5, 5))


def test_hedgehog_identity(tri22):
    z = (F(1, 5), F(1, 7))
    sigma = rn.vector_hedgehog(tri22, tri22.positions, z)
    assert rn.in_hull([tri22.positions[x] for x in sigma], z)


def test_inward_tangent(tri22):
    c = {x: tuple(-a for a in p) for x, p in tri22.positions.items()}
    sigma = rn.inward_tangent(tri22, c)
    assert rn.in_hull([c[x] for x in sigma], (0, 0))


def test_hedgehog_predicate_failure(tri22):
    c = {x: tuple(-a for a in p) for x, p in tri22.positions.items()}
    with pytest.raises(SolverError, match="predicate"):
        rn.vector_hedgehog(tri22, c, (0, 0))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([2, 3]))
def test_duality(seed, n):
    c, d = random_geometric_pair(random.Random(seed), n)
    assert rn.intersection_number(boundary(c), d) == rn.intersection_number(c, boundary(d))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from lfpkit import (
    Bound,
    EmptyPolyhedron,
    LinearProgram,
    Polyhedron,
    Relation,
    Sense,
    SolveStatus,
    build_maximal_element_lp,
    build_primal_interior_lp,
    coordinate_support_oracle,
    find_relative_interior_point,
    primal_optimal_face,
    recover_maximal_element,
    solve_lp,
    solve_theta_star,
)

from helpers import random_polyhedron

SEGMENT = Polyhedron([[1.0, 1.0]], [1.0])  # {x >= 0 | x1 + x2 = 1}
PINNED = Polyhedron([[1.0, 0.0], [1.0, 1.0]], [0.0, 1.0])  # single point (0, 1)
RAY = Polyhedron([[1.0, -1.0]], [0.0])  # {x >= 0 | x1 = x2}, unbounded
ORIGIN_ONLY = Polyhedron(np.eye(2), np.zeros(2))  # {0}
EMPTY = Polyhedron([[1.0]], [-1.0])  # x = -1 with x >= 0
SIMPLEX3 = Polyhedron([[1.0, 1.0, 1.0]], [1.0])


class TestBuilder:
    def test_shape_and_objective(self):
        lp = build_maximal_element_lp(SEGMENT)
        assert lp.num_rows == 1
        assert lp.num_vars == 6  # (x1_1, x1_2, w1, x2_1, x2_2, w2)
        assert_allclose(lp.objective, [0, 0, 0, 1, 1, 1])
        assert_allclose(lp.rows[0].coeffs, [1, 1, -1, 1, 1, -1])
        assert lp.rows[0].relation is Relation.EQ and lp.rows[0].rhs == 0.0
        assert lp.bounds[:3] == (Bound.nonnegative(),) * 3
        assert lp.bounds[3:] == (Bound.box(0.0, 1.0),) * 3

    @pytest.mark.parametrize("poly", [SEGMENT, PINNED, RAY, ORIGIN_ONLY, EMPTY])
    def test_zero_is_feasible(self, poly):
        lp = build_maximal_element_lp(poly)
        for row in lp.rows:
            assert row.rhs == 0.0

    def test_matches_dedicated_face_builder(self, golden):
        # Building the support-maximizing LP from the primal optimal face is
        # the same construction as the dedicated builder, except the generic
        # route also doubles the scaling coordinate t.  Dropping that one
        # capped copy must reproduce the dedicated LP column for column.
        theta = solve_theta_star(golden)
        n, m = golden.num_vars, golden.num_rows
        generic = build_maximal_element_lp(primal_optimal_face(golden, theta))
        dedicated = build_primal_interior_lp(golden, theta)
        coords = n + 1 + m
        keep = [j for j in range(2 * coords + 2) if j != coords + 1 + n]
        assert_allclose(generic.objective[keep], dedicated.objective)
        assert len(generic.rows) == len(dedicated.rows)
        for g_row, d_row in zip(generic.rows, dedicated.rows):
            assert_allclose(g_row.coeffs[keep], d_row.coeffs, atol=1e-12)
            assert g_row.relation is d_row.relation and g_row.rhs == d_row.rhs
        assert tuple(generic.bounds[j] for j in keep) == dedicated.bounds


class TestRecover:
    def test_segment_has_full_support(self):
        element = find_relative_interior_point(SEGMENT)
        assert element.support == {1, 2}
        assert element.support == coordinate_support_oracle(SEGMENT)

    def test_pinned_coordinate_excluded(self):
        element = find_relative_interior_point(PINNED)
        assert_allclose(element.point, [0.0, 1.0], atol=1e-9)
        assert element.support == {2}

    def test_empty_certificate(self):
        with pytest.raises(EmptyPolyhedron):
            find_relative_interior_point(EMPTY)

    def test_recover_rejects_non_optimal_outcome(self):
        from lfpkit import LPOutcome

        with pytest.raises(ValueError):
            recover_maximal_element(LPOutcome(SolveStatus.INFEASIBLE), SEGMENT)


class TestFinder:
    def test_simplex_in_three_dimensions(self):
        element = find_relative_interior_point(SIMPLEX3)
        assert element.support == {1, 2, 3}
        assert element.support == coordinate_support_oracle(SIMPLEX3)

    def test_unbounded_ray(self):
        element = find_relative_interior_point(RAY)
        assert element.support == {1, 2}
        assert element.point[0] == pytest.approx(element.point[1], abs=1e-9)
        assert element.point[0] > 0
        assert element.support == coordinate_support_oracle(RAY)

    def test_origin_only(self):
        element = find_relative_interior_point(ORIGIN_ONLY)
        assert_allclose(element.point, [0.0, 0.0], atol=1e-12)
        assert element.support == frozenset()


class TestOracle:
    def test_segment(self):
        assert coordinate_support_oracle(SEGMENT) == {1, 2}

    def test_pinned(self):
        assert coordinate_support_oracle(PINNED) == {2}

    def test_empty(self):
        with pytest.raises(EmptyPolyhedron):
            coordinate_support_oracle(EMPTY)

    def test_golden_primal_face_blocks(self, golden):
        # Face coordinates are (xbar_1, xbar_2, t, ubar_1, ubar_2).
        theta = solve_theta_star(golden)
        support = coordinate_support_oracle(primal_optimal_face(golden, theta))
        assert support == {1, 2, 3, 4}  # both xbar, t itself, and ubar_1


class TestInvariants:
    @pytest.mark.parametrize("seed", range(30))
    def test_support_matches_oracle(self, seed):
        poly = random_polyhedron(seed, force_nonempty=True)
        element = find_relative_interior_point(poly)
        assert element.support == coordinate_support_oracle(poly)

    @pytest.mark.parametrize("seed", range(30))
    def test_membership(self, seed):
        poly = random_polyhedron(seed, force_nonempty=True)
        element = find_relative_interior_point(poly)
        assert np.max(np.abs(poly.A_eq @ element.point - poly.b_eq)) <= 1e-7
        assert np.all(element.point >= -1e-9)

    @pytest.mark.parametrize("seed", range(40))
    def test_emptiness_soundness(self, seed):
        # EmptyPolyhedron must fire exactly when a direct feasibility solve
        # (phase 1 alone decides it) reports the system infeasible.
        poly = random_polyhedron(seed, force_nonempty=False)
        probe = solve_lp(
            LinearProgram(
                Sense.MAXIMIZE,
                np.zeros(poly.num_coords),
                rows=[(poly.A_eq[i], "=", poly.b_eq[i]) for i in range(poly.A_eq.shape[0])],
            )
        )
        if probe.status is SolveStatus.INFEASIBLE:
            with pytest.raises(EmptyPolyhedron):
                find_relative_interior_point(poly)
        else:
            find_relative_interior_point(poly)

    @given(k=st.floats(min_value=1e-3, max_value=1e3), seed=st.integers(0, 50))
    @settings(max_examples=60, deadline=None)
    def test_support_invariant_under_row_scaling(self, k, seed):
        poly = random_polyhedron(seed, force_nonempty=True)
        row = seed % poly.A_eq.shape[0]
        A = poly.A_eq.copy()
        b = poly.b_eq.copy()
        A[row] *= k
        b[row] *= k
        scaled = Polyhedron(A, b)
        assert find_relative_interior_point(scaled).support == find_relative_interior_point(poly).support

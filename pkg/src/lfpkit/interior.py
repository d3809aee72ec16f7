"""Relative interior points of standard-form polyhedra P = {x | Ax = b, x >= 0}.

A relative interior point of P is exactly a maximal element: a point whose
set of positive coordinates is as large as possible.  One LP finds it.  Write
each coordinate as x1_j + x2_j and the scaling as w1 + w2, cap the second
copies at one, and maximize their total:

    max  1.x2 + w2
    s.t. [A, -b] (x1 + x2, w1 + w2) = 0
         x1 >= 0, w1 >= 0,  0 <= x2 <= 1,  0 <= w2 <= 1.

The homogenized system always admits zero, so the LP is feasible and (being
capped) bounded.  When P is non-empty the optimal w1 + w2 is positive and

    x_max = (x1 + x2) / (w1 + w2)

is a maximal element; w1 + w2 = 0 at the optimum certifies P is empty.  The
homogenization also absorbs unbounded polyhedra: coordinates that only become
positive along recession directions still show up in the support.

`coordinate_support_oracle` computes the same support the slow way, one LP
per coordinate, and exists so tests can cross-check the single-LP route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyPolyhedron, IterationLimitError
from .lp import Bound, LinearProgram, LPOutcome, Relation, Sense, SolveStatus, SolverOptions, solve_lp

__all__ = [
    "Polyhedron",
    "MaximalElement",
    "build_maximal_element_lp",
    "recover_maximal_element",
    "find_relative_interior_point",
    "coordinate_support_oracle",
]

DEFAULT_POS_TOL = 1e-7


@dataclass(frozen=True)
class Polyhedron:
    """Standard form data: {x | A_eq x = b_eq, x >= 0}."""

    A_eq: np.ndarray
    b_eq: np.ndarray

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.A_eq, dtype=float))
        b = np.asarray(self.b_eq, dtype=float).ravel()
        if A.shape[0] != b.size:
            raise ValueError(f"A_eq has {A.shape[0]} rows but b_eq has {b.size} entries")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise ValueError("polyhedron data has a non-finite entry")
        A.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "A_eq", A)
        object.__setattr__(self, "b_eq", b)

    @property
    def num_coords(self) -> int:
        return self.A_eq.shape[1]


@dataclass(frozen=True)
class MaximalElement:
    """A relative interior point and its support (1-based coordinate indices)."""

    point: np.ndarray
    support: frozenset

    def __post_init__(self):
        point = np.asarray(self.point, dtype=float)
        point.setflags(write=False)
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "support", frozenset(int(j) for j in self.support))


def _support(values, pos_tol) -> frozenset:
    return frozenset(int(j) + 1 for j in np.nonzero(values > pos_tol)[0])


def build_maximal_element_lp(poly: Polyhedron) -> LinearProgram:
    """The support-maximizing LP; columns are (x1_1..x1_n, w1, x2_1..x2_n, w2)."""
    A, b = poly.A_eq, poly.b_eq
    m, n = A.shape
    half = np.hstack([A, -b.reshape(m, 1)])
    rows = [(np.concatenate([half[i], half[i]]), Relation.EQ, 0.0) for i in range(m)]
    objective = np.concatenate([np.zeros(n + 1), np.ones(n + 1)])
    bounds = [Bound.nonnegative()] * (n + 1) + [Bound.box(0.0, 1.0)] * (n + 1)
    return LinearProgram(Sense.MAXIMIZE, objective, rows=rows, bounds=bounds)


def recover_maximal_element(
    outcome: LPOutcome,
    poly: Polyhedron,
    pos_tol: float = DEFAULT_POS_TOL,
    feas_tol: float = 1e-9,
) -> MaximalElement:
    """Normalize an optimal solution of the support-maximizing LP back into P.

    Raises EmptyPolyhedron when the optimal scaling weight is zero, which is
    the LP's certificate that P has no points at all.
    """
    if not outcome.is_optimal:
        raise ValueError(f"expected an optimal outcome, got {outcome.status}")
    n = poly.num_coords
    z = outcome.point
    w_total = float(z[n] + z[2 * n + 1])
    if w_total <= feas_tol:
        raise EmptyPolyhedron("the polyhedron is empty (zero scaling weight at optimum)")
    point = (z[:n] + z[n + 1 : 2 * n + 1]) / w_total
    return MaximalElement(point, _support(point, pos_tol))


def find_relative_interior_point(
    poly: Polyhedron,
    opts: SolverOptions | None = None,
    pos_tol: float = DEFAULT_POS_TOL,
) -> MaximalElement:
    """Build, solve and normalize in one call."""
    if opts is None:
        opts = SolverOptions()
    out = solve_lp(build_maximal_element_lp(poly), opts)
    if out.status is SolveStatus.ITERATION_LIMIT:
        raise IterationLimitError("maximal-element solve hit the iteration cap")
    return recover_maximal_element(out, poly, pos_tol, opts.feas_tol)


def coordinate_support_oracle(
    poly: Polyhedron,
    opts: SolverOptions | None = None,
    pos_tol: float = DEFAULT_POS_TOL,
) -> frozenset:
    """Support of any maximal element, computed coordinate by coordinate.

    Maximizes each coordinate separately over P; by convexity the set of
    coordinates with positive maximum (unbounded counts as positive) equals
    the support of every relative interior point.  Much slower than the
    single-LP route, deliberately so.
    """
    if opts is None:
        opts = SolverOptions()
    n = poly.num_coords
    rows = [(poly.A_eq[i], Relation.EQ, poly.b_eq[i]) for i in range(poly.A_eq.shape[0])]

    probe = solve_lp(LinearProgram(Sense.MAXIMIZE, np.zeros(n), rows=rows), opts)
    if probe.status is SolveStatus.INFEASIBLE:
        raise EmptyPolyhedron("the polyhedron is empty")
    if probe.status is SolveStatus.ITERATION_LIMIT:
        raise IterationLimitError("feasibility probe hit the iteration cap")

    support = set()
    for j in range(n):
        objective = np.zeros(n)
        objective[j] = 1.0
        out = solve_lp(LinearProgram(Sense.MAXIMIZE, objective, rows=rows), opts)
        if out.status is SolveStatus.UNBOUNDED:
            support.add(j + 1)
        elif out.status is SolveStatus.OPTIMAL:
            if out.objective > pos_tol:
                support.add(j + 1)
        else:
            raise IterationLimitError(f"coordinate {j + 1} probe hit the iteration cap")
    return frozenset(support)

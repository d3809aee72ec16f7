"""Dense two-phase simplex solver for small linear programs.

The solver accepts equality and inequality rows together with per-variable
bounds (nonnegative, boxed, or free).  Free variables are kept as single
columns that may move in either direction; box bounds are handled with the
usual bounded-variable ratio test (including bound flips) instead of extra
rows.  Phase 1 minimizes the total artificial infeasibility; phase 2 then
optimizes the real objective from the feasible basis phase 1 produced.

Pivoting uses Dantzig's rule with a largest-pivot tie-break, switching to
Bland's rule once 2 * (rows + cols) degenerate steps have accumulated, which
guarantees termination on the highly degenerate homogeneous systems this
package builds.  All choices are index-deterministic: the same program and
options always produce the same outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Sense",
    "Relation",
    "Bound",
    "Row",
    "LinearProgram",
    "SolverOptions",
    "SolveStatus",
    "LPOutcome",
    "solve_lp",
]


class Sense(Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"


class Relation(Enum):
    LE = "<="
    EQ = "="
    GE = ">="


@dataclass(frozen=True)
class Bound:
    """Closed interval a single variable must stay in; infinities allowed."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("bounds must not be NaN")
        if self.lo > self.hi:
            raise ValueError(f"empty bound interval [{self.lo}, {self.hi}]")

    @classmethod
    def nonnegative(cls) -> "Bound":
        return cls(0.0, math.inf)

    @classmethod
    def box(cls, lo: float, hi: float) -> "Bound":
        return cls(float(lo), float(hi))

    @classmethod
    def free(cls) -> "Bound":
        return cls(-math.inf, math.inf)

    @property
    def is_fixed(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class Row:
    """One linear constraint: coeffs . x  <relation>  rhs."""

    coeffs: np.ndarray
    relation: Relation
    rhs: float

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float)
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "relation", Relation(self.relation))
        object.__setattr__(self, "rhs", float(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
    """A dense LP: optimize `objective . x` subject to rows and variable bounds.

    `rows` may be given as Row objects or (coeffs, relation, rhs) tuples, with
    the relation as a Relation or one of "<=", "=", ">=".  `bounds` defaults to
    nonnegative for every variable.
    """

    sense: Sense
    objective: np.ndarray
    rows: tuple
    bounds: tuple | None = None

    def __post_init__(self):
        objective = np.asarray(self.objective, dtype=float)
        if objective.ndim != 1 or objective.size == 0:
            raise ValueError("objective must be a non-empty vector")
        if not np.all(np.isfinite(objective)):
            raise ValueError("objective has a non-finite entry")
        objective.setflags(write=False)
        object.__setattr__(self, "objective", objective)

        rows = tuple(r if isinstance(r, Row) else Row(*r) for r in self.rows)
        n = objective.size
        for i, row in enumerate(rows):
            if row.coeffs.shape != (n,):
                raise ValueError(f"row {i} has {row.coeffs.size} coefficients, expected {n}")
            if not np.all(np.isfinite(row.coeffs)) or not math.isfinite(row.rhs):
                raise ValueError(f"row {i} has a non-finite entry")
        object.__setattr__(self, "rows", rows)

        bounds = self.bounds
        if bounds is None:
            bounds = tuple(Bound.nonnegative() for _ in range(n))
        else:
            bounds = tuple(bounds)
            if len(bounds) != n:
                raise ValueError(f"{len(bounds)} bounds for {n} variables")
        object.__setattr__(self, "bounds", bounds)

    @property
    def num_vars(self) -> int:
        return self.objective.size

    @property
    def num_rows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class SolverOptions:
    """Tolerances and the iteration cap.

    `max_iters=None` resolves to 50 * (rows + cols) of the program being
    solved, counted across both phases.
    """

    feas_tol: float = 1e-9
    opt_tol: float = 1e-9
    max_iters: int | None = None

    def __post_init__(self):
        if not self.feas_tol > 0 or not self.opt_tol > 0:
            raise ValueError("tolerances must be positive")
        if self.max_iters is not None and self.max_iters <= 0:
            raise ValueError("max_iters must be positive")

    def resolve_max_iters(self, num_rows: int, num_vars: int) -> int:
        if self.max_iters is not None:
            return self.max_iters
        return 50 * (num_rows + num_vars)


class SolveStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    ITERATION_LIMIT = "iteration_limit"


@dataclass(frozen=True)
class LPOutcome:
    """Solver verdict; `point` and `objective` are present iff OPTIMAL."""

    status: SolveStatus
    point: np.ndarray | None = None
    objective: float | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL


# Nonbasic variable positions.  A free nonbasic variable parks at zero.
_AT_LOWER, _AT_UPPER, _AT_ZERO, _BASIC = 0, 1, 2, 3

# |pivot| below this is treated as zero in ratio tests and drive-out steps.
_PIVOT_TOL = 1e-10


def _initial_status(lo, hi):
    stat = np.empty(lo.size, dtype=np.int8)
    for j in range(lo.size):
        if math.isfinite(lo[j]):
            stat[j] = _AT_LOWER
        elif math.isfinite(hi[j]):
            stat[j] = _AT_UPPER
        else:
            stat[j] = _AT_ZERO
    return stat


def _nonbasic_point(lo, hi, stat):
    """Point with every nonbasic variable at its parking value and basics at 0."""
    x = np.zeros(lo.size)
    at_lower = stat == _AT_LOWER
    at_upper = stat == _AT_UPPER
    x[at_lower] = lo[at_lower]
    x[at_upper] = hi[at_upper]
    return x


def _choose_entering(reduced, stat, lo, hi, opt_tol, bland):
    """Return (column, direction) of the entering variable, or (None, 0).

    Direction is the sign in which the entering variable moves.  Dantzig mode
    picks the largest optimality violation (lowest index on ties); Bland mode
    picks the lowest eligible index.
    """
    best_j, best_dir, best_viol = None, 0, opt_tol
    for j in range(reduced.size):
        s = stat[j]
        if s == _BASIC or hi[j] - lo[j] <= 0.0:
            continue
        r = reduced[j]
        if s == _AT_LOWER:
            viol, direction = -r, 1
        elif s == _AT_UPPER:
            viol, direction = r, -1
        else:  # free at zero: either sign of reduced cost is usable
            viol, direction = abs(r), (1 if r < 0 else -1)
        if viol <= (opt_tol if bland else best_viol):
            continue
        if bland:
            return j, direction
        best_j, best_dir, best_viol = j, direction, viol
    return best_j, best_dir


def _ratio_test(x, w, basis, lo, hi, enter, direction, bland):
    """Largest admissible step for the entering variable.

    Returns (step, leave_pos, leave_to): `leave_pos` indexes into `basis`, or
    is -1 for a bound flip of the entering variable itself; `step` is inf when
    nothing blocks the move.
    """
    own = hi[enter] - lo[enter]  # inf unless the entering variable is boxed
    limits = np.full(basis.size, math.inf)
    targets = np.zeros(basis.size, dtype=np.int8)
    for i in range(basis.size):
        k = basis[i]
        g = direction * w[i]  # rate at which x[k] decreases per unit step
        if g > _PIVOT_TOL:
            if math.isfinite(lo[k]):
                limits[i] = max((x[k] - lo[k]) / g, 0.0)
                targets[i] = _AT_LOWER
        elif g < -_PIVOT_TOL:
            if math.isfinite(hi[k]):
                limits[i] = max((hi[k] - x[k]) / (-g), 0.0)
                targets[i] = _AT_UPPER
    row_min = limits.min() if basis.size else math.inf

    if own <= row_min:
        if math.isinf(own):
            return math.inf, -1, 0
        return own, -1, 0  # entering variable flips to its other bound

    tie = row_min + 1e-11 * (1.0 + row_min)
    candidates = np.nonzero(limits <= tie)[0]
    if bland:
        pos = min(candidates, key=lambda i: basis[i])
    else:
        pos = max(candidates, key=lambda i: (abs(w[i]), -basis[i]))
    return row_min, pos, targets[pos]


def _run_simplex(A, b, cost, lo, hi, basis, stat, opts, iter_budget, phase1_floor=None):
    """Iterate to optimality on one phase.  Mutates basis and stat.

    Returns (verdict, point, iterations_used) with verdict in "optimal",
    "unbounded", "iteration_limit".  `phase1_floor` enables the early exit for
    phase-1 objectives, which are bounded below by zero.
    """
    m = A.shape[0]
    bland = False
    degenerate = 0
    bland_trigger = 2 * (m + A.shape[1])
    used = 0
    while True:
        x = _nonbasic_point(lo, hi, stat)
        if m:
            B = A[:, basis]
            try:
                x[basis] = np.linalg.solve(B, b - A @ x)
                y = np.linalg.solve(B.T, cost[basis])
            except np.linalg.LinAlgError:
                return "iteration_limit", x, used
            reduced = cost - A.T @ y
        else:
            B = None
            reduced = cost.copy()

        if phase1_floor is not None and float(cost @ x) <= phase1_floor:
            return "optimal", x, used
        enter, direction = _choose_entering(reduced, stat, lo, hi, opts.opt_tol, bland)
        if enter is None:
            return "optimal", x, used
        if used >= iter_budget:
            return "iteration_limit", x, used

        w = np.linalg.solve(B, A[:, enter]) if m else np.empty(0)
        step, leave_pos, leave_to = _ratio_test(x, w, basis, lo, hi, enter, direction, bland)
        if math.isinf(step):
            return "unbounded", x, used

        if leave_pos < 0:
            stat[enter] = _AT_UPPER if stat[enter] == _AT_LOWER else _AT_LOWER
        else:
            stat[basis[leave_pos]] = leave_to
            stat[enter] = _BASIC
            basis[leave_pos] = enter

        used += 1
        if step <= opts.feas_tol:
            degenerate += 1
            if degenerate > bland_trigger:
                bland = True


def _drive_out_artificials(A, b, cost, lo, hi, basis, stat, n_real):
    """Swap basic artificial variables for real columns where a pivot exists.

    Every swap is a zero-step pivot (the artificial sits at value zero), so
    feasibility is untouched.  Artificials left behind mark redundant rows and
    stay basic, pinned at zero by their bounds.
    """
    for pos in range(basis.size):
        if basis[pos] < n_real:
            continue
        B = A[:, basis]
        e = np.zeros(basis.size)
        e[pos] = 1.0
        try:
            g = np.linalg.solve(B.T, e)
        except np.linalg.LinAlgError:
            continue
        row = g @ A[:, :n_real]
        best, best_mag = -1, _PIVOT_TOL
        for j in range(n_real):
            if stat[j] == _BASIC or hi[j] - lo[j] <= 0.0:
                continue
            if abs(row[j]) > best_mag:
                best, best_mag = j, abs(row[j])
        if best >= 0:
            stat[best] = _BASIC
            stat[basis[pos]] = _AT_LOWER
            basis[pos] = best


def solve_lp(lp: LinearProgram, opts: SolverOptions | None = None) -> LPOutcome:
    """Solve `lp` with the two-phase simplex method.

    The returned point covers exactly the variables of `lp`, in their original
    order.  OPTIMAL outcomes are feasible within `opts.feas_tol` and leave no
    optimality violation above `opts.opt_tol`; ITERATION_LIMIT outcomes carry
    no point at all, so numerical trouble is never silently papered over.
    """
    if opts is None:
        opts = SolverOptions()
    n = lp.num_vars
    m = lp.num_rows
    n_slack = sum(1 for r in lp.rows if r.relation is not Relation.EQ)
    N = n + n_slack

    A = np.zeros((m, N))
    b = np.empty(m)
    lo = np.empty(N)
    hi = np.empty(N)
    for j, bd in enumerate(lp.bounds):
        lo[j], hi[j] = bd.lo, bd.hi
    lo[n:] = 0.0
    hi[n:] = math.inf

    slack = n
    for i, row in enumerate(lp.rows):
        coeffs, rhs = row.coeffs, row.rhs
        if row.relation is Relation.GE:  # normalize to <= by negation
            coeffs, rhs = -coeffs, -rhs
        A[i, :n] = coeffs
        b[i] = rhs
        if row.relation is not Relation.EQ:
            A[i, slack] = 1.0
            slack += 1

    cost = np.zeros(N)
    cost[:n] = lp.objective if lp.sense is Sense.MINIMIZE else -lp.objective
    iter_budget = opts.resolve_max_iters(m, n)

    # Phase 1: artificial column per row, signed so artificials start >= 0.
    stat = _initial_status(lo, hi)
    resid = b - A @ _nonbasic_point(lo, hi, stat)
    art = np.zeros((m, m))
    for i in range(m):
        art[i, i] = 1.0 if resid[i] >= 0 else -1.0
    A1 = np.hstack([A, art])
    lo1 = np.concatenate([lo, np.zeros(m)])
    hi1 = np.concatenate([hi, np.full(m, math.inf)])
    cost1 = np.concatenate([np.zeros(N), np.ones(m)])
    basis = np.arange(N, N + m)
    stat1 = np.concatenate([stat, np.full(m, _BASIC, dtype=np.int8)])

    verdict, x, used = _run_simplex(
        A1, b, cost1, lo1, hi1, basis, stat1, opts, iter_budget,
        phase1_floor=opts.feas_tol * 1e-3,
    )
    if verdict != "optimal":
        # Phase-1 objectives are bounded below by zero, so "unbounded" here is
        # as much a numerical breakdown as hitting the cap.
        return LPOutcome(SolveStatus.ITERATION_LIMIT)
    if float(cost1 @ x) > opts.feas_tol:
        return LPOutcome(SolveStatus.INFEASIBLE)

    _drive_out_artificials(A1, b, cost1, lo1, hi1, basis, stat1, N)
    lo1[N:] = 0.0
    hi1[N:] = 0.0  # artificials are frozen out of phase 2
    cost2 = np.concatenate([cost, np.zeros(m)])

    verdict, x, more = _run_simplex(
        A1, b, cost2, lo1, hi1, basis, stat1, opts, iter_budget - used,
    )
    if verdict == "iteration_limit":
        return LPOutcome(SolveStatus.ITERATION_LIMIT)
    if verdict == "unbounded":
        return LPOutcome(SolveStatus.UNBOUNDED)

    point = x[:n].copy()
    point.setflags(write=False)
    return LPOutcome(SolveStatus.OPTIMAL, point, float(lp.objective @ point))

"""Strict complementary primal-dual solutions and the optimal partition.

An optimal primal-dual pair always satisfies complementary slackness,
x.v = 0 and y.u = 0.  A *strict* complementary solution additionally has
x + v > 0 componentwise and y + u > 0 componentwise, so each complementary
pair has exactly one positive member.  Such a pair always exists (the
Goldman-Tucker theorem, carried through the Charnes-Cooper scaling), and its
supports induce the unique optimal partition of the variable and row index
sets: sigma_x / sigma_v split {1..n}, sigma_u / sigma_y split {1..m}.

Finding one reduces to finding relative interior points of the optimal faces
of the transformed LP and its dual, which the support-maximizing LP of the
`interior` module does.  Two routes are provided:

* `approach_one` pins the optimal value theta_star first (one stage-1 solve),
  then solves one support-maximizing LP per face, two LPs in total.  Prefer
  it when only the primal or only the dual half is needed.
* `approach_two` couples both faces through the optimality row
  c.xbar + alpha t - z = 0 and solves a single, larger LP; no prior
  theta_star is needed and the optimal value falls out as the recovered z.

Column orders inside the auxiliary LPs are fixed and documented on each
builder, and the recover_* helpers rely on them.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .duality import TransformedPoint, charnes_cooper_inverse, solve_theta_star
from .errors import DegenerateNormalizer, IterationLimitError, NumericalWarning, PartitionViolation
from .interior import Polyhedron
from .lp import Bound, LinearProgram, LPOutcome, Relation, Sense, SolveStatus, SolverOptions, solve_lp
from .problem import DualPoint, LFPProblem, PrimalPoint

__all__ = [
    "StrictComplementarySolution",
    "OptimalPartition",
    "CscReport",
    "ScscReport",
    "build_primal_interior_lp",
    "build_dual_interior_lp",
    "build_joint_lp",
    "recover_primal_interior",
    "recover_dual_interior",
    "approach_one",
    "approach_two",
    "verify_csc",
    "verify_scsc",
    "optimal_partitions",
    "primal_optimal_face",
    "dual_optimal_face",
]

DEFAULT_POS_TOL = 1e-7
DEFAULT_CSC_TOL = 1e-7


@dataclass(frozen=True)
class StrictComplementarySolution:
    """An optimal primal-dual pair produced by one of the two approaches.

    Carries the original-variable primal point (x, u), the scaling value
    t_star it came from, the dual point (y, z, v), and the shared optimal
    value theta_star.  Whether the pair really is strictly complementary is
    checked by `verify_csc` / `verify_scsc`, not enforced here, so that
    near-miss candidates can be represented and reported.
    """

    primal: PrimalPoint
    t_star: float
    dual: DualPoint
    theta_star: float

    def __post_init__(self):
        if self.primal.x.size != self.dual.v.size:
            raise ValueError("x and v must have the same length")
        if self.primal.u.size != self.dual.y.size:
            raise ValueError("u and y must have the same length")
        object.__setattr__(self, "t_star", float(self.t_star))
        object.__setattr__(self, "theta_star", float(self.theta_star))


@dataclass(frozen=True)
class OptimalPartition:
    """Supports of (x, v) over {1..n} and of (u, y) over {1..m}, 1-based."""

    sigma_x: frozenset
    sigma_v: frozenset
    sigma_u: frozenset
    sigma_y: frozenset

    def __post_init__(self):
        for name in ("sigma_x", "sigma_v", "sigma_u", "sigma_y"):
            object.__setattr__(self, name, frozenset(int(j) for j in getattr(self, name)))


@dataclass(frozen=True)
class CscReport:
    """Both complementarity inner products and the pass verdict."""

    primal_inner: float  # x . v
    dual_inner: float  # y . u
    tol: float
    ok: bool


@dataclass(frozen=True)
class ScscReport:
    """Componentwise minimum of each complementary sum, with failing indices."""

    min_primal_sum: float  # min_j (x_j + v_j)
    min_dual_sum: float  # min_i (y_i + u_i)
    failing_primal: tuple  # 1-based j with x_j + v_j <= tol
    failing_dual: tuple  # 1-based i with y_i + u_i <= tol
    tol: float
    ok: bool


# ---------------------------------------------------------------------------
# Auxiliary LP builders.  All three are homogeneous feasibility systems with
# capped second copies, patterned on the support-maximizing LP of `interior`.
# ---------------------------------------------------------------------------


def build_primal_interior_lp(problem: LFPProblem, theta_star: float) -> LinearProgram:
    """Support-maximizing LP for the primal optimal face.

    Columns: (x1_1..x1_n, p, u1_1..u1_m, w1, x2_1..x2_n, u2_1..u2_m, w2),
    2n + 2m + 3 in total; p is the homogenized scaling variable and is not
    doubled because t is positive on the whole face.  Rows (m + 2):

        A (x1+x2) - b p + (u1+u2)            = 0
        d.(x1+x2) + beta p - (w1+w2)         = 0
        c.(x1+x2) + alpha p - theta* (w1+w2) = 0
    """
    A, b, c, d = problem.A, problem.b, problem.c, problem.d
    m, n = A.shape
    total = 2 * n + 2 * m + 3
    x1 = slice(0, n)
    p = n
    u1 = slice(n + 1, n + 1 + m)
    w1 = n + 1 + m
    x2 = slice(n + 2 + m, 2 * n + 2 + m)
    u2 = slice(2 * n + 2 + m, 2 * n + 2 + 2 * m)
    w2 = 2 * n + 2 * m + 2

    rows = []
    for i in range(m):
        coeffs = np.zeros(total)
        coeffs[x1] = A[i]
        coeffs[x2] = A[i]
        coeffs[p] = -b[i]
        coeffs[u1.start + i] = 1.0
        coeffs[u2.start + i] = 1.0
        rows.append((coeffs, Relation.EQ, 0.0))
    for vec, scalar, w_coeff in (
        (d, problem.beta, -1.0),
        (c, problem.alpha, -float(theta_star)),
    ):
        coeffs = np.zeros(total)
        coeffs[x1] = vec
        coeffs[x2] = vec
        coeffs[p] = scalar
        coeffs[w1] = w_coeff
        coeffs[w2] = w_coeff
        rows.append((coeffs, Relation.EQ, 0.0))

    objective = np.zeros(total)
    objective[x2] = 1.0
    objective[u2] = 1.0
    objective[w2] = 1.0
    bounds = [Bound.nonnegative()] * (n + 1 + m + 1) + [Bound.box(0.0, 1.0)] * (n + m + 1)
    return LinearProgram(Sense.MAXIMIZE, objective, rows=rows, bounds=bounds)


def build_dual_interior_lp(problem: LFPProblem, theta_star: float) -> LinearProgram:
    """Support-maximizing LP for the dual optimal face.

    Columns: (y1_1..y1_m, q, v1_1..v1_n, w1, y2_1..y2_m, v2_1..v2_n, w2),
    2m + 2n + 3 in total; q is the homogenized dual objective and the one
    free variable.  Rows (n + 2):

        A'(y1+y2) + d q - (v1+v2) - c (w1+w2) = 0
        -b.(y1+y2) + beta q - alpha (w1+w2)   = 0
        q - theta* (w1+w2)                    = 0
    """
    A, b, c, d = problem.A, problem.b, problem.c, problem.d
    m, n = A.shape
    total = 2 * m + 2 * n + 3
    y1 = slice(0, m)
    q = m
    v1 = slice(m + 1, m + 1 + n)
    w1 = m + 1 + n
    y2 = slice(m + 2 + n, 2 * m + 2 + n)
    v2 = slice(2 * m + 2 + n, 2 * m + 2 + 2 * n)
    w2 = 2 * m + 2 * n + 2

    rows = []
    for j in range(n):
        coeffs = np.zeros(total)
        coeffs[y1] = A[:, j]
        coeffs[y2] = A[:, j]
        coeffs[q] = d[j]
        coeffs[v1.start + j] = -1.0
        coeffs[v2.start + j] = -1.0
        coeffs[w1] = -c[j]
        coeffs[w2] = -c[j]
        rows.append((coeffs, Relation.EQ, 0.0))
    coeffs = np.zeros(total)
    coeffs[y1] = -b
    coeffs[y2] = -b
    coeffs[q] = problem.beta
    coeffs[w1] = -problem.alpha
    coeffs[w2] = -problem.alpha
    rows.append((coeffs, Relation.EQ, 0.0))
    coeffs = np.zeros(total)
    coeffs[q] = 1.0
    coeffs[w1] = -float(theta_star)
    coeffs[w2] = -float(theta_star)
    rows.append((coeffs, Relation.EQ, 0.0))

    objective = np.zeros(total)
    objective[y2] = 1.0
    objective[v2] = 1.0
    objective[w2] = 1.0
    bounds = (
        [Bound.nonnegative()] * m
        + [Bound.free()]
        + [Bound.nonnegative()] * (n + 1)
        + [Bound.box(0.0, 1.0)] * (m + n + 1)
    )
    return LinearProgram(Sense.MAXIMIZE, objective, rows=rows, bounds=bounds)


def build_joint_lp(problem: LFPProblem) -> LinearProgram:
    """One support-maximizing LP over both faces at once; no theta_star needed.

    Columns: (x1, p, u1, y1, q, v1, w1, x2, u2, y2, v2, w2) with the first
    block sized n+1+m+m+1+n+1 and the capped second block n+m+m+n+1, for
    4n + 4m + 4 in total.  Rows (m + n + 3): the two primal face rows and the
    two dual face rows sharing w1/w2, plus the optimality coupling

        c.(x1+x2) + alpha p - q = 0,

    which replaces the two theta_star rows of the single-face builders.
    """
    A, b, c, d = problem.A, problem.b, problem.c, problem.d
    m, n = A.shape
    first = 2 * n + 2 * m + 3  # x1, p, u1, y1, q, v1, w1
    total = first + 2 * n + 2 * m + 1
    x1 = slice(0, n)
    p = n
    u1 = slice(n + 1, n + 1 + m)
    y1 = slice(n + 1 + m, n + 1 + 2 * m)
    q = n + 1 + 2 * m
    v1 = slice(n + 2 + 2 * m, 2 * n + 2 + 2 * m)
    w1 = 2 * n + 2 + 2 * m
    x2 = slice(first, first + n)
    u2 = slice(first + n, first + n + m)
    y2 = slice(first + n + m, first + n + 2 * m)
    v2 = slice(first + n + 2 * m, first + 2 * n + 2 * m)
    w2 = total - 1

    rows = []
    for i in range(m):
        coeffs = np.zeros(total)
        coeffs[x1] = A[i]
        coeffs[x2] = A[i]
        coeffs[p] = -b[i]
        coeffs[u1.start + i] = 1.0
        coeffs[u2.start + i] = 1.0
        rows.append((coeffs, Relation.EQ, 0.0))
    coeffs = np.zeros(total)
    coeffs[x1] = d
    coeffs[x2] = d
    coeffs[p] = problem.beta
    coeffs[w1] = -1.0
    coeffs[w2] = -1.0
    rows.append((coeffs, Relation.EQ, 0.0))
    for j in range(n):
        coeffs = np.zeros(total)
        coeffs[y1] = A[:, j]
        coeffs[y2] = A[:, j]
        coeffs[q] = d[j]
        coeffs[v1.start + j] = -1.0
        coeffs[v2.start + j] = -1.0
        coeffs[w1] = -c[j]
        coeffs[w2] = -c[j]
        rows.append((coeffs, Relation.EQ, 0.0))
    coeffs = np.zeros(total)
    coeffs[y1] = -b
    coeffs[y2] = -b
    coeffs[q] = problem.beta
    coeffs[w1] = -problem.alpha
    coeffs[w2] = -problem.alpha
    rows.append((coeffs, Relation.EQ, 0.0))
    coeffs = np.zeros(total)
    coeffs[x1] = c
    coeffs[x2] = c
    coeffs[p] = problem.alpha
    coeffs[q] = -1.0
    rows.append((coeffs, Relation.EQ, 0.0))

    objective = np.zeros(total)
    for block in (x2, u2, y2, v2):
        objective[block] = 1.0
    objective[w2] = 1.0
    bounds = (
        [Bound.nonnegative()] * (n + 1 + 2 * m)
        + [Bound.free()]
        + [Bound.nonnegative()] * (n + 1)
        + [Bound.box(0.0, 1.0)] * (2 * n + 2 * m + 1)
    )
    return LinearProgram(Sense.MAXIMIZE, objective, rows=rows, bounds=bounds)


# ---------------------------------------------------------------------------
# Recovery: add the copies back together and divide by the scaling weight.
# ---------------------------------------------------------------------------


def _normalizer(w_total: float, feas_tol: float) -> float:
    if w_total <= feas_tol:
        raise DegenerateNormalizer(
            "zero scaling weight while recovering an interior point of an optimal "
            "face that should be non-empty"
        )
    return w_total


def recover_primal_interior(
    problem: LFPProblem, outcome: LPOutcome, feas_tol: float = 1e-9
) -> TransformedPoint:
    """Interior point of the primal optimal face from an optimal builder outcome."""
    if not outcome.is_optimal:
        raise ValueError(f"expected an optimal outcome, got {outcome.status}")
    m, n = problem.num_rows, problem.num_vars
    z = outcome.point
    w_total = _normalizer(float(z[n + 1 + m] + z[2 * n + 2 * m + 2]), feas_tol)
    x_bar = (z[0:n] + z[n + 2 + m : 2 * n + 2 + m]) / w_total
    t = float(z[n]) / w_total
    u_bar = (z[n + 1 : n + 1 + m] + z[2 * n + 2 + m : 2 * n + 2 + 2 * m]) / w_total
    return TransformedPoint(x_bar, t, u_bar)


def recover_dual_interior(
    problem: LFPProblem, outcome: LPOutcome, feas_tol: float = 1e-9
) -> DualPoint:
    """Interior point of the dual optimal face from an optimal builder outcome."""
    if not outcome.is_optimal:
        raise ValueError(f"expected an optimal outcome, got {outcome.status}")
    m, n = problem.num_rows, problem.num_vars
    z = outcome.point
    w_total = _normalizer(float(z[m + 1 + n] + z[2 * m + 2 * n + 2]), feas_tol)
    y = (z[0:m] + z[m + 2 + n : 2 * m + 2 + n]) / w_total
    zed = float(z[m]) / w_total
    v = (z[m + 1 : m + 1 + n] + z[2 * m + 2 + n : 2 * m + 2 + 2 * n]) / w_total
    return DualPoint(y, zed, v)


def _require_optimal(outcome: LPOutcome, label: str) -> LPOutcome:
    # The auxiliary LPs are feasible (zero) and bounded (capped objective), so
    # anything but OPTIMAL is a numerical breakdown.
    if not outcome.is_optimal:
        raise IterationLimitError(f"{label} solve ended with status {outcome.status.value}")
    return outcome


def approach_one(
    problem: LFPProblem,
    opts: SolverOptions | None = None,
    pos_tol: float = DEFAULT_POS_TOL,
    theta_star: float | None = None,
) -> StrictComplementarySolution:
    """Two-LP route: pin theta_star, then one interior LP per optimal face.

    Pass `theta_star` to reuse a stage-1 value already computed; otherwise it
    is solved here first.
    """
    if opts is None:
        opts = SolverOptions()
    if theta_star is None:
        theta_star = solve_theta_star(problem, opts)
    out_p = _require_optimal(solve_lp(build_primal_interior_lp(problem, theta_star), opts), "primal face")
    tp = recover_primal_interior(problem, out_p, opts.feas_tol)
    out_d = _require_optimal(solve_lp(build_dual_interior_lp(problem, theta_star), opts), "dual face")
    dual = recover_dual_interior(problem, out_d, opts.feas_tol)
    primal = charnes_cooper_inverse(tp, opts.feas_tol)
    return StrictComplementarySolution(primal, tp.t, dual, theta_star)


def approach_two(
    problem: LFPProblem,
    opts: SolverOptions | None = None,
    pos_tol: float = DEFAULT_POS_TOL,
) -> StrictComplementarySolution:
    """Single-LP route over the coupled faces; theta_star falls out as z."""
    if opts is None:
        opts = SolverOptions()
    out = _require_optimal(solve_lp(build_joint_lp(problem), opts), "joint face")
    m, n = problem.num_rows, problem.num_vars
    first = 2 * n + 2 * m + 3
    z = out.point
    w_total = float(z[first - 1] + z[-1])
    if w_total <= opts.feas_tol:
        # No optimal pair scaled into view: either the problem itself is bad
        # (raised by the stage-1 classification below) or numerics collapsed.
        solve_theta_star(problem, opts)
        raise DegenerateNormalizer(
            "joint face recovery found a zero scaling weight although stage 1 "
            "proves an optimal pair exists"
        )
    x_bar = (z[0:n] + z[first : first + n]) / w_total
    t = float(z[n]) / w_total
    u_bar = (z[n + 1 : n + 1 + m] + z[first + n : first + n + m]) / w_total
    y = (z[n + 1 + m : n + 1 + 2 * m] + z[first + n + m : first + n + 2 * m]) / w_total
    zed = float(z[n + 1 + 2 * m]) / w_total
    v = (z[n + 2 + 2 * m : 2 * n + 2 + 2 * m] + z[first + n + 2 * m : first + 2 * n + 2 * m]) / w_total
    primal = charnes_cooper_inverse(TransformedPoint(x_bar, t, u_bar), opts.feas_tol)
    return StrictComplementarySolution(primal, t, DualPoint(y, zed, v), zed)


# ---------------------------------------------------------------------------
# Verification and the partition.
# ---------------------------------------------------------------------------


def verify_csc(sol: StrictComplementarySolution, csc_tol: float = DEFAULT_CSC_TOL) -> CscReport:
    """Check the complementarity inner products x.v and y.u against csc_tol."""
    primal_inner = float(sol.primal.x @ sol.dual.v)
    dual_inner = float(sol.dual.y @ sol.primal.u)
    ok = abs(primal_inner) <= csc_tol and abs(dual_inner) <= csc_tol
    return CscReport(primal_inner, dual_inner, csc_tol, ok)


def verify_scsc(sol: StrictComplementarySolution, pos_tol: float = DEFAULT_POS_TOL) -> ScscReport:
    """Check strictness: each complementary pair must sum above pos_tol."""
    primal_sums = sol.primal.x + sol.dual.v
    dual_sums = sol.dual.y + sol.primal.u
    failing_primal = tuple(int(j) + 1 for j in np.nonzero(primal_sums <= pos_tol)[0])
    failing_dual = tuple(int(i) + 1 for i in np.nonzero(dual_sums <= pos_tol)[0])
    return ScscReport(
        float(primal_sums.min()),
        float(dual_sums.min()),
        failing_primal,
        failing_dual,
        pos_tol,
        not failing_primal and not failing_dual,
    )


def _classified_support(values, pos_tol, label) -> frozenset:
    # Values caught in the guard band just under the threshold make the
    # classification fragile; say so instead of silently deciding.
    band = np.nonzero((values > pos_tol / 10.0) & (values <= pos_tol))[0]
    for j in band:
        warnings.warn(
            f"{label}[{int(j) + 1}] = {values[j]:.3e} sits in the support guard band "
            f"({pos_tol / 10.0:g}, {pos_tol:g}]; the partition may be noise-sensitive",
            NumericalWarning,
            stacklevel=3,
        )
    return frozenset(int(j) + 1 for j in np.nonzero(values > pos_tol)[0])


def optimal_partitions(
    sol: StrictComplementarySolution, pos_tol: float = DEFAULT_POS_TOL
) -> OptimalPartition:
    """Supports of x, v, u, y as the two index-set partitions.

    Raises PartitionViolation when the four sets fail to partition their index
    sets, which means `sol` is not strictly complementary at pos_tol.
    """
    sigma_x = _classified_support(sol.primal.x, pos_tol, "x")
    sigma_v = _classified_support(sol.dual.v, pos_tol, "v")
    sigma_u = _classified_support(sol.primal.u, pos_tol, "u")
    sigma_y = _classified_support(sol.dual.y, pos_tol, "y")
    n = sol.primal.x.size
    m = sol.primal.u.size
    problems = []
    if sigma_x & sigma_v:
        problems.append(f"x/v overlap at {sorted(sigma_x & sigma_v)}")
    uncovered = set(range(1, n + 1)) - (sigma_x | sigma_v)
    if uncovered:
        problems.append(f"x/v cover misses {sorted(uncovered)}")
    if sigma_u & sigma_y:
        problems.append(f"u/y overlap at {sorted(sigma_u & sigma_y)}")
    uncovered = set(range(1, m + 1)) - (sigma_u | sigma_y)
    if uncovered:
        problems.append(f"u/y cover misses {sorted(uncovered)}")
    if problems:
        raise PartitionViolation("; ".join(problems))
    return OptimalPartition(sigma_x, sigma_v, sigma_u, sigma_y)


# ---------------------------------------------------------------------------
# The optimal faces as standard-form polyhedra (mainly for oracle tests).
# ---------------------------------------------------------------------------


def primal_optimal_face(problem: LFPProblem, theta_star: float) -> Polyhedron:
    """Optimal face of the transformed LP, coordinates (xbar_1..xbar_n, t, ubar_1..ubar_m)."""
    A, b, c, d = problem.A, problem.b, problem.c, problem.d
    m, n = A.shape
    M = np.zeros((m + 2, n + 1 + m))
    M[:m, :n] = A
    M[:m, n] = -b
    M[:m, n + 1 :] = np.eye(m)
    M[m, :n] = d
    M[m, n] = problem.beta
    M[m + 1, :n] = c
    M[m + 1, n] = problem.alpha
    rhs = np.concatenate([np.zeros(m), [1.0, float(theta_star)]])
    return Polyhedron(M, rhs)


def dual_optimal_face(problem: LFPProblem, theta_star: float) -> Polyhedron:
    """Optimal face of the dual LP, coordinates (y_1..y_m, z, v_1..v_n).

    Standard form forces z >= 0, so this representation is only faithful for
    theta_star >= 0; a negative optimum would need a sign-flipped z column.
    """
    if theta_star < 0:
        raise ValueError("the standard-form dual face requires a nonnegative optimal value")
    A, b, c = problem.A, problem.b, problem.c
    m, n = A.shape
    M = np.zeros((n + 2, m + 1 + n))
    M[:n, :m] = A.T
    M[:n, m] = problem.d
    M[:n, m + 1 :] = -np.eye(n)
    M[n, :m] = -b
    M[n, m] = problem.beta
    M[n + 1, m] = 1.0
    rhs = np.concatenate([c, [problem.alpha, float(theta_star)]])
    return Polyhedron(M, rhs)

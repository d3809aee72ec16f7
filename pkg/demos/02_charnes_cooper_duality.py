"""The Charnes-Cooper scaling and the LP dual of a ratio objective.

Substituting t = 1/(d.x + beta) and xbar = t x converts the ratio problem
into an ordinary LP; the dual LP then prices the original constraints, and
the two optimal values meet (strong duality).
"""

import numpy as np

from lfpkit import (
    LFPProblem,
    build_dual_lp,
    build_transformed_lp,
    charnes_cooper_forward,
    charnes_cooper_inverse,
    evaluate_objective,
    solve_lp,
)

problem = LFPProblem(
    A=[[2.0, 1.0], [-2.0, 1.0]], b=[6.0, 2.0],
    c=[6.0, 3.0], d=[5.0, 2.0], alpha=6.0, beta=5.0,
)

# The scaling is a bijection between the region and its transformed image.
x = np.array([0.8, 3.6])
image = charnes_cooper_forward(problem, x)
print("x =", x, "-> (xbar, t) =", image.x_bar, image.t)
print("ratio value     :", evaluate_objective(problem, x))
print("linear value    :", float(problem.c @ image.x_bar + problem.alpha * image.t))
print("mapped back     :", charnes_cooper_inverse(image).x)

# Solve both sides.  The transformed LP maximizes over (xbar, t); the dual
# minimizes z over (y, z) with y >= 0 and z free.
primal = solve_lp(build_transformed_lp(problem))
dual = solve_lp(build_dual_lp(problem))
print("\nprimal optimum  :", primal.objective)
print("dual optimum    :", dual.objective)
print("duality gap     :", abs(primal.objective - dual.objective))
print("dual multipliers:", dual.point[:2], " z =", dual.point[2])

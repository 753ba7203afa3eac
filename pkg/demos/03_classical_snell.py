"""Isotropic media reduce to the classical refraction law.

Solves a two-ball problem and checks sin(theta0)/r0 = sin(theta1)/r1 for the
angles of incidence of the optimal velocities.
"""

import math

from elvis import Ball, classical_snell_angles, make_problem, solve

problem = make_problem((-1, -1), (1, 1), Ball(1.0), Ball(2.0))
result, _ = solve(problem)
th0, th1 = classical_snell_angles(result, problem)

print(f"crossing abscissa: {result.y:.12f}")
print(f"theta0 = {math.degrees(th0):.6f} deg, theta1 = {math.degrees(th1):.6f} deg")
print(f"sin(theta0)/r0 = {math.sin(th0) / 1.0:.15f}")
print(f"sin(theta1)/r1 = {math.sin(th1) / 2.0:.15f}")

"""Square velocity sets: non-smooth faces and the three solution regions.

Velocity sets here are the documented test squares: the axis-aligned unit
square below the interface and a 45-degree-rotated unit square shifted up by
0.25 above it.  Sweeping the target x1 horizontally at height 1 shows three
regimes of the crossing abscissa y:

  * x1_x < -1: the crossing pins to the square corner at y = -1; whenever an
    iterate lands on the corner the residual becomes a genuine interval
    straddling zero and the solver halts in a step or two
    (ResidualZeroInFace).
  * -1 <= x1_x <= 1: the optimum is directly below the target, y = x1_x, and
    the solver bisects to full depth.
  * x1_x > 1: mirror image of the first region, pinned at y = +1.

Writes sweep.csv with one row per target.
"""

import os

import numpy as np

from elvis import Polygon, make_problem, solve, validate

HERE = os.path.dirname(os.path.abspath(__file__))

square0 = validate(Polygon([(1, 1), (-1, 1), (-1, -1), (1, -1)]))
square1 = validate(Polygon([(1, 0.25), (0, 1.25), (-1, 0.25), (0, -0.75)]))
x0 = (0.0, -1.0)

rows = []
for x1x in np.arange(-4.0, 4.0 + 1e-9, 2.0 / 3.0):
    problem = make_problem(x0, (x1x, 1.0), square0, square1)
    result, _ = solve(problem)
    rows.append((x1x, result.y, result.time, result.status, result.iterations))
    print(f"x1 = ({x1x:+8.4f}, 1)   y = {result.y:+12.8f}   "
          f"{result.iterations:3d} it  {result.status}")

with open(os.path.join(HERE, "sweep.csv"), "w") as fh:
    fh.write("x1x,y,time,status,iterations\n")
    for x1x, y, t, status, its in rows:
        fh.write(f"{x1x!r},{y!r},{t!r},{status},{its}\n")
print("wrote sweep.csv")

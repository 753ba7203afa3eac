"""Tour of the convex-geometry primitives.

Builds a ball, an ellipse and a square, then walks through gauges, support
functions, polar duals and normal faces, cross-checking each closed form
against the membership-bisection oracle.
"""

import numpy as np

from elvis import (
    Ball,
    Ellipse,
    Polygon,
    gauge,
    gauge_by_membership,
    normal_face,
    polar,
    support,
    validate,
)

ball = validate(Ball(2.0))
ellipse = validate(Ellipse(1.0, 0.5))
square = validate(Polygon([(1, 1), (-1, 1), (-1, -1), (1, -1)]))

print("== gauges ==")
for vset, v in [(ball, (0, 3)), (ellipse, (1, 1)), (square, (3, 2))]:
    closed = gauge(vset, v)
    bisected = gauge_by_membership(vset, v)
    print(f"{vset!r:50s} gamma{v} = {closed:.12f}   (membership oracle {bisected:.12f})")

print()
print("== support functions and polar duals ==")
print("sigma of square at (1,1):", support(square, (1, 1)))
diamond = polar(square)
print("polar of the square has vertices:", diamond.vertices.tolist())
print("gauge of the polar == support of the primal:",
      gauge(diamond, (0.3, 0.7)), "==", support(square, (0.3, 0.7)))

print()
print("== normal faces ==")
print("ball at (0,5):   ", normal_face(ball, (0, 5)))
print("square mid-facet:", normal_face(square, (2, 0.6)))
face = normal_face(square, (3, 3))
print("square vertex:    segment", face.zeta_lo, "to", face.zeta_hi,
      "(an edge of the polar diamond)")

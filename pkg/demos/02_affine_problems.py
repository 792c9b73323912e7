"""
Affine extremal maps
====================

Among maps between two rectangles that send sides to sides, the horizontal
stretch has the least dilatation.  Between the ellipses E(α, β) and E(β, α)
with prescribed boundary values the axis swap plays the same role; bumping
it anywhere inside only makes things worse.
"""

from qcdisplace import AffineMap, Ellipse, RectanglePair, affine_dilatation, ellipse_extremal_map, rect_extremal_map
from qcdisplace.verify import ellipse_competitor_dilatation

m = rect_extremal_map(RectanglePair(1, 2))
print("rectangle 1 -> 2:", m, " K =", affine_dilatation(m))
print("corners:", [complex(m(z)) for z in (0, 1, 1 + 1j, 1j)])

e = Ellipse(1.5, 2.5)
h = ellipse_extremal_map(e)
print("ellipse swap:", h, " K =", affine_dilatation(h), " (25/9 =", 25 / 9, ")")

# compactly supported bumps keep the boundary values but raise the dilatation
for eps in (0.01, 0.05, 0.1, 0.2):
    print(f"bump eps={eps:<4}  measured K = {ellipse_competitor_dilatation(1.5, 2.5, eps):.6f}")

# rotation does not change the dilatation
print("rotated:", affine_dilatation(AffineMap(1.5j, 0.5j)))

# %% [markdown]
# # Downward parabolas and anchors
#
# A point with d = t^2 d0 (d0 in {1, 2, 8}) has x = t a1 for an anchor
# point (a1, b1) on the d0 curve, and lies on
# y = -d0 x^2 / (2 a1^2) + a1^2 / (2 d0).

# %%
from pptcurves import DownParabola, anchor_of, down_contains, down_parabola_of, down_points, geometry_of

for point, c in [((105, 88), 137), ((140, 51), 149), ((84, 13), 85)]:
    anc = anchor_of(point, c)
    down = down_parabola_of(anc)
    print(point, f"a1={anc.a1} d0={anc.d0} t={anc.t}", tuple(anc.anchor_triple), down.equation(),
          down_contains(down, point))

# %% [markdown]
# The primitive lattice points on the curves anchored at 13, 20 and 28.

# %%
for a1, d0 in [(13, 1), (20, 2), (28, 8)]:
    p = DownParabola(a1, d0)
    g = geometry_of(p)
    print(p.equation(), "vertex", g.vertex[1], "x-intercept", g.intercepts[1][0])
    print("   ", down_points(p))

# %% [markdown]
# Non-primitive lattice points are dropped by default; a1 = 15 shows why.

# %%
print(down_points(DownParabola(15, 1), primitive_only=False))
print(down_points(DownParabola(15, 1)))

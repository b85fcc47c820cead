# %% [markdown]
# # Upward and rightward parabolas
#
# Every plotted point (x, y) lies on y = (x^2 - d^2)/(2d) with d = c - y and
# on its mirror x = (y^2 - d'^2)/(2d') with d' = c - x. Both have their
# focus at the origin.

# %%
from pptcurves import Orientation, UpParabola, classify_point, family_d1, family_d2, geometry_of

print([tuple(family_d1(a)) for a in (3, 5, 7, 9)])
print([tuple(family_d2(k)) for k in (1, 2, 3, 4)])

# %%
for point, c in [((3, 4), 5), ((105, 88), 137), ((140, 51), 149)]:
    up, right = classify_point(point, c)
    print(point, "d =", up.d, up.equation(), "| d' =", right.d, right.equation())

# %%
for p in (UpParabola(1), UpParabola(1, Orientation.RIGHT), UpParabola(49)):
    g = geometry_of(p)
    print(p.equation(), "vertex", tuple(map(str, g.vertex)), "focus", tuple(map(str, g.focus)))

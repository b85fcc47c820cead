# %% [markdown]
# # Upward and downward curves cross at right angles
#
# At every PPT point, the tangent slopes x/d and -x d0/a1^2 multiply to
# exactly -1.

# %%
from pptcurves import anchor_of, classify_point, down_parabola_of, enumerate_ppts, slopes_at

for point, c in [((3, 4), 5), ((105, 88), 137), ((140, 51), 149)]:
    up, _ = classify_point(point, c)
    down = down_parabola_of(anchor_of(point, c))
    m1, m2 = slopes_at(up, down, point)
    print(point, m1, m2, m1 * m2)

# %%
products = set()
for t in enumerate_ppts(2000):
    for point in ((t.a, t.b), (t.b, t.a)):
        up, _ = classify_point(point, t.c)
        m1, m2 = slopes_at(up, down_parabola_of(anchor_of(point, t.c)), point)
        products.add(m1 * m2)
print("distinct slope products:", products)

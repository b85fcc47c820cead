# %% [markdown]
# # Difference values and the allowable sequence
#
# For a plotted point (x, y) of a triple with hypotenuse c, d = c - y.
# Only odd squares and twice squares occur (OEIS A096033).

# %%
from collections import Counter

from pptcurves import allowable_sequence, enumerate_ppts, verify_d_claim
from pptcurves.dvalues import d2_residue_split, residue_report

print(allowable_sequence(100))

counts = Counter()
for t in enumerate_ppts(3000):
    counts[t.c - t.b] += 1
    counts[t.c - t.a] += 1
print("d values seen below 100:", sorted(d for d in counts if d <= 100))

# %% [markdown]
# The d = 2 triples split by x mod 4: x = 4k is primitive, x = 4k + 2 never is.

# %%
groups = d2_residue_split(200)
for r in (0, 2):
    print(r, [(p, prim) for p, prim in groups[r]][:4])

# %% [markdown]
# Exhaustive check of each case over a finite range. Non-allowable d give
# Pythagorean triples, but never primitive ones.

# %%
for d in (3, 4, 9, 12, 18, 27, 32):
    print(verify_d_claim(d, 2000).to_json())

# %% [markdown]
# The residue observations hold for odd squares, but the one for odd
# non-squares (x = d mod 2d) has exceptions, e.g. d = 27.

# %%
print(residue_report(9, 2000)._replace(violations="..."))
rep = residue_report(27, 500)
print(rep.residue, rep.modulus, rep.violations[:3])

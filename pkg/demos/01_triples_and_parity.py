# %% [markdown]
# # Primitive Pythagorean triples
#
# A triple (a, b, c) with a^2 + b^2 = c^2 is primitive when gcd(a, b, c) = 1.
# The fast generator sweeps coprime parameter pairs of opposite parity; the
# oracle tries every pair of legs. They agree.

# %%
from pptcurves import enumerate_ppts, enumerate_ppts_oracle, is_primitive
from pptcurves.triples import first_ppts

print(is_primitive((3, 4, 5)), is_primitive((6, 8, 10)))

# %% [markdown]
# The first eighteen triples ordered by the short leg. Those with c = b + 1
# are marked with *.

# %%
for t in first_ppts(18):
    mark = "*" if t.c - t.b == 1 else " "
    print(f"{mark} {tuple(t)}")

# %% [markdown]
# Parity: the hypotenuse is always odd and exactly one leg is even.

# %%
ts = enumerate_ppts(2000)
print(len(ts), "triples with both legs < 2000")
print("odd hypotenuse:", all(t.c % 2 for t in ts))
print("one even leg:  ", all((t.a % 2) + (t.b % 2) == 1 for t in ts))
print("oracle agrees: ", ts == enumerate_ppts_oracle(2000))

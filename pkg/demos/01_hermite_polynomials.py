# %% [markdown]
# # Hermite polynomials three ways
#
# The recurrence table is what the rest of the package uses. The Rodrigues
# route differentiates the Gaussian density; the moment route expands
# E(x + iN)^n with complex rational arithmetic. All three must agree exactly.

# %%
import math

from malliavin import generating_series, hermite_moment, hermite_recurrence, hermite_rodrigues
from malliavin.hermite import moment_expansion

table = hermite_recurrence(6)
for n, h in enumerate(table.polys):
    print(f"H_{n}(x) = {h}")

# %%
for n in range(7):
    same = table[n] == hermite_rodrigues(n) == hermite_moment(n)
    print(n, "agree" if same else "MISMATCH")

# %% [markdown]
# The imaginary part of E(x + iN)^n cancels term by term: odd powers of i
# only meet odd Gaussian moments, which vanish.

# %%
re, im = moment_expansion(5)
print("Re:", re, "  Im:", im)

# %% [markdown]
# Exponential generating function exp(tx - t^2/2), expanded exactly.

# %%
series = generating_series(5)
for n, term in enumerate(series.terms):
    print(f"t^{n}: {term}    * {n}! = {term.scale(math.factorial(n))}")

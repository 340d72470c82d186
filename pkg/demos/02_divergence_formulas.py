# %% [markdown]
# # The n-th divergence of a polynomial
#
# delta^n g is computed four ways. The binomial form expands (H - g)^n with
# H^k -> H_k and g^k -> g^(k), including g^0 = g.

# %%
from malliavin import Method, Polynomial, divergence
from malliavin.divergence import commutator_check, delta_binomial
from malliavin.poly import derivative

x = Polynomial.x()
g = x * x - x

for method in Method:
    res = divergence(g, 3, method)
    print(f"{method.value:>9}: delta^3 g = {res.output}")

# %% [markdown]
# Special cases: delta^n 1 = H_n, delta^n x = H_{n+1}.

# %%
for n in range(5):
    print(n, delta_binomial(Polynomial.one(), n), "|", delta_binomial(x, n))

# %% [markdown]
# Commutation with d/dx: D delta^n g = n delta^(n-1) g + delta^n g'.

# %%
n = 4
lhs = derivative(delta_binomial(g, n))
rhs = delta_binomial(g, n - 1).scale(n) + delta_binomial(derivative(g), n)
print(lhs, "==", rhs, ":", lhs == rhs, commutator_check(g, n))

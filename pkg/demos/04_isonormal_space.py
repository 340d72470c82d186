# %% [markdown]
# # Divergence on an isonormal Gaussian space
#
# In R^4 with X(h) = <h, Z>, the field u = g(X(h)) h^{(x)n} has divergence
# (delta^n g)(X(h)). We check E<D^n F, u> = E[F delta^n(u)] for F = f(X(v))
# exactly and by Monte Carlo, with <h, v> = rho.

# %%
from fractions import Fraction

from malliavin import IsonormalSpace, Polynomial, TensorFunctional
from malliavin import corollary_derivative, divergence_tensor, duality_bivariate, duality_monte_carlo

x = Polynomial.x()
space = IsonormalSpace(4)
rho = Fraction(1, 2)
h, v = space.correlated_pair(rho, seed=3)
u = TensorFunctional(x * x + 1, h, 2)

print("delta^2(u) = p(X(h)) with p =", divergence_tensor(u))
q, _ = corollary_derivative(u)
print("D delta^2(u) = q(X(h)) h with q =", q)

# %%
f = x**4 + x
exact = duality_bivariate(f, u, v, rho)
print("exact:", exact.to_dict())

mc = duality_monte_carlo(f, u, v, rho, samples=200_000, seed=11)
print("monte carlo:", mc.to_dict())

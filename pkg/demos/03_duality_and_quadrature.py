# %% [markdown]
# # Duality, exactly and by quadrature
#
# The divergence is defined as the adjoint of n-fold differentiation under
# the Gaussian measure: E[f^(n)(N) g(N)] = E[f(N) delta^n g(N)]. With
# polynomials both sides are finite sums of Gaussian moments.

# %%
import numpy as np

from malliavin import Polynomial, delta_binomial, duality_check, gauss_hermite_nodes
from malliavin.divergence import quadrature_expectation
from malliavin.poly import derivative

x = Polynomial.x()
f, g, n = x**5 - 2 * x, x**3 + 1, 3
rep = duality_check(f, g, n)
print(rep.to_dict())

# %% [markdown]
# The same two integrals with a 12-point Gauss-Hermite rule (exact up to
# degree 23, here the integrands have degree <= 11).

# %%
lhs = quadrature_expectation(derivative(f, n) * g, 12)
rhs = quadrature_expectation(f * delta_binomial(g, n), 12)
print(lhs, rhs, float(rep.lhs))

# %%
nodes, weights = gauss_hermite_nodes(6)
print(np.round(nodes, 6))
print(np.round(weights, 8), weights.sum())

# %% [markdown]
# # Codimension of a module through its jets
#
# A submodule T of R^r, R = K[[x, y]], has finite codimension exactly when
# some power of the maximal ideal times R^r sits inside T.  We never touch
# power series directly: everything happens in the finite jet spaces
# R^r / m^D R^r, and the computation stops as soon as two consecutive
# truncations report the same codimension.

# %%
from findet import GF, GeneratorSet, Poly, ideal_codim, minimal_k_containment
from findet.jetspace import codim_profile

F = GF(101)
x, y = Poly.gens(F, 2)

# %% [markdown]
# Start with a monomial ideal.  The standard monomials of <x^2, y^3> are
# x^a y^b with a < 2 and b < 3, six of them.

# %%
I = GeneratorSet.ideal([x**2, y**3])
res = ideal_codim(I)
print(res)
print("profile codim(D), D = 1, 2, ...:", res.profile)

# %% [markdown]
# The profile keeps growing while new monomials escape the ideal, then
# flattens.  The first degree at which it reaches its final value is the
# smallest k with m^k inside I.

# %%
print("m^k inside I from k =", minimal_k_containment(I, res))

# %% [markdown]
# Non-monomial ideals work the same way.  Here <x^2 + y^3, y> equals <x^2, y>.

# %%
J = GeneratorSet.ideal([x**2 + y**3, y])
r = ideal_codim(J)
print(r, "k =", minimal_k_containment(J, r))

# %% [markdown]
# When the quotient is infinite dimensional the profile never settles and
# the answer is an honest "inconclusive at the cap", together with the
# lower bound reached.

# %%
print(ideal_codim(GeneratorSet.ideal([x]), max_degree=10))
print(codim_profile(GeneratorSet.ideal([x]), 10))

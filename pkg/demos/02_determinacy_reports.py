# %% [markdown]
# # Three ways to certify finite determinacy
#
# For a 2 x 2 matrix A of power series, the orbit under row operations,
# column operations and coordinate changes has a tangent image.  A is
# finitely determined once any of these is certified finite:
#
# * d, the codimension of the tangent image in m * M,
# * d_e, the codimension of the extended tangent image in M,
# * k, the least power of m inside the ideal of maximal minors of the
#   presentation matrix.
#
# Each finite value c yields the determinacy bound 2c - ord(A) + 2.

# %%
from findet import GF, Poly, PolyMatrix, check, presentation_theta

F = GF(101)
x, y = Poly.gens(F, 2)
zero = Poly.zero(F, 2)

# %%
A = PolyMatrix.diag([x, y])
rep = check(A)
print(rep.verdict)
print("d   =", rep.d)
print("d_e =", rep.d_e)
print("I_4 =", rep.ideal, "  k_min =", rep.k_min)
print("bounds:", rep.bounds)

# %% [markdown]
# The presentation matrix has the eight products with elementary matrices
# followed by the two partial derivatives.

# %%
for row in presentation_theta(A).rows:
    print("  ".join(f"{str(e):>3}" for e in row))

# %% [markdown]
# A matrix with a whole entry missing from every generator is a useful
# negative control: every criterion stays inconclusive and the profiles
# grow in every degree.

# %%
B = PolyMatrix([[x, zero], [zero, zero]])
rep = check(B, max_degree=12)
print(rep.verdict, rep.d_e.profile)

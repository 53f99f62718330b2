# %% [markdown]
# # The generic matrix of N-th power forms
#
# With general coefficients c, the matrix B whose entries are
# c^(1) x_1^N + ... + c^(s) x_s^N is finitely determined.  The argument
# rests on a handful of explicit polynomial identities about the maximal
# minors of its presentation matrix; this script replays them.

# %%
from itertools import combinations

from findet import GF, QQ, check, det, minor, presentation_theta
from findet.experiments import (GenericSpec, build_generic_B, extract_F, genericity_trial,
                                system_determinant_in_a, verify_last_columns_factorization, y_labels)

F = GF(101)
B = build_generic_B(GenericSpec(s=2, N=3, field=F, seed=1))
print(B)

# %% [markdown]
# The minor on the first four columns is the square of det(B).

# %%
T = presentation_theta(B)
print(minor(T, range(4), range(4)) == det(B) ** 2)

# %% [markdown]
# Minors using two of the first eight columns and the first two derivative
# columns factor as F * N^2 x1^(N-1) x2^(N-1) with F a linear form in the
# monomials y_ij = x_i^N x_j^N.

# %%
B3 = build_generic_B(GenericSpec(s=3, N=2, field=F, seed=1))
names = [f"y{i}{j}" for i, j in y_labels(3)]
for i1, i2 in list(combinations(range(1, 9), 2))[:4]:
    print((i1, i2), extract_F(B3, i1, i2).format(names))

# %% [markdown]
# Four derivative columns give a monomial times a coefficient determinant.

# %%
B4 = build_generic_B(GenericSpec(s=4, N=2, field=F, seed=1))
print(verify_last_columns_factorization(B4, (9, 10, 11, 12)))

# %% [markdown]
# A special choice of coefficients with one free parameter a turns six of
# these linear forms into a square system whose determinant is a^7 + a^6.

# %%
print(system_determinant_in_a(QQ).format(["a"]))

# %% [markdown]
# Finally the certificate itself, and how often random draws succeed.

# %%
rep = check(B)
print(rep.verdict, rep.bounds)
print("fraction certified:", genericity_trial(2, 3, F, trials=20, seed=0))

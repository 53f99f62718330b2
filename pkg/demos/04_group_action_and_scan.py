# %% [markdown]
# # Group action and semi-continuity
#
# The codimension d_e is an orbit invariant: acting with invertible
# matrices U, V and a coordinate change phi leaves it unchanged.  And along
# the line B + tA it can only drop away from t = 0, which is how every
# matrix is connected to a finitely determined one.

# %%
from findet import GF, QQ, Poly, PolyMatrix, apply, random_group_element
from findet.determinacy import extended_codim
from findet.experiments import GenericSpec, build_generic_B, semicontinuity_scan

F = GF(101)
B = build_generic_B(GenericSpec(2, 3, F, seed=1))
base = extended_codim(B)
print("d_e(B) =", base.codim)

# %%
for seed in range(5):
    g = random_group_element(2, 2, 2, F, seed=seed)
    moved = apply(g, B, 2 * base.codim + 2)
    print(seed, extended_codim(moved).codim)

# %% [markdown]
# Semi-continuity along B + tA over the rationals.

# %%
Bq = build_generic_B(GenericSpec(2, 5, QQ, seed=42))
x, y = Poly.gens(QQ, 2)
scan = semicontinuity_scan(Bq, PolyMatrix.diag([x, y]), range(1, 6))
print("d_e(0) =", scan.d_e_at_zero.codim)
for t, r in zip(scan.t_values, scan.d_e_values):
    print(f"t = {t}: d_e = {r.codim}")

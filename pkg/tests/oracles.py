"""Independent reference implementations used only by the tests.

Dense Fraction/modular elimination and brute-force jet-space assembly,
written without touching the package's linear algebra or jet code.
"""
from fractions import Fraction
from itertools import product


def dense_rank(rows, p=0):
    """Rank of a dense list-of-lists matrix over Q (p == 0) or F_p."""
    a = [[Fraction(v) if not p else v % p for v in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][c] if not p else pow(a[rank][c], -1, p)
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c] * inv
                a[r] = [x - f * y if not p else (x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def monomials(s, D, lo=0):
    """All exponent tuples of total degree in [lo, D)."""
    return [e for e in product(range(D), repeat=s) if lo <= sum(e) < D]


def jet_codim(gens, s, D, p=0, lo=0):
    """dim m^lo F / (T + m^D F) for T spanned over R by ``gens``.

    ``gens`` are tuples of dicts {exponent: coefficient}; the jet basis
    is enumerated in a naive order and every x^alpha * g is expanded.
    """
    r = len(gens[0]) if gens else 1
    basis = [(c, m) for c in range(r) for m in monomials(s, D, lo)]
    col = {b: k for k, b in enumerate(basis)}
    rows = []
    for g in gens:
        for alpha in monomials(s, D):
            row = [0] * len(basis)
            for c, comp in enumerate(g):
                for m, v in comp.items():
                    e = tuple(a + b for a, b in zip(alpha, m))
                    if sum(e) < D:
                        row[col[(c, e)]] += v
            rows.append(row)
    return len(basis) - dense_rank(rows, p)

"""Exact row echelon structure of sparse matrices over Q or F_p.

The jet-space code only needs the *pivot columns* of a row echelon form:
with columns sorted by degree, the rank of every column prefix (and hence
every truncation degree) is read off from them.

Two backends:

``flint``   python-flint's ``nmod_mat`` / ``fmpq_mat`` rref (default).
``python``  incremental sparse elimination on dict rows; dependency free,
            used as a cross-check in the test-suite.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import Field

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None

__all__ = ["pivot_columns", "rank", "scalar_det", "DEFAULT_BACKEND"]

DEFAULT_BACKEND = "flint" if flint is not None else "python"

SparseRow = dict  # column index -> nonzero raw field value


def pivot_columns(rows: Sequence[SparseRow], ncols: int, field: Field,
                  backend: str | None = None) -> list[int]:
    """Sorted pivot columns of a row echelon form of the given rows."""
    backend = backend or DEFAULT_BACKEND
    rows = [r for r in rows if r]
    if not rows or ncols == 0:
        return []
    if backend == "python":
        return _python_pivots(rows, field)
    if backend == "flint":
        if flint is None:
            raise RuntimeError("python-flint is not installed")
        return _flint_pivots(rows, ncols, field)
    raise ValueError(f"unknown backend {backend!r}")


def rank(rows: Sequence[SparseRow], ncols: int, field: Field, backend: str | None = None) -> int:
    return len(pivot_columns(rows, ncols, field, backend))


def _python_pivots(rows, field: Field) -> list[int]:
    p = field.p
    basis: dict[int, dict] = {}
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            piv = basis.get(c)
            if piv is None:
                inv = field.inv(r[c])
                basis[c] = {k: field.reduce(v * inv) for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                nv = r.get(k, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return sorted(basis)


def _flint_pivots(rows, ncols: int, field: Field) -> list[int]:
    nrows = len(rows)
    if field.p:
        M = flint.nmod_mat(nrows, ncols, field.p)
        for i, row in enumerate(rows):
            for j, v in row.items():
                M[i, j] = v
    else:
        M = flint.fmpq_mat(nrows, ncols)
        for i, row in enumerate(rows):
            for j, v in row.items():
                M[i, j] = flint.fmpq(v.numerator, v.denominator)
    R, rk = M.rref()
    pivots = []
    j = 0
    for i in range(rk):
        # pivot columns of an rref are strictly increasing
        while R[i, j] == 0:
            j += 1
        pivots.append(j)
        j += 1
    return pivots


def scalar_det(mat: Sequence[Sequence], field: Field):
    """Determinant of a small square matrix of raw field values (Gaussian elimination)."""
    a = [[field.convert(v) for v in row] for row in mat]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    det = field.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = field.reduce(-det)
        det = field.reduce(det * a[c][c])
        inv = field.inv(a[c][c])
        for r in range(c + 1, n):
            if a[r][c]:
                f = field.reduce(a[r][c] * inv)
                a[r] = [field.reduce(x - f * y) for x, y in zip(a[r], a[c])]
    return det if field.p else Fraction(det)

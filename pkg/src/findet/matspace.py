"""Matrices over the polynomial ring, tangent images and presentation matrices.

Flattening is column-major: an m x n matrix becomes the vector
``(a11, a21, ..., am1, a12, ..., amn)``.  For 2 x 2 this is
``(f11, f21, f12, f22)``, the row layout of the presentation matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import Sequence

from .polyring import INFINITY, Poly
from .scalars import Field

__all__ = [
    "PolyMatrix", "GeneratorSet", "GenLabel", "e_mul_left", "e_mul_right",
    "tangent_image_gens", "det", "minor", "presentation_theta", "minors",
    "minors_ideal",
]


class PolyMatrix:
    """Immutable m x n matrix of :class:`Poly` sharing one field and arity."""

    __slots__ = ("m", "n", "field", "nvars", "_rows")

    def __init__(self, rows: Sequence[Sequence[Poly]], field: Field | None = None, nvars: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            if field is None or nvars is None:
                raise ValueError("empty matrix needs explicit field and nvars")
        m = len(rows)
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise ValueError("ragged matrix")
        if rows and rows[0]:
            field = field or rows[0][0].field
            nvars = rows[0][0].nvars if nvars is None else nvars
        for r in rows:
            for e in r:
                if e.field != field or e.nvars != nvars:
                    raise ValueError("all entries must share field and number of variables")
        self.m, self.n, self.field, self.nvars, self._rows = m, n, field, nvars, rows

    # constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, m: int, n: int, field: Field, nvars: int) -> "PolyMatrix":
        z = Poly.zero(field, nvars)
        return cls([[z] * n for _ in range(m)], field, nvars)

    @classmethod
    def identity(cls, m: int, field: Field, nvars: int) -> "PolyMatrix":
        one, z = Poly.constant(field, nvars, 1), Poly.zero(field, nvars)
        return cls([[one if i == j else z for j in range(m)] for i in range(m)], field, nvars)

    @classmethod
    def diag(cls, entries: Sequence[Poly]) -> "PolyMatrix":
        f, s = entries[0].field, entries[0].nvars
        z = Poly.zero(f, s)
        k = len(entries)
        return cls([[entries[i] if i == j else z for j in range(k)] for i in range(k)], f, s)

    @classmethod
    def unflatten(cls, vec: Sequence[Poly], m: int, n: int) -> "PolyMatrix":
        if len(vec) != m * n:
            raise ValueError(f"vector of length {len(vec)} cannot fill a {m}x{n} matrix")
        return cls([[vec[j * m + i] for j in range(n)] for i in range(m)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Poly]], field: Field, nvars: int) -> "PolyMatrix":
        if not cols:
            raise ValueError("no columns")
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))], field, nvars)

    # access ---------------------------------------------------------------

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self._rows[i][j]

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[Poly, ...]]:
        return [self.column(j) for j in range(self.n)]

    def entries(self):
        for r in self._rows:
            yield from r

    def flatten(self) -> tuple[Poly, ...]:
        return tuple(self._rows[i][j] for j in range(self.n) for i in range(self.m))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def ord(self):
        return min((e.ord() for e in self.entries()), default=INFINITY, key=_ord_key)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    # arithmetic -----------------------------------------------------------

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in r] for r in self._rows], self.field, self.nvars)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "PolyMatrix":
        return self.map(lambda e: e.scale(c))

    def mul_trunc(self, other: "PolyMatrix", D: int | None = None) -> "PolyMatrix":
        if self.n != other.m:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.m):
            row = []
            for j in range(other.n):
                acc = Poly.zero(self.field, self.nvars)
                for k in range(self.n):
                    a, b = self._rows[i][k], other._rows[k][j]
                    if a and b:
                        acc = acc + a.mul_trunc(b, D)
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.field, self.nvars)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self.mul_trunc(other)

    def truncate(self, D: int) -> "PolyMatrix":
        return self.map(lambda e: e.truncate(D))

    def partial(self, i: int) -> "PolyMatrix":
        return self.map(lambda e: e.partial(i))

    def substitute(self, phi: Sequence[Poly], D: int | None) -> "PolyMatrix":
        return self.map(lambda e: e.substitute(phi, D))

    def map_coefficients(self, field: Field) -> "PolyMatrix":
        return PolyMatrix([[e.map_coefficients(field) for e in r] for r in self._rows], field, self.nvars)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(zip(*self._rows)), self.field, self.nvars)

    # serialisation --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "m": self.m, "n": self.n, "s": self.nvars, "field": self.field.to_json(),
            "entries": [[e.to_json() for e in r] for r in self._rows],
        }

    @classmethod
    def from_json(cls, obj, field: Field | None = None) -> "PolyMatrix":
        if not isinstance(obj, dict):
            raise ValueError("matrix JSON must be an object")
        missing = {"m", "n", "s", "entries"} - set(obj)
        if missing:
            raise ValueError(f"matrix JSON is missing keys {sorted(missing)}")
        if "field" in obj:
            field = Field.from_json(obj["field"])
        elif field is None:
            raise ValueError("matrix JSON has no field and none was supplied")
        m, n, s = obj["m"], obj["n"], obj["s"]
        ent = obj["entries"]
        if not (isinstance(ent, list) and len(ent) == m and all(isinstance(r, list) and len(r) == n for r in ent)):
            raise ValueError(f"entries must be a {m}x{n} row-major list")
        rows = [[Poly.from_json(e, field, s) for e in r] for r in ent]
        return cls(rows, field, s)

    def __repr__(self):
        return f"PolyMatrix({[[str(e) for e in r] for r in self._rows]})"


def _ord_key(o):
    return float("inf") if o is INFINITY else o


def e_mul_left(A: PolyMatrix, p: int, q: int) -> PolyMatrix:
    """``E_pq . A``: row ``q`` of ``A`` moved into row ``p`` (0-based)."""
    if not (0 <= p < A.m and 0 <= q < A.m):
        raise IndexError(f"E_({p},{q}) out of range for {A.m} rows")
    z = Poly.zero(A.field, A.nvars)
    return PolyMatrix([list(A.rows[q]) if i == p else [z] * A.n for i in range(A.m)], A.field, A.nvars)


def e_mul_right(A: PolyMatrix, h: int, l: int) -> PolyMatrix:
    """``A . E_hl``: column ``h`` of ``A`` moved into column ``l`` (0-based)."""
    if not (0 <= h < A.n and 0 <= l < A.n):
        raise IndexError(f"E_({h},{l}) out of range for {A.n} columns")
    z = Poly.zero(A.field, A.nvars)
    return PolyMatrix([[A[i, h] if j == l else z for j in range(A.n)] for i in range(A.m)], A.field, A.nvars)


class GenLabel(str, Enum):
    TANGENT_IMAGE = "TangentImage"
    EXTENDED_TANGENT_IMAGE = "ExtendedTangentImage"
    IDEAL = "Ideal"


@dataclass(frozen=True)
class GeneratorSet:
    """Generators of a submodule of the free module R^ambient_rank."""

    ambient_rank: int
    gens: tuple  # tuple of tuples of Poly, each of length ambient_rank
    label: GenLabel
    field: Field
    nvars: int

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.ambient_rank:
                raise ValueError(f"generator of length {len(g)} in rank {self.ambient_rank} module")

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    @classmethod
    def ideal(cls, polys: Sequence[Poly], field: Field | None = None, nvars: int | None = None) -> "GeneratorSet":
        polys = list(polys)
        if polys:
            field, nvars = polys[0].field, polys[0].nvars
        if field is None or nvars is None:
            raise ValueError("empty ideal needs explicit field and nvars")
        return cls(1, tuple((p,) for p in polys), GenLabel.IDEAL, field, nvars)

    def extend(self, other: "GeneratorSet") -> "GeneratorSet":
        if other.ambient_rank != self.ambient_rank:
            raise ValueError("ambient rank mismatch")
        return GeneratorSet(self.ambient_rank, self.gens + other.gens, self.label, self.field, self.nvars)


def _right_products(A: PolyMatrix) -> list[PolyMatrix]:
    # l outer, h inner: A.E11, A.E21, A.E12, A.E22 for 2x2
    return [e_mul_right(A, h, l) for l in range(A.n) for h in range(A.n)]


def _left_products(A: PolyMatrix) -> list[PolyMatrix]:
    return [e_mul_left(A, p, q) for p in range(A.m) for q in range(A.m)]


def tangent_image_gens(A: PolyMatrix, extended: bool) -> GeneratorSet:
    """Generators of the (extended) tangent image of the orbit at ``A``.

    Left and right products with the elementary matrices, then either the
    partials ``dA/dx_nu`` (extended) or all ``x_mu * dA/dx_nu``.
    """
    for e in A.entries():
        if e.constant_term():
            raise ValueError("matrix has a unit entry; it must lie in m*M (all entries of order >= 1)")
    mats = _right_products(A) + _left_products(A)
    partials = [A.partial(nu) for nu in range(A.nvars)]
    if extended:
        mats += partials
        label = GenLabel.EXTENDED_TANGENT_IMAGE
    else:
        xs = Poly.gens(A.field, A.nvars)
        mats += [dA.map(lambda e, x=x: e * x) for dA in partials for x in xs]
        label = GenLabel.TANGENT_IMAGE
    return GeneratorSet(A.m * A.n, tuple(M.flatten() for M in mats), label, A.field, A.nvars)


def presentation_theta(A: PolyMatrix) -> PolyMatrix:
    """Presentation matrix of M_{m,n} / extended tangent image.

    Columns, in this fixed order: the n^2 right products A.E_hl (l outer,
    h inner), the m^2 left products E_pq.A (p outer, q inner), then the s
    partials.  For 2x2 the first column is (f11, f21, 0, 0).
    """
    mats = _right_products(A) + _left_products(A) + [A.partial(nu) for nu in range(A.nvars)]
    return PolyMatrix.from_columns([M.flatten() for M in mats], A.field, A.nvars)


# determinants -----------------------------------------------------------------

def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _det_cofactor(rows: list[list[Poly]], field: Field, nvars: int, D: int | None = None) -> Poly:
    n = len(rows)
    if n == 0:
        return Poly.constant(field, nvars, 1)
    if n == 1:
        return rows[0][0] if D is None else rows[0][0].truncate(D)
    if n == 2:
        return rows[0][0].mul_trunc(rows[1][1], D) - rows[0][1].mul_trunc(rows[1][0], D)
    total = Poly.zero(field, nvars)
    # Laplace expansion along the first row
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a.mul_trunc(_det_cofactor(sub, field, nvars, D), D)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_leibniz(rows, field, nvars) -> Poly:
    n = len(rows)
    total = Poly.zero(field, nvars)
    for perm in permutations(range(n)):
        term = Poly.constant(field, nvars, _perm_sign(perm))
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if not term:
                break
        total = total + term
    return total


def _det_bareiss(rows: list[list[Poly]], field: Field, nvars: int) -> Poly:
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return Poly.constant(field, nvars, 1)
    sign = 1
    prev = Poly.constant(field, nvars, 1)
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return Poly.zero(field, nvars)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if num else num
            a[i][k] = Poly.zero(field, nvars)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def det(A: PolyMatrix, method: str = "auto", D: int | None = None) -> Poly:
    """Exact determinant.

    ``auto`` uses cofactor expansion up to 4x4 and fraction-free Bareiss
    elimination beyond; ``leibniz`` is the permutation-sum oracle.  With
    ``D`` given (cofactor only) the result is computed modulo degree ``D``.
    """
    if A.m != A.n:
        raise ValueError(f"determinant of a non-square {A.m}x{A.n} matrix")
    rows = [list(r) for r in A.rows]
    if method == "auto":
        method = "cofactor" if A.m <= 4 or D is not None else "bareiss"
    if method == "cofactor":
        return _det_cofactor(rows, A.field, A.nvars, D)
    if D is not None:
        raise ValueError("truncated determinants use the cofactor method")
    if method == "bareiss":
        return _det_bareiss(rows, A.field, A.nvars)
    if method == "leibniz":
        return _det_leibniz(rows, A.field, A.nvars)
    raise ValueError(f"unknown determinant method {method!r}")


def _check_indices(idx: Sequence[int], bound: int, what: str):
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} indices must be strictly increasing: {list(idx)}")
    if idx and (idx[0] < 0 or idx[-1] >= bound):
        raise IndexError(f"{what} index out of range")


def minor(M: PolyMatrix, rows: Sequence[int], cols: Sequence[int], method: str = "auto",
          D: int | None = None) -> Poly:
    """Minor on the given (0-based, strictly increasing) rows and columns, optionally mod degree ``D``."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError(f"non-square selection: {len(rows)} rows, {len(cols)} columns")
    _check_indices(rows, M.m, "row")
    _check_indices(cols, M.n, "column")
    sub = [[M[i, j] for j in cols] for i in rows]
    if not sub:
        return Poly.constant(M.field, M.nvars, 1)
    return det(PolyMatrix(sub, M.field, M.nvars), method, D)


def minors(M: PolyMatrix, t: int, D: int | None = None):
    """Yield ``((rows, cols), minor)`` for every t x t minor, in lexicographic index order."""
    if not 0 < t <= min(M.m, M.n):
        raise ValueError(f"minor size {t} out of range for a {M.m}x{M.n} matrix")
    if t == 4 and M.m == 4:
        yield from _maximal_minors_4(M, D)
        return
    for rows in combinations(range(M.m), t):
        for cols in combinations(range(M.n), t):
            yield (rows, cols), minor(M, rows, cols, D=D)


_PAIRS4 = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)),
           ((1, 2), (0, 3)), ((1, 3), (0, 2)), ((2, 3), (0, 1))]


def _maximal_minors_4(M: PolyMatrix, D: int | None):
    # Laplace expansion along rows {0, 1}: reuse the 2x2 minors of both row pairs
    top: dict = {}
    bot: dict = {}

    def two(cache, r0, r1, a, b):
        key = (a, b)
        if key not in cache:
            cache[key] = M[r0, a].mul_trunc(M[r1, b], D) - M[r0, b].mul_trunc(M[r1, a], D)
        return cache[key]

    rows = (0, 1, 2, 3)
    for cols in combinations(range(M.n), 4):
        total = Poly.zero(M.field, M.nvars)
        for (p1, p2), (q1, q2) in _PAIRS4:
            u = two(top, 0, 1, cols[p1], cols[p2])
            if not u:
                continue
            v = two(bot, 2, 3, cols[q1], cols[q2])
            if not v:
                continue
            term = u.mul_trunc(v, D)
            total = total + term if (p1 + p2 + 1) % 2 == 0 else total - term
        yield (rows, cols), total


def minors_ideal(M: PolyMatrix, t: int, D: int | None = None) -> GeneratorSet:
    """The ideal of t x t minors; zero minors are dropped.

    With ``D`` the generators are only correct modulo degree ``D``, which
    is all a jet-space computation at truncation ``D`` needs.
    """
    if D is not None:
        M = M.truncate(D)
    return GeneratorSet.ideal([f for _, f in minors(M, t, D) if f], M.field, M.nvars)

"""Codimensions of submodules of free modules over K[[x]], via jet spaces.

For a submodule ``T`` of ``F = R^r`` and a degree ``D`` the jet space
``m^a F / m^D F`` is finite dimensional, and the image of ``T`` in it is
the K-span of the truncated products ``x^alpha * g``.  Exact elimination
gives ``codim(D) = dim m^a F / (T + m^D F)``.

Stopping rule: ``codim(D) == codim(D + 1)`` means
``m^D F ⊆ T + m * (m^D F)``, so ``m^D F ⊆ T`` by Nakayama's lemma and
``codim(D)`` is the true codimension of ``T`` in ``m^a F``.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Sequence

from .linalg import pivot_columns
from .matspace import GeneratorSet
from .polyring import monomials_below, monomials_of_degree

__all__ = [
    "JetBasis", "CodimResult", "InvariantError", "default_max_degree",
    "span_codim_at", "codim_profile", "codim_stabilized", "ideal_codim",
    "minimal_k_containment", "contains_at",
]


class InvariantError(RuntimeError):
    """An internal mathematical invariant failed; indicates a bug."""


def default_max_degree(s: int) -> int:
    return {1: 60, 2: 30, 3: 20}.get(s, 12)


@dataclass(frozen=True)
class JetBasis:
    """K-basis of ``m^min_degree F / m^D F`` for ``F`` free of rank ``ambient_rank``.

    Ordered by component, then by the fixed monomial order.
    """

    s: int
    D: int
    ambient_rank: int
    min_degree: int = 0
    basis: tuple = dc_field(init=False, repr=False)

    def __post_init__(self):
        monos = monomials_below(self.s, self.D, self.min_degree)
        object.__setattr__(self, "basis", tuple((c, m) for c in range(self.ambient_rank) for m in monos))

    def __len__(self):
        return len(self.basis)

    @staticmethod
    def dimension(s: int, D: int, ambient_rank: int, min_degree: int = 0) -> int:
        if D <= min_degree:
            return 0
        # number of monomials of degree < D minus those of degree < min_degree
        return ambient_rank * (comb(s + D - 1, s) - comb(s + min_degree - 1, s))


@dataclass(frozen=True)
class CodimResult:
    """Outcome of a certified codimension computation.

    ``profile[D - 1]`` is ``codim(D)``.  For a finite result the profile
    runs to ``stab_degree + 1`` and its last two entries agree.
    """

    status: str  # "finite" | "inconclusive"
    codim: int  # exact value, or lower bound at the cap when inconclusive
    stab_degree: int | None
    profile: tuple
    max_degree: int

    @property
    def finite(self) -> bool:
        return self.status == "finite"

    def to_json(self) -> dict:
        if self.finite:
            return {"status": "finite", "codim": self.codim, "stab_degree": self.stab_degree,
                    "profile": list(self.profile)}
        return {"status": "inconclusive", "codim_lower_bound": self.codim,
                "max_degree": self.max_degree, "profile": list(self.profile)}

    def __str__(self):
        if self.finite:
            return f"finite codim {self.codim} (stable from degree {self.stab_degree})"
        return f"inconclusive (codim >= {self.codim} at degree {self.max_degree})"


# matrix assembly -----------------------------------------------------------------

class _Columns:
    """Degree-major column indexing of the jet space: degree, component, monomial."""

    def __init__(self, s: int, D: int, r: int, min_degree: int):
        self.index: dict = {}
        self.per_degree = []  # number of columns of each degree min_degree..D-1
        col = 0
        for d in range(min_degree, D):
            monos = monomials_of_degree(s, d)
            for c in range(r):
                for m in monos:
                    self.index[(c, m)] = col
                    col += 1
            self.per_degree.append(r * len(monos))
        self.ncols = col


def _gen_ord(g) -> int | None:
    degs = [sum(m) for comp in g for m in comp.terms]
    return min(degs) if degs else None


def _gen_degrees(g) -> set:
    return {sum(m) for comp in g for m in comp.terms}


def _independent(gens: GeneratorSet, backend) -> list:
    """A K-linearly independent subset spanning the same K-space (hence the same module)."""
    gens_nz = [g for g in gens.gens if any(comp for comp in g)]
    if len(gens_nz) <= 1:
        return gens_nz
    keys: dict = {}
    cols = []
    for j, g in enumerate(gens_nz):
        col = {}
        for c, comp in enumerate(g):
            for m, v in comp.terms.items():
                k = keys.setdefault((c, m), len(keys))
                col[k] = v
        cols.append(col)
    # independent columns of the coefficient matrix = pivots of its transpose
    rows: dict = {}
    for j, col in enumerate(cols):
        for k, v in col.items():
            rows.setdefault(k, {})[j] = v
    piv = pivot_columns(list(rows.values()), len(gens_nz), gens.field, backend)
    return [gens_nz[j] for j in piv]


def _rows(gens: Sequence, s: int, D: int, min_degree: int, cols: _Columns):
    for g in gens:
        o = _gen_ord(g)
        if o is None or o >= D:
            continue
        if o < min_degree:
            raise ValueError(f"generator of order {o} does not lie in m^{min_degree} F")
        for alpha in monomials_below(s, D - o):
            da = sum(alpha)
            row = {}
            for c, comp in enumerate(g):
                for m, v in comp.terms.items():
                    if da + sum(m) < D:
                        row[cols.index[(c, tuple(a + b for a, b in zip(alpha, m)))]] = v
            if row:
                yield row


def codim_profile(gens: GeneratorSet, D: int, min_degree: int = 0, backend: str | None = None,
                  reduce_gens: bool = True) -> list[int]:
    """``[codim(1), ..., codim(D)]`` from one elimination at truncation degree ``D``.

    Columns are sorted by degree, so the rank of the truncation at any
    ``D' <= D`` is the number of pivots of degree below ``D'``.
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    if min_degree not in (0, 1):
        raise ValueError("min_degree must be 0 or 1")
    s, r = gens.nvars, gens.ambient_rank
    cols = _Columns(s, D, r, min_degree)
    gl = _independent(gens, backend) if reduce_gens else list(gens.gens)
    pivot_degree_counts = [0] * (D - min_degree)
    if all(len(_gen_degrees(g)) <= 1 for g in gl):
        # graded case: the matrix is block diagonal by degree
        offsets = [0]
        for k in cols.per_degree:
            offsets.append(offsets[-1] + k)
        blocks: dict[int, list] = {}
        for row in _rows(gl, s, D, min_degree, cols):
            d = bisect_right(offsets, next(iter(row))) - 1
            blocks.setdefault(d, []).append({k - offsets[d]: v for k, v in row.items()})
        for d, rows in blocks.items():
            pivot_degree_counts[d] = len(pivot_columns(rows, cols.per_degree[d], gens.field, backend))
    else:
        piv = pivot_columns(list(_rows(gl, s, D, min_degree, cols)), cols.ncols, gens.field, backend)
        bounds = []
        acc = 0
        for k in cols.per_degree:
            acc += k
            bounds.append(acc)
        d = 0
        for p in piv:
            while p >= bounds[d]:
                d += 1
            pivot_degree_counts[d] += 1
    profile = []
    rank = 0
    for Dp in range(1, D + 1):
        if Dp - 1 >= min_degree:
            rank += pivot_degree_counts[Dp - 1 - min_degree]
        profile.append(JetBasis.dimension(s, Dp, r, min_degree) - rank)
    return profile


def span_codim_at(gens: GeneratorSet, D: int, min_degree: int = 0, backend: str | None = None) -> int:
    """``dim m^min_degree F / (T + m^D F)`` for the module ``T`` spanned by ``gens``."""
    return codim_profile(gens, D, min_degree, backend)[-1]


def codim_stabilized(gens, min_degree: int = 0, max_degree: int | None = None,
                     backend: str | None = None, start_degree: int = 8) -> CodimResult:
    """Certified codimension of the module spanned by ``gens`` inside ``m^min_degree F``.

    Searches truncation degrees up to ``max_degree`` for the first ``D``
    with ``codim(D) == codim(D + 1)``.  Returns an inconclusive result
    carrying the lower bound ``codim(max_degree)`` when none is found.

    ``gens`` is a :class:`GeneratorSet` or a callable ``D -> GeneratorSet``
    returning generators that are correct modulo degree ``D`` (used for
    expensive generators such as minors).
    """
    gens_at = gens if callable(gens) else (lambda D: gens)
    if max_degree is None:
        max_degree = default_max_degree(gens_at(1).nvars)
    if max_degree < 2:
        raise ValueError("max_degree must be >= 2")
    hi = min(max_degree, max(start_degree, 2))
    while True:
        prof = codim_profile(gens_at(hi), hi, min_degree, backend)
        for a, b in zip(prof, prof[1:]):
            if b < a:
                raise InvariantError(f"codimension profile decreased: {prof}")
        for D in range(1, hi):
            if prof[D - 1] == prof[D]:
                return CodimResult("finite", prof[D - 1], D, tuple(prof[:D + 1]), max_degree)
        if hi == max_degree:
            return CodimResult("inconclusive", prof[-1], None, tuple(prof), max_degree)
        hi = min(max_degree, 2 * hi)


def ideal_codim(gens, max_degree: int | None = None, backend: str | None = None) -> CodimResult:
    """``dim_K R / I`` for an ideal ``I`` given by generators (ambient rank 1).

    Accepts a callable ``D -> GeneratorSet`` as :func:`codim_stabilized` does.
    """
    if not callable(gens) and gens.ambient_rank != 1:
        raise ValueError("ideal_codim needs generators in R (ambient rank 1)")
    return codim_stabilized(gens, 0, max_degree, backend)


def minimal_k_containment(gens: GeneratorSet, result: CodimResult) -> int:
    """Smallest ``k`` with ``m^k ⊆ I``.

    ``codim(I + m^k) <= codim(I)`` with equality exactly when ``m^k ⊆ I``,
    so this is the first degree at which the profile reaches the final
    value.
    """
    if not result.finite:
        raise ValueError("minimal_k_containment needs a finite codimension certificate")
    if not callable(gens) and gens.ambient_rank != 1:
        raise ValueError("minimal_k_containment is defined for ideals")
    for k, c in enumerate(result.profile, start=1):
        if c == result.codim:
            return k
    raise InvariantError("profile never reaches its certified value")


def contains_at(big: GeneratorSet, small: GeneratorSet, D: int, min_degree: int = 0,
                backend: str | None = None) -> bool:
    """Whether every generator of ``small`` lies in ``big + m^D F`` (a jet-level inclusion test)."""
    both = GeneratorSet(big.ambient_rank, big.gens + small.gens, big.label, big.field, big.nvars)
    return span_codim_at(both, D, min_degree, backend) == span_codim_at(big, D, min_degree, backend)

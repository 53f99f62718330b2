"""Machine checks for the existence of finitely determined 2x2 matrices of high order.

The matrices in question are

    B = [[f11, f12], [f21, f22]],   f_ij = sum_k c_ij^(k) x_k^N

with general coefficients.  Coefficients are stored as a 4 x s table whose
rows are ordered (c11, c21, c12, c22), i.e. the column-major flattening
order, so column k of the table is the coefficient vector of dB/dx_k
divided by N x_k^(N-1).

Column labels ``i1, i2, ...`` passed to the functions here are 1-based, as
in the displayed presentation matrix: columns 1..8 are the products with
elementary matrices and 9..8+s the partial derivatives.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from itertools import combinations

from .determinacy import extended_codim
from .jetspace import CodimResult, default_max_degree, ideal_codim
from .linalg import scalar_det
from .matspace import PolyMatrix, det, minor, minors_ideal, presentation_theta
from .polyring import Poly
from .scalars import QQ, Field

__all__ = [
    "GenericSpec", "ScanResult", "NonGenericError", "ENTRY_ORDER", "build_generic_B",
    "generic_coefficients", "nondegenerate", "verify_det_squared",
    "verify_last_columns_factorization", "extract_F", "det_B_form", "y_labels",
    "specialised_system", "system_determinant_in_a", "semicontinuity_scan", "genericity_trial",
]

# (row, col) of B in coefficient-table order
ENTRY_ORDER = ((0, 0), (1, 0), (0, 1), (1, 1))

MAX_RESAMPLES = 1000


class NonGenericError(ValueError):
    pass


@dataclass(frozen=True)
class GenericSpec:
    s: int
    N: int
    field: Field
    coeffs: tuple | None = None  # 4 x s table, rows (c11, c21, c12, c22)
    seed: int | None = None

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("need at least one variable")
        if self.N < 1:
            raise ValueError("N must be >= 1")
        p = self.field.characteristic()
        if p and self.N % p == 0:
            raise ValueError(f"characteristic {p} divides N = {self.N}")
        if self.coeffs is not None:
            if len(self.coeffs) != 4 or any(len(r) != self.s for r in self.coeffs):
                raise ValueError(f"coefficient table must be 4 x {self.s}")
        elif self.seed is None:
            raise ValueError("give either explicit coefficients or a seed")


@dataclass
class ScanResult:
    t_values: list
    d_e_values: list  # CodimResult per t
    d_e_at_zero: CodimResult
    satisfied: list  # the t values with finite d_e(t) <= d_e(0)

    def to_json(self) -> dict:
        return {
            "t_values": [str(t) for t in self.t_values],
            "d_e_values": [r.to_json() for r in self.d_e_values],
            "d_e_at_zero": self.d_e_at_zero.to_json(),
            "satisfied": [str(t) for t in self.satisfied],
        }


def nondegenerate(coeffs, field: Field) -> bool:
    """The two genericity conditions used in the existence argument.

    det(B) does not vanish at any unit point e_k, and every minor (of any
    size) of the 4 x s coefficient table is nonzero.
    """
    table = [[field.convert(v) for v in row] for row in coeffs]
    s = len(table[0])
    for k in range(s):
        c11, c21, c12, c22 = (table[r][k] for r in range(4))
        if not field.reduce(c11 * c22 - c12 * c21):
            return False
    for size in range(1, min(4, s) + 1):
        for rows in combinations(range(4), size):
            for cols in combinations(range(s), size):
                if not scalar_det([[table[r][c] for c in cols] for r in rows], field):
                    return False
    return True


def _matrix_from_table(table, s: int, N: int, field: Field) -> PolyMatrix:
    entries = [[None, None], [None, None]]
    for r, (i, j) in enumerate(ENTRY_ORDER):
        terms = {}
        for k in range(s):
            e = [0] * s
            e[k] = N
            terms[tuple(e)] = table[r][k]
        entries[i][j] = Poly(field, s, terms)
    return PolyMatrix(entries, field, s)


def build_generic_B(spec: GenericSpec) -> PolyMatrix:
    """The matrix of N-th power forms for the given (or freshly sampled) coefficients."""
    f = spec.field
    if spec.coeffs is not None:
        table = [[f.convert(v) for v in row] for row in spec.coeffs]
        if not nondegenerate(table, f):
            raise NonGenericError("explicit coefficients violate the non-degeneracy conditions")
        return _matrix_from_table(table, spec.s, spec.N, f)
    rng = random.Random(spec.seed)
    for _ in range(MAX_RESAMPLES):
        table = [[f.random_element(rng, nonzero=True) for _ in range(spec.s)] for _ in range(4)]
        if nondegenerate(table, f):
            return _matrix_from_table(table, spec.s, spec.N, f)
    raise NonGenericError(f"no non-degenerate coefficients found in {MAX_RESAMPLES} draws over {f}")


def generic_coefficients(B: PolyMatrix) -> tuple[int, list[list]]:
    """Recover ``(N, table)`` from a matrix of the generic shape."""
    if B.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    N = B.ord()
    s = B.nvars
    table = [[B.field.zero] * s for _ in range(4)]
    for r, (i, j) in enumerate(ENTRY_ORDER):
        for m, c in B[i, j].terms.items():
            k = next((k for k in range(s) if m[k] == N and sum(m) == N), None)
            if k is None:
                raise ValueError(f"entry ({i + 1},{j + 1}) has a term {m} outside the x_k^N pattern")
            table[r][k] = c
    return N, table


def verify_det_squared(B: PolyMatrix, theta: PolyMatrix | None = None) -> bool:
    """Minor of Theta(B) on columns 1..4 equals det(B)^2."""
    theta = presentation_theta(B) if theta is None else theta
    return minor(theta, range(4), range(4)) == det(B) ** 2


def verify_last_columns_factorization(B: PolyMatrix, cols) -> bool:
    """A minor on four derivative columns factors as det(coefficients) * N^4 * prod x^(N-1)."""
    s = B.nvars
    if s < 4:
        raise ValueError("the factorisation needs s >= 4 derivative columns")
    cols = sorted(cols)
    if len(cols) != 4 or cols[0] < 9 or cols[-1] > 8 + s:
        raise ValueError(f"need four derivative column labels in 9..{8 + s}")
    N, table = generic_coefficients(B)
    f = B.field
    ks = [c - 9 for c in cols]
    cdet = scalar_det([[table[r][k] for k in ks] for r in range(4)], f)
    e = [0] * s
    for k in ks:
        e[k] = N - 1
    expected = Poly.monomial(f, e, f.reduce(cdet * N ** 4))
    return minor(presentation_theta(B), range(4), [c - 1 for c in cols]) == expected


def y_labels(s: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), i <= j, of y_ij = x_i^N x_j^N (1-based), lexicographic."""
    return [(i, j) for i in range(1, s + 1) for j in range(i, s + 1)]


def _y_form(f: Poly, N: int, s: int, nx: int | None = None) -> Poly:
    """Rewrite a form supported on x_i^N x_j^N as a linear form in the y_ij.

    Only the first ``nx`` variables are x's; any further variables are
    parameters and carried along unchanged (after the y variables).
    """
    nx = s if nx is None else nx
    labels = y_labels(nx)
    pos = {lab: k for k, lab in enumerate(labels)}
    extra = f.nvars - nx
    terms = {}
    for m, c in f.terms.items():
        xm, pm = m[:nx], m[nx:]
        support = [(i + 1, e) for i, e in enumerate(xm) if e]
        if len(support) == 1 and support[0][1] == 2 * N:
            lab = (support[0][0], support[0][0])
        elif len(support) == 2 and support[0][1] == N and support[1][1] == N:
            lab = (support[0][0], support[1][0])
        else:
            raise ValueError(f"monomial {xm} is not of the form x_i^N x_j^N")
        e = [0] * len(labels)
        e[pos[lab]] = 1
        terms[tuple(e) + tuple(pm)] = c
    return Poly(f.field, len(labels) + extra, terms)


def extract_F(B: PolyMatrix, i1: int, i2: int, nx: int | None = None) -> Poly:
    """The linear form F in the y variables with M_{i1,i2,9,10} = F * N^2 x1^(N-1) x2^(N-1).

    ``i1 < i2`` are 1-based labels among the first eight columns.  Raises
    if the division is not exact or F has support outside the y lattice.
    ``nx`` marks trailing variables as parameters (see ``specialised_system``).
    """
    nx = B.nvars if nx is None else nx
    if nx < 2:
        raise ValueError("need s >= 2")
    if not 1 <= i1 < i2 <= 8:
        raise ValueError("need 1 <= i1 < i2 <= 8")
    N = _x_degree(B, nx)
    f = B.field
    if f.characteristic() and N % f.characteristic() == 0:
        raise ValueError("characteristic divides N")
    M = minor(presentation_theta_x(B, nx), range(4), [i1 - 1, i2 - 1, 8, 9])
    e = [0] * B.nvars
    e[0] = e[1] = N - 1
    F = M.div_by_monomial(e).scale(f.inv(f.convert(N * N)))
    return _y_form(F, N, B.nvars, nx)


def det_B_form(B: PolyMatrix, nx: int | None = None) -> Poly:
    """det(B) as a linear form in the y variables."""
    nx = B.nvars if nx is None else nx
    return _y_form(det(B), _x_degree(B, nx), B.nvars, nx)


def _x_degree(B: PolyMatrix, nx: int) -> int:
    degs = {sum(m[:nx]) for e in B.entries() for m in e.terms}
    if len(degs) != 1:
        raise ValueError("entries are not forms of a common degree in the x variables")
    return degs.pop()


def presentation_theta_x(B: PolyMatrix, nx: int) -> PolyMatrix:
    """Theta(B) with partials only in the first ``nx`` variables (the rest are parameters)."""
    theta = presentation_theta(B)
    return PolyMatrix.from_columns(theta.columns()[: 8 + nx], B.field, B.nvars)


SYSTEM_MINORS = ((1, 5), (2, 4), (3, 7), (6, 8), (3, 6))


def specialised_system(field: Field = QQ, N: int | None = None) -> list[list[Poly]]:
    """The 6 x 6 coefficient matrix, entries in K[a], of the system in y11..y33.

    Specialisation: s = 3, c11^(1) = a, c12^(3) = c21^(2) = c22^(1) =
    c22^(2) = c22^(3) = 1, all other coefficients 0.  Equations: det(B) and
    the F's of M_{1,5,9,10}, M_{2,4,9,10}, M_{3,7,9,10}, M_{6,8,9,10},
    M_{3,6,9,10}.
    """
    if N is None:
        N = next(n for n in range(2, 100) if not field.characteristic() or n % field.characteristic())
    # variables x1, x2, x3, a
    x1, x2, x3, a = (Poly.monomial(field, e) for e in
                     ((N, 0, 0, 0), (0, N, 0, 0), (0, 0, N, 0), (0, 0, 0, 1)))
    B = PolyMatrix([[a * x1, x3], [x2, x1 + x2 + x3]], field, 4)
    forms = [det_B_form(B, nx=3)] + [extract_F(B, i, j, nx=3) for i, j in SYSTEM_MINORS]
    rows = []
    for F in forms:
        row = []
        for k in range(6):
            coeff = {(m[6],): c for m, c in F.terms.items() if m[k] == 1}
            row.append(Poly(field, 1, coeff))
        rows.append(row)
    return rows


def system_determinant_in_a(field: Field = QQ, N: int | None = None) -> Poly:
    """Determinant of the specialised system as a polynomial in a (Bareiss elimination)."""
    rows = specialised_system(field, N)
    return det(PolyMatrix(rows, field, 1), method="bareiss")


def semicontinuity_scan(B: PolyMatrix, A: PolyMatrix, t_samples, max_degree: int | None = None,
                        backend: str | None = None, jobs: int = 1) -> ScanResult:
    """``d_e(B + t A)`` for each sampled ``t``, compared with ``d_e(B)``."""
    if B.shape != A.shape or B.field != A.field or B.nvars != A.nvars:
        raise ValueError("B and A must have the same shape, field and variables")
    f = B.field
    ts = [f.convert(t) for t in t_samples]
    at_zero = extended_codim(B, max_degree, backend)
    mats = [B + A.scale(t) for t in ts]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as pool:
            values = list(pool.map(extended_codim, mats, [max_degree] * len(mats), [backend] * len(mats)))
    else:
        values = [extended_codim(M, max_degree, backend) for M in mats]
    sat = [t for t, r in zip(ts, values) if r.finite and at_zero.finite and r.codim <= at_zero.codim]
    return ScanResult(ts, values, at_zero, sat)


def genericity_trial(s: int, N: int, field: Field, trials: int, seed: int,
                     max_degree: int | None = None, backend: str | None = None) -> float:
    """Fraction of sampled non-degenerate B whose ideal of 4x4 minors is certified Artinian."""
    if trials == 0:
        warnings.warn("genericity_trial with zero trials is vacuous; returning 1.0")
        return 1.0
    if max_degree is None:
        max_degree = default_max_degree(s)
    rng = random.Random(seed)
    ok = 0
    for _ in range(trials):
        B = build_generic_B(GenericSpec(s, N, field, seed=rng.getrandbits(64)))
        if ideal_codim(minors_ideal(presentation_theta(B), 4), max_degree, backend).finite:
            ok += 1
    return ok / trials

"""Finite determinacy verdicts for matrices in m * M_{m,n}.

Three equivalent sufficient criteria are evaluated independently:

(i)   d   = dim_K m*M / T(A)          (tangent image, inside m*M)
(ii)  d_e = dim_K M / T^e(A)          (extended tangent image)
(iii) k   = min { k : m^k ⊆ I_mn(Theta_A) }

Any finite certificate ``c`` gives the determinacy bound ``2c - ord(A) + 2``.
For 2 x 2 matrices finiteness of (i) is also necessary, so an inconclusive
result only means the search cap was reached.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .jetspace import (CodimResult, codim_stabilized, default_max_degree, ideal_codim,
                       minimal_k_containment)
from .matspace import PolyMatrix, minors_ideal, presentation_theta, tangent_image_gens
from .polyring import INFINITY

__all__ = ["DeterminacyReport", "ord_matrix", "determinacy_bound", "check", "criteria_agree",
           "extended_codim", "FINITELY_DETERMINED", "NOT_DETERMINED_UP_TO_CAP"]

FINITELY_DETERMINED = "FinitelyDetermined"
NOT_DETERMINED_UP_TO_CAP = "NotDeterminedUpToCap"


def ord_matrix(A: PolyMatrix) -> int:
    """Minimum order of the entries.  Undefined (error) for the zero matrix."""
    o = A.ord()
    if o is INFINITY:
        raise ValueError("ord undefined for zero matrix")
    return o


def determinacy_bound(c: int, ord_A: int) -> int:
    if c is INFINITY or ord_A is INFINITY:
        raise ValueError("determinacy bound needs finite c and ord(A)")
    if c < 0 or ord_A < 1:
        raise ValueError(f"need c >= 0 and ord(A) >= 1, got c={c}, ord(A)={ord_A}")
    return 2 * c - ord_A + 2


@dataclass
class DeterminacyReport:
    verdict: str
    d: CodimResult
    d_e: CodimResult
    ideal: CodimResult | None  # codim of I_mn(Theta); None when the criterion does not apply
    k_min: int | None
    bounds: dict
    ord_A: int
    field: object
    s: int
    max_degree: int
    criteria_consistent: bool
    notes: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "d": self.d.to_json(),
            "d_e": self.d_e.to_json(),
            "ideal_of_minors": None if self.ideal is None else self.ideal.to_json(),
            "k_min": self.k_min,
            "bounds": dict(self.bounds),
            "ord_A": self.ord_A,
            "field": self.field.to_json(),
            "s": self.s,
            "max_degree": self.max_degree,
            "criteria_consistent": self.criteria_consistent,
            "notes": list(self.notes),
        }


def _validate(A: PolyMatrix) -> int:
    o = ord_matrix(A)
    if o < 1:
        raise ValueError("matrix has a unit entry; it must lie in m*M (all entries of order >= 1)")
    return o


def extended_codim(A: PolyMatrix, max_degree: int | None = None, backend: str | None = None) -> CodimResult:
    """Criterion (ii) alone: certified ``dim_K M / T^e(A)``."""
    _validate(A)
    return codim_stabilized(tangent_image_gens(A, extended=True), 0, max_degree, backend)


def check(A: PolyMatrix, max_degree: int | None = None, backend: str | None = None) -> DeterminacyReport:
    ord_A = _validate(A)
    if max_degree is None:
        max_degree = default_max_degree(A.nvars)

    d = codim_stabilized(tangent_image_gens(A, extended=False), 1, max_degree, backend)
    d_e = codim_stabilized(tangent_image_gens(A, extended=True), 0, max_degree, backend)

    theta = presentation_theta(A)
    t = A.m * A.n
    ideal = k_min = None
    notes = []
    if t <= theta.n:
        cache: dict = {}

        def minors_at(D):
            if D not in cache:
                cache[D] = minors_ideal(theta, t, D)
            return cache[D]

        ideal = ideal_codim(minors_at, max_degree, backend)
        if ideal.finite:
            k_min = minimal_k_containment(minors_at, ideal)
    else:
        notes.append(f"criterion (iii) skipped: Theta has {theta.n} columns < mn = {t}")

    bounds = {}
    if d.finite:
        bounds["i"] = determinacy_bound(d.codim, ord_A)
    if d_e.finite:
        bounds["ii"] = determinacy_bound(d_e.codim, ord_A)
    if k_min is not None:
        bounds["iii"] = determinacy_bound(k_min, ord_A)

    statuses = [d.finite, d_e.finite] + ([ideal.finite] if ideal is not None else [])
    consistent = all(statuses) or not any(statuses)
    if not consistent:
        notes.append("criteria disagree at this cap; the inconclusive ones need a larger max_degree")
    verdict = FINITELY_DETERMINED if any(statuses) else NOT_DETERMINED_UP_TO_CAP
    return DeterminacyReport(verdict, d, d_e, ideal, k_min, bounds, ord_A, A.field, A.nvars,
                             max_degree, consistent, notes)


def criteria_agree(A: PolyMatrix, max_degree: int | None = None, backend: str | None = None) -> bool:
    return check(A, max_degree, backend).criteria_consistent

"""Finite G-determinacy of matrices of power series, decided with exact linear algebra."""

__version__ = "0.1.0"

from .scalars import QQ, GF, Field, FieldElem
from .polyring import Poly, INFINITY
from .matspace import (PolyMatrix, GeneratorSet, tangent_image_gens, presentation_theta,
                       det, minor, minors_ideal)
from .jetspace import CodimResult, codim_stabilized, ideal_codim, span_codim_at, minimal_k_containment
from .determinacy import DeterminacyReport, check, criteria_agree, determinacy_bound, ord_matrix
from .gaction import GroupElement, LocalAutomorphism, apply, random_group_element

__all__ = [
    "QQ", "GF", "Field", "FieldElem", "Poly", "INFINITY", "PolyMatrix", "GeneratorSet",
    "tangent_image_gens", "presentation_theta", "det", "minor", "minors_ideal",
    "CodimResult", "codim_stabilized", "ideal_codim", "span_codim_at", "minimal_k_containment",
    "DeterminacyReport", "check", "criteria_agree", "determinacy_bound", "ord_matrix",
    "GroupElement", "LocalAutomorphism", "apply", "random_group_element",
]

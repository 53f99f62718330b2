"""The group (GL(m,R) x GL(n,R)^op) ⋊ Aut(R) acting by A -> U . phi(A) . V.

Composition law used throughout: ``compose(g2, g1)`` is the element with
``apply(compose(g2, g1), A) == apply(g2, apply(g1, A))``, namely

    U = U2 . phi2(U1),   V = phi2(V1) . V2,   phi = phi1 followed by phi2

where ``phi2`` acting on a series substitutes ``phi2(x)`` for ``x``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .linalg import scalar_det
from .matspace import PolyMatrix, det
from .polyring import Poly, monomials_below
from .scalars import Field

__all__ = ["LocalAutomorphism", "GroupElement", "apply", "compose", "random_group_element"]


@dataclass(frozen=True)
class LocalAutomorphism:
    """``x_i -> phi_i`` with every ``phi_i`` in m and invertible linear part."""

    images: tuple

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if not imgs:
            return
        for q in imgs:
            if q.nvars != len(imgs):
                raise ValueError("an automorphism of K[[x_1..x_s]] needs s images in s variables")
            if q.constant_term():
                raise ValueError("automorphism image has a nonzero constant term")
        if not scalar_det(self.jacobian0, imgs[0].field):
            raise ValueError("linear part is singular; not an automorphism")

    @property
    def nvars(self) -> int:
        return len(self.images)

    @property
    def jacobian0(self) -> list[list]:
        """Coefficient of x_j in phi_i."""
        s = len(self.images)
        unit = [tuple(1 if k == j else 0 for k in range(s)) for j in range(s)]
        return [[q.coeff(unit[j]) for j in range(s)] for q in self.images]

    @classmethod
    def identity(cls, field: Field, s: int) -> "LocalAutomorphism":
        return cls(tuple(Poly.gens(field, s)))

    def degree(self) -> int:
        return max((q.degree() for q in self.images), default=1)

    def to_json(self):
        return [q.to_json() for q in self.images]


@dataclass(frozen=True)
class GroupElement:
    U: PolyMatrix
    V: PolyMatrix
    phi: LocalAutomorphism

    def __post_init__(self):
        for name, X in (("U", self.U), ("V", self.V)):
            if X.m != X.n:
                raise ValueError(f"{name} must be square")
            if not det(X).constant_term():
                raise ValueError(f"{name} is not invertible over the local ring (det vanishes at 0)")
        if self.phi.nvars != self.U.nvars:
            raise ValueError("automorphism and matrices live in different rings")

    @classmethod
    def identity(cls, m: int, n: int, field: Field, s: int) -> "GroupElement":
        return cls(PolyMatrix.identity(m, field, s), PolyMatrix.identity(n, field, s),
                   LocalAutomorphism.identity(field, s))

    def to_json(self) -> dict:
        return {"U": self.U.to_json(), "V": self.V.to_json(), "phi": self.phi.to_json()}


def apply(g: GroupElement, A: PolyMatrix, D: int | None = None) -> PolyMatrix:
    """``U . phi(A) . V`` with every product truncated below degree ``D`` (``None``: exact)."""
    if g.U.m != A.m or g.V.m != A.n:
        raise ValueError(f"group element for {g.U.m}x{g.V.m} matrices applied to {A.m}x{A.n}")
    pA = A.substitute(g.phi.images, D)
    out = g.U.mul_trunc(pA, D).mul_trunc(g.V, D)
    return out if D is None else out.truncate(D)


def compose(g2: GroupElement, g1: GroupElement, D: int | None = None) -> GroupElement:
    phi2 = g2.phi.images
    U = g2.U.mul_trunc(g1.U.substitute(phi2, D), D)
    V = g1.V.substitute(phi2, D).mul_trunc(g2.V, D)
    phi = tuple(q.substitute(phi2, D) for q in g1.phi.images)
    return GroupElement(U, V, LocalAutomorphism(phi))


def _random_poly(field: Field, s: int, rng: random.Random, lo: int, hi: int, density: float = 0.5) -> Poly:
    terms = {}
    for m in monomials_below(s, hi + 1, lo):
        if rng.random() < density:
            terms[m] = field.random_element(rng, nonzero=True, bound=3)
    return Poly(field, s, terms)


def random_group_element(m: int, n: int, s: int, field: Field, seed: int,
                         degree_cap: int = 2) -> GroupElement:
    """Deterministic pseudo-random group element.

    ``U, V`` are identity plus random entries in m of degree <= degree_cap;
    ``phi`` is a random invertible linear map plus random terms of degree
    2..degree_cap.
    """
    if degree_cap < 1:
        raise ValueError("degree_cap must be >= 1")
    rng = random.Random(seed)
    U = PolyMatrix.identity(m, field, s) + PolyMatrix(
        [[_random_poly(field, s, rng, 1, degree_cap) for _ in range(m)] for _ in range(m)], field, s)
    V = PolyMatrix.identity(n, field, s) + PolyMatrix(
        [[_random_poly(field, s, rng, 1, degree_cap) for _ in range(n)] for _ in range(n)], field, s)
    while True:
        lin = [[field.random_element(rng, bound=3) for _ in range(s)] for _ in range(s)]
        if scalar_det(lin, field):
            break
    images = []
    for i in range(s):
        q = Poly(field, s, {tuple(1 if k == j else 0 for k in range(s)): lin[i][j] for j in range(s)})
        if degree_cap >= 2:
            q = q + _random_poly(field, s, rng, 2, degree_cap, density=0.3)
        images.append(q)
    return GroupElement(U, V, LocalAutomorphism(tuple(images)))

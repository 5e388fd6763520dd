"""Decision procedures: form isomorphism, h-cobordism, Whitehead vanishing,
and the diffeomorphism verdict for products with a curve.

Only positive conclusions are ever drawn.  A failed form comparison yields
``NO_CONCLUSION``, never a non-diffeomorphism claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .catalog import SurfaceModel
from .constructions import blow_up
from .errors import (
    BadK,
    DefiniteFormUnsupported,
    GeometricGenusMismatch,
    InternalInconsistency,
    NegativeDefect,
    ZeroVector,
)
from .invariants import FundamentalGroup, IntersectionForm, TRIVIAL_GROUP, intersection_form

DIFFEO_S_COBORDISM = "DiffeomorphicViaSCobordism"
DIFFEO_SMALE = "DiffeomorphicViaSmale"
NO_CONCLUSION = "NoConclusion"
OUTCOMES = (DIFFEO_S_COBORDISM, DIFFEO_SMALE, NO_CONCLUSION)

# Stable justification tags (wire format).
TAG_H_COBORDISM = "Thm2.1"
TAG_FORM_CLASSIFICATION = "Thm2.2"
TAG_S_COBORDISM = "Thm2.3"
TAG_WH_NONPOSITIVE = "Thm2.4"
TAG_WH_SURFACE = "Cor2.5"
TAG_PRODUCT = "Cor2.6"
TAG_SMALE = "Smale"
THEOREM_TAGS = (
    TAG_H_COBORDISM,
    TAG_FORM_CLASSIFICATION,
    TAG_S_COBORDISM,
    TAG_WH_NONPOSITIVE,
    TAG_WH_SURFACE,
    TAG_PRODUCT,
    TAG_SMALE,
)


@dataclass(frozen=True)
class Verdict:
    outcome: str
    chain: tuple[str, ...]

    def __post_init__(self):
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome!r}")
        unknown = [t for t in self.chain if t not in THEOREM_TAGS]
        if unknown:
            raise ValueError(f"unknown justification tags {unknown}")
        if self.outcome == DIFFEO_S_COBORDISM:
            if TAG_H_COBORDISM not in self.chain or not (
                TAG_WH_SURFACE in self.chain or TAG_WH_NONPOSITIVE in self.chain
            ):
                raise ValueError("s-cobordism verdict needs h-cobordism and Whitehead-vanishing tags")
        if self.outcome == DIFFEO_SMALE and TAG_H_COBORDISM not in self.chain:
            raise ValueError("Smale verdict needs the h-cobordism tag")

    @property
    def diffeomorphic(self) -> bool:
        return self.outcome != NO_CONCLUSION

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "chain": list(self.chain)}


def forms_isomorphic(form: IntersectionForm, other: IntersectionForm) -> bool:
    """Indefinite unimodular forms are isomorphic iff rank, signature, parity agree."""
    for f in (form, other):
        if not f.indefinite:
            raise DefiniteFormUnsupported(
                f"form with b+={f.b_plus}, b-={f.b_minus} is definite; classification does not apply"
            )
    return form.key() == other.key()


def h_cobordant(surface: SurfaceModel, other: SurfaceModel) -> bool:
    return forms_isomorphic(intersection_form(surface), intersection_form(other))


def balance_blowups(
    surface: SurfaceModel, other: SurfaceModel, k: int
) -> tuple[SurfaceModel, SurfaceModel]:
    """Blow up ``surface`` at k+m points and ``other`` at k points, m the c1^2 defect.

    The two results are h-cobordant; this is asserted before returning.
    """
    if surface.hodge.p_g != other.hodge.p_g:
        raise GeometricGenusMismatch(
            f"p_g {surface.hodge.p_g} (of {surface.describe()}) != "
            f"{other.hodge.p_g} (of {other.describe()})"
        )
    m = surface.chern.c1_sq - other.chern.c1_sq
    if m < 0:
        raise NegativeDefect(f"c1^2 defect {m} < 0; swap the arguments")
    if k < 1:
        raise BadK(f"need k >= 1, got {k}")
    left, right = blow_up(surface, k + m), blow_up(other, k)
    if not h_cobordant(left, right):
        raise InternalInconsistency(
            f"balanced pair {left.describe()} / {right.describe()} is not h-cobordant"
        )
    return left, right


def wh_vanishes(pi: FundamentalGroup) -> bool:
    # trivial group: classical; surface groups: non-positively curved metrics
    if pi.trivial:
        return True
    return pi.genus >= 1


def diffeomorphic_product(surface: SurfaceModel, other: SurfaceModel, genus: int) -> Verdict:
    if genus < 0:
        raise ValueError(f"genus must be >= 0, got {genus}")
    if not h_cobordant(surface, other):
        return Verdict(NO_CONCLUSION, (TAG_FORM_CLASSIFICATION,))
    pi = TRIVIAL_GROUP if genus == 0 else FundamentalGroup(genus)
    if not wh_vanishes(pi):
        return Verdict(NO_CONCLUSION, (TAG_FORM_CLASSIFICATION, TAG_H_COBORDISM))
    if genus == 0:
        return Verdict(DIFFEO_SMALE, (TAG_FORM_CLASSIFICATION, TAG_H_COBORDISM, TAG_SMALE))
    return Verdict(
        DIFFEO_S_COBORDISM,
        (TAG_FORM_CLASSIFICATION, TAG_H_COBORDISM, TAG_WH_SURFACE, TAG_S_COBORDISM),
    )


def c1_primitive(vector: Sequence[int]) -> bool:
    if not vector or not any(vector):
        raise ZeroVector("c1 coordinate vector is empty or zero")
    return math.gcd(*vector) == 1

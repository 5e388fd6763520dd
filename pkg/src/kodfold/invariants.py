"""Exact invariant arithmetic for simply connected compact complex surfaces.

Everything here is a frozen value or a pure function.  Python integers never
wrap, so the 64-bit contract is enforced explicitly by :func:`checked`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Union

from .errors import ArithmeticOverflow, NegativeBetti, NotDivisible

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def checked(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise ArithmeticOverflow(f"{what} = {value} does not fit in 64 bits")
    return value


@total_ordering
class Kod:
    """Kodaira dimension: ``Kod(None)`` is -inf, otherwise 0..3.

    Addition treats -inf as absorbing, which is what multiplicativity of
    plurigenera forces on products.
    """

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        if value is not None and not 0 <= value <= 3:
            raise ValueError(f"Kodaira dimension out of range: {value}")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Kod is immutable")

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __add__(self, other: "Kod") -> "Kod":
        if self.value is None or other.value is None:
            return NEG_INF
        return Kod(self.value + other.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, Kod):
            return self.value == other.value
        return NotImplemented

    def __lt__(self, other: "Kod") -> bool:
        if not isinstance(other, Kod):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        return other.value is not None and self.value < other.value

    def __hash__(self) -> int:
        return hash(("Kod", self.value))

    def __repr__(self) -> str:
        return f"Kod({self.value!r})"

    def __str__(self) -> str:
        return "-inf" if self.value is None else str(self.value)

    def to_json(self) -> Union[int, str]:
        return "-inf" if self.value is None else self.value

    @classmethod
    def parse(cls, text: str | int) -> "Kod":
        if text in ("-inf", "−∞", "-oo"):
            return NEG_INF
        return cls(int(text))


NEG_INF = Kod(None)
KOD_VALUES = (NEG_INF, Kod(0), Kod(1), Kod(2), Kod(3))


@dataclass(frozen=True)
class ChernPair:
    """(c1^2, c2) of a surface. Noether integrality is checked by the models."""

    c1_sq: int
    c2: int

    def __post_init__(self):
        checked(self.c1_sq, "c1^2")
        checked(self.c2, "c2")


@dataclass(frozen=True)
class HodgeSummary:
    p_g: int
    q: int
    chi_O: int

    def __post_init__(self):
        if self.p_g < 0 or self.q < 0:
            raise ValueError("p_g and q must be non-negative")
        if self.chi_O != 1 - self.q + self.p_g:
            raise ValueError(f"chi_O={self.chi_O} but 1 - q + p_g = {1 - self.q + self.p_g}")

    @classmethod
    def simply_connected(cls, p_g: int) -> "HodgeSummary":
        return cls(p_g=p_g, q=0, chi_O=1 + p_g)


@dataclass(frozen=True)
class IntersectionForm:
    """Rank/b+/b-/parity summary of a unimodular form."""

    rank: int
    b_plus: int
    b_minus: int
    parity: str  # "even" | "odd"

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.b_plus < 0 or self.b_minus < 0:
            raise ValueError("b_plus and b_minus must be non-negative")
        if self.rank != self.b_plus + self.b_minus:
            raise ValueError("rank must equal b_plus + b_minus")
        if self.parity == "even" and self.signature % 8:
            raise ValueError(f"even unimodular form with signature {self.signature} not divisible by 8")

    @property
    def signature(self) -> int:
        return self.b_plus - self.b_minus

    @property
    def indefinite(self) -> bool:
        return self.b_plus >= 1 and self.b_minus >= 1

    def key(self) -> tuple[int, int, str]:
        return (self.rank, self.signature, self.parity)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "b_plus": self.b_plus,
            "b_minus": self.b_minus,
            "signature": self.signature,
            "parity": self.parity,
        }


@dataclass(frozen=True)
class FundamentalGroup:
    """Either trivial (genus None) or the fundamental group of a genus-g surface."""

    genus: int | None = None

    def __post_init__(self):
        if self.genus is not None and self.genus < 1:
            raise ValueError("SurfaceGroup genus must be >= 1")

    @property
    def trivial(self) -> bool:
        return self.genus is None

    def __str__(self) -> str:
        return "Trivial" if self.genus is None else f"SurfaceGroup({self.genus})"

    def to_json(self):
        if self.genus is None:
            return {"tag": "Trivial"}
        return {"tag": "SurfaceGroup", "genus": self.genus}


TRIVIAL_GROUP = FundamentalGroup()


def SurfaceGroup(genus: int) -> FundamentalGroup:
    return FundamentalGroup(genus)


def chi_from_noether(c: ChernPair) -> int:
    """Holomorphic Euler characteristic (c1^2 + c2) / 12."""
    total = c.c1_sq + c.c2
    if total % 12:
        raise NotDivisible(f"c1^2 + c2 = {total} is not divisible by 12")
    return total // 12


def betti_data(p_g: int, c2: int) -> tuple[int, int, int]:
    """(b2, b+, b-) of a simply connected surface."""
    b2 = checked(c2 - 2, "b2")
    b_plus = checked(2 * p_g + 1, "b+")
    if b2 < b_plus:
        raise NegativeBetti(f"b2 = {b2} < b+ = {b_plus} (p_g={p_g}, c2={c2})")
    return b2, b_plus, b2 - b_plus


def hirzebruch_signature(c: ChernPair) -> int:
    """Signature via (c1^2 - 2 c2) / 3, independent of the Betti route."""
    num = c.c1_sq - 2 * c.c2
    if num % 3:
        raise NotDivisible(f"c1^2 - 2c2 = {num} is not divisible by 3")
    return num // 3


def intersection_form(surface) -> IntersectionForm:
    """Form summary of a catalog surface; parity is even exactly when spin."""
    rank, b_plus, b_minus = betti_data(surface.hodge.p_g, surface.chern.c2)
    return IntersectionForm(rank, b_plus, b_minus, "even" if surface.spin else "odd")

"""Registry of surface families with exact invariants and plurigenera rules."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    BadParameter,
    InconsistentKod,
    NoetherViolation,
    NotCoprime,
    RuleUnavailable,
)
from .invariants import (
    ChernPair,
    HodgeSummary,
    Kod,
    NEG_INF,
    betti_data,
    checked,
    chi_from_noether,
    hirzebruch_signature,
)


class Family(enum.Enum):
    PROJECTIVE_PLANE = "cp2"
    RATIONAL_ELLIPTIC = "rational_elliptic"
    DOLGACHEV = "dolgachev"
    K3_ELLIPTIC = "k3"
    HOMOTOPY_K3 = "homotopy_k3"
    BARLOW = "barlow"
    CATANESE = "catanese"
    ELLIPTIC_MN = "elliptic_mn"
    HORIKAWA = "horikawa"
    SEXTIC = "sextic"

    @property
    def arity(self) -> int:
        return _ARITY.get(self, 0)

    @property
    def display(self) -> str:
        return _DISPLAY[self]

    @classmethod
    def from_name(cls, name: str) -> "Family":
        return cls(name)


_ARITY = {Family.DOLGACHEV: 2, Family.HOMOTOPY_K3: 2, Family.ELLIPTIC_MN: 1}

_DISPLAY = {
    Family.PROJECTIVE_PLANE: "ProjectivePlane",
    Family.RATIONAL_ELLIPTIC: "RationalElliptic",
    Family.DOLGACHEV: "Dolgachev",
    Family.K3_ELLIPTIC: "K3Elliptic",
    Family.HOMOTOPY_K3: "HomotopyK3",
    Family.BARLOW: "Barlow",
    Family.CATANESE: "Catanese",
    Family.ELLIPTIC_MN: "EllipticMn",
    Family.HORIKAWA: "Horikawa",
    Family.SEXTIC: "Sextic",
}

FAMILY_NAMES = tuple(f.value for f in Family)


@dataclass(frozen=True)
class SurfaceFamily:
    tag: Family
    params: tuple[int, ...] = ()

    def __post_init__(self):
        validate_params(self.tag, self.params)

    @property
    def name(self) -> str:
        return self.tag.value

    def __str__(self) -> str:
        if not self.params:
            return self.tag.display
        return f"{self.tag.display}({','.join(map(str, self.params))})"


def validate_params(tag: Family, params: Sequence[int]) -> None:
    if len(params) != tag.arity:
        raise BadParameter(f"{tag.value} takes {tag.arity} parameter(s), got {len(params)}")
    if tag in (Family.DOLGACHEV, Family.HOMOTOPY_K3):
        p, q = params
        if p < 2:
            raise BadParameter(f"{tag.value}: need p >= 2, got p={p}")
        if p >= q:
            raise BadParameter(f"{tag.value}: need p < q, got ({p},{q})")
        if math.gcd(p, q) != 1:
            raise NotCoprime(f"{tag.value}: gcd({p},{q}) = {math.gcd(p, q)}")
    elif tag is Family.ELLIPTIC_MN:
        (n,) = params
        if n < 3:
            raise BadParameter(f"elliptic_mn: need n >= 3, got n={n}")


@dataclass(frozen=True)
class EllipticMarker:
    """Elliptic fibration over P^1; ``multiplicities`` lists multiple fibers."""

    multiplicities: tuple[int, ...] = ()


@dataclass(frozen=True)
class SurfaceModel:
    family: SurfaceFamily
    blowups: int
    chern: ChernPair
    hodge: HodgeSummary
    spin: bool
    kod: Kod
    elliptic: EllipticMarker | None = None
    c1_coords: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        checked(self.blowups, "blow-up count")
        if self.blowups < 0:
            raise BadParameter("blow-up count must be non-negative")
        if self.hodge.q != 0:
            raise BadParameter("only simply connected surfaces (q = 0) are admitted")
        if self.kod.value is not None and self.kod.value > 2:
            raise BadParameter(f"surface Kodaira dimension {self.kod} out of range")
        try:
            chi = chi_from_noether(self.chern)
        except Exception as exc:
            raise NoetherViolation(f"{self.family}: {exc}") from None
        if chi != self.hodge.chi_O:
            raise NoetherViolation(
                f"{self.family}: (c1^2 + c2)/12 = {chi} but chi_O = {self.hodge.chi_O}"
            )
        if self.spin and (self.blowups > 0 or self.chern.c1_sq % 2):
            raise NoetherViolation(f"{self.family}: spin flag set on a surface that cannot be spin")
        _, b_plus, b_minus = betti_data(self.hodge.p_g, self.chern.c2)
        if b_plus - b_minus != hirzebruch_signature(self.chern):
            raise NoetherViolation(
                f"{self.family}: Betti signature {b_plus - b_minus} != "
                f"(c1^2 - 2c2)/3 = {hirzebruch_signature(self.chern)}"
            )
        if self.c1_coords is not None:
            # basis H, E_1..E_k with form diag(1, -1, ..., -1)
            sq = self.c1_coords[0] ** 2 - sum(x * x for x in self.c1_coords[1:])
            if sq != self.chern.c1_sq:
                raise NoetherViolation(f"c1 coordinates square to {sq}, expected {self.chern.c1_sq}")

    @property
    def name(self) -> str:
        return self.family.name

    def describe(self) -> str:
        base = str(self.family)
        return base if self.blowups == 0 else f"{base}#{self.blowups}"


def elliptic_mn_spin(n: int) -> bool:
    # c1 = (2-n)F with F.H = 3 for the hyperplane 3-section H, and H.H = n.
    # c1.H = 3(2-n) is even exactly when n is even; odd c1.H forces odd H.H (Wu).
    return (3 * (2 - n)) % 2 == 0


def _row(tag: Family, params: tuple[int, ...]):
    """(c1_sq, c2, p_g, kod, spin) for an unblown family member."""
    if tag is Family.PROJECTIVE_PLANE:
        return 9, 3, 0, NEG_INF, False
    if tag is Family.RATIONAL_ELLIPTIC:
        return 0, 12, 0, NEG_INF, False
    if tag is Family.DOLGACHEV:
        return 0, 12, 0, Kod(1), False
    if tag is Family.K3_ELLIPTIC:
        return 0, 24, 1, Kod(0), True
    if tag is Family.HOMOTOPY_K3:
        return 0, 24, 1, Kod(1), True
    if tag is Family.BARLOW:
        return 1, 11, 0, Kod(2), False
    if tag is Family.CATANESE:
        return 1, 23, 1, Kod(2), False
    if tag is Family.ELLIPTIC_MN:
        (n,) = params
        return 0, checked(12 * n), n - 1, Kod(1), elliptic_mn_spin(n)
    if tag is Family.HORIKAWA:
        return 16, 116, 10, Kod(2), False
    if tag is Family.SEXTIC:
        # K = O(2): canonical class is twice a class, so the form is even
        return 24, 108, 10, Kod(2), True
    raise AssertionError(tag)


def instantiate(family: SurfaceFamily | Family | str, *params: int) -> SurfaceModel:
    """Build the unblown catalog surface for a family.

    Accepts a :class:`SurfaceFamily`, or a tag / DSL name plus parameters.
    """
    if not isinstance(family, SurfaceFamily):
        tag = family if isinstance(family, Family) else Family.from_name(family)
        family = SurfaceFamily(tag, tuple(params))
    elif params:
        raise TypeError("parameters given twice")
    c1_sq, c2, p_g, kod, spin = _row(family.tag, family.params)
    elliptic = None
    if family.tag in (Family.RATIONAL_ELLIPTIC, Family.K3_ELLIPTIC, Family.ELLIPTIC_MN):
        elliptic = EllipticMarker()
    elif family.tag in (Family.DOLGACHEV, Family.HOMOTOPY_K3):
        elliptic = EllipticMarker(family.params)
    c1_coords = (3,) if family.tag is Family.PROJECTIVE_PLANE else None
    return SurfaceModel(
        family=family,
        blowups=0,
        chern=ChernPair(c1_sq, c2),
        hodge=HodgeSummary.simply_connected(p_g),
        spin=spin,
        kod=kod,
        elliptic=elliptic,
        c1_coords=c1_coords,
    )


def _elliptic_plurigenus(chi: int, p: int, q: int, m: int) -> int:
    # mK = m(chi - 2)F + m(p-1)F_1 + m(q-1)F_2 with F = pF_1 = qF_2;
    # sections are those of O(d) on the base P^1.
    d = m * (chi - 2) + (m * (p - 1)) // p + (m * (q - 1)) // q
    return max(0, d + 1)


def horikawa_plurigenus(m: int) -> int:
    if m <= 2:
        return (m + 1) * (4 * m + 1)
    return 8 * m * m - 8 * m + 11


def sextic_plurigenus(m: int) -> int:
    if m <= 2:
        return math.comb(2 * m + 3, 3)
    return 12 * m * m - 12 * m + 11


def plurigenus(surface: SurfaceModel, m: int) -> int:
    """P_m of the surface; blow-ups do not change it."""
    if m < 1:
        raise BadParameter(f"plurigenus index must be >= 1, got {m}")
    tag = surface.family.tag
    params = surface.family.params
    if tag in (Family.PROJECTIVE_PLANE, Family.RATIONAL_ELLIPTIC):
        value = 0
    elif tag is Family.K3_ELLIPTIC:
        value = 1
    elif tag in (Family.DOLGACHEV, Family.HOMOTOPY_K3):
        p, q = params
        value = _elliptic_plurigenus(surface.hodge.chi_O, p, q, m)
    elif tag in (Family.BARLOW, Family.CATANESE):
        if m != 1:
            raise RuleUnavailable(f"{tag.display}: P_{m} is not available (only P_1 = p_g is known)")
        value = surface.hodge.p_g
    elif tag is Family.ELLIPTIC_MN:
        (n,) = params
        value = m * (n - 2) + 1
    elif tag is Family.HORIKAWA:
        value = horikawa_plurigenus(m)
    elif tag is Family.SEXTIC:
        value = sextic_plurigenus(m)
    else:
        raise AssertionError(tag)
    return checked(value, f"P_{m}")


def has_full_rule(surface: SurfaceModel) -> bool:
    return surface.family.tag not in (Family.BARLOW, Family.CATANESE)


PLURIGENUS_RULES = {
    Family.PROJECTIVE_PLANE: "0",
    Family.RATIONAL_ELLIPTIC: "0",
    Family.DOLGACHEV: "max(0, 1 - m + floor(m(p-1)/p) + floor(m(q-1)/q))",
    Family.K3_ELLIPTIC: "1",
    Family.HOMOTOPY_K3: "1 + floor(m(p-1)/p) + floor(m(q-1)/q)",
    Family.BARLOW: "P_1 = 0; unavailable for m >= 2",
    Family.CATANESE: "P_1 = 1; unavailable for m >= 2",
    Family.ELLIPTIC_MN: "m(n-2) + 1",
    Family.HORIKAWA: "(m+1)(4m+1) for m <= 2; 8m^2 - 8m + 11 for m >= 3",
    Family.SEXTIC: "C(2m+3, 3) for m <= 2; 12m^2 - 12m + 11 for m >= 3",
}


def growth_class(values: Sequence[int]) -> Kod:
    """Growth exponent of a plurigenera sequence ``values[i] = P_{i+1}``.

    All zero gives -inf.  Otherwise the exponent is the rounded least-squares
    slope of log P_m against log m over the positive terms in the upper half
    of the range, which washes out the floor-function jitter of elliptic
    surfaces with multiple fibers.
    """
    if not any(values):
        return NEG_INF
    n = len(values)
    pts = [(m, v) for m, v in enumerate(values, start=1) if v > 0 and m >= max(1, n // 2)]
    if len(pts) < 2:
        pts = [(m, v) for m, v in enumerate(values, start=1) if v > 0]
    if len(pts) < 2:
        return Kod(0)
    xs = [math.log(m) for m, _ in pts]
    ys = [math.log(v) for _, v in pts]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    return Kod(min(3, max(0, round(slope))))


def kodaira_dimension(surface: SurfaceModel, bound: int = 60) -> Kod:
    """Stored Kodaira dimension, cross-checked against plurigenera growth."""
    if has_full_rule(surface):
        observed = growth_class([plurigenus(surface, m) for m in range(1, bound + 1)])
        if observed != surface.kod:
            raise InconsistentKod(
                f"{surface.describe()}: stored kod {surface.kod}, plurigenera grow like {observed}"
            )
    return surface.kod


DEFAULT_PARAMS = {
    Family.DOLGACHEV: (2, 3),
    Family.HOMOTOPY_K3: (2, 3),
    Family.ELLIPTIC_MN: (11,),
}


def catalog_rows() -> list[dict]:
    """One row per family, using a representative instance for parametrized ones."""
    rows = []
    for tag in Family:
        s = instantiate(SurfaceFamily(tag, DEFAULT_PARAMS.get(tag, ())))
        rows.append(
            {
                "family": tag.value,
                "display": tag.display,
                "params": list(s.family.params),
                "c1_sq": s.chern.c1_sq,
                "c2": s.chern.c2,
                "p_g": s.hodge.p_g,
                "chi_O": s.hodge.chi_O,
                "kod": s.kod.to_json(),
                "spin": s.spin,
                "plurigenus_rule": PLURIGENUS_RULES[tag],
            }
        )
    return rows

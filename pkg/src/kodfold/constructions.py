"""Blow-up, logarithmic transformation and products with a curve."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .catalog import Family, SurfaceFamily, SurfaceModel, instantiate, plurigenus
from .errors import AlreadyBlownUp, BadParameter, NotElliptic
from .invariants import (
    ChernPair,
    FundamentalGroup,
    Kod,
    NEG_INF,
    TRIVIAL_GROUP,
    checked,
)


@dataclass(frozen=True)
class Curve:
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise BadParameter(f"curve genus must be >= 0, got {self.genus}")
        checked(self.genus, "genus")


@dataclass(frozen=True)
class ChernTriple:
    c1_cubed: int
    c1c2: int
    c3: int

    def __post_init__(self):
        checked(self.c1_cubed, "c1^3")
        checked(self.c1c2, "c1c2")
        checked(self.c3, "c3")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.c1_cubed, self.c1c2, self.c3)


def product_chern_numbers(c1_sq: int, c2: int, genus: int) -> ChernTriple:
    """Chern numbers of surface x genus-g curve."""
    return ChernTriple((6 - 6 * genus) * c1_sq, (2 - 2 * genus) * (c1_sq + c2), (2 - 2 * genus) * c2)


@dataclass(frozen=True)
class ThreefoldModel:
    surface: SurfaceModel
    curve: Curve
    chern3: ChernTriple
    kod: Kod
    pi1: FundamentalGroup

    def __post_init__(self):
        expected = product_chern_numbers(self.surface.chern.c1_sq, self.surface.chern.c2, self.curve.genus)
        if expected != self.chern3:
            raise ValueError("chern3 does not match the product formula")
        if self.pi1 != fundamental_group(self.curve):
            raise ValueError("pi1 does not match the curve genus")

    def describe(self) -> str:
        return f"{self.surface.describe()} x C_{self.curve.genus}"


def blow_up(surface: SurfaceModel, k: int) -> SurfaceModel:
    """Blow up ``k`` distinct points."""
    if k < 0:
        raise BadParameter(f"number of blow-ups must be >= 0, got {k}")
    if k == 0:
        return surface
    checked(k, "blow-up count")
    coords = surface.c1_coords
    if coords is not None:
        coords = coords + (-1,) * k
    return dataclasses.replace(
        surface,
        blowups=checked(surface.blowups + k, "blow-up count"),
        chern=ChernPair(surface.chern.c1_sq - k, surface.chern.c2 + k),
        spin=False,
        c1_coords=coords,
    )


_LOG_TARGET = {
    Family.RATIONAL_ELLIPTIC: Family.DOLGACHEV,
    Family.K3_ELLIPTIC: Family.HOMOTOPY_K3,
}


def log_transform(surface: SurfaceModel, p: int, q: int) -> SurfaceModel:
    """Two logarithmic transforms with coprime multiplicities on smooth fibers."""
    target = _LOG_TARGET.get(surface.family.tag)
    if target is None:
        raise NotElliptic(
            f"{surface.family} has no marked elliptic fibration without multiple fibers"
        )
    if surface.blowups:
        raise AlreadyBlownUp(f"{surface.describe()} has been blown up {surface.blowups} time(s)")
    result = instantiate(SurfaceFamily(target, (p, q)))
    assert result.chern == surface.chern and result.hodge == surface.hodge
    return result


def curve_plurigenus(curve: Curve, m: int) -> int:
    if m < 1:
        raise BadParameter(f"plurigenus index must be >= 1, got {m}")
    g = curve.genus
    if g == 0:
        return 0
    if g == 1:
        return 1
    if m == 1:
        return g
    return checked((2 * m - 1) * (g - 1), f"P_{m}")


def curve_kod(curve: Curve) -> Kod:
    if curve.genus == 0:
        return NEG_INF
    return Kod(0) if curve.genus == 1 else Kod(1)


def fundamental_group(curve: Curve) -> FundamentalGroup:
    return TRIVIAL_GROUP if curve.genus == 0 else FundamentalGroup(curve.genus)


def product(surface: SurfaceModel, curve: Curve | int) -> ThreefoldModel:
    if not isinstance(curve, Curve):
        curve = Curve(curve)
    return ThreefoldModel(
        surface=surface,
        curve=curve,
        chern3=product_chern_numbers(surface.chern.c1_sq, surface.chern.c2, curve.genus),
        kod=surface.kod + curve_kod(curve),
        pi1=fundamental_group(curve),
    )


def threefold_plurigenus(threefold: ThreefoldModel, m: int) -> int:
    # surface factor first, so RuleUnavailable propagates even when the curve
    # factor would vanish
    return checked(plurigenus(threefold.surface, m) * curve_plurigenus(threefold.curve, m), f"P_{m}")

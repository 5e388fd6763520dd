import random

import pytest

from kodfold.catalog import FAMILY_NAMES, DEFAULT_PARAMS, Family, has_full_rule, instantiate, plurigenus, growth_class
from kodfold.constructions import (
    ChernTriple,
    Curve,
    blow_up,
    curve_kod,
    curve_plurigenus,
    log_transform,
    product,
    threefold_plurigenus,
)
from kodfold.errors import AlreadyBlownUp, BadParameter, NotCoprime, NotElliptic, RuleUnavailable
from kodfold.invariants import NEG_INF, FundamentalGroup, Kod, TRIVIAL_GROUP

import oracles


def family_instances():
    return [instantiate(Family(name), *DEFAULT_PARAMS.get(Family(name), ())) for name in FAMILY_NAMES]


def test_blow_up_plane_eight_times():
    s = blow_up(instantiate("cp2"), 8)
    assert (s.chern.c1_sq, s.chern.c2, s.hodge.p_g, s.kod) == (1, 11, 0, NEG_INF)
    assert s.c1_coords == (3,) + (-1,) * 8


def test_blow_up_zero_is_identity():
    s = instantiate("sextic")
    assert blow_up(s, 0) == s


def test_blow_up_k3_kills_spin():
    s = blow_up(instantiate("k3"), 1)
    assert (s.chern.c1_sq, s.chern.c2, s.spin) == (-1, 25, False)


def test_blow_up_negative():
    with pytest.raises(BadParameter):
        blow_up(instantiate("k3"), -1)


def test_blow_up_composes():
    s = instantiate("catanese")
    assert blow_up(blow_up(s, 3), 4) == blow_up(s, 7)


def test_log_transform():
    dol = log_transform(instantiate("rational_elliptic"), 2, 3)
    assert dol == instantiate("dolgachev", 2, 3)
    hk3 = log_transform(instantiate("k3"), 2, 3)
    assert hk3.family.name == "homotopy_k3" and hk3.kod == Kod(1)
    assert hk3.chern == instantiate("k3").chern


def test_log_transform_errors():
    with pytest.raises(NotElliptic):
        log_transform(instantiate("barlow"), 2, 3)
    with pytest.raises(NotElliptic):
        log_transform(instantiate("dolgachev", 2, 3), 5, 7)
    with pytest.raises(AlreadyBlownUp):
        log_transform(blow_up(instantiate("k3"), 1), 2, 3)
    with pytest.raises(NotCoprime):
        log_transform(instantiate("rational_elliptic"), 2, 4)
    with pytest.raises(BadParameter):
        log_transform(instantiate("rational_elliptic"), 3, 2)


def test_curve_plurigenus_examples():
    assert curve_plurigenus(Curve(0), 3) == 0
    assert curve_plurigenus(Curve(1), 5) == 1
    assert curve_plurigenus(Curve(2), 2) == 3


def test_curve_plurigenus_against_hyperelliptic_basis():
    # every genus here admits hyperelliptic curves, and h^0(mK) is a genus invariant
    for g in range(2, 9):
        for m in range(1, 15):
            assert curve_plurigenus(Curve(g), m) == oracles.hyperelliptic_pluricanonical(g, m)


def test_curve_kod():
    assert curve_kod(Curve(0)) == NEG_INF
    assert curve_kod(Curve(1)) == Kod(0)
    assert curve_kod(Curve(7)) == Kod(1)


def test_curve_kod_matches_growth():
    for g in range(0, 6):
        values = [curve_plurigenus(Curve(g), m) for m in range(1, 61)]
        assert growth_class(values) == curve_kod(Curve(g))


def test_product_examples():
    x = product(instantiate("barlow"), Curve(2))
    assert x.chern3 == ChernTriple(-6, -24, -22)
    assert x.kod == Kod(3)
    y = product(instantiate("dolgachev", 2, 3), Curve(1))
    assert y.kod == Kod(1) and y.pi1 == FundamentalGroup(1)
    assert product(instantiate("k3"), Curve(0)).pi1 == TRIVIAL_GROUP


def test_product_chern_matches_class_multiplication():
    for s in family_instances():
        for k in (0, 3):
            b = blow_up(s, k)
            for g in range(0, 5):
                expected = oracles.product_chern_by_classes(b.chern.c1_sq, b.chern.c2, g)
                assert product(b, Curve(g)).chern3.as_tuple() == expected


def test_genus_one_products_have_zero_chern_numbers():
    for s in family_instances():
        for k in range(0, 5):
            assert product(blow_up(s, k), 1).chern3.as_tuple() == (0, 0, 0)


def test_blow_then_product_commutes_at_invariant_level():
    rng = random.Random(20261016)
    base = family_instances()
    for _ in range(1000):
        s = rng.choice(base)
        k = rng.randint(0, 30)
        g = rng.randint(0, 5)
        a, b = s.chern.c1_sq, s.chern.c2
        got = product(blow_up(s, k), g).chern3.as_tuple()
        assert got == ((6 - 6 * g) * (a - k), (2 - 2 * g) * (a + b), (2 - 2 * g) * (b + k))


def test_plurigenera_blowup_invariant():
    for s in family_instances():
        if not has_full_rule(s):
            continue
        blown = blow_up(s, 7)
        assert all(plurigenus(blown, m) == plurigenus(s, m) for m in range(1, 61))


def test_threefold_plurigenus_examples():
    assert threefold_plurigenus(product(instantiate("dolgachev", 2, 3), 1), 6) == 2
    assert threefold_plurigenus(product(instantiate("horikawa"), 1), 2) == 27
    assert threefold_plurigenus(product(instantiate("sextic"), 2), 2) == 105


def test_threefold_plurigenus_rule_unavailable():
    with pytest.raises(RuleUnavailable):
        threefold_plurigenus(product(instantiate("barlow"), 0), 2)


def test_kod_additivity_matches_growth():
    for s in family_instances():
        if not has_full_rule(s):
            continue
        for g in range(0, 4):
            x = product(blow_up(s, 2), g)
            values = [threefold_plurigenus(x, m) for m in range(1, 61)]
            assert growth_class(values) == x.kod, x.describe()

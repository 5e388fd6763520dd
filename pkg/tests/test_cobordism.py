import itertools

import pytest

from kodfold.catalog import instantiate
from kodfold.cobordism import (
    DIFFEO_S_COBORDISM,
    DIFFEO_SMALE,
    NO_CONCLUSION,
    Verdict,
    balance_blowups,
    c1_primitive,
    diffeomorphic_product,
    forms_isomorphic,
    h_cobordant,
    wh_vanishes,
)
from kodfold.constructions import blow_up
from kodfold.errors import (
    BadK,
    DefiniteFormUnsupported,
    GeometricGenusMismatch,
    NegativeDefect,
    ZeroVector,
)
from kodfold.invariants import FundamentalGroup, TRIVIAL_GROUP, intersection_form

SAMPLE_BASES = [
    ("rational_elliptic",), ("dolgachev", 2, 3), ("dolgachev", 3, 5), ("k3",), ("homotopy_k3", 2, 3),
    ("barlow",), ("catanese",), ("elliptic_mn", 3), ("elliptic_mn", 4), ("elliptic_mn", 11),
    ("horikawa",), ("sextic",), ("cp2",),
]


def sample_surfaces(max_blowups=20):
    out = []
    for key in SAMPLE_BASES:
        s = instantiate(key[0], *key[1:])
        for k in range(max_blowups + 1):
            b = blow_up(s, k)
            if intersection_form(b).indefinite:
                out.append(b)
    return out


def test_forms_isomorphic_examples():
    barlow = intersection_form(instantiate("barlow"))
    plane8 = intersection_form(blow_up(instantiate("cp2"), 8))
    assert forms_isomorphic(barlow, plane8)
    k3 = intersection_form(instantiate("k3"))
    cat1 = intersection_form(blow_up(instantiate("catanese"), 1))
    assert k3.rank == cat1.rank and k3.signature == cat1.signature
    assert not forms_isomorphic(k3, cat1)
    with pytest.raises(DefiniteFormUnsupported):
        forms_isomorphic(intersection_form(instantiate("cp2")), barlow)
    with pytest.raises(DefiniteFormUnsupported):
        forms_isomorphic(barlow, intersection_form(instantiate("cp2")))


def test_h_cobordant_examples():
    assert h_cobordant(instantiate("barlow"), blow_up(instantiate("cp2"), 8))
    assert h_cobordant(instantiate("k3"), instantiate("homotopy_k3", 2, 3))
    assert not h_cobordant(instantiate("k3"), blow_up(instantiate("catanese"), 1))


def test_balance_examples():
    left, right = balance_blowups(instantiate("catanese"), instantiate("k3"), 1)
    assert (left.blowups, right.blowups) == (2, 1)
    assert h_cobordant(left, right)
    left, right = balance_blowups(instantiate("sextic"), instantiate("elliptic_mn", 11), 1)
    assert (left.blowups, right.blowups) == (25, 1)
    assert h_cobordant(left, right)


def test_balance_errors():
    for k in (1, 5):
        with pytest.raises(GeometricGenusMismatch):
            balance_blowups(instantiate("barlow"), instantiate("k3"), k)
    with pytest.raises(NegativeDefect):
        balance_blowups(instantiate("k3"), instantiate("catanese"), 1)
    with pytest.raises(BadK):
        balance_blowups(instantiate("catanese"), instantiate("k3"), 0)


def test_balance_always_h_cobordant():
    bases = [instantiate(k[0], *k[1:]) for k in SAMPLE_BASES]
    pairs = 0
    for a, b in itertools.permutations(bases, 2):
        if a.hodge.p_g != b.hodge.p_g or a.chern.c1_sq < b.chern.c1_sq:
            continue
        for k in range(1, 21):
            x, y = balance_blowups(a, b, k)
            assert h_cobordant(x, y)
            pairs += 1
    assert pairs > 100


def test_wh_vanishes():
    assert wh_vanishes(TRIVIAL_GROUP)
    assert wh_vanishes(FundamentalGroup(1))
    assert wh_vanishes(FundamentalGroup(5))


def test_diffeomorphic_product_examples():
    barlow, plane8 = instantiate("barlow"), blow_up(instantiate("cp2"), 8)
    v = diffeomorphic_product(barlow, plane8, 1)
    assert v.outcome == DIFFEO_S_COBORDISM
    assert v.chain == ("Thm2.2", "Thm2.1", "Cor2.5", "Thm2.3")
    v = diffeomorphic_product(barlow, plane8, 0)
    assert v.outcome == DIFFEO_SMALE and "Smale" in v.chain
    v = diffeomorphic_product(instantiate("k3"), blow_up(instantiate("catanese"), 1), 3)
    assert v.outcome == NO_CONCLUSION and not v.diffeomorphic
    assert v.to_json() == {"outcome": "NoConclusion", "chain": ["Thm2.2"]}


def test_diffeomorphic_product_definite():
    with pytest.raises(DefiniteFormUnsupported):
        diffeomorphic_product(instantiate("cp2"), instantiate("cp2"), 1)


def test_verdict_invariants():
    with pytest.raises(ValueError):
        Verdict(DIFFEO_S_COBORDISM, ("Thm2.1", "Thm2.3"))
    with pytest.raises(ValueError):
        Verdict(DIFFEO_S_COBORDISM, ("Cor2.5", "Thm2.3"))
    with pytest.raises(ValueError):
        Verdict("Diffeomorphic", ())
    with pytest.raises(ValueError):
        Verdict(NO_CONCLUSION, ("Lemma9",))


def test_c1_primitive():
    assert c1_primitive((3,) + (-1,) * 8)
    assert not c1_primitive((4, 2))
    with pytest.raises(ZeroVector):
        c1_primitive((0, 0))
    with pytest.raises(ZeroVector):
        c1_primitive(())
    assert c1_primitive(blow_up(instantiate("cp2"), 8).c1_coords)


def test_h_cobordism_is_an_equivalence_relation():
    sample = sample_surfaces()
    n = len(sample)
    rel = [[h_cobordant(a, b) for b in sample] for a in sample]
    for i in range(n):
        assert rel[i][i]
        for j in range(n):
            assert rel[i][j] == rel[j][i]
    # transitivity: related elements have identical neighbourhoods
    classes = [frozenset(j for j in range(n) if rel[i][j]) for i in range(n)]
    for i in range(n):
        for j in classes[i]:
            assert classes[j] == classes[i]


def test_blow_up_preserves_h_cobordism():
    sample = sample_surfaces(max_blowups=6)
    for a, b in itertools.combinations(sample, 2):
        if h_cobordant(a, b):
            for j in range(0, 8):
                assert h_cobordant(blow_up(a, j), blow_up(b, j))


def test_chain_soundness():
    sample = sample_surfaces(max_blowups=4)
    for a, b in itertools.combinations(sample, 2):
        for g in (0, 1, 3):
            v = diffeomorphic_product(a, b, g)
            if v.diffeomorphic:
                assert h_cobordant(a, b)

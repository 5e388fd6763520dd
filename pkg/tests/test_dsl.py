import pytest
from hypothesis import given, settings, strategies as st

from kodfold import dsl
from kodfold.catalog import FAMILY_NAMES, Family
from kodfold.constructions import ThreefoldModel
from kodfold.dsl import BlowUp, FamilyRef, LogTransform, Product, parse, pretty_print
from kodfold.errors import (
    ArityError,
    DslSyntaxError,
    DslTypeError,
    KodfoldError,
    NotCoprime,
    UnknownFamily,
)
from kodfold.invariants import Kod

GRAMMAR_EXAMPLES = [
    "product(blowup(barlow, 3), curve(2))",
    "logtransform(rational_elliptic, 2, 3)",
    "blowup(cp2, 8)",
    "dolgachev(2,3)",
    "product(horikawa, curve(1))",
    "product(k3, curve(2))",
    "blowup(barlow, 0)",
    "elliptic_mn(11)",
]


@pytest.mark.parametrize("text", GRAMMAR_EXAMPLES)
def test_grammar_examples_parse(text):
    e = parse(text)
    assert parse(pretty_print(e)) == e


def test_parse_shapes():
    assert parse("product(blowup(barlow, 3), curve(2))") == Product(BlowUp(FamilyRef("barlow"), 3), 2)
    assert parse("logtransform(rational_elliptic, 2, 3)") == LogTransform(FamilyRef("rational_elliptic"), 2, 3)
    assert parse("dolgachev(2,3)") == FamilyRef("dolgachev", (2, 3))


def test_spans_recorded():
    text = "product(blowup(barlow, 3), curve(2))"
    e = parse(text)
    assert e.span == (0, len(text))
    assert text[slice(*e.child.span)] == "blowup(barlow, 3)"
    assert text[slice(*e.child.child.span)] == "barlow"


def test_pretty_print_examples():
    assert pretty_print(Product(FamilyRef("k3"), 2)) == "product(k3, curve(2))"
    assert pretty_print(BlowUp(FamilyRef("barlow"), 0)) == "blowup(barlow, 0)"
    assert pretty_print(FamilyRef("dolgachev", (2, 3))) == "dolgachev(2, 3)"


def test_evaluate_examples():
    s = dsl.evaluate_text("blowup(cp2, 8)")
    assert (s.chern.c1_sq, s.chern.c2) == (1, 11)
    x = dsl.evaluate_text("product(horikawa, curve(1))")
    assert isinstance(x, ThreefoldModel)
    assert x.kod == Kod(2) and x.chern3.as_tuple() == (0, 0, 0)
    assert dsl.evaluate_text("logtransform(k3, 2, 3)").family.tag == Family.HOMOTOPY_K3


def _error(text):
    with pytest.raises(KodfoldError) as info:
        dsl.evaluate_text(text)
    return info.value


def test_error_examples():
    err = _error("dolgachev(2,4)")
    assert isinstance(err, NotCoprime) and err.span == (0, 14)
    err = _error("blowup(product(k3, curve(1)), 2)")
    assert isinstance(err, DslTypeError) and err.kind == "TypeError"
    assert err.span == (7, 28)
    err = _error("blowup(k3")
    assert isinstance(err, DslSyntaxError) and err.kind == "SyntaxError" and err.span == (9, 9)


@pytest.mark.parametrize(
    "text, kind",
    [
        ("foo", UnknownFamily),
        ("blowup(foo, 2)", UnknownFamily),
        ("k3(1)", ArityError),
        ("dolgachev(2)", ArityError),
        ("blowup(k3)", ArityError),
        ("product(k3, 2)", DslTypeError),
        ("product(k3, curve(1), 3)", ArityError),
        ("blowup(3, k3)", DslTypeError),
        ("curve(2)", DslTypeError),
        ("blowup(k3, -1)", DslSyntaxError),
        ("k3 k3", DslSyntaxError),
        ("", DslSyntaxError),
        ("K3", DslSyntaxError),
        ("blowup(k3,,2)", DslSyntaxError),
        ("blowup(product(k3, curve(1)), 2)", DslTypeError),
        ("logtransform(barlow, 2, 3)", KodfoldError),
    ],
)
def test_error_kinds_and_spans(text, kind):
    err = _error(text)
    assert isinstance(err, kind)
    assert err.span is not None
    start, end = err.span
    assert 0 <= start <= end <= len(text)


def test_unknown_family_span_is_name():
    err = _error("blowup(foo, 2)")
    assert err.span == (7, 10)


# ---------------------------------------------------------------- properties

ints = st.integers(0, 10**6)


def family_refs():
    choices = []
    for name in FAMILY_NAMES:
        arity = Family(name).arity
        choices.append(st.tuples(*([ints] * arity)).map(lambda ps, n=name: FamilyRef(n, ps)))
    return st.one_of(choices)


surfaces = st.recursive(
    family_refs(),
    lambda inner: st.one_of(
        st.builds(BlowUp, inner, ints),
        st.builds(LogTransform, inner, ints, ints),
    ),
    max_leaves=8,
)
exprs = st.one_of(surfaces, st.builds(Product, surfaces, ints))


@settings(max_examples=1000, deadline=None)
@given(exprs)
def test_round_trip(e):
    text = pretty_print(e)
    assert parse(text) == e
    assert pretty_print(parse(text)) == text


def _respace(text, gaps):
    out = []
    for i, ch in enumerate(text):
        if ch in "(),":
            out.append(gaps[i % len(gaps)] + ch + gaps[(i + 1) % len(gaps)])
        else:
            out.append(ch)
    return "".join(out)


@settings(max_examples=300, deadline=None)
@given(exprs, st.lists(st.sampled_from(["", " ", "  ", "\t", "\n", " \n "]), min_size=1, max_size=6))
def test_whitespace_insensitive(e, gaps):
    text = pretty_print(e).replace(" ", "")
    assert parse(_respace(text, gaps)) == parse(text) == e


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="abcdelmnoprstuwxyz_0123456789(), ", max_size=40))
def test_arbitrary_input_errors_stay_in_bounds(text):
    try:
        dsl.evaluate_text(text)
    except KodfoldError as err:
        assert err.span is not None
        start, end = err.span
        assert 0 <= start <= end <= len(text)

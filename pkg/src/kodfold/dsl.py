"""Construction expressions.

Grammar::

    expr    := surface | product
    product := "product" "(" surface "," "curve" "(" INT ")" ")"
    surface := family
             | "blowup" "(" surface "," INT ")"
             | "logtransform" "(" surface "," INT "," INT ")"
    family  := IDENT | IDENT "(" INT { "," INT } ")"

Parsing is two-pass: a generic call tree is read first, then typed into the
AST below.  That split lets arity and placement mistakes be reported as
ArityError / TypeError with the offending node's span instead of as bare
syntax errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from . import catalog, constructions
from .catalog import FAMILY_NAMES, Family, SurfaceFamily, SurfaceModel
from .constructions import ThreefoldModel
from .errors import ArityError, DslSyntaxError, DslTypeError, KodfoldError, UnknownFamily

Span = tuple[int, int]


@dataclass(frozen=True)
class FamilyRef:
    name: str
    params: tuple[int, ...] = ()
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BlowUp:
    child: "SurfaceExpr"
    k: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class LogTransform:
    child: "SurfaceExpr"
    p: int
    q: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Product:
    child: "SurfaceExpr"
    genus: int
    span: Span = field(default=(0, 0), compare=False)


SurfaceExpr = Union[FamilyRef, BlowUp, LogTransform]
ConstructionExpr = Union[FamilyRef, BlowUp, LogTransform, Product]


# ---------------------------------------------------------------- lexing

_TOKEN = re.compile(r"(?P<ident>[a-z_][a-z0-9_]*)|(?P<int>[0-9]+)|(?P<punct>[(),])")
_SPACE = " \t\r\n\f\v"


@dataclass(frozen=True)
class _Tok:
    kind: str  # ident | int | punct | eof
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos] in _SPACE:
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", (pos, pos + 1))
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind), m.end(kind)))
        pos = m.end()
    toks.append(_Tok("eof", "", n, n))
    return toks


# ---------------------------------------------------------------- generic tree

@dataclass(frozen=True)
class _Int:
    value: int
    span: Span


@dataclass(frozen=True)
class _Call:
    name: str
    args: tuple | None  # None when written without parentheses
    span: Span
    name_span: Span


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, punct: str) -> _Tok:
        tok = self.take()
        if tok.kind != "punct" or tok.text != punct:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise DslSyntaxError(f"expected {punct!r}, found {found}", _tok_span(tok, self.text))
        return tok

    def term(self):
        tok = self.take()
        if tok.kind == "int":
            return _Int(int(tok.text), (tok.start, tok.end))
        if tok.kind != "ident":
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise DslSyntaxError(f"expected a name or integer, found {found}", _tok_span(tok, self.text))
        nxt = self.peek()
        if nxt.kind != "punct" or nxt.text != "(":
            return _Call(tok.text, None, (tok.start, tok.end), (tok.start, tok.end))
        self.take()
        args = [self.term()]
        while True:
            nxt = self.peek()
            if nxt.kind == "punct" and nxt.text == ",":
                self.take()
                args.append(self.term())
                continue
            close = self.expect(")")
            return _Call(tok.text, tuple(args), (tok.start, close.end), (tok.start, tok.end))


def _tok_span(tok: _Tok, text: str) -> Span:
    if tok.kind == "eof":
        return (len(text), len(text))
    return (tok.start, tok.end)


# ---------------------------------------------------------------- typing

def _args(call: _Call) -> tuple:
    return call.args or ()


def _int_arg(node, what: str) -> int:
    if not isinstance(node, _Int):
        raise DslTypeError(f"{what} must be an integer", node.span)
    return node.value


def _arity(call: _Call, n: int) -> None:
    got = len(_args(call))
    if got != n:
        raise ArityError(f"{call.name} takes {n} argument(s), got {got}", call.span)


def _surface(node) -> SurfaceExpr:
    if isinstance(node, _Int):
        raise DslTypeError("expected a surface, found an integer", node.span)
    name = node.name
    if name == "blowup":
        _arity(node, 2)
        child, k = node.args
        return BlowUp(_surface(child), _int_arg(k, "blow-up count"), node.span)
    if name == "logtransform":
        _arity(node, 3)
        child, p, q = node.args
        return LogTransform(
            _surface(child), _int_arg(p, "multiplicity p"), _int_arg(q, "multiplicity q"), node.span
        )
    if name == "product":
        raise DslTypeError("product must be the outermost construction", node.span)
    if name == "curve":
        raise DslTypeError("curve(...) may only appear as the second argument of product", node.span)
    if name not in FAMILY_NAMES:
        raise UnknownFamily(name, node.name_span)
    arity = Family.from_name(name).arity
    if arity == 0:
        if node.args is not None:
            raise ArityError(f"{name} takes no parameters", node.span)
        return FamilyRef(name, (), node.span)
    _arity(node, arity)
    return FamilyRef(name, tuple(_int_arg(a, f"{name} parameter") for a in node.args), node.span)


def _expr(node) -> ConstructionExpr:
    if isinstance(node, _Call) and node.name == "product":
        _arity(node, 2)
        child, curve = node.args
        if not (isinstance(curve, _Call) and curve.name == "curve"):
            raise DslTypeError("second argument of product must be curve(g)", curve.span)
        _arity(curve, 1)
        return Product(_surface(child), _int_arg(curve.args[0], "curve genus"), node.span)
    return _surface(node)


def parse(text: str) -> ConstructionExpr:
    """Parse a construction expression; every node carries its source span."""
    reader = _Reader(text)
    tree = reader.term()
    tail = reader.peek()
    if tail.kind != "eof":
        raise DslSyntaxError(f"unexpected trailing input {tail.text!r}", (tail.start, tail.end))
    return _expr(tree)


# ---------------------------------------------------------------- evaluation

def _eval_surface(e: SurfaceExpr) -> SurfaceModel:
    try:
        if isinstance(e, FamilyRef):
            return catalog.instantiate(SurfaceFamily(Family.from_name(e.name), e.params))
        child = _eval_surface(e.child)
        if isinstance(e, BlowUp):
            return constructions.blow_up(child, e.k)
        if isinstance(e, LogTransform):
            return constructions.log_transform(child, e.p, e.q)
    except KodfoldError as exc:
        raise exc.with_span(e.span)
    raise DslTypeError(f"not a surface expression: {type(e).__name__}", getattr(e, "span", None))


def evaluate(e: ConstructionExpr) -> SurfaceModel | ThreefoldModel:
    """Evaluate to a model; errors carry the span of the node that raised."""
    if isinstance(e, Product):
        surface = _eval_surface(e.child)
        try:
            return constructions.product(surface, e.genus)
        except KodfoldError as exc:
            raise exc.with_span(e.span)
    return _eval_surface(e)


def evaluate_text(text: str) -> SurfaceModel | ThreefoldModel:
    return evaluate(parse(text))


# ---------------------------------------------------------------- printing

def pretty_print(e: ConstructionExpr) -> str:
    if isinstance(e, FamilyRef):
        if not e.params:
            return e.name
        return f"{e.name}({', '.join(map(str, e.params))})"
    if isinstance(e, BlowUp):
        return f"blowup({pretty_print(e.child)}, {e.k})"
    if isinstance(e, LogTransform):
        return f"logtransform({pretty_print(e.child)}, {e.p}, {e.q})"
    if isinstance(e, Product):
        return f"product({pretty_print(e.child)}, curve({e.genus}))"
    raise TypeError(f"not a construction expression: {e!r}")


# ---------------------------------------------------------------- builders

def family(name: str, *params: int) -> FamilyRef:
    return FamilyRef(name, tuple(params))


def blowup(child: SurfaceExpr, k: int) -> SurfaceExpr:
    return BlowUp(child, k)


def logtransform(child: SurfaceExpr, p: int, q: int) -> SurfaceExpr:
    return LogTransform(child, p, q)


def times_curve(child: SurfaceExpr, genus: int) -> Product:
    return Product(child, genus)

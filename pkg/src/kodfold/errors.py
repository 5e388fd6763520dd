"""Exception hierarchy.

Every error raised by the library derives from :class:`KodfoldError`.  Errors
that the DSL evaluator can attribute to a node of the input text carry a
``span`` (start, end) of character offsets; the parser only accepts ASCII, so
character and byte offsets coincide.
"""

from __future__ import annotations


class KodfoldError(Exception):
    """Base class; ``span`` is filled in by the DSL layer when known."""

    kind = "KodfoldError"

    def __init__(self, message: str = "", span: tuple[int, int] | None = None):
        super().__init__(message)
        self.message = message
        self.span = span

    def with_span(self, span: tuple[int, int]) -> "KodfoldError":
        if self.span is None:
            self.span = span
        return self

    def __str__(self) -> str:
        if self.span is None:
            return f"{self.kind}: {self.message}"
        return f"{self.kind} at {self.span[0]}..{self.span[1]}: {self.message}"


class InternalInconsistency(KodfoldError):
    """Catalog or bookkeeping data contradicts itself; always a bug."""

    kind = "InternalInconsistency"


class ArithmeticOverflow(KodfoldError):
    """A value left the signed 64-bit range."""

    kind = "ArithmeticOverflow"


# invariants-core
class NotDivisible(KodfoldError):
    kind = "NotDivisible"


class NegativeBetti(KodfoldError):
    kind = "NegativeBetti"


class NoetherViolation(InternalInconsistency):
    kind = "NoetherViolation"


# surface-catalog
class BadParameter(KodfoldError):
    kind = "BadParameter"


class NotCoprime(BadParameter):
    kind = "NotCoprime"


class RuleUnavailable(KodfoldError):
    kind = "RuleUnavailable"


class InconsistentKod(InternalInconsistency):
    kind = "InconsistentKod"


# constructions
class NotElliptic(KodfoldError):
    kind = "NotElliptic"


class AlreadyBlownUp(KodfoldError):
    kind = "AlreadyBlownUp"


# cobordism
class DefiniteFormUnsupported(KodfoldError):
    kind = "DefiniteFormUnsupported"


class GeometricGenusMismatch(KodfoldError):
    kind = "GeometricGenusMismatch"


class NegativeDefect(KodfoldError):
    kind = "NegativeDefect"


class BadK(KodfoldError):
    kind = "BadK"


class ZeroVector(KodfoldError):
    kind = "ZeroVector"


# theorem-verifier
class CoverageGap(KodfoldError):
    kind = "CoverageGap"

    def __init__(self, missing, span=None):
        self.missing = frozenset(missing)
        names = ", ".join(sorted(_fmt_pair(p) for p in self.missing))
        super().__init__(f"missing pairs: {names}", span)


def _fmt_pair(pair) -> str:
    return "(" + ",".join(str(x) for x in pair) + ")"


# dsl
class DslSyntaxError(KodfoldError):
    kind = "SyntaxError"


class UnknownFamily(KodfoldError):
    kind = "UnknownFamily"

    def __init__(self, name: str, span=None):
        self.name = name
        super().__init__(f"unknown family {name!r}", span)


class ArityError(KodfoldError):
    kind = "ArityError"


class DslTypeError(KodfoldError):
    kind = "TypeError"

"""Exact invariant calculus for simply connected complex surfaces and their
products with curves: plurigenera, Kodaira dimension, intersection forms,
h-cobordism and the resulting diffeomorphism verdicts for threefolds."""

from .catalog import (
    Family,
    SurfaceFamily,
    SurfaceModel,
    instantiate,
    kodaira_dimension,
    plurigenus,
)
from .cobordism import (
    Verdict,
    balance_blowups,
    c1_primitive,
    diffeomorphic_product,
    forms_isomorphic,
    h_cobordant,
    wh_vanishes,
)
from .constructions import (
    ChernTriple,
    Curve,
    ThreefoldModel,
    blow_up,
    curve_kod,
    curve_plurigenus,
    log_transform,
    product,
    threefold_plurigenus,
)
from .dsl import evaluate, parse, pretty_print
from .invariants import (
    NEG_INF,
    ChernPair,
    FundamentalGroup,
    HodgeSummary,
    IntersectionForm,
    Kod,
    betti_data,
    chi_from_noether,
    intersection_form,
)
from .verifier import (
    anomaly_scan,
    coverage_theorem_A,
    min_distinguishing_plurigenus,
    verify_theorem_A,
    verify_theorem_B,
)

__version__ = "0.1.0"

__all__ = [
    "Family",
    "SurfaceFamily",
    "SurfaceModel",
    "instantiate",
    "kodaira_dimension",
    "plurigenus",
    "Verdict",
    "balance_blowups",
    "c1_primitive",
    "diffeomorphic_product",
    "forms_isomorphic",
    "h_cobordant",
    "wh_vanishes",
    "ChernTriple",
    "Curve",
    "ThreefoldModel",
    "blow_up",
    "curve_kod",
    "curve_plurigenus",
    "log_transform",
    "product",
    "threefold_plurigenus",
    "evaluate",
    "parse",
    "pretty_print",
    "NEG_INF",
    "ChernPair",
    "FundamentalGroup",
    "HodgeSummary",
    "IntersectionForm",
    "Kod",
    "betti_data",
    "chi_from_noether",
    "intersection_form",
    "anomaly_scan",
    "coverage_theorem_A",
    "min_distinguishing_plurigenus",
    "verify_theorem_A",
    "verify_theorem_B",
]

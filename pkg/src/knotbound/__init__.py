"""Exact HOMFLY computations and obstructions to short positive, genus
non-increasing unknotting sequences for genus-one knots."""
from .knotio import BraidWord, PDCode, Pretzel, Twist, parse_pd, parse_presentation, to_pd
from .obstruct import decomposition_search, gordian_one_test, refined_bound, theorem_bound
from .poly import HomflyValue, LaurentPoly
from .skein import coefficient_polys, conway, homfly, pretzel_p0, twist_p0

__all__ = [
    "BraidWord",
    "HomflyValue",
    "LaurentPoly",
    "PDCode",
    "Pretzel",
    "Twist",
    "coefficient_polys",
    "conway",
    "decomposition_search",
    "gordian_one_test",
    "homfly",
    "parse_pd",
    "parse_presentation",
    "pretzel_p0",
    "refined_bound",
    "theorem_bound",
    "to_pd",
    "twist_p0",
]

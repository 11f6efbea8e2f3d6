"""HOMFLY polynomials by descending-diagram skein recursion.

Convention: ``v^-1 P(K+) - v P(K-) = z P(K0)`` and ``P(unknot) = 1``.

At each diagram the components are walked from their base points in a fixed
order. The first crossing met on its under-strand before its over-strand is
switched and smoothed:

    positive:  P = v^2 P(switched) + v z P(smoothed)
    negative:  P = v^-2 P(switched) - v^-1 z P(smoothed)

A diagram with no such crossing is descending, i.e. an unlink of ``c``
components, with value ``((v^-1 - v) z^-1)^(c-1)``. Base points survive a
switch (arc labels do not change), which is what makes the walk terminate.
"""
from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from typing import MutableMapping, Optional

from .knotio import (
    PDCode,
    Presentation,
    _cycles,
    _successors,
    component_count,
    smooth_crossing,
    switch_crossing,
    to_pd,
)
from .poly import HomflyValue, LaurentPoly

DEFAULT_MAX_CROSSINGS = 16


class CrossingLimitExceeded(RuntimeError):
    def __init__(self, n: int, limit: int):
        self.crossings = n
        self.limit = limit
        super().__init__(f"diagram has {n} crossings; the configured limit is {limit}")


class MalformedHomfly(ArithmeticError):
    """A HOMFLY value that does not regroup as the component count says it should."""


class NormalizationError(AssertionError):
    """A knot whose zeroth coefficient polynomial fails p(1) = 1 or p'(1) = 0."""


_DELTA = HomflyValue({(-1, -1): 1, (1, -1): -1})  # (v^-1 - v) z^-1


def unlink(c: int) -> HomflyValue:
    return _DELTA ** (c - 1) if c > 1 else HomflyValue.constant(1)


def _plan(d: PDCode, rng: Optional[random.Random]) -> list[int]:
    """Start arcs, one per component, in walking order."""
    cycles = _cycles(d)
    if rng is None:
        return [cyc[0] for cyc in cycles]
    starts = [rng.choice(cyc) for cyc in cycles]
    rng.shuffle(starts)
    return starts


def branch_crossing(d: PDCode, plan: list[int]) -> Optional[int]:
    nxt = _successors(d)
    seen: set[int] = set()
    for start in plan:
        a = start
        while True:
            i, under, out = nxt[a]
            if i not in seen:
                if under:
                    return i
                seen.add(i)
            a = out
            if a == start:
                break
    return None


def homfly(
    d: PDCode,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    cache: Optional[MutableMapping] = None,
    rng: Optional[random.Random] = None,
) -> HomflyValue:
    """HOMFLY polynomial of an oriented diagram.

    ``rng`` randomises base points and component order at every node; the
    value must not depend on it. ``cache`` memoises by diagram.
    """
    if len(d.crossings) > max_crossings:
        raise CrossingLimitExceeded(len(d.crossings), max_crossings)
    limit = sys.getrecursionlimit()
    need = 8 * len(d.crossings) + 200
    if need > limit:
        sys.setrecursionlimit(need)
    return _homfly(d, None, cache, rng)


def _homfly(d, plan, cache, rng) -> HomflyValue:
    if cache is not None:
        hit = cache.get(d)
        if hit is not None:
            return hit
    if not d.crossings:
        value = unlink(d.loops)
    else:
        if plan is None:
            plan = _plan(d, rng)
        i = branch_crossing(d, plan)
        if i is None:
            value = unlink(component_count(d))
        else:
            switched = _homfly(switch_crossing(d, i), plan, cache, rng)
            smoothed = _homfly(smooth_crossing(d, i), None, cache, rng)
            if d.signs[i] > 0:
                value = switched.scale_monomial(2, 0) + smoothed.scale_monomial(1, 1)
            else:
                value = switched.scale_monomial(-2, 0) + smoothed.scale_monomial(-1, 1, -1)
    if cache is not None:
        cache[d] = value
    return value


def homfly_of(p: Presentation, max_crossings: int = DEFAULT_MAX_CROSSINGS, **kw) -> HomflyValue:
    return homfly(to_pd(p), max_crossings=max_crossings, **kw)


@dataclass(frozen=True)
class CoefficientDecomposition:
    component_count: int
    coeffs: tuple[LaurentPoly, ...]

    @property
    def p0(self) -> LaurentPoly:
        return self.coeffs[0] if self.coeffs else LaurentPoly()

    def reassemble(self) -> HomflyValue:
        n = self.component_count
        total = HomflyValue()
        for i, p in enumerate(self.coeffs):
            total = total + HomflyValue({(e, 2 * i): c for e, c in p.items()})
        # divide by (v^-1 z)^(n-1)
        return total.scale_monomial(n - 1, -(n - 1))

    def to_json(self) -> dict:
        return {
            "components": self.component_count,
            "coeffs": [p.to_json() for p in self.coeffs],
        }


def check_knot_normalization(p0: LaurentPoly) -> None:
    if p0.eval_one() != 1 or p0.deriv_one() != 0:
        raise NormalizationError(
            f"zeroth coefficient polynomial {p0} has p(1) = {p0.eval_one()}, p'(1) = {p0.deriv_one()}"
        )


def coefficient_polys(h: HomflyValue, n_components: int) -> CoefficientDecomposition:
    """Split ``(v^-1 z)^(n-1) P`` into ``sum_i p^i(v) z^(2i)``.

    Knots are checked against p^0(1) = 1 and (p^0)'(1) = 0 on the way out.
    """
    if n_components < 1:
        raise ValueError("component count must be positive")
    k = n_components - 1
    shifted = h.scale_monomial(-k, k)
    groups = shifted.by_z()
    for b in groups:
        if b < 0 or b % 2:
            raise MalformedHomfly(
                f"z^{b} appears after multiplying by (v^-1 z)^{k}; "
                f"is {n_components} the right component count?"
            )
    top = max(groups) // 2 if groups else 0
    coeffs = tuple(groups.get(2 * i, LaurentPoly()) for i in range(top + 1))
    for p in coeffs:
        if not p.even_only():
            raise MalformedHomfly(f"odd v-exponent in coefficient polynomial {p}")
    dec = CoefficientDecomposition(n_components, coeffs)
    if n_components == 1:
        check_knot_normalization(dec.p0)
    return dec


def p0_of(p: Presentation, max_crossings: int = DEFAULT_MAX_CROSSINGS, **kw) -> LaurentPoly:
    d = to_pd(p)
    return coefficient_polys(homfly(d, max_crossings=max_crossings, **kw), component_count(d)).p0


def conway(h: HomflyValue) -> LaurentPoly:
    """Conway polynomial (as a polynomial in z) via the v = 1 specialisation."""
    return h.at_v_one()


def a2_of(h: HomflyValue) -> int:
    return conway(h).coeff(2)


def pretzel_p0(p: int, q: int, r: int) -> LaurentPoly:
    """Zeroth coefficient polynomial of P(2p+1, 2q+1, 2r+1), closed form."""
    if min(p, q, r) < 0:
        raise ValueError("pretzel closed form needs p, q, r >= 0")
    s = p + q + r
    return LaurentPoly(
        [
            (2 * (p + q + 1), 1),
            (2 * (q + r + 1), 1),
            (2 * (r + p + 1), 1),
            (2 * (s + 1), -1),
            (2 * (s + 2), -1),
        ]
    )


def twist_p0(m: int) -> LaurentPoly:
    """Zeroth coefficient polynomial of the twist knot T_{2m}, closed form."""
    if m < 1:
        raise ValueError("twist closed form needs m >= 1")
    return LaurentPoly([(-2, 1), (2 * m - 2, -1), (2 * m, 1)])

"""Lower bounds for the genus non-increasing totally positive unknotting number.

Everything here is conditional on the knot having genus one; callers assert
that, and ``BoundReport.genus_assumption`` records it.

Write the zeroth coefficient polynomial as p0 = sum_i h_i v^(2i). A positive
genus non-increasing unknotting sequence of length n forces

    g_n = (p0 - v^(2n)) / (1 - v^2) = sum_{i=1..n} (v^(k_i) f_i)^2,

so the lowest and highest coefficients of g_n are sums of at most n squares.
``theorem_bound`` reads five closed-form consequences of this off the extreme
coefficients of p0; ``refined_bound`` tests every n directly.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .poly import ONE_MINUS_V2, HomflyValue, LaurentPoly, divide_exact, sqrt_exact
from .skein import conway
from .squares import sum_of_squares_feasible

INF = math.inf
Bound = Union[int, float]

RULES = ("i-a", "i-b", "i-c", "ii-a", "ii-b", "refined-n-exclusion")


class NotKnotP0(ValueError):
    def __init__(self, p0: LaurentPoly, why: str):
        self.p0 = p0
        super().__init__(f"not a knot zeroth coefficient polynomial ({why}): {p0}")


class NotGenusOne(ValueError):
    """The necessary condition deg Conway <= 2 fails, so the knot is not genus <= 1."""


class SearchSpaceTooLarge(RuntimeError):
    def __init__(self, size: int, ceiling: int):
        self.size = size
        self.ceiling = ceiling
        super().__init__(f"search space has {size} points; ceiling is {ceiling}")


def _fmt_bound(b: Bound):
    return "inf" if b == INF else int(b)


@dataclass(frozen=True)
class BoundReport:
    bound: Bound
    rules_fired: tuple[str, ...] = ()
    genus_assumption: bool = True
    exhausted: bool = False
    details: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "bound": _fmt_bound(self.bound),
            "rules": list(self.rules_fired),
            "genus_assumption": self.genus_assumption,
            "exhausted": self.exhausted,
            "details": self.details,
        }

    def format(self) -> str:
        b = "inf" if self.bound == INF else str(self.bound)
        if self.exhausted:
            b = f">= {b} (search exhausted)"
        rules = ", ".join(self.rules_fired) or "none"
        return f"{b}  rules: {rules}"


def _check_p0(p0: LaurentPoly) -> None:
    if p0.is_zero():
        raise NotKnotP0(p0, "zero polynomial")
    if not p0.even_only():
        raise NotKnotP0(p0, "odd exponent present")
    if p0.eval_one() != 1:
        raise NotKnotP0(p0, f"p(1) = {p0.eval_one()}")
    if p0.deriv_one() != 0:
        raise NotKnotP0(p0, f"p'(1) = {p0.deriv_one()}")


def extreme_data(p0: LaurentPoly) -> dict:
    """m, M, h_m, h_M and the next index m' above m (None if absent), in v^2 units."""
    idx = sorted(e // 2 for e in p0.terms)
    m, M = idx[0], idx[-1]
    m2 = idx[1] if len(idx) > 1 else None
    return {
        "m": m,
        "M": M,
        "h_m": p0.coeff(2 * m),
        "h_M": p0.coeff(2 * M),
        "m_next": m2,
        "h_m_next": p0.coeff(2 * m2) if m2 is not None else None,
    }


def theorem_bound(p0: LaurentPoly) -> BoundReport:
    """Max of the five clause bounds. A clause is listed as fired when its
    hypothesis holds and its bound is informative (> 0)."""
    _check_p0(p0)
    x = extreme_data(p0)
    m, M, hm, hM = x["m"], x["M"], x["h_m"], x["h_M"]
    clauses: dict[str, Bound] = {"i-a": m}
    if hm < 0:
        clauses["i-b"] = INF
    if hm == 1 and x["h_m_next"] is not None and x["h_m_next"] < 0:
        clauses["i-c"] = m + 1
    if hM > 0:
        clauses["ii-a"] = M
    if hM > 1:
        clauses["ii-b"] = M + 1
    fired = tuple(r for r in RULES if r in clauses and clauses[r] > 0)
    bound = max([0] + [clauses[r] for r in fired])
    details = dict(x, clauses={r: _fmt_bound(b) for r, b in clauses.items()})
    return BoundReport(bound, fired, details=details)


def quotient(p0: LaurentPoly, n: int) -> LaurentPoly:
    """g_n = (p0 - v^(2n)) / (1 - v^2); exact whenever p0(1) = 1."""
    g = divide_exact(p0 - LaurentPoly.monomial(2 * n), ONE_MINUS_V2)
    if g is None:
        raise NotKnotP0(p0, "1 - v^2 does not divide p0 - v^(2n)")
    return g


def excluded_length(p0: LaurentPoly, n: int) -> Optional[str]:
    """Reason why no positive sequence of length n can exist, or None."""
    g = quotient(p0, n)
    if n == 0:
        return None if g.is_zero() else "empty sum must vanish"
    if g.is_zero():
        return "a nonempty sum of squares cannot vanish"
    _, _, lo, hi = g.bounds()
    if not sum_of_squares_feasible(lo, n):
        return f"lowest coefficient {lo} is not a sum of at most {n} squares"
    if not sum_of_squares_feasible(hi, n):
        return f"highest coefficient {hi} is not a sum of at most {n} squares"
    return None


def refined_bound(p0: LaurentPoly, n_max: int = 32) -> BoundReport:
    """Smallest length n <= n_max not excluded by the extreme-coefficient test."""
    _check_p0(p0)
    x = extreme_data(p0)
    reasons = {}
    for n in range(n_max + 1):
        why = excluded_length(p0, n)
        if why is None:
            rules = ("refined-n-exclusion",) if n > 0 else ()
            return BoundReport(n, rules, details={"excluded": reasons, "n_max": n_max})
        reasons[n] = why
    if x["h_m"] < 0:
        return BoundReport(
            INF, ("i-b", "refined-n-exclusion"), details={"excluded": reasons, "n_max": n_max}
        )
    return BoundReport(
        n_max + 1,
        ("refined-n-exclusion",),
        exhausted=True,
        details={"excluded": reasons, "n_max": n_max},
    )


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GordianResult:
    passed: bool
    f: Optional[LaurentPoly] = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "result": "pass" if self.passed else "fail",
            "f": self.f.to_json() if self.f is not None else None,
            "f_text": str(self.f) if self.f is not None else None,
            "reason": self.reason,
        }


_VINV_MINUS_V = LaurentPoly({-1: 1, 1: -1})


def gordian_one_test(
    p0_k: LaurentPoly, p0_k2: LaurentPoly, a2_k: int, a2_k2: int, eps: int
) -> GordianResult:
    """Can K' come from genus-one K by one eps-signed non-nugatory crossing
    change with g(K') <= 1?

    Requires v^-eps p0(K) - v^eps p0(K') = eps (v^-1 - v) v^(2 eps (a2 - a2')) f^2
    with f(1) = 1 and f'(1) = 0. A fail is a proof that no such change exists.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if p0_k == p0_k2 and a2_k == a2_k2:
        return GordianResult(True, None, "identical inputs (distance 0)")
    lhs = (p0_k.shift(-eps) - p0_k2.shift(eps)) * eps
    q = divide_exact(lhs, _VINV_MINUS_V)
    if q is None:
        return GordianResult(False, None, "not divisible by v^-1 - v")
    target = q.shift(-2 * eps * (a2_k - a2_k2))
    f = sqrt_exact(target)
    if f is None:
        return GordianResult(False, None, f"{target} is not a perfect square")
    if f.eval_one() < 0:
        f = -f
    if f.eval_one() != 1:
        return GordianResult(False, f, f"f(1) = {f.eval_one()}, need 1")
    if f.deriv_one() != 0:
        return GordianResult(False, f, f"f'(1) = {f.deriv_one()}, need 0")
    return GordianResult(True, f, "square root found")


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionCertificate:
    n: int
    shifts: tuple[int, ...]
    factors: tuple[LaurentPoly, ...]

    def reassemble(self) -> LaurentPoly:
        total = LaurentPoly()
        for k, f in zip(self.shifts, self.factors):
            total = total + (f * f).shift(2 * k)
        return LaurentPoly.monomial(2 * self.n) + ONE_MINUS_V2 * total

    def verify(self, p0: LaurentPoly) -> bool:
        return (
            len(self.shifts) == len(self.factors) == self.n
            and all(f.eval_one() == 1 and f.deriv_one() == 0 for f in self.factors)
            and self.reassemble() == p0
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "shifts": list(self.shifts),
            "factors": [f.to_json() for f in self.factors],
            "factors_text": [str(f) for f in self.factors],
        }


def _factor_candidates(deg_span: int, coeff_bound: int) -> list[LaurentPoly]:
    exps = [e for e in range(-deg_span, deg_span + 1) if e % 2 == 0]
    out = []
    for coeffs in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=len(exps)):
        if sum(coeffs) != 1:
            continue
        if sum(e * c for e, c in zip(exps, coeffs)) != 0:
            continue
        out.append(LaurentPoly(zip(exps, coeffs)))
    return out


def decomposition_search(
    p0: LaurentPoly,
    n: int,
    shift_lo: int,
    shift_hi: int,
    deg_span: int,
    coeff_bound: int,
    ceiling: int = 2_000_000,
) -> Optional[DecompositionCertificate]:
    """Bounded search for p0 = v^(2n) + (1 - v^2) sum_i v^(2k_i) f_i^2.

    Each f_i lives on even exponents in [-deg_span, deg_span] with coefficients
    in [-coeff_bound, coeff_bound] and satisfies f(1) = 1, f'(1) = 0; each k_i
    lies in [shift_lo, shift_hi]. Multisets are enumerated lexicographically
    by (shift, coefficients). None means nothing was found inside the box,
    which proves nothing about existence.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if shift_lo > shift_hi or deg_span < 0 or coeff_bound < 1:
        raise ValueError("empty search box")
    g = divide_exact(p0 - LaurentPoly.monomial(2 * n), ONE_MINUS_V2)
    if g is None:
        return None
    slots = len([e for e in range(-deg_span, deg_span + 1) if e % 2 == 0])
    raw = (2 * coeff_bound + 1) ** slots
    if raw > ceiling:
        raise SearchSpaceTooLarge(raw, ceiling)
    factors = _factor_candidates(deg_span, coeff_bound)
    items = []
    for k in range(shift_lo, shift_hi + 1):
        for f in sorted(factors, key=lambda f: tuple(f.coeff(e) for e in range(-deg_span, deg_span + 1, 2))):
            items.append((k, f, (f * f).shift(2 * k)))
    size = math.comb(len(items) + n - 1, n)
    if size > ceiling:
        raise SearchSpaceTooLarge(size, ceiling)
    for combo in itertools.combinations_with_replacement(items, n):
        total = LaurentPoly()
        for _, _, term in combo:
            total = total + term
        if total == g:
            return DecompositionCertificate(
                n, tuple(k for k, _, _ in combo), tuple(f for _, f, _ in combo)
            )
    return None


# --------------------------------------------------------------------------


def genus_one_guard(h: HomflyValue) -> None:
    """Reject knots whose Conway polynomial has degree > 2 (then genus >= 2)."""
    c = conway(h)
    if c.is_zero():
        raise NotGenusOne("Conway polynomial vanishes: not a knot")
    _, deg, _, _ = c.bounds()
    if deg > 2:
        raise NotGenusOne(f"Conway polynomial {c.format('z')} has degree {deg} > 2, so genus >= 2")

"""Explicit positive, genus non-increasing unknotting sequences for the two
families, and a verifier that checks them on actual diagrams.

Pretzel P(2p+1, 2q+1, 2r+1): pick the two bands with the smallest parameter
sum (ties by band index), bring the first and then the second down to a
single crossing, then flip the first band from 1 to -1. P(-1, 1, c) is the
unknot. Length min(p+q, q+r, r+p) + 1.

Twist T_{2m}: remove one full twist at a time. Length m.

Each step changes the topmost crossing of the band being reduced.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .knotio import (
    Pretzel,
    Twist,
    component_count,
    crossing_sign,
    format_presentation,
    pretzel_diagram,
    switch_crossing,
    twist_diagram,
)
from .poly import HomflyValue
from .skein import DEFAULT_MAX_CROSSINGS, coefficient_polys, conway, homfly

Family = Union[Pretzel, Twist]


@dataclass(frozen=True)
class StepChange:
    band: int  # 0..2 for pretzels, 0 (the twist band) for twist knots
    before: int  # band crossing count (signed) before the change
    after: int
    crossing_index: int  # index into the earlier diagram's crossing list

    def to_json(self) -> dict:
        return {
            "band": self.band,
            "before": self.before,
            "after": self.after,
            "crossing_index": self.crossing_index,
        }


@dataclass(frozen=True)
class SequenceCertificate:
    steps: tuple[Family, ...]
    changes: tuple[StepChange, ...]
    claimed_length: int

    def to_json(self) -> dict:
        return {
            "steps": [format_presentation(s) for s in self.steps],
            "changes": [c.to_json() for c in self.changes],
            "claimed_length": self.claimed_length,
        }


def diagram_with_bands(p: Family):
    """Diagram plus crossing indices of each band, bottom to top."""
    if isinstance(p, Pretzel):
        return pretzel_diagram(p)
    d, twist_band = twist_diagram(p)
    return d, [twist_band]


def _top_crossing(p: Family, band: int) -> int:
    _, bands = diagram_with_bands(p)
    return bands[band][-1]


def pretzel_sequence(p: int, q: int, r: int) -> SequenceCertificate:
    params = [p, q, r]
    if min(params) < 1:
        raise ValueError("pretzel sequences need p, q, r >= 1")
    pairs = [(0, 1), (0, 2), (1, 2)]
    i, j = min(pairs, key=lambda ij: (params[ij[0]] + params[ij[1]], ij))
    cur = Pretzel(*params)
    steps = [cur]
    changes = []

    def step(band: int):
        nonlocal cur
        new = list(cur.params)
        new[band] -= 1
        nxt = Pretzel(*new)
        changes.append(
            StepChange(band, cur.bands[band], nxt.bands[band], _top_crossing(cur, band))
        )
        steps.append(nxt)
        cur = nxt

    for band in (i, j):
        while cur.params[band] > 0:
            step(band)
    step(i)
    return SequenceCertificate(tuple(steps), tuple(changes), len(changes))


def twist_sequence(m: int) -> SequenceCertificate:
    if m < 1:
        raise ValueError("twist sequences need m >= 1")
    steps = [Twist(k) for k in range(m, -1, -1)]
    changes = tuple(
        StepChange(0, 2 * t.m, 2 * t.m - 2, _top_crossing(t, 0)) for t in steps[:-1]
    )
    return SequenceCertificate(tuple(steps), changes, m)


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    step: Optional[int]  # None for certificate-level checks
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"step": self.step, "check": self.name, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failing_step(self) -> Optional[int]:
        for c in self.checks:
            if not c.ok:
                return c.step
        return None

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "failing_step": self.failing_step,
            "checks": [c.to_json() for c in self.checks],
        }


def _param_delta(a: Family, b: Family) -> tuple[bool, str]:
    if type(a) is not type(b):
        return False, "presentation family changes"
    if isinstance(a, Twist):
        ok = b.m - a.m == -1
        return ok, f"twist count {2 * a.m} -> {2 * b.m}"
    diffs = [(k, x, y) for k, (x, y) in enumerate(zip(a.bands, b.bands)) if x != y]
    if len(diffs) != 1:
        return False, f"{len(diffs)} bands change"
    k, x, y = diffs[0]
    return y - x == -2, f"band {k}: {x} -> {y}"


def _structural_genus(p: Family) -> tuple[bool, str]:
    if isinstance(p, Twist):
        return True, "twist knot"
    if isinstance(p, Pretzel) and all(b % 2 for b in p.bands):
        return True, "odd pretzel (two-disk, three-band surface)"
    return False, f"{p!r} has no structural genus-one surface"


def verify_sequence(
    cert: SequenceCertificate, max_crossings: int = DEFAULT_MAX_CROSSINGS
) -> VerificationReport:
    checks: list[Check] = []
    n = len(cert.changes)
    checks.append(
        Check(
            None,
            "length",
            cert.claimed_length == n and len(cert.steps) == n + 1,
            f"claimed {cert.claimed_length}, {n} changes, {len(cert.steps)} presentations",
        )
    )
    diagrams = [diagram_with_bands(s)[0] for s in cert.steps]
    values: list[HomflyValue] = [homfly(d, max_crossings=max_crossings) for d in diagrams]

    for k, p in enumerate(cert.steps):
        ok, why = _structural_genus(p)
        checks.append(Check(k, "structural-genus", ok, why))
        comps = component_count(diagrams[k])
        if comps != 1:
            checks.append(Check(k, "conway-degree", False, f"{comps} components, not a knot"))
            continue
        coefficient_polys(values[k], 1)  # normalisation post-check
        c = conway(values[k])
        deg = max(c.terms) if c else 0
        checks.append(Check(k, "conway-degree", deg <= 2, f"Conway {c.format('z')}"))

    for k, ch in enumerate(cert.changes):
        if k + 1 >= len(cert.steps):
            break
        before, after = cert.steps[k], cert.steps[k + 1]
        ok, why = _param_delta(before, after)
        checks.append(Check(k, "parameter-delta", ok, why))
        d = diagrams[k]
        if not 0 <= ch.crossing_index < len(d):
            checks.append(Check(k, "positivity", False, f"no crossing {ch.crossing_index}"))
            continue
        sign = crossing_sign(d, ch.crossing_index)
        checks.append(Check(k, "positivity", sign == 1, f"crossing {ch.crossing_index} has sign {sign:+d}"))
        switched = homfly(switch_crossing(d, ch.crossing_index), max_crossings=max_crossings)
        checks.append(
            Check(
                k,
                "switch-realizes-step",
                switched == values[k + 1],
                "switching the crossing gives the next knot's HOMFLY",
            )
        )

    final = values[-1] if values else None
    checks.append(
        Check(
            len(cert.steps) - 1,
            "final-unknot",
            final == HomflyValue.constant(1),
            f"final HOMFLY {final}",
        )
    )
    return VerificationReport(tuple(checks))

"""Knot and link presentations, and the oriented PD codes the skein engine eats.

PD convention: ``X[a,b,c,d]`` lists the four arcs at a crossing counterclockwise
starting from the incoming under-strand, so the under-strand runs ``a -> c``.
The over-strand runs ``d -> b`` on a positive (right-handed) crossing and
``b -> d`` on a negative one. Arcs of each component are numbered
consecutively along the orientation, wrapping inside the component.

``PDCode`` stores the crossing signs next to the tuples. The signs are what
carries the over-strand direction; inferring it from arc numbers alone is
ambiguous for a two-arc component that is never an under-strand.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Union


class KnotInputError(ValueError):
    """Base class for presentations that cannot be accepted."""


class PresentationSyntaxError(KnotInputError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}: {text!r}" if text else message + where)


class InvariantViolation(KnotInputError):
    """A structurally invalid diagram (bad arc labels, inconsistent orientation)."""


Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[Crossing, ...] = ()
    signs: tuple[int, ...] = ()
    loops: int = 0  # crossingless unknotted components

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if not self.crossings and self.loops == 0:
            object.__setattr__(self, "loops", 1)

    def __len__(self):
        return len(self.crossings)

    def format(self) -> str:
        toks = [f"X[{a},{b},{c},{d}]" for a, b, c, d in self.crossings]
        if self.crossings and self.loops:
            toks.append(f"Loop[{self.loops}]")
        elif not self.crossings and self.loops > 1:
            toks.append(f"Loop[{self.loops}]")
        return " ".join(toks)

    def __str__(self):
        return self.format() or "(unknot)"

    def to_json(self) -> dict:
        return {
            "crossings": [list(c) for c in self.crossings],
            "signs": list(self.signs),
            "loops": self.loops,
        }

    @classmethod
    def from_json(cls, data) -> "PDCode":
        if isinstance(data, str):
            data = json.loads(data)
        d = cls(
            tuple(tuple(c) for c in data["crossings"]),
            tuple(data["signs"]),
            int(data.get("loops", 0)),
        )
        _check(d)
        return d

    def validate(self) -> "PDCode":
        _check(self)
        return self


# --------------------------------------------------------------------------
# orientation helpers


def _over(c: Crossing, sign: int) -> tuple[int, int]:
    """(in, out) arcs of the over-strand."""
    return (c[3], c[1]) if sign > 0 else (c[1], c[3])


def _successors(d: PDCode) -> dict[int, tuple[int, bool, int]]:
    """Map each arc to (crossing at its head, entered as under?, next arc)."""
    nxt = {}
    for i, (c, s) in enumerate(zip(d.crossings, d.signs)):
        o_in, o_out = _over(c, s)
        for arc, under, out in ((c[0], True, c[2]), (o_in, False, o_out)):
            if arc in nxt:
                raise InvariantViolation(f"arc {arc} enters two crossings")
            nxt[arc] = (i, under, out)
    return nxt


def _cycles(d: PDCode) -> list[list[int]]:
    """Components as arc cycles, ordered by lowest label, each starting there."""
    nxt = _successors(d)
    seen: set[int] = set()
    comps = []
    for start in sorted(nxt):
        if start in seen:
            continue
        cyc = []
        a = start
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = nxt[a][2]
        if a != start:
            raise InvariantViolation(f"arc {a} is reached twice while tracing a component")
        comps.append(cyc)
    return comps


def _check(d: PDCode) -> None:
    n = len(d.crossings)
    if len(d.signs) != n:
        raise InvariantViolation("one sign per crossing is required")
    if any(s not in (1, -1) for s in d.signs):
        raise InvariantViolation("crossing signs must be +1 or -1")
    if d.loops < 0:
        raise InvariantViolation("negative loop count")
    counts: dict[int, int] = {}
    for c in d.crossings:
        if len(c) != 4:
            raise InvariantViolation(f"crossing {c} does not have four arcs")
        for x in c:
            if x <= 0:
                raise InvariantViolation(f"arc label {x} is not a positive integer")
            counts[x] = counts.get(x, 0) + 1
    for x, k in sorted(counts.items()):
        if k != 2:
            raise InvariantViolation(f"arc label {x} appears {k} times (expected 2)")
    if len(counts) != 2 * n:
        raise InvariantViolation(f"{n} crossings need {2 * n} arc labels, found {len(counts)}")
    outs = set()
    for c, s in zip(d.crossings, d.signs):
        for arc in (c[2], _over(c, s)[1]):
            if arc in outs:
                raise InvariantViolation(f"arc {arc} leaves two crossings")
            outs.add(arc)
    for cyc in _cycles(d):
        lo, hi = min(cyc), max(cyc)
        if sorted(cyc) != list(range(lo, hi + 1)) or cyc[0] != lo or any(
            b != a + 1 for a, b in zip(cyc, cyc[1:])
        ):
            raise InvariantViolation(
                f"arcs {sorted(cyc)} of one component are not numbered consecutively along it"
            )


def canonical(crossings, signs, loops: int = 0) -> PDCode:
    """Relabel arcs by traversal: components in order of lowest old label,
    each numbered consecutively from its lowest old label.

    Exception: a two-arc component that is never an under-strand starts at the
    arc entering the earlier-listed crossing, matching the tie-break in
    ``parse_pd`` so the text form reads back to the same orientation.
    """
    raw = PDCode(tuple(crossings), tuple(signs), loops if crossings else max(loops, 1))
    if not raw.crossings:
        return raw
    nxt = _successors(raw)
    unders = {c[0] for c in raw.crossings}
    new = {}
    label = 1
    for cyc in _cycles(raw):
        if len(cyc) == 2 and not unders.intersection(cyc):
            cyc = sorted(cyc, key=lambda a: nxt[a][0])
        for a in cyc:
            new[a] = label
            label += 1
    return PDCode(
        tuple(tuple(new[x] for x in c) for c in raw.crossings), raw.signs, raw.loops
    )


# --------------------------------------------------------------------------
# diagram operations


def crossing_sign(d: PDCode, index: int) -> int:
    return d.signs[index]


def writhe(d: PDCode) -> int:
    return sum(d.signs)


def component_count(d: PDCode) -> int:
    return len(_cycles(d)) + d.loops if d.crossings else d.loops


def components_at(d: PDCode, index: int) -> tuple[int, int]:
    """Component indices (in ``_cycles`` order) of the under- and over-strand at a crossing."""
    where = {}
    for k, cyc in enumerate(_cycles(d)):
        for a in cyc:
            where[a] = k
    c = d.crossings[index]
    return where[c[0]], where[c[1]]


def switch_crossing(d: PDCode, index: int) -> PDCode:
    a, b, c, e = d.crossings[index]
    s = d.signs[index]
    # the old over-in becomes the new under-in, placed first
    new = (e, a, b, c) if s > 0 else (b, c, e, a)
    crossings = list(d.crossings)
    crossings[index] = new
    signs = list(d.signs)
    signs[index] = -s
    return PDCode(tuple(crossings), tuple(signs), d.loops)


def smooth_crossing(d: PDCode, index: int) -> PDCode:
    """Oriented resolution: under-in continues as over-out, over-in continues as under-out."""
    c = d.crossings[index]
    s = d.signs[index]
    o_in, o_out = _over(c, s)
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    union(c[0], o_out)
    union(o_in, c[2])
    rest = [x for i, x in enumerate(d.crossings) if i != index]
    rest_signs = [x for i, x in enumerate(d.signs) if i != index]
    surviving = {find(x) for cr in rest for x in cr}
    new_loops = len({find(x) for x in c} - surviving)
    merged = [tuple(find(x) for x in cr) for cr in rest]
    return canonical(merged, rest_signs, d.loops + new_loops)


# --------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    strand_count: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strand_count < 1:
            raise InvariantViolation("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strand_count:
                raise InvariantViolation(
                    f"letter {x} is invalid on {self.strand_count} strands"
                )

    def format(self) -> str:
        return f"{self.strand_count}: " + " ".join(str(x) for x in self.letters)

    def permutation_cycles(self) -> int:
        perm = list(range(self.strand_count))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        seen, cycles = set(), 0
        for s in range(self.strand_count):
            if s not in seen:
                cycles += 1
                while s not in seen:
                    seen.add(s)
                    s = perm[s]
        return cycles


@dataclass(frozen=True)
class Pretzel:
    """P(2p+1, 2q+1, 2r+1); the parameters are p, q, r."""

    p: int
    q: int
    r: int

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def bands(self) -> tuple[int, int, int]:
        return tuple(2 * x + 1 for x in self.params)

    def format(self) -> str:
        return ",".join(str(b) for b in self.bands)


@dataclass(frozen=True)
class Twist:
    """The twist knot T_{2m}: a clasp plus 2m half-twists."""

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise InvariantViolation("twist parameter must be non-negative")

    def format(self) -> str:
        return str(2 * self.m)


Presentation = Union[PDCode, BraidWord, Pretzel, Twist]

KINDS = ("pd", "braid", "pretzel", "twist")

_PD_TOKEN = re.compile(r"\s*(?:X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]|Loop\[\s*(\d+)\s*\])")


def parse_pd(text: str) -> PDCode:
    crossings = []
    loops = 0
    pos = 0
    while True:
        m = _PD_TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                skip = len(text[pos:]) - len(text[pos:].lstrip())
                raise PresentationSyntaxError("expected X[a,b,c,d]", text, pos + skip)
            break
        if m.group(5) is not None:
            loops += int(m.group(5))
        else:
            crossings.append(tuple(int(m.group(k)) for k in range(1, 5)))
        pos = m.end()
    signs = _infer_signs(crossings)
    d = PDCode(tuple(crossings), signs, loops)
    _check(d)
    return d


def _infer_signs(crossings: list[Crossing]) -> tuple[int, ...]:
    """Recover over-strand directions from under-strands and arc numbering."""
    counts: dict[int, list[tuple[int, int]]] = {}
    for i, c in enumerate(crossings):
        if any(x <= 0 for x in c):
            raise InvariantViolation(f"arc labels must be positive in X{list(c)}")
        for p, x in enumerate(c):
            counts.setdefault(x, []).append((i, p))
    for x, occ in sorted(counts.items()):
        if len(occ) != 2:
            raise InvariantViolation(f"arc label {x} appears {len(occ)} times (expected 2)")
    # role[(i, p)] = True if the arc enters crossing i at slot p
    role: dict[tuple[int, int], bool] = {}
    stack = []

    def assign(slot, entering):
        if slot in role:
            if role[slot] != entering:
                raise InvariantViolation(
                    f"inconsistent orientation at crossing {slot[0]} (X{list(crossings[slot[0]])})"
                )
            return
        role[slot] = entering
        stack.append(slot)

    def propagate():
        while stack:
            i, p = stack.pop()
            x = crossings[i][p]
            for other in counts[x]:
                if other != (i, p):
                    assign(other, not role[(i, p)])
            if p in (1, 3):
                assign((i, 4 - p), not role[(i, p)])

    for i in range(len(crossings)):
        assign((i, 0), True)
        assign((i, 2), False)
    propagate()

    # Components that are over-strands everywhere: fall back on numbering.
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    for c in crossings:
        for u, w in ((c[0], c[2]), (c[1], c[3])):
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
    groups: dict[int, list[int]] = {}
    for x in counts:
        groups.setdefault(find(x), []).append(x)
    succ = {}
    for g in groups.values():
        lo, hi = min(g), max(g)
        for x in g:
            succ[x] = lo if x == hi else x + 1
    for i, c in enumerate(crossings):
        if (i, 1) in role:
            continue
        b, d = c[1], c[3]
        if succ.get(b) == d and succ.get(d) != b:
            b_in = True
        elif succ.get(d) == b and succ.get(b) != d:
            b_in = False
        else:
            b_in = b < d
        assign((i, 1), b_in)
        propagate()
    return tuple(-1 if role[(i, 1)] else 1 for i in range(len(crossings)))


def parse_braid(text: str) -> BraidWord:
    head, sep, tail = text.partition(":")
    if not sep:
        raise PresentationSyntaxError("expected '<strands>: <letters>'", text, 0)
    try:
        n = int(head.strip())
    except ValueError:
        raise PresentationSyntaxError("strand count is not an integer", text, 0) from None
    letters = []
    pos = len(head) + 1
    for m in re.finditer(r"\S+", tail):
        try:
            letters.append(int(m.group()))
        except ValueError:
            raise PresentationSyntaxError("braid letter is not an integer", text, pos + m.start()) from None
    return BraidWord(tuple(letters), n)


def parse_pretzel(text: str) -> Pretzel:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise PresentationSyntaxError("expected three comma-separated band counts", text)
    try:
        bands = [int(s) for s in parts]
    except ValueError:
        raise PresentationSyntaxError("band count is not an integer", text) from None
    for b in bands:
        if b % 2 == 0:
            raise InvariantViolation(f"pretzel band count {b} is even; only odd bands are supported")
    return Pretzel(*((b - 1) // 2 for b in bands))


def parse_twist(text: str) -> Twist:
    try:
        k = int(text.strip())
    except ValueError:
        raise PresentationSyntaxError("expected an even integer 2m", text, 0) from None
    if k < 0 or k % 2:
        raise InvariantViolation(f"twist count {k} must be an even non-negative integer")
    return Twist(k // 2)


def parse_presentation(text: str, kind: str) -> Presentation:
    parsers = {"pd": parse_pd, "braid": parse_braid, "pretzel": parse_pretzel, "twist": parse_twist}
    if kind not in parsers:
        raise KnotInputError(f"unknown presentation kind {kind!r}")
    return parsers[kind](text)


def format_presentation(p: Presentation) -> dict:
    if isinstance(p, PDCode):
        return {"kind": "pd", "text": p.format(), **p.to_json()}
    if isinstance(p, BraidWord):
        return {"kind": "braid", "text": p.format(), "strands": p.strand_count, "letters": list(p.letters)}
    if isinstance(p, Pretzel):
        return {"kind": "pretzel", "text": p.format(), "params": list(p.params)}
    return {"kind": "twist", "text": p.format(), "m": p.m}


def presentation_from_json(data) -> Presentation:
    if isinstance(data, str):
        data = json.loads(data)
    return parse_presentation(data["text"], data["kind"])


# --------------------------------------------------------------------------
# realising presentations as diagrams

# Ports listed counterclockwise; a crossing is drawn with its strands along the diagonals.
_PORTS = ("NE", "NW", "SW", "SE")
_OPP = {"NE": "SW", "SW": "NE", "NW": "SE", "SE": "NW"}


@dataclass
class _Planar:
    """Unoriented planar diagram: crossings with a geometric over-strand, plus
    port-to-port edges. ``slash[i]`` means the SW-NE strand is over."""

    slash: list[bool] = field(default_factory=list)
    edge: dict = field(default_factory=dict)
    loops: int = 0

    def add(self, slash_over: bool) -> int:
        self.slash.append(slash_over)
        return len(self.slash) - 1

    def connect(self, p, q):
        self.edge[p] = q
        self.edge[q] = p

    def to_pd(self) -> PDCode:
        label = {}
        entering = {}
        n = 0
        for i in range(len(self.slash)):
            # bottom ports first, so braid strands come out oriented upward
            for port in ("SW", "SE", "NE", "NW"):
                if (i, port) in entering:
                    continue
                cur = (i, port)
                while cur not in entering:
                    j, pt = cur
                    entering[cur] = True
                    exit_ = (j, _OPP[pt])
                    entering[exit_] = False
                    n += 1
                    label[exit_] = n
                    nxt = self.edge[exit_]
                    label[nxt] = n
                    cur = nxt
        crossings, signs = [], []
        for i, sl in enumerate(self.slash):
            under = ("SE", "NW") if sl else ("SW", "NE")
            u_in = under[0] if entering[(i, under[0])] else under[1]
            k = _PORTS.index(u_in)
            ports = [_PORTS[(k + t) % 4] for t in range(4)]
            crossings.append(tuple(label[(i, p)] for p in ports))
            signs.append(1 if entering[(i, ports[3])] else -1)
        return canonical(crossings, signs, self.loops)


def braid_closure(w: BraidWord) -> PDCode:
    """Trace closure, strands oriented upward; sigma_i is a positive crossing."""
    g = _Planar()
    first: dict[int, tuple] = {}
    last: dict[int, tuple] = {}

    def attach(pos, port):
        if pos in last:
            g.connect(last[pos], port)
        else:
            first[pos] = port

    for x in w.letters:
        i = abs(x)
        c = g.add(slash_over=x > 0)
        attach(i, (c, "SW"))
        attach(i + 1, (c, "SE"))
        last[i] = (c, "NW")
        last[i + 1] = (c, "NE")
    for pos in range(1, w.strand_count + 1):
        if pos in first:
            g.connect(last[pos], first[pos])
        else:
            g.loops += 1
    return g.to_pd()


def _band_diagram(bands: list[tuple[int, bool]]) -> tuple[PDCode, list[list[int]]]:
    """Vertical twist bands side by side, joined in a cycle at top and bottom
    (the pretzel layout). Each band is (crossing count >= 1, slash over?).

    Returns the code and, per band, its crossing indices from bottom to top.
    """
    g = _Planar()
    index = []
    for count, sl in bands:
        if count < 1:
            raise ValueError("every band needs at least one crossing")
        ids = [g.add(sl) for _ in range(count)]
        for lo, hi in zip(ids, ids[1:]):
            g.connect((lo, "NW"), (hi, "SW"))
            g.connect((lo, "NE"), (hi, "SE"))
        index.append(ids)
    k = len(bands)
    for t in range(k):
        u = (t + 1) % k
        g.connect((index[t][-1], "NE"), (index[u][-1], "NW"))
        g.connect((index[t][0], "SE"), (index[u][0], "SW"))
    return g.to_pd(), index


def pretzel_diagram(p: Pretzel) -> tuple[PDCode, list[list[int]]]:
    # With antiparallel band strands, backslash-over crossings are positive.
    return _band_diagram([(abs(b), b < 0) for b in p.bands])


def twist_diagram(t: Twist) -> tuple[PDCode, list[int]]:
    """T_{2m} drawn as the pretzel P(2m, 1, 1): a 2m-crossing twist band and a clasp.

    Returns the code and the twist band's crossing indices from bottom to top.
    """
    if t.m == 0:
        return PDCode(), []
    # Same handedness in all three bands: the twist crossings come out positive,
    # the clasp crossings negative.
    d, index = _band_diagram([(2 * t.m, False), (1, False), (1, False)])
    return d, index[0]


def to_pd(p: Presentation) -> PDCode:
    if isinstance(p, PDCode):
        return p
    if isinstance(p, BraidWord):
        return braid_closure(p)
    if isinstance(p, Pretzel):
        return pretzel_diagram(p)[0]
    if isinstance(p, Twist):
        return twist_diagram(p)[0]
    raise TypeError(f"not a presentation: {p!r}")

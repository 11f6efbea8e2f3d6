"""Exact sparse Laurent polynomials over the integers.

Two concrete types live here:

* ``LaurentPoly`` -- one variable (``v`` by default), exponent -> coefficient.
* ``HomflyValue`` -- two variables ``v`` and ``z``, (v_exp, z_exp) -> coefficient.

Both are immutable, canonical (no stored zero coefficients) and hashable, so
equality is equality of term maps. Coefficients are Python ints, hence
arbitrary precision.
"""
from __future__ import annotations

import json
import re
from collections.abc import Mapping
from math import isqrt
from typing import Optional, Union


class PolySyntaxError(ValueError):
    """Malformed polynomial text. ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class _Sparse:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                key = self._norm_key(key)
                acc[key] = acc.get(key, 0) + int(coeff)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash = None

    @staticmethod
    def _norm_key(key):
        raise NotImplementedError

    @staticmethod
    def _add_keys(k1, k2):
        raise NotImplementedError

    @classmethod
    def _from_clean(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        add = self._add_keys
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = add(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return self._from_clean({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift")
        result = self.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


class LaurentPoly(_Sparse):
    """Sparse Laurent polynomial in one variable with integer coefficients.

    >>> p = LaurentPoly({2: 2, 4: -1})
    >>> str(p)
    '2v^2 - v^4'
    >>> p.eval_one(), p.deriv_one()
    (1, 0)
    """

    __slots__ = ()

    @staticmethod
    def _norm_key(key):
        return int(key)

    @staticmethod
    def _add_keys(k1, k2):
        return k1 + k2

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v**k``."""
        return self._from_clean({e + k: c for e, c in self._terms.items()})

    def eval_one(self) -> int:
        return sum(self._terms.values())

    def deriv_one(self) -> int:
        return sum(e * c for e, c in self._terms.items())

    def bounds(self) -> tuple[int, int, int, int]:
        """Return ``(min_exp, max_exp, min_coeff, max_coeff)``."""
        if not self._terms:
            raise ValueError("no support: the zero polynomial has no extreme terms")
        lo, hi = min(self._terms), max(self._terms)
        return lo, hi, self._terms[lo], self._terms[hi]

    def invert(self) -> "LaurentPoly":
        """Substitute ``v -> 1/v``."""
        return self._from_clean({-e: c for e, c in self._terms.items()})

    def even_only(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def divide_exact(self, den: "LaurentPoly") -> Optional["LaurentPoly"]:
        return divide_exact(self, den)

    def sqrt_exact(self) -> Optional["LaurentPoly"]:
        return sqrt_exact(self)

    def format(self, var: str = "v") -> str:
        return format_laurent(self, var)

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def to_json(self) -> list:
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((int(e), int(c)) for e, c in data)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return parse_laurent(text)


def _poly_divmod_low(num: list[int], den: list[int]) -> Optional[list[int]]:
    # Dense division from the constant term up; den[0] != 0.
    n, m = len(num), len(den)
    if n < m:
        return None if any(num) else []
    rem = list(num)
    q = [0] * (n - m + 1)
    d0 = den[0]
    for i in range(n - m + 1):
        c = rem[i]
        if c == 0:
            continue
        if c % d0:
            return None
        t = c // d0
        q[i] = t
        for j in range(m):
            rem[i + j] -= t * den[j]
    if any(rem[n - m + 1:]):
        return None
    return q


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> Optional[LaurentPoly]:
    """Return ``q`` with ``q * den == num`` over Z[v, 1/v], or None."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly()
    nlo, nhi, _, _ = num.bounds()
    dlo, dhi, _, _ = den.bounds()
    # Both normalised to nonzero constant term, the quotient is an honest polynomial.
    ndense = [num.coeff(nlo + i) for i in range(nhi - nlo + 1)]
    ddense = [den.coeff(dlo + i) for i in range(dhi - dlo + 1)]
    q = _poly_divmod_low(ndense, ddense)
    if q is None:
        return None
    return LaurentPoly({i + nlo - dlo: c for i, c in enumerate(q) if c})


def sqrt_exact(a: LaurentPoly) -> Optional[LaurentPoly]:
    """Square root with positive leading coefficient, or None if ``a`` is not a square.

    Coefficients are peeled off from the top degree down, then the candidate is
    re-squared to confirm.
    """
    if a.is_zero():
        return LaurentPoly()
    lo, hi, clo, chi = a.bounds()
    if lo % 2 or hi % 2 or chi <= 0 or clo <= 0:
        return None
    lead = isqrt(chi)
    if lead * lead != chi:
        return None
    tail = isqrt(clo)
    if tail * tail != clo:
        return None
    top, bottom = hi // 2, lo // 2
    f = {top: lead}
    rem = dict(a.terms)
    rem.pop(hi)
    two_lead = 2 * lead
    for k in range(top - 1, bottom - 1, -1):
        r = rem.get(top + k, 0)
        if r % two_lead:
            return None
        fk = r // two_lead
        if fk:
            # subtract 2*lead*fk*v^(top+k) + cross terms with already-known coefficients
            for e, c in f.items():
                key = e + k
                rem[key] = rem.get(key, 0) - 2 * c * fk
            key = 2 * k
            rem[key] = rem.get(key, 0) - fk * fk
            f[k] = fk
    root = LaurentPoly(f)
    return root if root * root == a else None


# --------------------------------------------------------------------------
# text format

_WS = re.compile(r"\s*")
_INT = re.compile(r"\d+")


def parse_laurent(text: str, var: str = "v") -> LaurentPoly:
    """Parse ``"2v^2 - v^4"``, ``"v^-2 - 1 + v^2"``, ``"3*v^5"``.

    The first term may carry a sign; every later term is introduced by exactly
    one ``+`` or ``-``.
    """
    pos = 0
    n = len(text)

    def skip(p):
        return _WS.match(text, p).end()

    def integer(p, what):
        p = skip(p)
        sign = 1
        if p < n and text[p] in "+-":
            sign = -1 if text[p] == "-" else 1
            p = skip(p + 1)
        m = _INT.match(text, p)
        if not m:
            raise PolySyntaxError(f"expected {what}", text, p)
        return sign * int(m.group()), m.end()

    def term(p, sign):
        p = skip(p)
        coeff = None
        m = _INT.match(text, p)
        if m:
            coeff = int(m.group())
            p = skip(m.end())
            if p < n and text[p] == "*":
                p = skip(p + 1)
                if not text.startswith(var, p):
                    raise PolySyntaxError(f"expected {var!r} after '*'", text, p)
        if text.startswith(var, p):
            p = skip(p + len(var))
            if p >= n or text[p] != "^":
                raise PolySyntaxError("expected '^'", text, p)
            exp, p = integer(p + 1, "exponent")
            return (exp, sign * (1 if coeff is None else coeff)), p
        if coeff is None:
            raise PolySyntaxError("expected a term", text, p)
        return (0, sign * coeff), p

    pos = skip(0)
    if pos >= n:
        raise PolySyntaxError("empty polynomial", text, pos)
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    terms = []
    t, pos = term(pos, sign)
    terms.append(t)
    while True:
        pos = skip(pos)
        if pos >= n:
            break
        if text[pos] not in "+-":
            raise PolySyntaxError("expected '+' or '-'", text, pos)
        sign = -1 if text[pos] == "-" else 1
        t, pos = term(pos + 1, sign)
        terms.append(t)
    return LaurentPoly(terms)


def format_laurent(a: LaurentPoly, var: str = "v") -> str:
    if a.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(a.items()):
        mag = abs(c)
        body = str(mag) if e == 0 else (f"{var}^{e}" if mag == 1 else f"{mag}{var}^{e}")
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# --------------------------------------------------------------------------


class HomflyValue(_Sparse):
    """Sparse Laurent polynomial in ``v`` and ``z``; keys are ``(v_exp, z_exp)``."""

    __slots__ = ()

    @staticmethod
    def _norm_key(key):
        ve, ze = key
        return int(ve), int(ze)

    @staticmethod
    def _add_keys(k1, k2):
        return k1[0] + k2[0], k1[1] + k2[1]

    @classmethod
    def constant(cls, c: int) -> "HomflyValue":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, v_exp: int, z_exp: int, coeff: int = 1) -> "HomflyValue":
        return cls({(v_exp, z_exp): coeff})

    def scale_monomial(self, v_exp: int, z_exp: int, coeff: int = 1) -> "HomflyValue":
        if coeff == 0:
            return HomflyValue()
        return self._from_clean(
            {(a + v_exp, b + z_exp): c * coeff for (a, b), c in self._terms.items()}
        )

    def mirror(self) -> "HomflyValue":
        """HOMFLY of the mirror image: ``v -> 1/v, z -> -z``."""
        return self._from_clean({(-a, b): -c if b % 2 else c for (a, b), c in self._terms.items()})

    def by_z(self) -> dict[int, LaurentPoly]:
        """Group into ``{z_exp: coefficient polynomial in v}``."""
        groups: dict[int, dict[int, int]] = {}
        for (a, b), c in self._terms.items():
            groups.setdefault(b, {})[a] = c
        return {b: LaurentPoly(g) for b, g in sorted(groups.items())}

    def at_v_one(self) -> LaurentPoly:
        """Specialise ``v = 1``; the result is a Laurent polynomial in ``z``."""
        return LaurentPoly({b: p.eval_one() for b, p in self.by_z().items()})

    def format(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        groups = self.by_z()
        if list(groups) == [0]:
            return format_laurent(groups[0])
        for b, p in groups.items():
            s = f"({format_laurent(p)})"
            if b:
                s += f" z^{b}"
            chunks.append(s)
        return " + ".join(chunks)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"HomflyValue({self.format()!r})"

    def to_json(self) -> list:
        return [[a, b, c] for (a, b), c in self.items()]

    @classmethod
    def from_json(cls, data) -> "HomflyValue":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(((int(a), int(b)), int(c)) for a, b, c in data)


PolyLike = Union[LaurentPoly, int]

V2 = LaurentPoly.monomial(2)
ONE_MINUS_V2 = LaurentPoly({0: 1, 2: -1})

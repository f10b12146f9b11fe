"""Sparse Laurent polynomials with integer coefficients and half-integer exponents.

Exponents are stored doubled: the key ``k`` stands for ``x**(k/2)``.  This keeps
everything in exact integer arithmetic (Python ints never overflow).
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class HalfLaurent:
    """Immutable sparse Laurent polynomial in one variable.

    ``terms`` maps the doubled exponent to a nonzero integer coefficient.
    The variable name only affects rendering; equality ignores it.
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[int(k)] = int(c)
        self._terms = clean
        self.var = var
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int, var: str = "t") -> "HalfLaurent":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, coef: int, exp2: int, var: str = "t") -> "HalfLaurent":
        """``coef * var**(exp2/2)``."""
        return cls({exp2: coef}, var)

    @classmethod
    def zero(cls, var: str = "t") -> "HalfLaurent":
        return cls({}, var)

    @classmethod
    def from_pairs(cls, pairs: Iterable, var: str = "t") -> "HalfLaurent":
        """Build from ``[[exp2, coef], ...]`` pairs (the JSON form)."""
        acc: dict[int, int] = {}
        for k, c in pairs:
            acc[int(k)] = acc.get(int(k), 0) + int(c)
        return cls(acc, var)

    # -- basic access -----------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exp2: int) -> int:
        return self._terms.get(exp2, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def max_exp2(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def min_exp2(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def degree(self) -> int:
        """Top exponent of an integral-exponent polynomial (e.g. in ``z``)."""
        top = self.max_exp2()
        if top % 2:
            raise ValueError("degree() requires integer exponents")
        return top // 2

    def span2(self) -> int:
        """Doubled breadth: ``2 * (max exponent - min exponent)``."""
        return self.max_exp2() - self.min_exp2()

    def is_integral(self) -> bool:
        return all(k % 2 == 0 for k in self._terms)

    def with_var(self, var: str) -> "HalfLaurent":
        return HalfLaurent(self._terms, var)

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "HalfLaurent":
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, int):
            return HalfLaurent({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return HalfLaurent(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent({k: -c for k, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfLaurent({k: c * other for k, c in self._terms.items()}, self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return HalfLaurent(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((k, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial is not a unit")
            m = -n
            return HalfLaurent({-k * m: c**m}, self.var)
        result = HalfLaurent({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exp2: int) -> "HalfLaurent":
        """Multiply by ``var**(exp2/2)``."""
        return HalfLaurent({k + exp2: c for k, c in self._terms.items()}, self.var)

    def invert(self) -> "HalfLaurent":
        """The substitution ``var -> 1/var``."""
        return HalfLaurent({-k: c for k, c in self._terms.items()}, self.var)

    def scale_exponents(self, factor: int) -> "HalfLaurent":
        return HalfLaurent({k * factor: c for k, c in self._terms.items()}, self.var)

    def divexact(self, other: "HalfLaurent") -> "HalfLaurent":
        """Exact quotient ``self / other``; raises if the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return HalfLaurent({}, self.var)
        lead_k = other.max_exp2()
        lead_c = other._terms[lead_k]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        low = other.min_exp2()
        while rem:
            k = max(rem)
            c = rem[k]
            if c % lead_c or k - min(rem) < lead_k - low:
                raise ValueError("inexact division")
            q = c // lead_c
            qk = k - lead_k
            quot[qk] = q
            for ok, oc in other._terms.items():
                nk = qk + ok
                v = rem.get(nk, 0) - q * oc
                if v:
                    rem[nk] = v
                else:
                    rem.pop(nk, None)
        return HalfLaurent(quot, self.var)

    # -- comparisons -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = HalfLaurent({0: other})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering -------------------------------------------------------
    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"HalfLaurent({render(self)!r})"

    def to_pairs(self) -> list[list[int]]:
        """``[[exp2, coef], ...]`` in decreasing exponent order."""
        return [[k, c] for k, c in self.items()]


def _exp_text(k: int) -> str:
    if k % 2 == 0:
        return str(k // 2)
    return f"{k}/2"


def render(p: HalfLaurent) -> str:
    """Canonical text: decreasing exponents, e.g. ``-t^3 + t^{5/2} + 1``."""
    if p.is_zero():
        return "0"
    pieces = []
    for k, c in p.items():
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            if k == 2:
                mono = p.var
            else:
                e = _exp_text(k)
                mono = f"{p.var}^{e}" if (k % 2 == 0 and k > 0) else f"{p.var}^{{{e}}}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:([a-zA-Z])(?:\^(?:\{(-?\d+)(?:/(2))?\}|(\d+)))?)?")


def parse(text: str, var: str = "t") -> HalfLaurent:
    """Inverse of :func:`render`."""
    s = text.replace(" ", "")
    if s == "0":
        return HalfLaurent({}, var)
    out: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, digits, name, braced, half, plain = m.groups()
        if not digits and not name:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        if name is None:
            k = 0
        else:
            var = name
            if braced is not None:
                k = int(braced) if half else 2 * int(braced)
            elif plain is not None:
                k = 2 * int(plain)
            else:
                k = 2
        out[k] = out.get(k, 0) + c
        pos = m.end()
    return HalfLaurent(out, var)


# -- the operations used by the invariant modules -------------------------

def add(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    return a + b


def mul(a: HalfLaurent, b: HalfLaurent) -> HalfLaurent:
    return a * b


Z = HalfLaurent({2: 1}, "z")
ONE_Z = HalfLaurent({0: 1}, "z")
T = HalfLaurent({2: 1}, "t")
_ROOT_DIFF = HalfLaurent({1: 1, -1: -1}, "t")  # t^{1/2} - t^{-1/2}


def substitute_z(p: HalfLaurent) -> HalfLaurent:
    """Evaluate a z-polynomial at ``z = t^{1/2} - t^{-1/2}``."""
    if not p.is_integral():
        raise ValueError("substitute_z expects integer exponents in z")
    if p.is_zero():
        return HalfLaurent({}, "t")
    if min(p.terms) < 0:
        raise ValueError("substitute_z expects a polynomial in z (no negative powers)")
    # Horner from the top degree down.
    top = p.degree()
    acc = HalfLaurent({}, "t")
    for d in range(top, -1, -1):
        acc = acc * _ROOT_DIFF + p.coeff(2 * d)
    return acc


def span(p: HalfLaurent):
    """Breadth ``max exponent - min exponent``; an int when integral, else a float x.5."""
    if p.is_zero():
        raise ValueError("span of the zero polynomial is undefined")
    s2 = p.span2()
    return s2 // 2 if s2 % 2 == 0 else s2 / 2


def equal_up_to_unit(a: HalfLaurent, b: HalfLaurent) -> bool:
    """True iff ``a = ±t^{k/2} b`` for some integer k."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    shift = a.min_exp2() - b.min_exp2()
    bs = b.shift(shift)
    return a == bs or a == -bs


def symmetrize(p: HalfLaurent) -> HalfLaurent:
    """Shift so the exponents are centred at zero (sign untouched)."""
    if p.is_zero():
        return p
    total = p.max_exp2() + p.min_exp2()
    if total % 2:
        raise ValueError("polynomial cannot be centred with half-integer shifts")
    return p.shift(-total // 2)

"""Exact arithmetic in the field Q(s) of rational functions.

Rationals are :class:`fractions.Fraction`.  A polynomial is a tuple of
Fractions indexed by the power of ``s`` with no trailing zeros, so the zero
polynomial is ``()``.  :class:`Scalar` is a reduced quotient of two such
polynomials with a monic denominator, which makes structural equality
coincide with equality in the field.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence, Tuple, Union

Poly = Tuple[Fraction, ...]

ZERO_POLY: Poly = ()
ONE_POLY: Poly = (Fraction(1),)


class ScalarError(ValueError):
    """Raised on division by zero or malformed scalar text."""


# -- polynomial helpers ----------------------------------------------------

def _trim(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(Fraction(x) for x in c)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO_POLY
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_scale(a: Poly, c: Fraction) -> Poly:
    if not c:
        return ZERO_POLY
    return tuple(x * c for x in a)


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Long division over Q; ``b`` must be nonzero."""
    return _divmod(_trim(a), _trim(b))


def _divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if not b:
        raise ScalarError("polynomial division by zero")
    if len(a) < len(b):
        return ZERO_POLY, a
    rem = list(a)
    lead = b[-1]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return _trim(q), _trim(rem[: len(b) - 1])


def poly_monic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    return poly_scale(a, 1 / a[-1])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return poly_monic(a)


# -- the field element ------------------------------------------------------

Coercible = Union["Scalar", int, Fraction]


class Scalar:
    """Element of Q(s) kept in canonical form.

    >>> Scalar.from_text("(2*s+2)/(4*s+4)")
    Scalar('1/2')
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Sequence = ZERO_POLY, den: Sequence = ONE_POLY, *, _canonical: bool = False):
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(_trim(num), _trim(den))
        self._hash = None

    # construction
    @classmethod
    def coerce(cls, x: Coercible) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            f = Fraction(x)
            return cls((f,) if f else ZERO_POLY, ONE_POLY, _canonical=True)
        if isinstance(x, str):
            return cls.from_text(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    @classmethod
    def s(cls) -> "Scalar":
        return cls((Fraction(0), Fraction(1)), ONE_POLY, _canonical=True)

    @classmethod
    def from_text(cls, text: str) -> "Scalar":
        return parse_scalar(text)

    # predicates
    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ScalarError(f"{self} is not a constant")
        return self.num[0] if self.num else Fraction(0)

    # arithmetic
    def __add__(self, other: Coercible) -> "Scalar":
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if len(self.den) == 1:
                return Scalar(poly_add(self.num, o.num), ONE_POLY, _canonical=True)
            return Scalar(poly_add(self.num, o.num), self.den)
        return Scalar(
            poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den)),
            poly_mul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(poly_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other: Coercible) -> "Scalar":
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other: Coercible) -> "Scalar":
        return _coerce(other) - self

    def __mul__(self, other: Coercible) -> "Scalar":
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return ZERO
        if len(self.den) == 1 and len(o.den) == 1:
            if len(self.num) == 1:
                return Scalar(poly_scale(o.num, self.num[0]), ONE_POLY, _canonical=True)
            if len(o.num) == 1:
                return Scalar(poly_scale(self.num, o.num[0]), ONE_POLY, _canonical=True)
            return Scalar(poly_mul(self.num, o.num), ONE_POLY, _canonical=True)
        return Scalar(poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ScalarError("division by zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other: Coercible) -> "Scalar":
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ScalarError("division by zero")
        if o.is_constant():
            return Scalar(poly_scale(self.num, 1 / o.num[0]), self.den, _canonical=True)
        return self * o.inverse()

    def __rtruediv__(self, other: Coercible) -> "Scalar":
        return _coerce(other) / self

    # comparison
    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.coerce(x)
    return NotImplemented


def _normalize(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if not den:
        raise ScalarError("zero denominator")
    if not num:
        return ZERO_POLY, ONE_POLY
    if len(den) > 1:
        g = poly_gcd(num, den)
        if len(g) > 1:
            num = _divmod(num, g)[0]
            den = _divmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = poly_scale(num, 1 / lead)
        den = poly_scale(den, 1 / lead)
    return num, den


def scalar_normalize(num: Sequence, den: Sequence) -> Scalar:
    """Canonical Scalar for num/den given as coefficient sequences (low power first)."""
    return Scalar(num, den)


ZERO = Scalar(ZERO_POLY, ONE_POLY, _canonical=True)
ONE = Scalar(ONE_POLY, ONE_POLY, _canonical=True)
S = Scalar.s()


# -- text form --------------------------------------------------------------

def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(c: Fraction, k: int) -> str:
    if k == 0:
        return _format_rational(c)
    power = "s" if k == 1 else f"s^{k}"
    return power if c == 1 else f"{_format_rational(c)}*{power}"


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    out = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        if not out:
            out.append(_format_monomial(c, k))
        elif c < 0:
            out.append("-" + _format_monomial(-c, k))
        else:
            out.append("+" + _format_monomial(c, k))
    return "".join(out)


def format_scalar(x: Scalar) -> str:
    if x.den == ONE_POLY:
        return format_poly(x.num)
    return f"({format_poly(x.num)})/({format_poly(x.den)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        for m in re.finditer(r"\s*(?:(\d+)|([-+*/^()s]))", text):
            if m.start() != pos:
                break
            self.toks.append((m.group(1) or m.group(2), m.end(0) - len(m.group(1) or m.group(2))))
            pos = m.end()
        rest = text[pos:]
        if rest.strip():
            raise ScalarError(f"unexpected character {rest.strip()[0]!r} at position {len(text) - len(rest.lstrip())}")
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def take(self, expected=None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise ScalarError(f"expected {want!r} at position {self.pos()} in {self.text!r}")
        self.i += 1
        return tok

    def nat(self) -> int:
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise ScalarError(f"expected digits at position {self.pos()} in {self.text!r}")
        self.i += 1
        return int(tok)

    def rational(self) -> Fraction:
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        n = self.nat()
        d = 1
        if self.peek() == "/" and self.i + 1 < len(self.toks) and self.toks[self.i + 1][0].isdigit():
            self.take()
            p = self.pos()
            d = self.nat()
            if d == 0:
                raise ScalarError(f"zero denominator at position {p} in {self.text!r}")
        r = Fraction(n, d)
        return -r if neg else r

    def power(self) -> int:
        self.take("s")
        if self.peek() == "^":
            self.take()
            return self.nat()
        return 1

    def monomial(self) -> Poly:
        tok = self.peek()
        if tok == "s":
            c, k = Fraction(1), self.power()
        elif tok == "-" and self.i + 1 < len(self.toks) and self.toks[self.i + 1][0] == "s":
            self.take()
            c, k = Fraction(-1), self.power()
        else:
            c = self.rational()
            k = 0
            if self.peek() == "*":
                self.take()
                k = self.power()
        return _trim([Fraction(0)] * k + [c])

    def poly(self) -> Poly:
        p = self.monomial()
        while self.peek() in ("+", "-"):
            sign = self.take()
            m = self.monomial()
            p = poly_add(p, m) if sign == "+" else poly_sub(p, m)
        return p

    def scalar(self) -> Scalar:
        if self.peek() == "(":
            self.take("(")
            num = self.poly()
            self.take(")")
            self.take("/")
            self.take("(")
            p = self.pos()
            den = self.poly()
            self.take(")")
            if not den:
                raise ScalarError(f"zero denominator at position {p} in {self.text!r}")
            out = Scalar(num, den)
        else:
            out = Scalar(self.poly(), ONE_POLY)
        if self.peek() is not None:
            raise ScalarError(f"trailing input at position {self.pos()} in {self.text!r}")
        return out


def parse_scalar(text: str) -> Scalar:
    """Parse the textual scalar grammar, e.g. ``"3/4"``, ``"s^2+1/2"``, ``"(s+1)/(s)"``."""
    if not isinstance(text, str):
        raise ScalarError(f"expected text, got {type(text).__name__}")
    return _Parser(text).scalar()

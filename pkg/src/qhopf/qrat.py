"""Exact rational functions in the deformation parameter q.

A :class:`QRat` is a reduced fraction ``num/den`` of univariate polynomials
with rational coefficients.  The denominator is kept monic and coprime to the
numerator, so equal values have identical representations and hash alike.

Polynomials are tuples of :class:`fractions.Fraction`, lowest degree first,
with no trailing zeros; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

Poly = tuple

_ONE = (Fraction(1),)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, r):
    if len(p) < len(r):
        p, r = r, p
    out = list(p)
    for i, c in enumerate(r):
        out[i] += c
    return _trim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _pscale(p, c):
    if c == 0:
        return ()
    return tuple(x * c for x in p)


def _pmul(p, r):
    if not p or not r:
        return ()
    if len(p) == 1:
        return _pscale(r, p[0])
    if len(r) == 1:
        return _pscale(p, r[0])
    out = [Fraction(0)] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(r):
            out[i + j] += a * b
    return _trim(out)


def _pdivmod(p, r):
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    lead = r[-1]
    dr = len(r) - 1
    if len(p) <= dr:
        return (), tuple(p)
    quot = [Fraction(0)] * (len(p) - dr)
    for k in range(len(p) - 1, dr - 1, -1):
        c = p[k] / lead
        if c == 0:
            continue
        quot[k - dr] = c
        for j in range(dr + 1):
            p[k - dr + j] -= c * r[j]
    return _trim(quot), _trim(p[:dr])


def _monic(p):
    lead = p[-1]
    if lead == 1:
        return p
    return tuple(c / lead for c in p)


def _low_order(p):
    for i, c in enumerate(p):
        if c != 0:
            return i
    return len(p)


def _is_monomial(p):
    return all(c == 0 for c in p[:-1])


def _pgcd(p, r):
    """Monic gcd of two polynomials (gcd(0, 0) is 1)."""
    if not p and not r:
        return _ONE
    if not p:
        return _monic(r)
    if not r:
        return _monic(p)
    # q^k is the common case for Laurent-type scalars
    if _is_monomial(p):
        k = min(len(p) - 1, _low_order(r))
        return tuple([Fraction(0)] * k + [Fraction(1)])
    if _is_monomial(r):
        k = min(len(r) - 1, _low_order(p))
        return tuple([Fraction(0)] * k + [Fraction(1)])
    while r:
        p, r = r, _pdivmod(p, r)[1]
    return _monic(p)


def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _as_poly(value):
    if isinstance(value, tuple):
        return _trim(Fraction(c) for c in value)
    if isinstance(value, (int, Rational)):
        return _trim((Fraction(value),))
    raise TypeError(f"cannot build a polynomial from {value!r}")


def poly_text(p) -> str:
    """Render a polynomial as ``1 - q^2`` (ascending degree)."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if mag == 1 else f"{mag} {mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class QRat:
    """An element of Q(q), stored as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _reduced=False):
        num = _as_poly(num)
        den = _as_poly(den)
        if not _reduced:
            if not den:
                raise ZeroDivisionError("QRat with zero denominator")
            if not num:
                den = _ONE
            elif den != _ONE:
                g = _pgcd(num, den)
                if g != _ONE:
                    num = _pdivmod(num, g)[0]
                    den = _pdivmod(den, g)[0]
                lead = den[-1]
                if lead != 1:
                    num = _pscale(num, 1 / lead)
                    den = _pscale(den, 1 / lead)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def q(cls, power: int = 1) -> "QRat":
        if power >= 0:
            return cls((0,) * power + (1,), _ONE, _reduced=True)
        return cls(_ONE, (0,) * (-power) + (1,), _reduced=True)

    @classmethod
    def coerce(cls, value) -> "QRat":
        if isinstance(value, QRat):
            return value
        return cls(value)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == _ONE

    def laurent_monomial(self):
        """Return ``(c, k)`` when the value is ``c q^k``, else None."""
        if not self.num or not _is_monomial(self.num) or not _is_monomial(self.den):
            return None
        return self.num[-1], (len(self.num) - 1) - (len(self.den) - 1)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return QRat(_padd(self.num, other.num), self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return QRat(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QRat(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return QRat()
        if self.den == _ONE and other.den == _ONE:
            return QRat(_pmul(self.num, other.num), _ONE, _reduced=True)
        return QRat(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QRat(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -- evaluation -------------------------------------------------------
    def evaluate(self, x):
        """Value at ``q = x``; exact for Fraction input, float otherwise."""
        if isinstance(x, (int, Fraction)):
            d = _peval(self.den, Fraction(x))
            if d == 0:
                raise ZeroDivisionError(f"pole at q = {x}")
            return _peval(self.num, Fraction(x)) / d
        x = float(x)
        num = _peval(tuple(float(c) for c in self.num), x) if self.num else 0.0
        return num / _peval(tuple(float(c) for c in self.den), x)

    # -- text ---------------------------------------------------------------
    def text(self) -> str:
        """Canonical text: ``q^-1``, ``-2 q``, ``(1 - q^2)``, ``(1)/(1 + q)``."""
        if not self.num:
            return "0"
        mono = self.laurent_monomial()
        if mono is not None:
            c, k = mono
            if k == 0:
                return str(c)
            qk = "q" if k == 1 else f"q^{k}"
            if c == 1:
                return qk
            if c == -1:
                return "-" + qk
            return f"{c} {qk}"
        if self.den == _ONE:
            return f"({poly_text(self.num)})"
        return f"({poly_text(self.num)})/({poly_text(self.den)})"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"QRat({self.text()!r})"


def _coerce_or_none(value):
    if isinstance(value, QRat):
        return value
    if isinstance(value, (int, Rational)):
        return QRat(value)
    return None


ZERO = QRat(0)
ONE = QRat(1)
Q = QRat.q(1)
Q_INV = QRat.q(-1)

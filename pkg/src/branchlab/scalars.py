"""Exact Gaussian-rational scalars.

Every matrix entry in this package is a ``GQ``: a number a + b*i with a, b
arbitrary-precision rationals (gmpy2.mpq).  Arithmetic is exact and equality
is decidable, which is what makes the identity checks in the rest of the
package meaningful.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import ParseError

_MPQ = type(mpq(0))
_Q0 = mpq(0)
_Q1 = mpq(1)


def _q(x):
    if isinstance(x, _MPQ):
        return x
    return mpq(x)


class GQ:
    """A Gaussian rational a + b*i.  Immutable by convention."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _q(re)
        self.im = _q(im)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mk(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mk(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mk(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0:
            if d == 0:
                return _mk(a * c, _Q0)
            return _mk(a * c, a * d)
        if d == 0:
            return _mk(a * c, b * c)
        return _mk(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c, d = other.re, other.im
        if d == 0:
            if c == 0:
                raise ZeroDivisionError("division by zero scalar")
            return _mk(self.re / c, self.im / c)
        n = c * c + d * d
        a, b = self.re, self.im
        return _mk((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- structure --------------------------------------------------------

    def conjugate(self):
        return _mk(self.re, -self.im)

    def is_rational(self):
        return self.im == 0

    def is_integer(self):
        return self.im == 0 and self.re.denominator == 1

    def is_gaussian_integer(self):
        return self.re.denominator == 1 and self.im.denominator == 1

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        """Deterministic total order (real part first)."""
        return (self.re, self.im)

    # -- text -------------------------------------------------------------

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%si" % self.im
        if self.im < 0:
            return "%s-%si" % (self.re, -self.im)
        return "%s+%si" % (self.re, self.im)

    def __repr__(self):
        return "GQ(%s)" % self

    @staticmethod
    def parse(text):
        """Parse the serialization produced by str(): "p/q", "bi", "a+bi"."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ParseError("empty scalar literal")
        try:
            if not s.endswith("i"):
                return GQ(mpq(s))
            body = s[:-1]
            # split real part from imaginary coefficient at the last +/-
            # that is not a leading sign and not inside a fraction
            for k in range(len(body) - 1, 0, -1):
                if body[k] in "+-" and body[k - 1] not in "+-/":
                    re_part = body[:k]
                    im_part = body[k:]
                    break
            else:
                re_part, im_part = "0", body
            if im_part in ("", "+"):
                im_part = "1"
            elif im_part == "-":
                im_part = "-1"
            elif im_part.startswith("+"):
                im_part = im_part[1:]
            return GQ(mpq(re_part), mpq(im_part))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError("bad scalar literal %r" % text) from exc


def _mk(re, im):
    """Internal fast constructor; arguments must already be mpq."""
    out = GQ.__new__(GQ)
    out.re = re
    out.im = im
    return out


def _coerce(x):
    if type(x) is GQ:
        return x
    if isinstance(x, (int, _MPQ)):
        return _mk(mpq(x), _Q0)
    if isinstance(x, GQ):
        return x
    return NotImplemented


def qq(re=0, im=0):
    """Shorthand constructor."""
    if isinstance(re, GQ) and im == 0:
        return re
    return GQ(re, im)


ZERO = GQ(0)
ONE = GQ(1)
IMAG = GQ(0, 1)

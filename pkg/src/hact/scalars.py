"""Exact rational-function arithmetic in one parameter q.

Coefficients of all algebras in this package live in the field Q(q).  A
Scalar is a reduced fraction num/den of integer-coefficient polynomials
in q.  Reduction keeps gcd(num, den) = 1, strips the common integer
content, and normalizes the sign so the leading coefficient of den is
positive.  Equality and hashing are therefore structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# A polynomial is a tuple of ints, constant term first, no trailing zeros.
# The zero polynomial is the empty tuple.

Poly = tuple


def _trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _pscale(a: Poly, n: int) -> Poly:
    if n == 0:
        return ()
    return tuple(c * n for c in a)


def _content(a: Poly) -> int:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g


def _primitive(a: Poly) -> Poly:
    g = _content(a)
    if g <= 1:
        return a
    return tuple(c // g for c in a)


def _prem(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of a by b; b must be nonzero."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(_trim(r)) - 1 >= db and _trim(r):
        r = list(_trim(r))
        dr = len(r) - 1
        if dr < db:
            break
        lr = r[-1]
        # scale r by lb, then cancel the top with a shifted multiple of b
        r = [c * lb for c in r]
        shift = dr - db
        for i, c in enumerate(b):
            r[shift + i] -= lr * c
        r = list(_trim(r))
        if not r:
            break
    return _trim(r)


def _pgcd(a: Poly, b: Poly) -> Poly:
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _primitive(_prem(a, b))
    if a and a[-1] < 0:
        a = _pneg(a)
    return a if a else ()


def _pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Exact polynomial division; raises if b does not divide a."""
    if not a:
        return ()
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for k in range(len(out) - 1, -1, -1):
        top = r[k + len(b) - 1]
        if top % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        out[k] = top // lb
        for i, c in enumerate(b):
            r[k + i] -= out[k] * c
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(out)


@dataclass(frozen=True)
class Scalar:
    """A reduced fraction of integer polynomials in q."""

    num: Poly
    den: Poly

    @staticmethod
    def _make(num: Poly, den: Poly) -> "Scalar":
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            return ZERO
        g = _pgcd(num, den)
        if len(g) > 1 or (g and g[0] != 1):
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        cn, cd = _content(num), _content(den)
        c = gcd(cn, cd)
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        return Scalar(num, den)

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "Scalar":
        if n == 0:
            return ZERO
        return Scalar((n,), (1,))

    @staticmethod
    def rational(p: int, r: int) -> "Scalar":
        return Scalar._make((p,), (r,))

    @staticmethod
    def from_fraction(f: Fraction) -> "Scalar":
        return Scalar._make((f.numerator,), (f.denominator,))

    @staticmethod
    def q_pow(n: int) -> "Scalar":
        if n >= 0:
            return Scalar(_trim([0] * n + [1]), (1,))
        return Scalar((1,), _trim([0] * (-n) + [1]))

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar._make(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar(_pneg(self.num), self.den) if self.num else ZERO

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not self.num or not other.num:
            return ZERO
        return Scalar._make(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar._make(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def inverse(self) -> "Scalar":
        return ONE / self

    def pow_int(self, n: int) -> "Scalar":
        out, base, k = ONE, (self if n >= 0 else self.inverse()), abs(n)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_zero(self) -> bool:
        return not self.num

    # -- display -----------------------------------------------------

    def _laurent_terms(self):
        """If den is a monomial c*q^k, yield (exponent, Fraction) pairs."""
        nz = [i for i, c in enumerate(self.den) if c != 0]
        if len(nz) != 1:
            return None
        k, c = nz[0], self.den[nz[0]]
        return [(i - k, Fraction(a, c)) for i, a in enumerate(self.num) if a != 0]

    def __str__(self) -> str:
        if not self.num:
            return "0"
        lt = self._laurent_terms()
        if lt is None:
            return "(%s) * (%s)^-1" % (_poly_str(self.num), _poly_str(self.den))
        parts = []
        for e, c in lt:
            parts.append(_term_str(e, c))
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self) -> str:
        return "Scalar(%s)" % self


def _frac_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def _term_str(e: int, c: Fraction) -> str:
    if e == 0:
        return _frac_str(c)
    qs = "q" if e == 1 else "q^%d" % e
    if c == 1:
        return qs
    if c == -1:
        return "-" + qs
    return "%s * %s" % (_frac_str(c), qs)


def _poly_str(p: Poly) -> str:
    parts = [_term_str(i, Fraction(c)) for i, c in enumerate(p) if c != 0]
    out = parts[0]
    for piece in parts[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


ZERO = Scalar((), (1,))
ONE = Scalar((1,), (1,))
Q = Scalar((0, 1), (1,))

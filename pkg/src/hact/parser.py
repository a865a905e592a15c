"""Parser and printer for algebra and tensor expressions.

Grammar (precedence low to high: '+', '@', '*' or juxtaposition, '^'):

    expr   := tens (('+' | '-') tens)*
    tens   := term ('@' term)*
    term   := sign? factor ('*'? factor)*
    factor := INT ('/' INT)? | IDENT ('^' INT)? | '(' expr ')' ('^' INT)?

IDENT is a letter or underscore followed by letters, digits, underscores
or primes.  The name q is reserved and denotes the scalar parameter; any
other IDENT must be a generator of the supplied presentation.  A '^'
with negative exponent is allowed on q and on parenthesized constant
expressions.  Whitespace is insignificant.  Parsed polynomials are raw;
callers normalize against their rewrite system.
"""

from __future__ import annotations

import re

from .freealg import NCPoly, RewriteSystem
from .scalars import ONE, Scalar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(\*\*|[-+*/@^()]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str):
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError("bad character %r in %r" % (text[pos], text))
            break
        pos = m.end()
        if m.group(1):
            toks.append(("INT", int(m.group(1))))
        elif m.group(2):
            toks.append(("IDENT", m.group(2)))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            toks.append((op, op))
    toks.append(("END", None))
    return toks


class _Parser:
    def __init__(self, text: str, letters):
        self.toks = _tokenize(text)
        self.pos = 0
        self.letters = set(letters)
        self.text = text

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError("expected %s, got %r in %r" % (kind, tok[1], self.text))
        return tok

    def _signed_int(self) -> int:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next()[0] == "-":
                sign = -sign
        return sign * self.expect("INT")[1]

    # values are ('s', Scalar) or ('p', NCPoly) or ('t', list of tuples)

    def parse(self):
        val = self.expr()
        self.expect("END")
        return val

    def expr(self):
        out = self.tens()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.tens()
            if op == "-":
                rhs = _negate(rhs)
            out = _add(out, rhs, self.text)
        return out

    def tens(self):
        first = self.term()
        if self.peek() != "@":
            return first
        slots = [_as_poly(first)]
        while self.peek() == "@":
            self.next()
            slots.append(_as_poly(self.term()))
        return ("t", [tuple(slots)])

    def term(self):
        neg = False
        while self.peek() in ("+", "-"):
            if self.next()[0] == "-":
                neg = not neg
        out = self.factor()
        while True:
            if self.peek() == "*":
                self.next()
                out = _mul(out, self.factor(), self.text)
            elif self.peek() in ("INT", "IDENT", "("):
                out = _mul(out, self.factor(), self.text)
            else:
                break
        return _negate(out) if neg else out

    def factor(self):
        kind, value = self.next()
        if kind == "INT":
            if self.peek() == "/":
                self.next()
                return ("s", Scalar.rational(value, self.expect("INT")[1]))
            return ("s", Scalar.from_int(value))
        if kind == "IDENT":
            if value == "q":
                n = 1
                if self.peek() == "^":
                    self.next()
                    n = self._signed_int()
                return ("s", Scalar.q_pow(n))
            if value not in self.letters:
                raise ParseError("unknown generator %r in %r" % (value, self.text))
            n = 1
            if self.peek() == "^":
                self.next()
                n = self._signed_int()
                if n < 0:
                    raise ParseError("negative power of generator %r" % value)
            return ("p", NCPoly.monomial((value,) * n))
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            if self.peek() == "^":
                self.next()
                n = self._signed_int()
                return _power(inner, n, self.text)
            return inner
        raise ParseError("unexpected %r in %r" % (value, self.text))


def _negate(val):
    kind, v = val
    if kind == "s":
        return ("s", -v)
    if kind == "p":
        return ("p", -v)
    return ("t", [(-slots[0],) + slots[1:] for slots in v])


def _as_poly(val) -> NCPoly:
    kind, v = val
    if kind == "s":
        return NCPoly.const(v)
    if kind == "p":
        return v
    raise ParseError("tensor factor inside a product")


def _as_scalar(val) -> Scalar:
    kind, v = val
    if kind == "s":
        return v
    if kind == "p" and set(v.terms) <= {()}:
        return v.constant_term()
    raise ParseError("expected a constant expression")


def _mul(a, b, text):
    if a[0] == "t" or b[0] == "t":
        raise ParseError("'@' binds looser than '*' in %r" % text)
    if a[0] == "s" and b[0] == "s":
        return ("s", a[1] * b[1])
    if a[0] == "s":
        return ("p", b[1].scale(a[1]))
    if b[0] == "s":
        return ("p", a[1].scale(b[1]))
    return ("p", a[1].raw_mul(b[1]))


def _add(a, b, text):
    if a[0] == "t" or b[0] == "t":
        if a[0] != "t" or b[0] != "t":
            raise ParseError("sum mixes tensor and non-tensor terms in %r" % text)
        if {len(s) for s in a[1]} != {len(s) for s in b[1]}:
            raise ParseError("sum mixes tensor arities in %r" % text)
        return ("t", a[1] + b[1])
    if a[0] == "s" and b[0] == "s":
        return ("s", a[1] + b[1])
    return ("p", _as_poly(a) + _as_poly(b))


def _power(val, n, text):
    if val[0] == "s" or (val[0] == "p" and set(val[1].terms) <= {()}):
        return ("s", _as_scalar(val).pow_int(n))
    if val[0] == "p":
        if n < 0:
            raise ParseError("negative power of a non-constant expression")
        out = NCPoly.one()
        for _ in range(n):
            out = out.raw_mul(val[1])
        return ("p", out)
    raise ParseError("cannot raise a tensor to a power in %r" % text)


def parse_poly(text: str, sys: RewriteSystem) -> NCPoly:
    """Parse an algebra element; raw, not normalized."""
    val = _Parser(text, sys.letters).parse()
    if val[0] == "t":
        raise ParseError("unexpected tensor expression: %r" % text)
    return _as_poly(val)


def parse_tensor(text: str, letters, arity: int):
    """Parse a sum of arity-fold tensors into a list of NCPoly tuples."""
    val = _Parser(text, letters).parse()
    if val[0] != "t":
        if arity == 1:
            return [(_as_poly(val),)]
        raise ParseError("expected a tensor expression: %r" % text)
    for slots in val[1]:
        if len(slots) != arity:
            raise ParseError("expected arity %d in %r" % (arity, text))
    return val[1]


def parse_scalar(text: str) -> Scalar:
    return _as_scalar(_Parser(text, ()).parse())


# -- printing ---------------------------------------------------------


def _scalar_pieces(s: Scalar) -> int:
    lt = s._laurent_terms()
    return len(lt) if lt is not None else 1


def word_str(word) -> str:
    if not word:
        return "1"
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    return "*".join(l if n == 1 else "%s^%d" % (l, n) for l, n in runs)


def _coeff_prefix(c: Scalar) -> str:
    """Render c as a multiplier prefix, '' for 1 and '-' for -1."""
    if c == ONE:
        return ""
    if c == -ONE:
        return "-"
    s = str(c)
    if _scalar_pieces(c) > 1:
        return "(%s) * " % s
    return "%s * " % s


def _join_signed(pieces) -> str:
    out = pieces[0]
    for p in pieces[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out


def poly_str(p: NCPoly, sys: RewriteSystem) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for w in sys.sorted_words(p.terms):
        c = p.terms[w]
        if not w:
            pieces.append(str(c) if _scalar_pieces(c) == 1 else "(%s)" % c)
        else:
            pieces.append(_coeff_prefix(c) + word_str(w))
    return _join_signed(pieces)


def tensor_str(addends, syss) -> str:
    """Print a list of NCPoly tuples as a sum of '@'-separated slots."""
    if not addends:
        return "0"
    pieces = []
    for slots in addends:
        bits = []
        for p, sys in zip(slots, syss):
            s = poly_str(p, sys)
            if len(p.terms) > 1:
                s = "(%s)" % s
            bits.append(s)
        pieces.append(" @ ".join(bits))
    return _join_signed(pieces)

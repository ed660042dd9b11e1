"""Parsing and printing of cohomology/homology class expressions.

Grammar for cohomology classes (whitespace insignificant):

    class  := ['+'|'-'] term (('+'|'-') term)*
    term   := [integer '*'] factor ('*' factor)* | integer
    factor := ('u'|'v') index ['^' natural]
    index  := natural  (1-based factor index)

'v' is the degree-1 exterior generator, 'u' its degree-2 Bockstein.
Example: "u1*v2*u2^2 - v1*u2^3".

Rendered coefficients are the residues 1..p-1; with signed=True a
coefficient of p-1 prints as a minus sign instead.
"""

import re

from .algebra import CohomologyClass, u, v

_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<gen>[uv]\d+)|(?P<op>[*^+\-])")


class ParseError(ValueError):
    """Syntax error in a class expression, with the offending position."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")

    def pointer(self):
        return f"{self.text}\n{' ' * self.position}^"


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.tokens = []  # (kind, value, position)
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
            if m.lastgroup != "ws":
                self.tokens.append((m.lastgroup, m.group(), pos))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok


def parse_cohomology(text, space):
    """Parse an expression into a canonical class over the space model."""
    sc = _Scanner(text)
    kind, val, pos = sc.peek()
    if kind is None:
        raise ParseError("empty expression", text, pos)
    sign = 1
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        sc.next()
    total = sign * _parse_term(sc, space)
    while True:
        kind, val, pos = sc.peek()
        if kind is None:
            return total
        if kind != "op" or val not in "+-":
            raise ParseError(f"expected '+' or '-', found {val!r}", text, pos)
        sc.next()
        term = _parse_term(sc, space)
        total = total + term if val == "+" else total - term


def _parse_term(sc, space):
    text = sc.text
    kind, val, pos = sc.peek()
    if kind == "int":
        sc.next()
        coeff = int(val)
        kind2, val2, _ = sc.peek()
        if not (kind2 == "op" and val2 == "*"):
            return coeff * CohomologyClass.one(space)
        sc.next()
        result = coeff * _parse_factor(sc, space)
    elif kind == "gen":
        result = _parse_factor(sc, space)
    else:
        raise ParseError("expected a term", text, pos)
    while True:
        kind, val, pos = sc.peek()
        if kind == "op" and val == "*":
            sc.next()
            result = result * _parse_factor(sc, space)
        else:
            return result


def _parse_factor(sc, space):
    text = sc.text
    kind, val, pos = sc.next()
    if kind != "gen":
        raise ParseError("expected a generator like 'u1' or 'v2'", text, pos)
    letter, index = val[0], int(val[1:])
    if not 1 <= index <= space.nfactors:
        raise ParseError(f"factor index {index} out of range 1..{space.nfactors}", text, pos)
    power = 1
    kind2, val2, _ = sc.peek()
    if kind2 == "op" and val2 == "^":
        sc.next()
        kind3, val3, pos3 = sc.next()
        if kind3 != "int":
            raise ParseError("expected an exponent", text, pos3)
        power = int(val3)
    base = u(space, index) if letter == "u" else v(space, index)
    return base ** power


def _format_terms(rendered, signed, p):
    """Join (coeff, monomial-string) pairs into an expression string."""
    if not rendered:
        return "0"
    pieces = []
    for i, (c, mono) in enumerate(rendered):
        negative = signed and c == p - 1
        if negative:
            c = 1
        if mono is None:  # unit monomial: bare integer
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if i == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def format_cohomology(x, signed=False):
    """Canonical rendering; parses back to an equal class.

    >>> from .algebra import SpaceModel, thom_class
    >>> sp = SpaceModel.lens_product(3)
    >>> format_cohomology(thom_class(sp))
    'u1*v2*u2^2 + 2*v1*u2^3'
    >>> format_cohomology(thom_class(sp), signed=True)
    'u1*v2*u2^2 - v1*u2^3'
    """
    rendered = []
    for m, c in x.sorted_terms():
        parts = []
        for i, (e, a) in enumerate(m.exps):
            if e:
                parts.append(f"v{i + 1}")
            if a:
                parts.append(f"u{i + 1}" + (f"^{a}" if a > 1 else ""))
        rendered.append((c, "*".join(parts) if parts else None))
    return _format_terms(rendered, signed, x.space.prime)


def format_homology(h, signed=False):
    """Render a homology class in the a<j> cross-term notation, e.g.
    "a5 x a2 + a6 x a1"."""
    rendered = []
    for mono, c in h.sorted_terms():
        body = " x ".join(f"a{j}" for j in mono.indices)
        if c != 1 and not (signed and c == h.space.prime - 1):
            body = f"{c}*({body})"
            c = 1
        rendered.append((c, body))
    return _format_terms(rendered, signed, h.space.prime)

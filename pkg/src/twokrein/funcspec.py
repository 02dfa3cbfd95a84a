"""Text format for polynomial paths t -> C^n.

Grammar (whitespace is insignificant)::

    path       := '(' coord (',' coord)* ')'
    coord      := term (('+' | '-') term)*
    term       := sign? complexlit ('*' var)? | sign? var
    var        := 'x' ('^' uint)?
    complexlit := real | real? 'i'

``i`` is the imaginary unit; ``xi`` is rejected, write ``i*x``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

MAX_DEGREE = 16

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_PUNCT = set("(),+-*^xi")


class ParseError(ValueError):
    """Malformed path text; ``offset`` indexes into the source string."""

    def __init__(self, message: str, offset: int, expected: str = ""):
        self.message = message
        self.offset = offset
        self.expected = expected
        detail = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


@dataclass(frozen=True)
class PathExpression:
    """Coordinate polynomials; ``coords[k][d]`` is the coefficient of x^d.

    Coefficients are stored with trailing zeros trimmed, so the zero
    polynomial is the empty tuple.  Equality is structural (source text and
    spans are not compared).
    """

    coords: tuple[tuple[complex, ...], ...]
    source: str = field(default="", compare=False)
    spans: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @classmethod
    def from_coefficients(cls, coords: Sequence[Sequence[complex]]) -> PathExpression:
        trimmed = tuple(_trim([complex(c) for c in poly]) for poly in coords)
        expr = cls(trimmed)
        object.__setattr__(expr, "source", format_expression(expr))
        return expr

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def degree(self) -> int:
        return max((len(c) - 1 for c in self.coords), default=-1)

    def coefficient_matrix(self) -> np.ndarray:
        """(dim, degree + 1) complex array, zero padded."""
        width = max(self.degree + 1, 1)
        out = np.zeros((self.dim, width), dtype=complex)
        for k, poly in enumerate(self.coords):
            out[k, : len(poly)] = poly
        return out

    def __str__(self) -> str:
        return format_expression(self)


def _trim(coeffs: list[complex]) -> tuple[complex, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# -- tokenizer ---------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str  # one of _PUNCT, "num", "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUMBER.match(text, i)
        if m:
            tokens.append(_Token("num", m.group(), i))
            i = m.end()
        elif ch in _PUNCT:
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# -- parser ------------------------------------------------------------------

_TERM_START = "numeric literal, 'i' or 'x'"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str, expected: str) -> _Token:
        if self.tok.kind != kind:
            self.fail(expected)
        return self.take()

    def fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {found}", t.offset, expected)

    def path(self) -> PathExpression:
        self.expect("(", "'('")
        coords, spans = [], []
        while True:
            start = self.tok.offset
            coords.append(self.coord())
            spans.append((start, self.tok.offset))
            if self.tok.kind == ",":
                self.take()
                continue
            self.expect(")", "',' or ')'")
            break
        self.expect("end", "end of input")
        return PathExpression(tuple(_trim(c) for c in coords), self.text, tuple(spans))

    def coord(self) -> list[complex]:
        acc: list[complex] = []
        self.term(acc, 1)
        while self.tok.kind in ("+", "-"):
            sign = 1 if self.take().kind == "+" else -1
            self.term(acc, sign)
        return acc

    def term(self, acc: list[complex], sign: int) -> None:
        if self.tok.kind in ("+", "-"):
            if self.take().kind == "-":
                sign = -sign
        kind = self.tok.kind
        if kind == "num":
            tok = self.take()
            value = complex(float(tok.text))
            if not math.isfinite(value.real):
                raise ParseError("malformed literal (not finite)", tok.offset, "finite number")
            if self.tok.kind == "i":
                self.take()
                value *= 1j
            degree = self._maybe_var()
        elif kind == "i":
            self.take()
            value = 1j
            degree = self._maybe_var()
        elif kind == "x":
            value = 1.0
            degree = self.var()
        else:
            self.fail(_TERM_START)
        if len(acc) <= degree:
            acc.extend([0j] * (degree + 1 - len(acc)))
        acc[degree] += sign * value

    def _maybe_var(self) -> int:
        if self.tok.kind == "*":
            self.take()
            return self.var()
        return 0

    def var(self) -> int:
        self.expect("x", "'x'")
        if self.tok.kind != "^":
            return 1
        self.take()
        tok = self.tok
        if tok.kind != "num" or not tok.text.isdigit():
            self.fail("unsigned integer exponent")
        self.take()
        degree = int(tok.text)
        if degree > MAX_DEGREE:
            raise ParseError(f"degree {degree} exceeds {MAX_DEGREE}", tok.offset,
                             f"exponent <= {MAX_DEGREE}")
        return degree


def parse(text: str | bytes) -> PathExpression:
    """Parse path text; raises :class:`ParseError` and nothing else on bad input."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not valid UTF-8", exc.start) from None
    return _Parser(text).path()


# -- formatting and evaluation -----------------------------------------------

def _monomial(d: int) -> str:
    return "" if d == 0 else ("x" if d == 1 else f"x^{d}")


def _format_coord(poly: Sequence[complex]) -> str:
    parts: list[tuple[int, str]] = []  # (sign, body)
    for d, c in enumerate(poly):
        mono = _monomial(d)
        for value, unit in ((c.real, ""), (c.imag, "i")):
            if value == 0:
                continue
            sign = -1 if math.copysign(1.0, value) < 0 else 1
            lit = repr(abs(value)) + unit
            parts.append((sign, f"{lit}*{mono}" if mono else lit))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


def format_expression(expr: PathExpression) -> str:
    return "(" + ", ".join(_format_coord(p) for p in expr.coords) + ")"


def evaluate_many(expr: PathExpression, xs) -> np.ndarray:
    """Horner evaluation at each abscissa; returns shape (len(xs), dim)."""
    xs = np.asarray(xs, dtype=float)
    coeffs = expr.coefficient_matrix()
    out = np.zeros(xs.shape + (expr.dim,), dtype=complex)
    for d in range(coeffs.shape[1] - 1, -1, -1):
        out = out * xs[..., None] + coeffs[:, d]
    return out


def evaluate(expr: PathExpression, x: float) -> np.ndarray:
    return evaluate_many(expr, np.array([x]))[0]


def differentiate(expr: PathExpression) -> PathExpression:
    return PathExpression.from_coefficients(
        [[d * c for d, c in enumerate(poly)][1:] for poly in expr.coords])


__all__ = ["MAX_DEGREE", "ParseError", "PathExpression", "differentiate", "evaluate",
           "evaluate_many", "format_expression", "parse"]

"""Text forms of field elements and vectors.

Elements are written as polynomials in ``x`` with ascending powers, e.g.
``0``, ``2``, ``x``, ``1+2x``, ``2+x^2``.  Vectors are parenthesised,
comma separated element lists.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import DegreeTooHigh, ElementSyntaxError

_TERM = re.compile(
    r"""^(?:
        (?P<coef>\d+)?\s*\*?\s*x\s*(?:\^\s*(?P<pow>\d+))?   # c x^k, cx, x
        |(?P<const>\d+)                                     # bare constant
    )$""",
    re.VERBOSE,
)


def render_coeffs(coeffs: Sequence[int]) -> str:
    terms = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        else:
            mono = "x" if power == 1 else f"x^{power}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def parse_coeffs(text: str, p: int, l: int) -> tuple[int, ...]:
    """Parse polynomial text into a length-``l`` coefficient tuple mod ``p``.

    Terms may appear in any order and may repeat; coefficients are reduced
    mod ``p``.  Powers ``>= l`` are rejected rather than reduced.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ElementSyntaxError(f"empty element: {text!r}")
    if s[0] not in "+-":
        s = "+" + s
    coeffs = [0] * l
    pos = 0
    for m in re.finditer(r"([+-])([^+-]*)", s):
        if m.start() != pos:
            raise ElementSyntaxError(f"cannot parse element {text!r}")
        pos = m.end()
        sign, body = m.groups()
        t = _TERM.match(body)
        if not body or t is None:
            raise ElementSyntaxError(f"bad term {body!r} in {text!r}")
        if t.group("const") is not None:
            power, c = 0, int(t.group("const"))
        else:
            power = int(t.group("pow")) if t.group("pow") is not None else 1
            c = int(t.group("coef")) if t.group("coef") is not None else 1
        if power >= l:
            raise DegreeTooHigh(f"term x^{power} in {text!r} needs degree < {l}")
        coeffs[power] += -c if sign == "-" else c
    if pos != len(s):
        raise ElementSyntaxError(f"cannot parse element {text!r}")
    return tuple(c % p for c in coeffs)


def split_vector(text: str) -> list[str]:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ElementSyntaxError(f"vector literal must be parenthesised: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        raise ElementSyntaxError(f"empty vector literal: {text!r}")
    return [part.strip() for part in inner.split(",")]


def join_vector(parts: Iterable[str]) -> str:
    return "(" + ", ".join(parts) + ")"


def matrix_lines(text: str) -> list[str]:
    """Vector literal lines of a matrix file, skipping blanks and comments."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out

"""Shared test helpers and fixtures for the test suite."""

from __future__ import annotations

from nearvec.vectors import NfMatrix, NfVector

# Printed DN(3,2) table, rows = left operand as printed.  Each cell is
# stored as printed; the left-distributive rule reproduces its transpose.
PRINTED_DN32_LABELS = ["0", "1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"]
PRINTED_DN32_TABLE = [
    "0 0 0 0 0 0 0 0 0",
    "0 1 2 x 1+x 2+x 2x 1+2x 2+2x",
    "0 2 1 2x 2+2x 1+2x x 2+x 1+x",
    "0 x 2x 2 1+2x 1+x 1 2+2x 2+x",
    "0 1+x 2+2x 2+x 2 2x 1+2x x 1",
    "0 2+x 1+2x 2+2x x 2 1+x 1 2x",
    "0 2x x 1 2+x 2+2x 2 1+x 1+2x",
    "0 1+2x 2+x 1+x 2x 1 2+2x 2 x",
    "0 2+2x 1+x 1+2x 1 x 2+x 2x 2",
]


def vec(ctx, text: str) -> NfVector:
    return NfVector.parse(ctx, text)


def mat(ctx, *rows: str, n: int | None = None) -> NfMatrix:
    return NfMatrix.from_rows(ctx, [vec(ctx, r) for r in rows], n)


def prose_mul(field, a: int, b: int) -> int:
    """``a*b`` if ``a`` is a square in GF(9), else ``a*b^3``; polynomial path only."""
    squares = {field.mul_poly(y, y) for y in range(1, field.order)}
    if a in squares:
        return field.mul_poly(a, b)
    b3 = field.mul_poly(b, field.mul_poly(b, b))
    return field.mul_poly(a, b3)

"""Vectors in R^n with the right scalar action, and row operations.

Scalars always act on the right: ``v * r`` is ``(v_1 o r, ..., v_n o r)``.
Only operations that leave the generated R-subgroup unchanged are
provided: swapping rows, right-scaling by a nonzero scalar and
subtracting a right multiple of another row.  None of them needs right
distributivity, only associativity of ``o``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from . import textio
from .dickson import NearfieldCtx
from .errors import DimMismatch, PivotZero, ReplayMismatch


class NfVector:
    """Immutable tuple of nearfield elements bound to a context."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: NearfieldCtx, entries: Iterable[int]):
        entries = tuple(entries)
        if not entries:
            raise DimMismatch("vectors need at least one coordinate")
        for e in entries:
            if not 0 <= e < ctx.order:
                raise ValueError(f"{e} is not an element of DN{ctx.pair}")
        self.ctx = ctx
        self.entries = entries

    @classmethod
    def zero(cls, ctx: NearfieldCtx, n: int) -> NfVector:
        return cls(ctx, (0,) * n)

    @classmethod
    def unit(cls, ctx: NearfieldCtx, n: int, j: int) -> NfVector:
        return cls(ctx, (1 if i == j else 0 for i in range(n)))

    @classmethod
    def parse(cls, ctx: NearfieldCtx, text: str) -> NfVector:
        return cls(ctx, (ctx.parse(s) for s in textio.split_vector(text)))

    def render(self) -> str:
        return textio.join_vector(self.ctx.render(e) for e in self.entries)

    def labels(self) -> list[str]:
        return [self.ctx.render(e) for e in self.entries]

    def __repr__(self) -> str:
        return f"NfVector{self.render()}"

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NfVector):
            return NotImplemented
        return self.ctx is other.ctx and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def _check(self, other: NfVector) -> None:
        if other.ctx is not self.ctx or other.n != self.n:
            raise DimMismatch(f"cannot combine length {self.n} and {other.n} vectors "
                              "or vectors over different nearfields")

    def __add__(self, other: NfVector) -> NfVector:
        self._check(other)
        add = self.ctx.add
        return NfVector(self.ctx, (add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: NfVector) -> NfVector:
        self._check(other)
        sub = self.ctx.sub
        return NfVector(self.ctx, (sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> NfVector:
        return NfVector(self.ctx, (self.ctx.neg(a) for a in self.entries))

    def __mul__(self, r: int) -> NfVector:
        if isinstance(r, NfVector):
            return NotImplemented
        mul = self.ctx.mul
        return NfVector(self.ctx, (mul(a, r) for a in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def support(self) -> list[int]:
        """0-based positions of the nonzero entries."""
        return [i for i, e in enumerate(self.entries) if e]

    def leading(self) -> int | None:
        for i, e in enumerate(self.entries):
            if e:
                return i
        return None


def vec_add(u: NfVector, v: NfVector) -> NfVector:
    return u + v


def vec_neg(v: NfVector) -> NfVector:
    return -v


def vec_scalar(v: NfVector, r: int) -> NfVector:
    return v * r


@dataclass(frozen=True)
class NfMatrix:
    """A stack of equal-length rows; may be empty if ``n`` is given."""

    ctx: NearfieldCtx
    n: int
    rows: tuple[NfVector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r.ctx is not self.ctx or r.n != self.n:
                raise DimMismatch(f"row {r.render()} does not fit a {self.n}-column matrix")

    @classmethod
    def from_rows(cls, ctx: NearfieldCtx, rows: Sequence[Sequence[int] | NfVector],
                  n: int | None = None) -> NfMatrix:
        vecs = tuple(r if isinstance(r, NfVector) else NfVector(ctx, r) for r in rows)
        if n is None:
            if not vecs:
                raise DimMismatch("cannot infer the width of an empty matrix")
            n = vecs[0].n
        return cls(ctx, n, vecs)

    @classmethod
    def parse(cls, ctx: NearfieldCtx, text: str, n: int | None = None) -> NfMatrix:
        """Read one vector literal per line; blanks and ``#`` comments are skipped."""
        return cls.from_rows(ctx, [NfVector.parse(ctx, line) for line in textio.matrix_lines(text)], n)

    def to_text(self) -> str:
        return "".join(r.render() + "\n" for r in self.rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[NfVector]:
        return iter(self.rows)


# -- row operations ------------------------------------------------------------

@dataclass(frozen=True)
class Swap:
    i: int
    j: int

    def apply(self, rows: list[NfVector]) -> None:
        rows[self.i], rows[self.j] = rows[self.j], rows[self.i]

    def to_json(self, ctx: NearfieldCtx) -> dict:
        return {"op": "swap", "i": self.i, "j": self.j}


@dataclass(frozen=True)
class Scale:
    """``rows[row] <- rows[row] o by`` with ``by != 0``."""

    row: int
    by: int

    def apply(self, rows: list[NfVector]) -> None:
        if self.by == 0:
            raise PivotZero("rows may only be scaled by nonzero scalars")
        rows[self.row] = rows[self.row] * self.by

    def to_json(self, ctx: NearfieldCtx) -> dict:
        return {"op": "scale", "row": self.row, "by": ctx.render(self.by)}


@dataclass(frozen=True)
class AddMul:
    """``rows[target] <- rows[target] - rows[source] o coef``."""

    target: int
    source: int
    coef: int

    def apply(self, rows: list[NfVector]) -> None:
        if self.target == self.source:
            raise ReplayMismatch("a row cannot be reduced by itself")
        rows[self.target] = rows[self.target] - rows[self.source] * self.coef

    def to_json(self, ctx: NearfieldCtx) -> dict:
        return {"op": "addmul", "target": self.target, "source": self.source,
                "coef": ctx.render(self.coef)}


@dataclass(frozen=True)
class Drop:
    """Remove a row that must be zero."""

    row: int

    def apply(self, rows: list[NfVector]) -> None:
        if not rows[self.row].is_zero():
            raise ReplayMismatch(f"row {self.row} is not zero and cannot be dropped")
        del rows[self.row]

    def to_json(self, ctx: NearfieldCtx) -> dict:
        return {"op": "drop", "row": self.row}


RowOp = Union[Swap, Scale, AddMul, Drop]


def rref_steps(rows: Sequence[NfVector]) -> tuple[list[NfVector], list[RowOp]]:
    """Reduced row-echelon form plus the row operations that produced it.

    Pivot: first column with a nonzero entry at or below the current pivot
    row, topmost such row.  Pivots are made 1 by right-scaling with the
    pivot inverse; every other row ``s`` is then reduced by
    ``row_s - row_r o (1^-1 o entry_s)``, which cancels the pivot column
    exactly.
    """
    work = list(rows)
    steps: list[RowOp] = []
    if not work:
        return work, steps
    ctx = work[0].ctx
    n = work[0].n
    pr = 0
    for col in range(n):
        if pr == len(work):
            break
        cand = next((i for i in range(pr, len(work)) if work[i][col]), None)
        if cand is None:
            continue
        ops: list[RowOp] = []
        if cand != pr:
            ops.append(Swap(pr, cand))
            ops[-1].apply(work)
        piv = work[pr][col]
        if piv != 1:
            ops.append(Scale(pr, ctx.inv(piv)))
            ops[-1].apply(work)
        for s in range(len(work)):
            if s != pr and work[s][col]:
                # pivot is 1, so (pivot)^-1 o entry is the entry itself
                ops.append(AddMul(s, pr, ctx.mul(ctx.inv(work[pr][col]), work[s][col])))
                ops[-1].apply(work)
        steps.extend(ops)
        pr += 1
    return work, steps


def rref(M: NfMatrix) -> NfMatrix:
    rows, _ = rref_steps(M.rows)
    return NfMatrix(M.ctx, M.n, rows)


def is_rref(M: NfMatrix) -> bool:
    """Echelon shape: increasing pivots equal to 1, pivot columns otherwise zero,
    zero rows last."""
    last = -1
    seen_zero = False
    for i, row in enumerate(M.rows):
        lead = row.leading()
        if lead is None:
            seen_zero = True
            continue
        if seen_zero or lead <= last or row[lead] != 1:
            return False
        if any(other[lead] for k, other in enumerate(M.rows) if k != i):
            return False
        last = lead
    return True

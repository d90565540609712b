"""Smallest subspace containing a set of vectors.

Over a proper Dickson nearfield every subspace of R^n is a coordinate
subspace ``S_1 x ... x S_n`` with each ``S_i`` either ``{0}`` or ``R``.  The
constructive route runs eGe and then splits every multi-entry basis row
with the *adjustment trick*: for ``m = alpha e_j2`` and
``a = u o ((u^j2)^-1 o beta)`` the vector ``(m + a) lam - m lam - a lam``
is ``gamma e_j2`` with ``gamma`` the right-distributivity defect, which
certifies ``e_j2`` and lets ``u`` lose its ``j2`` entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .dickson import NDTriple, NearfieldCtx, find_nd_triple, is_nd_triple, nd_defect
from .errors import (
    BadRange,
    FullyDistributive,
    InternalError,
    PivotZero,
    ReplayMismatch,
    TripleInvalid,
)
from .gen import GenBasis, GenCertificate, ege
from .vectors import NfMatrix, NfVector, Scale


@dataclass(frozen=True)
class CoordMask:
    """Coordinate subspace; ``included`` holds 1-based column indices."""

    n: int
    included: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "included", frozenset(self.included))
        if any(not 1 <= i <= self.n for i in self.included):
            raise BadRange(f"mask indices must lie in 1..{self.n}")

    @property
    def dimension(self) -> int:
        return len(self.included)

    def units(self, ctx: NearfieldCtx) -> list[NfVector]:
        return [NfVector.unit(ctx, self.n, i - 1) for i in sorted(self.included)]


@dataclass(frozen=True)
class AdjustRecord:
    row: int | None
    j1: int
    j2: int
    triple: NDTriple
    a: NfVector
    v: NfVector
    gamma: int
    e: NfVector
    reduced: NfVector

    def to_json(self, ctx: NearfieldCtx) -> dict:
        t = self.triple
        return {
            "op": "adjust", "row": self.row, "j1": self.j1, "j2": self.j2,
            "triple": [ctx.render(t.alpha), ctx.render(t.beta), ctx.render(t.lam)],
            "a": self.a.labels(), "v": self.v.labels(), "gamma": ctx.render(self.gamma),
            "e": self.e.labels(), "reduced": self.reduced.labels(),
        }


def adjustment_trick(u: NfVector, j1: int, j2: int, triple: NDTriple,
                     row: int | None = None) -> AdjustRecord:
    """Certify the unit vector ``e_j2`` from ``u`` and drop ``u``'s ``j2`` entry."""
    ctx = u.ctx
    if not j1 < j2:
        raise PivotZero(f"need j1 < j2, got {j1}, {j2}")
    if not (u[j1] and u[j2]):
        raise PivotZero(f"row needs nonzero entries at {j1} and {j2}")
    if not is_nd_triple(ctx, triple):
        raise TripleInvalid(f"{triple} satisfies right distributivity")
    alpha, beta, lam = triple.alpha, triple.beta, triple.lam
    a = u * ctx.mul(ctx.inv(u[j2]), beta)
    m = NfVector.unit(ctx, u.n, j2) * alpha
    v = (m + a) * lam - m * lam
    d = v - a * lam
    gamma = nd_defect(ctx, triple)
    if d.support() != [j2] or d[j2] != gamma:
        raise InternalError("adjustment trick produced an unexpected vector")
    e = d * ctx.inv(gamma)
    reduced = u - e * u[j2]
    return AdjustRecord(row, j1, j2, triple, a, v, gamma, e, reduced)


@dataclass
class SpanCertificate:
    gen: GenCertificate
    n: int
    adjustments: list[AdjustRecord] = field(default_factory=list)
    scalings: list[Scale] = field(default_factory=list)

    def replay(self, rows: Sequence[NfVector]) -> CoordMask:
        work = self.gen.replay(rows)
        n = self.n
        for rec in self.adjustments:
            again = adjustment_trick(work[rec.row], rec.j1, rec.j2, rec.triple, rec.row)
            if again != rec:
                raise ReplayMismatch(f"adjustment on row {rec.row} does not reproduce")
            work[rec.row] = rec.reduced
            work.append(rec.e)
        for op in self.scalings:
            op.apply(work)
        if any(len(u.support()) != 1 or u[u.leading()] != 1 for u in work):
            raise ReplayMismatch("replay did not end in unit vectors")
        return CoordMask(n, frozenset(u.leading() + 1 for u in work))

    def to_json(self, ctx: NearfieldCtx) -> list[dict]:
        return (self.gen.to_json(ctx)
                + [rec.to_json(ctx) for rec in self.adjustments]
                + [op.to_json(ctx) for op in self.scalings])


def aege(M: NfMatrix) -> tuple[CoordMask, SpanCertificate]:
    """eGe followed by adjustment tricks; raises for fields."""
    mask, cert, _ = _aege(M)
    return mask, cert


def _aege(M: NfMatrix) -> tuple[CoordMask, SpanCertificate, GenBasis]:
    ctx = M.ctx
    if ctx.m == 1:
        raise FullyDistributive("over a field the span is a row space, not a coordinate mask")
    basis, gcert = ege(M)
    triple = find_nd_triple(ctx)
    rows = list(basis.rows)
    cert = SpanCertificate(gcert, M.n)
    for i in range(len(rows)):
        while len(sup := rows[i].support()) >= 2:
            rec = adjustment_trick(rows[i], sup[-2], sup[-1], triple, i)
            rows[i] = rec.reduced
            rows.append(rec.e)
            cert.adjustments.append(rec)
    for i, u in enumerate(rows):
        c = u.leading()
        if u[c] != 1:
            op = Scale(i, ctx.inv(u[c]))
            op.apply(rows)
            cert.scalings.append(op)
    mask = CoordMask(M.n, frozenset(u.leading() + 1 for u in rows))
    expected = {c + 1 for u in basis.rows for c in u.support()}
    if mask.included != expected:
        raise InternalError("aeGe mask differs from the eGe support")
    return mask, cert, basis


def span_mask_shortcut(M: NfMatrix) -> CoordMask:
    """Union of the input supports, i.e. the smallest coordinate subspace."""
    if M.ctx.m == 1:
        raise FullyDistributive("coordinate masks describe spans only for m > 1")
    return CoordMask(M.n, frozenset(c + 1 for v in M.rows for c in v.support()))


def is_subspace(basis: GenBasis) -> bool:
    """Whether ``gen`` is already a subspace: every row has a single entry.

    Over a field every R-subgroup is a subspace, so field-mode bases
    report ``True``.
    """
    if basis.field_mode:
        return True
    return all(len(u.support()) == 1 for u in basis.rows)


def subspace_count(n: int, k: int | None = None) -> int:
    if n < 0:
        raise BadRange("n must be non-negative")
    if k is None:
        return 2**n
    if not 0 <= k <= n:
        raise BadRange(f"need 0 <= k <= n, got k={k}, n={n}")
    return math.comb(n, k)


@dataclass(frozen=True)
class SpanResult:
    """Span of some inputs: a mask for proper nearfields, a row-space basis for fields."""

    ctx: NearfieldCtx
    n: int
    mask: CoordMask | None
    basis: GenBasis | None
    is_subspace_of_inputs_gen: bool
    certificate: SpanCertificate | GenCertificate

    @property
    def field_mode(self) -> bool:
        return self.mask is None

    @property
    def dimension(self) -> int:
        return self.mask.dimension if self.mask is not None else self.basis.rank

    def to_json(self) -> dict:
        out = {
            "pair": [self.ctx.q, self.ctx.m],
            "n": self.n,
            "mask": sorted(self.mask.included) if self.mask is not None else None,
            "dimension": self.dimension,
            "is_subspace_of_inputs_gen": self.is_subspace_of_inputs_gen,
            "certificate": self.certificate.to_json(self.ctx),
            "field_mode": self.field_mode,
        }
        if self.basis is not None:
            out["basis"] = [u.labels() for u in self.basis.rows]
        return out


def span_of(M: NfMatrix) -> SpanResult:
    if M.ctx.m == 1:
        basis, cert = ege(M)
        return SpanResult(M.ctx, M.n, None, basis, True, cert)
    mask, cert, gen_basis = _aege(M)
    return SpanResult(M.ctx, M.n, mask, None, is_subspace(gen_basis), cert)

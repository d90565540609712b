"""Smallest R-subgroup containing a set of vectors (expanded Gaussian elimination).

After ordinary row reduction, any column that still holds two nonzero
entries is cleared with the *distributivity trick*: two rows ``w_r, w_s``
that overlap in no earlier column combine into::

    theta = (w_r a' + w_s b') lam - w_r (a' lam) - w_s (b' lam)

where ``a' = (w_r^j)^-1 alpha`` and ``b' = (w_s^j)^-1 beta`` for a fixed
triple with ``(alpha + beta) lam != alpha lam + beta lam``.  ``theta`` is
zero before column ``j`` and equals that defect at ``j``, so after
normalising it provides a fresh pivot that eliminates the whole column.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .dickson import NDTriple, NearfieldCtx, find_nd_triple, is_nd_triple, nd_defect
from .errors import (
    DimMismatch,
    FullyDistributive,
    InternalError,
    PivotZero,
    ReplayMismatch,
    TripleInvalid,
    TriplePreconditionViolated,
)
from .vectors import AddMul, Drop, NfMatrix, NfVector, Scale, Swap, rref_steps


@dataclass(frozen=True)
class TrickRecord:
    r: int | None
    s: int | None
    j: int
    triple: NDTriple
    alpha_p: int
    beta_p: int
    theta: NfVector
    gamma: int
    phi: NfVector

    def to_json(self, ctx: NearfieldCtx) -> dict:
        t = self.triple
        return {
            "op": "trick", "r": self.r, "s": self.s, "column": self.j,
            "triple": [ctx.render(t.alpha), ctx.render(t.beta), ctx.render(t.lam)],
            "theta": self.theta.labels(), "gamma": ctx.render(self.gamma),
            "phi": self.phi.labels(),
        }


def distributivity_trick(w_r: NfVector, w_s: NfVector, j: int, triple: NDTriple,
                         r: int | None = None, s: int | None = None) -> TrickRecord:
    """Build ``theta`` and the normalised row ``phi`` with ``phi[j] == 1``."""
    ctx = w_r.ctx
    if w_s.ctx is not ctx or w_s.n != w_r.n:
        raise DimMismatch("trick rows must share length and nearfield")
    if not (w_r[j] and w_s[j]):
        raise PivotZero(f"both rows need a nonzero entry in column {j}")
    for col in range(j):
        if w_r[col] and w_s[col]:
            raise TriplePreconditionViolated(
                f"rows overlap in column {col} before the trick column {j}")
    if not is_nd_triple(ctx, triple):
        raise TripleInvalid(f"{triple} satisfies right distributivity")
    alpha, beta, lam = triple.alpha, triple.beta, triple.lam
    a_p = ctx.mul(ctx.inv(w_r[j]), alpha)
    b_p = ctx.mul(ctx.inv(w_s[j]), beta)
    theta = (w_r * a_p + w_s * b_p) * lam - w_r * ctx.mul(a_p, lam) - w_s * ctx.mul(b_p, lam)
    gamma = nd_defect(ctx, triple)
    if any(theta[:j]) or theta[j] != gamma:
        raise InternalError("distributivity trick produced an unexpected row")
    phi = theta * ctx.inv(gamma)
    return TrickRecord(r, s, j, triple, a_p, b_p, theta, gamma, phi)


@dataclass(frozen=True)
class TrickStep:
    """Recompute the trick on the current rows ``r, s`` and append ``phi``."""

    record: TrickRecord

    def apply(self, rows: list[NfVector]) -> None:
        rec = self.record
        again = distributivity_trick(rows[rec.r], rows[rec.s], rec.j, rec.triple, rec.r, rec.s)
        if again != rec:
            raise ReplayMismatch(f"trick on rows {rec.r},{rec.s} does not reproduce its record")
        rows.append(rec.phi)

    def to_json(self, ctx: NearfieldCtx) -> dict:
        return self.record.to_json(ctx)


@dataclass
class GenCertificate:
    """Ordered row operations taking the input rows to the basis rows."""

    steps: list = field(default_factory=list)

    def replay(self, rows: Sequence[NfVector]) -> list[NfVector]:
        work = list(rows)
        for st in self.steps:
            st.apply(work)
        return work

    def appended(self) -> list[NfVector]:
        return [st.record.phi for st in self.steps if isinstance(st, TrickStep)]

    def to_json(self, ctx: NearfieldCtx) -> list[dict]:
        return [st.to_json(ctx) for st in self.steps]


@dataclass(frozen=True)
class GenBasis:
    """Rows ``u_1..u_k'`` with ``gen = u_1 R (+) ... (+) u_k' R``.

    Outside field mode every column has at most one nonzero entry.  In
    field mode (grade 1) the rows are the nonzero rows of the RREF.
    """

    ctx: NearfieldCtx
    n: int
    rows: tuple[NfVector, ...]
    field_mode: bool = False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def column_condition(self) -> bool:
        return all(sum(1 for u in self.rows if u[c]) <= 1 for c in range(self.n))

    def to_json(self) -> dict:
        return {
            "pair": [self.ctx.q, self.ctx.m],
            "n": self.n,
            "basis": [u.labels() for u in self.rows],
            "rank": self.rank,
            "field_mode": self.field_mode,
        }

    @classmethod
    def from_json(cls, ctx: NearfieldCtx, data: dict) -> GenBasis:
        if tuple(data["pair"]) != ctx.pair:
            raise DimMismatch(f"basis is over DN{tuple(data['pair'])}, not DN{ctx.pair}")
        rows = tuple(NfVector(ctx, (ctx.parse(s) for s in row)) for row in data["basis"])
        return cls(ctx, int(data["n"]), rows, bool(data.get("field_mode", False)))


def _settle_column(rows: list[NfVector], steps: list, j: int, triple: NDTriple) -> None:
    nz = [i for i, u in enumerate(rows) if u[j]]
    if len(nz) < 2:
        return
    r, s = nz[0], nz[1]
    trick = TrickStep(distributivity_trick(rows[r], rows[s], j, triple, r, s))
    trick.apply(rows)
    steps.append(trick)
    p = len(rows) - 1
    for i in nz:
        # phi[j] == 1, so subtracting phi o entry clears column j
        op = AddMul(i, p, rows[i][j])
        op.apply(rows)
        steps.append(op)


def _normalise(rows: list[NfVector], steps: list) -> None:
    """Leading entries to 1, rows ordered by leading column."""
    ctx = rows[0].ctx if rows else None
    for i, u in enumerate(rows):
        lead = u[u.leading()]
        if lead != 1:
            op = Scale(i, ctx.inv(lead))
            op.apply(rows)
            steps.append(op)
    for i in range(len(rows)):
        best = min(range(i, len(rows)), key=lambda k: rows[k].leading())
        if best != i:
            op = Swap(i, best)
            op.apply(rows)
            steps.append(op)


def ege(M: NfMatrix) -> tuple[GenBasis, GenCertificate]:
    """Expanded Gaussian elimination.

    Returns a basis whose rows meet each column at most once, and a
    certificate that replays the input rows onto it.  Over a field
    (``m == 1``) this is plain RREF and the basis is flagged
    ``field_mode``.
    """
    ctx = M.ctx
    rows, steps = rref_steps(M.rows)
    steps = list(steps)
    field_mode = ctx.m == 1
    if not field_mode:
        triple = find_nd_triple(ctx)
        for j in range(M.n):
            _settle_column(rows, steps, j, triple)
    for i in reversed(range(len(rows))):
        if rows[i].is_zero():
            op = Drop(i)
            op.apply(rows)
            steps.append(op)
    if not field_mode:
        _normalise(rows, steps)
    basis = GenBasis(ctx, M.n, tuple(rows), field_mode)
    if not field_mode and not basis.column_condition():
        raise InternalError("eGe output violates the column condition")
    return basis, GenCertificate(steps)


def gen_membership(basis: GenBasis, v: NfVector) -> tuple[bool, list[int] | None]:
    """Decide ``v in u_1 R + ... + u_k' R`` and return coefficients ``r_i`` if so.

    Each ``r_i`` is read off the row's leading column, then the whole
    combination is checked.  For a field-mode basis the leading columns are
    RREF pivots, so the same rule applies.
    """
    ctx = basis.ctx
    if v.ctx is not ctx or v.n != basis.n:
        raise DimMismatch(f"vector of length {v.n} against a basis in R^{basis.n}")
    coeffs = []
    total = NfVector.zero(ctx, basis.n)
    for u in basis.rows:
        c = u.leading()
        r = ctx.mul(ctx.inv(u[c]), v[c])
        coeffs.append(r)
        total = total + u * r
    if total == v:
        return True, coeffs
    return False, None


def spanning_vectors(ctx: NearfieldCtx, n: int) -> list[NfVector]:
    """``e_1 + e_2, e_1 + e_3, ..., e_1 + e_n``.

    For ``n >= 3`` these n-1 vectors generate R^n.  For ``n == 2`` the single
    vector ``(1, 1)`` only generates its own multiples.
    """
    if ctx.m == 1:
        raise FullyDistributive("over a field n-1 vectors never generate R^n")
    if n < 2:
        raise DimMismatch("need n >= 2")
    e1 = NfVector.unit(ctx, n, 0)
    return [e1 + NfVector.unit(ctx, n, i) for i in range(1, n)]


def generates_everything(vectors: Sequence[NfVector]) -> bool:
    v0 = vectors[0]
    basis, _ = ege(NfMatrix(v0.ctx, v0.n, tuple(vectors)))
    return basis.rank == v0.n and all(len(u.support()) == 1 for u in basis.rows)


def two_vector_generators(ctx: NearfieldCtx, n: int, limit: int | None = None):
    """Yield pairs ``(v, w)`` with ``gen(v, w) = R^n``, searching exhaustively.

    Exploratory only: no claim is made about whether such pairs exist.
    """
    found = 0
    vecs = [NfVector(ctx, t) for t in itertools.product(ctx.elements, repeat=n)
            if any(t)]
    for a, b in itertools.combinations(vecs, 2):
        if generates_everything([a, b]):
            yield a, b
            found += 1
            if limit is not None and found >= limit:
                return

"""Finite Dickson nearfields DN(q, m).

The additive group is that of GF(q^m).  Multiplication is twisted by a
Frobenius power chosen from the *left* operand's coset of the index-``m``
subgroup of the multiplicative group::

    a o b = a * b^(q^k)   where  dlog(a) = (q^k - 1)/(q - 1)  (mod m)

so ``a o (b + c) = a o b + a o c`` always holds while right distributivity
fails as soon as ``m > 1``.  For DN(3, 2) this is the familiar rule
"``a*b`` if ``a`` is a square, ``a*b^3`` otherwise".
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import (
    CapExceeded,
    FullyDistributive,
    InternalError,
    NotDicksonPair,
    NotPrimePower,
    ZeroInverse,
)
from .finite_field import DEFAULT_CAP, FieldCtx, gf_build, prime_factors, prime_power

# exhaustive axiom sweeps up to this order, sampling above it
EXHAUSTIVE_ORDER = 81
DENSE_TABLE_LIMIT = 1024
TABLE_CAP = 729


def dickson_pair_failures(q: int, m: int) -> list[str]:
    """Human-readable list of the Dickson pair conditions that ``(q, m)`` violates."""
    if q < 2 or m < 1:
        raise ValueError("need q >= 2 and m >= 1")
    if prime_power(q) is None:
        raise NotPrimePower(f"{q} is not a prime power")
    reasons = []
    for r in prime_factors(m):
        if (q - 1) % r:
            reasons.append(f"prime divisor {r} of n does not divide q-1 = {q - 1}")
    if q % 4 == 3 and m % 4 == 0:
        reasons.append("q ≡ 3 mod 4 and 4 | n")
    return reasons


def is_dickson_pair(q: int, m: int) -> bool:
    return not dickson_pair_failures(q, m)


@dataclass(frozen=True)
class NDTriple:
    """Witness ``(alpha + beta) o lam != alpha o lam + beta o lam``."""

    alpha: int
    beta: int
    lam: int


class NearfieldCtx:
    """DN(q, m) built on the canonical GF(q^m).

    Elements are the ints of the underlying :class:`FieldCtx`.  Build
    through :func:`dickson_build`.
    """

    def __init__(self, q: int, m: int, field: FieldCtx):
        self.q = q
        self.m = m
        self.field = field
        self.p = field.p
        self.order = field.order
        n1 = self.order - 1
        self.mu_table = tuple(((q**k - 1) // (q - 1)) % m for k in range(m))
        if sorted(self.mu_table) != list(range(m)):
            raise InternalError(f"coset map is not a bijection for ({q}, {m})")
        if n1 % m:
            raise InternalError(f"{m} does not divide |GF({q}^{m})*|")
        self.coset_of = {mu: k for k, mu in enumerate(self.mu_table)}
        self._frob = tuple(pow(q, k, n1) if n1 else 1 for k in range(m))
        # per left operand: the multiplier applied to dlog(b)
        self._twist = (0,) + tuple(self._frob[self.coset_of[field.log_table[a] % m]]
                                   for a in range(1, self.order))

    def __repr__(self) -> str:
        return f"NearfieldCtx(DN({self.q},{self.m}))"

    @property
    def pair(self) -> tuple[int, int]:
        return (self.q, self.m)

    @property
    def elements(self) -> range:
        return range(self.order)

    def frobenius_index(self, a: int) -> int:
        """The ``k`` with ``a o b = a * b^(q^k)``."""
        if a == 0:
            return 0
        return self.coset_of[self.field.log_table[a] % self.m]

    def add(self, a: int, b: int) -> int:
        return self.field.add(a, b)

    def sub(self, a: int, b: int) -> int:
        return self.field.sub(a, b)

    def neg(self, a: int) -> int:
        return self.field.neg(a)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        f = self.field
        n1 = self.order - 1
        return f.exp_table[(f.log_table[a] + f.log_table[b] * self._twist[a]) % n1]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no inverse in a nearfield")
        f = self.field
        n1 = self.order - 1
        k = self.frobenius_index(a)
        # b^(q^k) = a^-1  =>  b = (a^-1)^(q^(m-k))
        b = f.exp_table[(-f.log_table[a] * self._frob[(self.m - k) % self.m]) % n1]
        if self.mul(a, b) != 1 or self.mul(b, a) != 1:
            raise InternalError(f"inverse of {self.render(a)} failed to verify")
        return b

    def render(self, a: int) -> str:
        return self.field.render(a)

    def parse(self, text: str) -> int:
        return self.field.parse(text)

    # -- dense tables for vectorised sweeps ------------------------------------
    def _check_dense(self) -> None:
        if self.order > DENSE_TABLE_LIMIT:
            raise CapExceeded(f"dense tables limited to order {DENSE_TABLE_LIMIT}")

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._check_dense()
        t = np.array([[self.mul(a, b) for b in self.elements] for a in self.elements],
                     dtype=np.int64)
        t.setflags(write=False)
        return t

    @cached_property
    def add_table(self) -> np.ndarray:
        self._check_dense()
        t = np.array([[self.add(a, b) for b in self.elements] for a in self.elements],
                     dtype=np.int64)
        t.setflags(write=False)
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        self._check_dense()
        t = np.array([self.neg(a) for a in self.elements], dtype=np.int64)
        t.setflags(write=False)
        return t

    # -- axiom sweeps -----------------------------------------------------------
    def _sample_triples(self, count: int, seed: int = 0) -> np.ndarray:
        rng = random.Random(seed)
        return np.array([[rng.randrange(self.order) for _ in range(3)] for _ in range(count)],
                        dtype=np.int64)

    def verify_axioms(self, samples: int = 4096) -> None:
        """Check left distributivity and the group axioms on ``R*``.

        Exhaustive for order ``<= EXHAUSTIVE_ORDER``, sampled otherwise.
        Raises :class:`InternalError` on the first failure.
        """
        for a in range(1, self.order):
            self.inv(a)
        if self.order > DENSE_TABLE_LIMIT:
            for a, b, c in self._sample_triples(samples).tolist():
                if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                    raise InternalError("left distributivity fails")
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                    raise InternalError("multiplication is not associative")
            return
        M, A = self.mul_table, self.add_table
        if self.order <= EXHAUSTIVE_ORDER:
            a, b, c = np.meshgrid(*(np.arange(self.order),) * 3, indexing="ij")
            a, b, c = a.ravel(), b.ravel(), c.ravel()
        else:
            a, b, c = self._sample_triples(samples).T
        if not np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]]):
            raise InternalError("left distributivity fails")
        if not np.array_equal(M[M[a, b], c], M[a, M[b, c]]):
            raise InternalError("multiplication is not associative")
        if not (np.array_equal(M[1], np.arange(self.order))
                and np.array_equal(M[:, 1], np.arange(self.order))):
            raise InternalError("1 is not a two-sided identity")
        if M[0].any() or M[:, 0].any():
            raise InternalError("0 is not absorbing")


@lru_cache(maxsize=None)
def _cached_build(q: int, m: int) -> NearfieldCtx:
    p, l = prime_power(q)
    ctx = NearfieldCtx(q, m, gf_build(p, l * m))
    ctx.verify_axioms()
    return ctx


def dickson_build(q: int, m: int, cap: int = DEFAULT_CAP) -> NearfieldCtx:
    """Construct DN(q, m); axioms are checked once per pair."""
    if not is_dickson_pair(q, m):
        raise NotDicksonPair(f"({q}, {m}) is not a Dickson pair: "
                             + "; ".join(dickson_pair_failures(q, m)))
    if q**m > cap:
        raise CapExceeded(f"DN({q},{m}) has {q**m} elements, cap is {cap}")
    return _cached_build(q, m)


def distributive_elements(ctx: NearfieldCtx) -> frozenset[int]:
    """The set ``R_d`` of right-distributive elements, found exhaustively.

    The result is checked to be a subfield of size ``q``.
    """
    els = ctx.elements
    if ctx.order <= DENSE_TABLE_LIMIT:
        M, A = ctx.mul_table, ctx.add_table
        x, y = np.meshgrid(np.arange(ctx.order), np.arange(ctx.order), indexing="ij")
        x, y = x.ravel(), y.ravel()
        s = A[x, y]
        found = frozenset(z for z in els
                          if np.array_equal(M[s, z], A[M[x, z], M[y, z]]))
    else:
        found = frozenset(
            z for z in els
            if all(ctx.mul(ctx.add(x, y), z) == ctx.add(ctx.mul(x, z), ctx.mul(y, z))
                   for x in els for y in els))
    if len(found) != ctx.q:
        raise InternalError(f"|R_d| = {len(found)}, expected {ctx.q}")
    for a in found:
        if ctx.neg(a) not in found or (a and ctx.inv(a) not in found):
            raise InternalError("R_d is not closed under inverses")
        for b in found:
            if ctx.add(a, b) not in found or ctx.mul(a, b) not in found:
                raise InternalError("R_d is not closed under + and o")
    return found


def is_nd_triple(ctx: NearfieldCtx, t: NDTriple) -> bool:
    lhs = ctx.mul(ctx.add(t.alpha, t.beta), t.lam)
    return lhs != ctx.add(ctx.mul(t.alpha, t.lam), ctx.mul(t.beta, t.lam))


def nd_defect(ctx: NearfieldCtx, t: NDTriple) -> int:
    """``(alpha + beta) lam - alpha lam - beta lam``."""
    lhs = ctx.mul(ctx.add(t.alpha, t.beta), t.lam)
    return ctx.sub(ctx.sub(lhs, ctx.mul(t.alpha, t.lam)), ctx.mul(t.beta, t.lam))


@lru_cache(maxsize=None)
def find_nd_triple(ctx: NearfieldCtx) -> NDTriple:
    """First triple, in canonical element order, where right distributivity fails."""
    if ctx.m == 1:
        raise FullyDistributive(f"DN({ctx.q},1) is a field")
    for alpha in ctx.elements:
        for beta in ctx.elements:
            for lam in ctx.elements:
                t = NDTriple(alpha, beta, lam)
                if is_nd_triple(ctx, t):
                    return t
    raise InternalError("no non-distributive triple in a proper nearfield")


def cayley_table(ctx: NearfieldCtx, cap: int = TABLE_CAP) -> list[list[int]]:
    """``table[a][b] = a o b`` in canonical element order."""
    if ctx.order > cap:
        raise CapExceeded(f"table of order {ctx.order} exceeds cap {cap}")
    return [[ctx.mul(a, b) for b in ctx.elements] for a in ctx.elements]


def table_ascii(ctx: NearfieldCtx, table: list[list[int]]) -> str:
    labels = [ctx.render(a) for a in ctx.elements]
    width = max(len(s) for s in labels)
    fmt = lambda s: s.rjust(width)  # noqa: E731
    head = fmt("o") + " | " + " ".join(fmt(s) for s in labels)
    lines = [head, "-" * len(head)]
    for a, row in zip(labels, table):
        lines.append(fmt(a) + " | " + " ".join(fmt(ctx.render(v)) for v in row))
    return "\n".join(lines)


def table_csv(ctx: NearfieldCtx, table: list[list[int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    labels = [ctx.render(a) for a in ctx.elements]
    w.writerow(["o"] + labels)
    for a, row in zip(labels, table):
        w.writerow([a] + [ctx.render(v) for v in row])
    return buf.getvalue()


def table_json(ctx: NearfieldCtx, table: list[list[int]]) -> str:
    return json.dumps({
        "pair": [ctx.q, ctx.m],
        "elements": [ctx.render(a) for a in ctx.elements],
        "entries": [ctx.render(v) for row in table for v in row],
    })

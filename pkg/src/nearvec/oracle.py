"""Brute-force ground truth for small R^n.

Everything here works from the definitions alone, on explicit vector
sets: closures under addition and right scalar multiplication, the
stage-wise linear-combination sets ``LC_i``, and the submodule condition
``(m + s) r - m r in N`` quantified over the whole module.  Nothing
here calls the elimination engines.

Vectors are packed into int64 keys (first coordinate most significant),
so sorting keys sorts vectors lexicographically in canonical element
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .dickson import NearfieldCtx
from .errors import CapExceeded, NotDirect
from .vectors import NfVector

DEFAULT_CAP = 10**5
SPAN_CAP = 10**3
_CHUNK = 1 << 20


def _as_array(ctx: NearfieldCtx, n: int, vectors: Iterable) -> np.ndarray:
    rows = [tuple(v) for v in vectors]
    if any(len(r) != n for r in rows):
        raise ValueError(f"all vectors must have length {n}")
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def _weights(ctx: NearfieldCtx, n: int) -> np.ndarray:
    return ctx.order ** np.arange(n - 1, -1, -1, dtype=np.int64)


def encode(ctx: NearfieldCtx, arr: np.ndarray) -> np.ndarray:
    return arr @ _weights(ctx, arr.shape[1])


def decode(ctx: NearfieldCtx, n: int, keys: np.ndarray) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    return (keys[:, None] // _weights(ctx, n)[None, :]) % ctx.order


@dataclass(eq=False)
class VectorSet:
    """A deduplicated finite set of vectors of R^n."""

    ctx: NearfieldCtx
    n: int
    keys: np.ndarray
    stage: str = "closure"
    stabilization: int | None = None
    flags: dict = field(default_factory=dict)

    def __post_init__(self):
        self.keys = np.unique(np.asarray(self.keys, dtype=np.int64))

    @classmethod
    def from_vectors(cls, ctx: NearfieldCtx, n: int, vectors: Iterable, **kw) -> VectorSet:
        arr = _as_array(ctx, n, vectors)
        return cls(ctx, n, encode(ctx, arr) if len(arr) else np.empty(0, np.int64), **kw)

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, v) -> bool:
        key = int(encode(self.ctx, _as_array(self.ctx, self.n, [v]))[0])
        i = np.searchsorted(self.keys, key)
        return bool(i < len(self.keys) and self.keys[i] == key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorSet):
            return NotImplemented
        return (self.ctx is other.ctx and self.n == other.n
                and np.array_equal(self.keys, other.keys))

    def issubset(self, other: VectorSet) -> bool:
        return bool(np.isin(self.keys, other.keys, assume_unique=True).all())

    def array(self) -> np.ndarray:
        return decode(self.ctx, self.n, self.keys)

    def vectors(self) -> list[NfVector]:
        return [NfVector(self.ctx, row) for row in self.array().tolist()]

    def to_text(self) -> str:
        """Sorted vector literals, one per line, for diffing."""
        return "".join(v.render() + "\n" for v in self.vectors())


# -- closure machinery ------------------------------------------------------------

def _check_cap(ctx: NearfieldCtx, n: int, cap: int) -> None:
    if ctx.order**n > cap:
        raise CapExceeded(f"|R|^n = {ctx.order**n} exceeds oracle cap {cap}")


class _Closure:
    """Growing additive subgroup with an O(1) membership bitmap."""

    def __init__(self, ctx: NearfieldCtx, n: int):
        self.ctx, self.n = ctx, n
        self.A, self.M = ctx.add_table, ctx.mul_table
        self.member = np.zeros(ctx.order**n, dtype=bool)
        self.member[0] = True
        self.elems = np.zeros((1, n), dtype=np.int64)

    def absorb(self, g: np.ndarray) -> bool:
        """Enlarge to the subgroup generated by the current one and ``g``."""
        if self.member[int(encode(self.ctx, g[None, :])[0])]:
            return False
        # g has prime additive order p, so G + <g> is p disjoint cosets
        cosets, shift = [self.elems], g.copy()
        for _ in range(self.ctx.p - 1):
            cosets.append(self.A[self.elems, shift[None, :]])
            shift = self.A[shift, g]
        self.elems = np.concatenate(cosets)
        self.member[encode(self.ctx, self.elems)] = True
        return True

    def absorb_all(self, vecs: np.ndarray) -> None:
        for g in vecs:
            self.absorb(g)

    def scalar_images(self) -> np.ndarray:
        """All ``w o r`` for ``w`` in the set, ``r`` in R, as unique rows."""
        r = np.arange(self.ctx.order)
        prods = self.M[self.elems[:, :, None], r[None, None, :]]
        prods = prods.transpose(0, 2, 1).reshape(-1, self.n)
        keys = np.unique(encode(self.ctx, prods))
        return decode(self.ctx, self.n, keys)

    def missing(self, vecs: np.ndarray) -> np.ndarray:
        if not len(vecs):
            return vecs
        return vecs[~self.member[encode(self.ctx, vecs)]]

    def close_scalars(self) -> int:
        rounds = 0
        while True:
            new = self.missing(self.scalar_images())
            if not len(new):
                return rounds
            self.absorb_all(new)
            rounds += 1

    def result(self, **kw) -> VectorSet:
        return VectorSet(self.ctx, self.n, encode(self.ctx, self.elems), **kw)


def _width(vectors: Sequence, n: int | None) -> int:
    if n is not None:
        return n
    if not vectors:
        raise ValueError("pass n explicitly for an empty vector list")
    return len(vectors[0])


def _next_lc(stage: VectorSet, k: int) -> VectorSet:
    ctx, n = stage.ctx, stage.n
    cl = _Closure(ctx, n)
    arr = stage.array()
    r = np.arange(ctx.order)
    prods = ctx.mul_table[arr[:, :, None], r[None, None, :]].transpose(0, 2, 1).reshape(-1, n)
    cl.absorb_all(decode(ctx, n, np.unique(encode(ctx, prods))))
    return cl.result(stage=f"LC_{k}")


def lc_stage(ctx: NearfieldCtx, vectors: Sequence, i: int, n: int | None = None,
             cap: int = DEFAULT_CAP) -> VectorSet:
    """``LC_0`` is the input set; ``LC_{i+1}`` is the additive closure of
    ``{w o lam : w in LC_i, lam in R}``."""
    n = _width(vectors, n)
    _check_cap(ctx, n, cap)
    stage = VectorSet.from_vectors(ctx, n, vectors, stage="LC_0")
    for k in range(1, i + 1):
        stage = _next_lc(stage, k)
    return stage


def lc_union(ctx: NearfieldCtx, vectors: Sequence, n: int | None = None,
             cap: int = DEFAULT_CAP) -> VectorSet:
    """Union of the ``LC_i``: iterate until a stage repeats.

    Stages are nested, so the union is the last stage; ``stabilization`` is
    the first ``i`` with ``LC_{i+1} == LC_i``.
    """
    stage = lc_stage(ctx, vectors, 0, n, cap)
    i = 0
    while True:
        nxt = _next_lc(stage, i + 1)
        if nxt == stage:
            return VectorSet(ctx, stage.n, stage.keys, stage="union", stabilization=i)
        stage, i = nxt, i + 1


def gen_bruteforce(ctx: NearfieldCtx, vectors: Sequence, n: int | None = None,
                   cap: int = DEFAULT_CAP) -> VectorSet:
    """Fixpoint of closing under ``+`` and right scalar multiplication."""
    n = _width(vectors, n)
    _check_cap(ctx, n, cap)
    cl = _Closure(ctx, n)
    if vectors:
        cl.absorb_all(_as_array(ctx, n, vectors))
    rounds = cl.close_scalars()
    return cl.result(stabilization=rounds)


def _defect_tables(ctx: NearfieldCtx) -> np.ndarray:
    """``T[r, m, s] = (m + s) o r - m o r`` for scalars ``m, s, r``."""
    A, M, N = ctx.add_table, ctx.mul_table, ctx.neg_table
    e = np.arange(ctx.order)
    mr = M[e[:, None], e[None, :]]                      # [m, r]
    sums = A[e[:, None], e[None, :]]                    # [m, s]
    out = np.empty((ctx.order,) * 3, dtype=np.int64)
    for r in e:
        out[r] = A[M[sums, r], N[mr[:, r]][:, None]]
    return out


def _module_images(ctx: NearfieldCtx, n: int, S: np.ndarray, T: np.ndarray, r: int):
    """Keys of ``(m + s) o r - m o r`` over all ``m`` in R^n, ``s`` in ``S``,
    yielded in chunks of ``m``."""
    w = _weights(ctx, n)
    allm = decode(ctx, n, np.arange(ctx.order**n, dtype=np.int64))
    step = max(1, _CHUNK // max(1, len(S)))
    for lo in range(0, len(allm), step):
        m = allm[lo:lo + step]
        keys = np.zeros((len(m), len(S)), dtype=np.int64)
        for i in range(n):
            keys += T[r][m[:, i][:, None], S[:, i][None, :]] * w[i]
        yield m, keys


def span_bruteforce(ctx: NearfieldCtx, vectors: Sequence, n: int | None = None,
                    cap: int = SPAN_CAP) -> VectorSet:
    """Smallest subgroup closed under scalars and ``(m + s) r - m r`` for every ``m``."""
    n = _width(vectors, n)
    _check_cap(ctx, n, cap)
    cl = _Closure(ctx, n)
    if vectors:
        cl.absorb_all(_as_array(ctx, n, vectors))
    cl.close_scalars()
    T = _defect_tables(ctx)
    rounds = 0
    full = ctx.order**n
    while len(cl.elems) < full:
        grew = False
        for r in range(ctx.order):
            for _, keys in _module_images(ctx, n, cl.elems, T, r):
                new = np.unique(keys[~cl.member[keys]])
                if len(new):
                    cl.absorb_all(decode(ctx, n, new))
                    grew = True
            if grew:
                break
        if not grew:
            break
        cl.close_scalars()
        rounds += 1
    return cl.result(stabilization=rounds)


# -- predicates --------------------------------------------------------------------

def _bitmap(s: VectorSet) -> np.ndarray:
    bm = np.zeros(s.ctx.order**s.n, dtype=bool)
    bm[s.keys] = True
    return bm


def is_additive_subgroup(s: VectorSet) -> bool:
    if not len(s) or s.keys[0] != 0:
        return False
    bm = _bitmap(s)
    arr = s.array()
    A = s.ctx.add_table
    step = max(1, _CHUNK // len(arr))
    for lo in range(0, len(arr), step):
        sums = A[arr[lo:lo + step, None, :], arr[None, :, :]].reshape(-1, s.n)
        if not bm[encode(s.ctx, sums)].all():
            return False
    return True


def is_rsubgroup_set(s: VectorSet) -> bool:
    """Additive subgroup with ``S R`` contained in ``S``."""
    if not is_additive_subgroup(s):
        s.flags["rsubgroup"] = False
        return False
    bm = _bitmap(s)
    arr = s.array()
    r = np.arange(s.ctx.order)
    prods = s.ctx.mul_table[arr[:, :, None], r[None, None, :]].transpose(0, 2, 1).reshape(-1, s.n)
    ok = bool(bm[encode(s.ctx, prods)].all())
    s.flags["rsubgroup"] = ok
    return ok


def subspace_violation(s: VectorSet, cap: int = SPAN_CAP) -> tuple[NfVector, NfVector, int] | None:
    """First ``(m, s, r)`` with ``(m + s) o r - m o r`` outside the set, or ``None``."""
    ctx, n = s.ctx, s.n
    _check_cap(ctx, n, cap)
    bm = _bitmap(s)
    S = s.array()
    T = _defect_tables(ctx)
    for r in range(ctx.order):
        for m, keys in _module_images(ctx, n, S, T, r):
            bad = ~bm[keys]
            if bad.any():
                i, j = np.argwhere(bad)[0]
                return NfVector(ctx, m[i].tolist()), NfVector(ctx, S[j].tolist()), r
    return None


def is_subspace_set(s: VectorSet, cap: int = SPAN_CAP) -> bool:
    """Additive subgroup satisfying the submodule condition for all ``m`` in R^n.

    A violating triple, if any, is stored in ``s.flags["witness"]``.
    """
    if not is_additive_subgroup(s):
        s.flags["subspace"] = False
        return False
    w = subspace_violation(s, cap)
    s.flags["subspace"] = w is None
    if w is not None:
        s.flags["witness"] = w
    return w is None


def enumerate_basis(basis, ctx: NearfieldCtx | None = None, cap: int = DEFAULT_CAP) -> VectorSet:
    """All sums ``u_1 o r_1 + ... + u_k o r_k``; must have exactly ``|R|^k`` elements.

    Accepts a :class:`~nearvec.gen.GenBasis` or, with ``ctx``, a
    :class:`~nearvec.span.CoordMask`.
    """
    if hasattr(basis, "included"):
        if ctx is None:
            raise ValueError("enumerating a CoordMask needs the nearfield")
        rows = [tuple(u) for u in basis.units(ctx)]
    else:
        ctx = basis.ctx
        rows = [tuple(u) for u in basis.rows]
    n = basis.n
    k = len(rows)
    if ctx.order**k > cap:
        raise CapExceeded(f"|R|^{k} = {ctx.order**k} exceeds oracle cap {cap}")
    A, M = ctx.add_table, ctx.mul_table
    r = np.arange(ctx.order)
    acc = np.zeros((1, n), dtype=np.int64)
    for u in rows:
        multiples = M[np.array(u)[None, :], r[:, None]]          # [r, coord]
        acc = A[acc[:, None, :], multiples[None, :, :]].reshape(-1, n)
    out = VectorSet(ctx, n, encode(ctx, acc), stage="basis")
    if len(out) != ctx.order**k:
        raise NotDirect(f"{len(out)} distinct sums, expected {ctx.order**k}")
    return out


def classical_row_space(p: int, rows: Sequence[Sequence[int]], n: int) -> set[tuple[int, ...]]:
    """Row space over the prime field Z_p by textbook mod-p RREF.

    Elements of GF(p) and of DN(p, 1) coincide with the integers ``0..p-1``.
    """
    mat = [list(r) for r in rows]
    piv_row = 0
    basis = []
    for col in range(n):
        pr = next((i for i in range(piv_row, len(mat)) if mat[i][col] % p), None)
        if pr is None:
            continue
        mat[piv_row], mat[pr] = mat[pr], mat[piv_row]
        inv = pow(mat[piv_row][col], -1, p)
        mat[piv_row] = [x * inv % p for x in mat[piv_row]]
        for i in range(len(mat)):
            if i != piv_row and mat[i][col] % p:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[piv_row])]
        basis.append(mat[piv_row])
        piv_row += 1
    space = {(0,) * n}
    for b in basis:
        space = {tuple((x + c * y) % p for x, y in zip(v, b)) for v in space for c in range(p)}
    return space

"""Table-backed arithmetic in GF(p^l).

An element is an ``int`` in ``[0, p^l)`` whose base-``p`` digits are the
polynomial coefficients, constant term least significant.  So over GF(9)
with modulus ``x^2 + 1`` the elements in ascending order are
``0, 1, 2, x, 1+x, 2+x, 2x, 1+2x, 2+2x``.

Multiplication has two independent paths: discrete-log tables and direct
polynomial reduction.  ``FieldCtx.mul`` uses the tables and
``FieldCtx.mul_poly`` reduces; the test-suite checks they agree.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import textio
from .errors import CapExceeded, InternalError, NonPrime, ZeroArgument, ZeroInverse

DEFAULT_CAP = 2**20
_DENSE_ADD_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in ascending order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, l)`` with ``q == p**l`` for prime ``p``, else ``None``."""
    if q < 2:
        return None
    fs = prime_factors(q)
    if len(fs) != 1:
        return None
    p, l = fs[0], 0
    while q > 1:
        q //= p
        l += 1
    return p, l


# -- polynomials over Z_p: coefficient lists, constant term first -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), f, p)
        base = poly_mod(poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` (constant term first)."""
    l = len(f) - 1
    if l < 1:
        return False
    if l == 1:
        return True
    x = [0, 1]
    if _poly_sub(poly_powmod(x, p**l, f, p), x, p):
        return False
    for d in prime_factors(l):
        h = _poly_sub(poly_powmod(x, p ** (l // d), f, p), x, p)
        if len(poly_gcd(f, h, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, l: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``l``.

    Candidates are ordered by ``(c_{l-1}, ..., c_0)`` ascending, which is
    plain integer order of the lower coefficients read in base ``p``.
    """
    for t in range(p**l):
        low = [(t // p**i) % p for i in range(l)]
        f = tuple(low) + (1,)
        if is_irreducible(f, p):
            return f
    raise InternalError(f"no irreducible polynomial of degree {l} over Z_{p}")


class FieldCtx:
    """The field GF(p^l) with fixed modulus and generator.

    Build through :func:`gf_build`; instances are treated as immutable.
    """

    def __init__(self, p: int, l: int, modulus: Sequence[int]):
        self.p = p
        self.l = l
        self.modulus = tuple(modulus)
        self.order = p**l
        self._pows = [p**i for i in range(l)]
        self.generator = self._find_generator()
        n1 = self.order - 1
        exp = [0] * n1
        log = [-1] * self.order
        a = 1
        for i in range(n1):
            exp[i] = a
            log[a] = i
            a = self.mul_poly(a, self.generator)
        if a != 1 or any(log[b] < 0 for b in range(1, self.order)):
            raise InternalError("generator does not have full multiplicative order")
        self.exp_table = tuple(exp)
        self.log_table = tuple(log)
        if self.order <= _DENSE_ADD_LIMIT:
            self._add = [[self._add_digits(a, b) for b in range(self.order)]
                         for a in range(self.order)]
        else:
            self._add = None
        self._neg = tuple(self._neg_digits(a) for a in range(self.order)) \
            if self.order <= DEFAULT_CAP else None

    def __repr__(self) -> str:
        return f"FieldCtx(GF({self.p}^{self.l}), modulus={self.render_modulus()})"

    # -- representation ---------------------------------------------------
    def to_coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // w) % self.p for w in self._pows)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.l:
            raise ValueError(f"too many coefficients for GF({self.p}^{self.l})")
        return sum((c % self.p) * w for c, w in zip(coeffs, self._pows))

    def render(self, a: int) -> str:
        return textio.render_coeffs(self.to_coeffs(a))

    def parse(self, text: str) -> int:
        return self.from_coeffs(textio.parse_coeffs(text, self.p, self.l))

    def render_modulus(self) -> str:
        # leading term included, so render directly rather than as an element
        return textio.render_coeffs(self.modulus)

    @property
    def elements(self) -> range:
        return range(self.order)

    # -- additive structure -------------------------------------------------
    def _add_digits(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out = 0
        for w in self._pows:
            out += ((a // w + b // w) % self.p) * w
        return out

    def _neg_digits(self, a: int) -> int:
        out = 0
        for w in self._pows:
            out += ((-(a // w)) % self.p) * w
        return out

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a] if self._neg is not None else self._neg_digits(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- multiplicative structure -------------------------------------------
    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.order - 1)]

    def mul_poly(self, a: int, b: int) -> int:
        prod = poly_mul(self.to_coeffs(a), self.to_coeffs(b), self.p)
        return self.from_coeffs(poly_mod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self.exp_table[(-self.log_table[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroInverse("negative power of 0")
            return 0
        return self.exp_table[(self.log_table[a] * e) % (self.order - 1)]

    def dlog(self, a: int) -> int:
        """Index ``i`` in ``[0, order-1)`` with ``generator**i == a``."""
        if a == 0:
            raise ZeroArgument("discrete log of 0 is undefined")
        return self.log_table[a]

    def _find_generator(self) -> int:
        n1 = self.order - 1
        if n1 == 1:
            return 1
        cofactors = [n1 // r for r in prime_factors(n1)]
        for g in range(2, self.order):
            gc = self.to_coeffs(g)
            if all(self.from_coeffs(poly_powmod(gc, e, self.modulus, self.p)) != 1
                   for e in cofactors):
                return g
        raise InternalError("no primitive element found")


@lru_cache(maxsize=None)
def _cached_build(p: int, l: int) -> FieldCtx:
    return FieldCtx(p, l, smallest_irreducible(p, l))


def gf_build(p: int, l: int, cap: int = DEFAULT_CAP) -> FieldCtx:
    """Deterministically construct GF(p^l)."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if l < 1:
        raise ValueError("extension degree must be >= 1")
    if p**l > cap:
        raise CapExceeded(f"GF({p}^{l}) has {p**l} elements, cap is {cap}")
    return _cached_build(p, l)

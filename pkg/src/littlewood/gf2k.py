"""Binary fields GF(2^k) with discrete-log tables and the absolute trace.

Field elements are bitmasks over the polynomial basis.  The field for each k
uses the lexicographically smallest primitive polynomial of degree k, so the
construction is deterministic; the antilog table lists the powers of the
canonical primitive element theta = x.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class FieldGF2k:
    k: int
    primitive_polynomial: int
    antilog: array  # antilog[i] = theta^i for i in [0, 2^k - 1)
    trace: bytes    # trace[x] = Tr(x) in {0, 1} for every field element x
    _log: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return (1 << self.k) - 1

    def log(self, x: int) -> int:
        """Discrete log of a nonzero element with respect to theta."""
        if not self._log:
            self._log.update({e: i for i, e in enumerate(self.antilog)})
        try:
            return self._log[x]
        except KeyError:
            raise ValueError(f"{x} is not a nonzero field element") from None


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _gf2_mulmod(a: int, b: int, poly: int, k: int) -> int:
    r = 0
    top = 1 << k
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


def _gf2_powmod(a: int, e: int, poly: int, k: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _gf2_mulmod(r, a, poly, k)
        a = _gf2_mulmod(a, a, poly, k)
        e >>= 1
    return r


def _prime_factors(n: int) -> list[int]:
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


def _is_irreducible(poly: int, k: int) -> bool:
    # Rabin's test: x^(2^k) == x mod poly, and gcd(x^(2^(k/r)) - x, poly) = 1
    # for every prime r dividing k.
    s = 2  # x
    powers = [s]
    for _ in range(k):
        s = _gf2_mulmod(s, s, poly, k)
        powers.append(s)
    if powers[k] != 2:
        return False
    for r in _prime_factors(k):
        if _gf2_gcd(powers[k // r] ^ 2, poly) != 1:
            return False
    return True


def _is_primitive(poly: int, k: int) -> bool:
    if not _is_irreducible(poly, k):
        return False
    order = (1 << k) - 1
    for r in _prime_factors(order):
        if _gf2_powmod(2, order // r, poly, k) == 1:
            return False
    return True


@lru_cache(maxsize=None)
def build_gf2k(k: int) -> FieldGF2k:
    """Construct GF(2^k) for 2 <= k <= 24.

    Selects the lexicographically smallest primitive polynomial of degree k,
    then fills the antilog table by repeated multiplication by theta and the
    trace table from the traces of the basis elements (the trace is
    GF(2)-linear, so Tr reduces to a masked popcount parity).
    """
    if not 2 <= k <= 24:
        raise ValueError("k must satisfy 2 <= k <= 24")
    poly = next(
        cand
        for cand in range((1 << k) | 1, 1 << (k + 1), 2)
        if _is_primitive(cand, k)
    )

    order = (1 << k) - 1
    antilog = array("l", bytes(0))
    x = 1
    for _ in range(order):
        antilog.append(x)
        x = _gf2_mulmod(x, 2, poly, k)
    if x != 1:
        raise AssertionError("antilog table failed to close")

    trace_mask = 0
    for i in range(k):
        e = 1 << i
        t = 0
        for _ in range(k):
            t ^= e
            e = _gf2_mulmod(e, e, poly, k)
        if t not in (0, 1):
            raise AssertionError("trace of a basis element must be 0 or 1")
        trace_mask |= t << i
    trace = bytes((x & trace_mask).bit_count() & 1 for x in range(1 << k))

    return FieldGF2k(k, poly, antilog, trace)


def galois(k: int, beta: int = 1) -> tuple[int, ...]:
    """Coefficients of the Galois polynomial of length 2^k - 1.

    Coefficient j is (-1)^Tr(beta * theta^j) for the canonical primitive
    element theta; beta != 0 selects the additive character.
    """
    if beta == 0:
        raise ValueError("beta must be nonzero (the character must be nontrivial)")
    fld = build_gf2k(k)
    offset = fld.log(beta)
    order = fld.order
    antilog, trace = fld.antilog, fld.trace
    return tuple(
        -1 if trace[antilog[(offset + j) % order]] else 1 for j in range(order)
    )

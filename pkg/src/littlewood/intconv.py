"""Exact convolution of integer coefficient sequences.

Schoolbook multiplication below a size threshold; above it, number-theoretic
transforms modulo a few 30-bit primes with CRT reconstruction.  The moduli
are chosen per multiplication from an a-priori coefficient bound, so results
are exact for arbitrarily large integer inputs.
"""
from __future__ import annotations

# (prime, primitive root); each prime is c * 2^e + 1 with 2^e >= 2^21, so
# transforms up to length 2^21 are supported by every listed modulus.
_NTT_PRIMES = (
    (998244353, 3),
    (1004535809, 3),
    (469762049, 3),
    (167772161, 3),
    (754974721, 11),
)
_MAX_NTT_LEN = 1 << 21

# schoolbook is faster below roughly this many coefficient products
_SCHOOLBOOK_CUTOFF = 1 << 14


_MAX_MODULUS_PRODUCT = 1
for _p, _ in _NTT_PRIMES:
    _MAX_MODULUS_PRODUCT *= _p


def convolve(a, b) -> list[int]:
    """Exact linear convolution of two integer sequences."""
    if not a or not b:
        return []
    if len(a) * len(b) <= _SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b)
    out_len = len(a) + len(b) - 1
    if out_len > _MAX_NTT_LEN or 2 * _coefficient_bound(a, b) + 1 > _MAX_MODULUS_PRODUCT:
        # outside NTT capacity: fall back to the always-correct route
        return _schoolbook(a, b)
    return _ntt_convolve(a, b)


def _schoolbook(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _coefficient_bound(a, b) -> int:
    sum_a = sum(abs(c) for c in a)
    sum_b = sum(abs(c) for c in b)
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    return min(sum_a * max_b, max_a * sum_b)


def _ntt_convolve(a, b) -> list[int]:
    out_len = len(a) + len(b) - 1
    size = 1
    while size < out_len:
        size <<= 1
    if size > _MAX_NTT_LEN:
        raise ValueError(f"convolution length {out_len} exceeds NTT capacity")

    bound = 2 * _coefficient_bound(a, b) + 1
    moduli: list[tuple[int, int]] = []
    acc = 1
    for prime, root in _NTT_PRIMES:
        moduli.append((prime, root))
        acc *= prime
        if acc > bound:
            break
    else:
        raise ValueError("coefficient bound exceeds available moduli")

    residues = []
    for prime, root in moduli:
        fa = [c % prime for c in a] + [0] * (size - len(a))
        fb = [c % prime for c in b] + [0] * (size - len(b))
        _ntt(fa, prime, root, invert=False)
        _ntt(fb, prime, root, invert=False)
        fa = [x * y % prime for x, y in zip(fa, fb)]
        _ntt(fa, prime, root, invert=True)
        residues.append(fa[:out_len])

    return _crt_signed(residues, [m for m, _ in moduli], out_len)


def _ntt(vec: list[int], prime: int, root: int, invert: bool) -> None:
    n = len(vec)
    j = 0
    for i in range(1, n):
        bit = n >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            vec[i], vec[j] = vec[j], vec[i]
    length = 2
    while length <= n:
        w_len = pow(root, (prime - 1) // length, prime)
        if invert:
            w_len = pow(w_len, prime - 2, prime)
        half = length >> 1
        ws = [1] * half
        for i in range(1, half):
            ws[i] = ws[i - 1] * w_len % prime
        for start in range(0, n, length):
            for k, w in zip(range(start, start + half), ws):
                u = vec[k]
                v = vec[k + half] * w % prime
                vec[k] = (u + v) % prime
                vec[k + half] = (u - v) % prime
        length <<= 1
    if invert:
        n_inv = pow(n, prime - 2, prime)
        for i in range(n):
            vec[i] = vec[i] * n_inv % prime


def _crt_signed(residues: list[list[int]], moduli: list[int], out_len: int) -> list[int]:
    modulus = 1
    for m in moduli:
        modulus *= m
    out = residues[0][:]
    acc_mod = moduli[0]
    for res, m in zip(residues[1:], moduli[1:]):
        inv = pow(acc_mod, -1, m)
        for i in range(out_len):
            diff = (res[i] - out[i]) % m
            out[i] += acc_mod * (diff * inv % m)
        acc_mod *= m
    half = modulus >> 1
    return [x - modulus if x > half else x for x in out]

"""Dense univariate polynomials with exact rational coefficients.

A polynomial is a tuple of coefficients, constant term first; the zero
polynomial is the empty tuple.  Coefficients may be `int` or `Fraction`;
results stay exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Coeffs = tuple  # coefficient tuple, low degree first; () is the zero polynomial


def poly_trim(c: Sequence) -> Coeffs:
    """Drop trailing zero coefficients."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def poly_degree(c: Sequence) -> int:
    """Degree of a trimmed polynomial; the zero polynomial has degree -1."""
    return len(c) - 1


def poly_add(a: Sequence, b: Sequence) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, cb in enumerate(b):
        out[i] += cb
    return poly_trim(out)


def poly_neg(a: Sequence) -> Coeffs:
    return tuple(-c for c in a)


def poly_sub(a: Sequence, b: Sequence) -> Coeffs:
    return poly_add(a, poly_neg(b))


def poly_scale(a: Sequence, s) -> Coeffs:
    if s == 0:
        return ()
    return tuple(c * s for c in a)


def poly_mul(a: Sequence, b: Sequence) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_trim(out)


def poly_eval(a: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_derivative(a: Sequence) -> Coeffs:
    return tuple(i * c for i, c in enumerate(a))[1:]


def poly_compose_affine(a: Sequence, alpha, beta) -> Coeffs:
    """Coefficients of p(alpha*x + beta), by Horner over the linear map."""
    acc: Coeffs = ()
    lin = poly_trim((beta, alpha))
    for c in reversed(a):
        acc = poly_add(poly_mul(acc, lin), (c,))
    return acc


def poly_range(a: Sequence, lo, hi) -> tuple[Fraction, Fraction]:
    """Rational bounds [A, B] enclosing the range of p on [lo, hi].

    Interval-arithmetic Horner; sound but not tight.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    alo = ahi = Fraction(0)
    for c in reversed(a):
        prods = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(prods) + c, max(prods) + c
    return alo, ahi

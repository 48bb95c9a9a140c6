"""Tests for the limit recursions, direct partition sums, triangles, and phi."""
import math
import random
from fractions import Fraction

import pytest

from littlewood.partitions import enumerate_set_partitions
from littlewood.limits import (
    fekete_limit_direct,
    fekete_limit_recursive,
    fekete_triangle_row,
    galois_limit_direct,
    galois_limit_recursive,
    galois_triangle_row,
    limit_table,
    phi_min,
    phi_piecewise,
    shifted_fekete_limit,
)
from littlewood.special_numbers import carlitz_numbers, tangent_numbers

FEKETE_LIMITS = [
    Fraction(1),
    Fraction(5, 3),
    Fraction(19, 5),
    Fraction(3469, 315),
    Fraction(21565, 567),
    Fraction(7760593, 51975),
    Fraction(12478099, 19305),
    Fraction(643983856759, 212837625),
]

GALOIS_LIMITS = [
    Fraction(1),
    Fraction(4, 3),
    Fraction(11, 5),
    Fraction(92, 21),
    Fraction(15481, 1512),
    Fraction(411913, 15120),
    Fraction(2482927, 30888),
    Fraction(4181926481, 16216200),
]

PHI_QUARTER = [
    Fraction(1),
    Fraction(7, 6),
    Fraction(31, 20),
    Fraction(653, 280),
    Fraction(71735, 18144),
    Fraction(24880549, 3326400),
    Fraction(72207143, 4633200),
    Fraction(960901090937, 27243216000),
]

FEKETE_ROWS = {
    1: (1,),
    2: (-2, 10, -2),
    3: (16, -184, 456, -184, 16),
    4: (-272, 5776, -30736, 55504, -30736, 5776, -272),
}

GALOIS_ROWS = {
    1: (1,),
    2: (-1, 8, -1),
    3: (4, -76, 264, -76, 4),
    4: (-33, 1248, -9735, 22080, -9735, 1248, -33),
}


def test_published_fekete_limits():
    assert [fekete_limit_recursive(q) for q in range(1, 9)] == FEKETE_LIMITS


def test_published_galois_limits():
    assert [galois_limit_recursive(q) for q in range(1, 9)] == GALOIS_LIMITS


def test_triangle_rows_published():
    for k, row in FEKETE_ROWS.items():
        assert fekete_triangle_row(k).values == row
    for k, row in GALOIS_ROWS.items():
        assert galois_triangle_row(k).values == row


def test_triangle_invariants():
    tangents = tangent_numbers(8)
    carlitzs = carlitz_numbers(8)
    for k in range(1, 9):
        fr = fekete_triangle_row(k).values
        gr = galois_triangle_row(k).values
        assert fr == fr[::-1]
        assert gr == gr[::-1]
        assert fr[0] == tangents[k - 1]
        assert gr[0] == carlitzs[k - 1]
        fact = math.factorial(2 * k - 1)
        assert Fraction(fr[k - 1], fact) == fekete_limit_recursive(k)
        assert Fraction(gr[k - 1], fact) == galois_limit_recursive(k)


def test_direct_equals_recursive():
    for q in range(1, 7):
        assert fekete_limit_direct(q) == fekete_limit_recursive(q)
        assert galois_limit_direct(q) == galois_limit_recursive(q)


def test_direct_hand_values():
    assert fekete_limit_direct(2) == 3 + Fraction(-2, 6) * 4
    assert galois_limit_direct(2) == 2 + Fraction(-1, 6) * 4


# ---------------------------------------------------------------------------
# brute partition-first evaluators (oracle only, q <= 4): walk the raw set
# partitions instead of the multiplicity-weighted profiles


def _coeff(poly, m):
    return poly[m] if 0 <= m < len(poly) else Fraction(0)


def _brute_fekete_limit(q):
    from littlewood.ratpoly import poly_mul
    from littlewood.special_numbers import eulerian_polynomial, tangent_numbers

    tangents = tangent_numbers(q)
    total = Fraction(0)
    for part in enumerate_set_partitions(2 * q):
        if any(len(b) % 2 for b in part):
            continue
        weight = Fraction(1)
        gen = (Fraction(1),)
        for block in part:
            N = len(block) // 2
            weight *= Fraction(tangents[N - 1], math.factorial(2 * N - 1))
            gen = poly_mul(gen, eulerian_polynomial(N))
        total += weight * _coeff(gen, q)
    return total


def _brute_galois_limit(q):
    from littlewood.ratpoly import poly_mul
    from littlewood.special_numbers import carlitz_numbers, eulerian_polynomial

    carlitzs = carlitz_numbers(q)
    total = Fraction(0)
    for part in enumerate_set_partitions(q):
        weight = Fraction(math.factorial(q))
        gen = (Fraction(1),)
        for block in part:
            N = len(block)
            weight *= Fraction(
                carlitzs[N - 1], math.factorial(N) * math.factorial(2 * N - 1)
            )
            gen = poly_mul(gen, eulerian_polynomial(N))
        total += weight * _coeff(gen, q)
    return total


def _brute_shifted_limit(q, R):
    from littlewood.special_numbers import eulerian_general, tangent_numbers

    tangents = tangent_numbers(q)
    total = Fraction(0)
    for part in enumerate_set_partitions(2 * q):
        if any(len(b) % 2 for b in part):
            continue
        weight = Fraction(1)
        conv = {0: Fraction(1)}
        for block in part:
            N = len(block) // 2
            P = sum(1 for e in block if e > q)
            weight *= Fraction(tangents[N - 1], math.factorial(2 * N - 1))
            shift = 2 * Fraction(R) * (N - P)
            nxt = {}
            for a in range(math.floor(-shift) + 1, math.ceil(2 * N - shift)):
                v = eulerian_general(2 * N - 1, shift + a - 1)
                if v:
                    for e, c in conv.items():
                        nxt[e + a] = nxt.get(e + a, Fraction(0)) + c * v
            conv = nxt
        total += weight * conv.get(q, Fraction(0))
    return total


def test_partition_first_oracles():
    for q in range(1, 5):
        assert _brute_fekete_limit(q) == fekete_limit_direct(q)
        assert _brute_galois_limit(q) == galois_limit_direct(q)
    for q in (1, 2, 3):
        for R in (Fraction(0), Fraction(1, 4), Fraction(3, 16), Fraction(-2, 7)):
            assert _brute_shifted_limit(q, R) == shifted_fekete_limit(q, R), (q, R)


def test_limit_table():
    table = limit_table("fekete", 3)
    assert table.entries == {1: Fraction(1), 2: Fraction(5, 3), 3: Fraction(19, 5)}
    assert limit_table("galois", 1).entries[1] == 1
    with pytest.raises(ValueError):
        limit_table("both", 2)


def test_monotone_growth():
    for limits in (FEKETE_LIMITS, GALOIS_LIMITS):
        assert all(a < b for a, b in zip(limits, limits[1:]))


# ---------------------------------------------------------------------------
# shifted limits


def test_shifted_reduces_to_fekete_at_zero():
    for q in range(1, 7):
        assert shifted_fekete_limit(q, 0) == fekete_limit_recursive(q)


def test_shifted_quarter_values():
    assert [shifted_fekete_limit(q, Fraction(1, 4)) for q in range(1, 9)] == PHI_QUARTER


def test_shifted_symmetries():
    for q in range(1, 6):
        for num in range(8):
            R = Fraction(num, 16)
            v = shifted_fekete_limit(q, R)
            assert shifted_fekete_limit(q, R + Fraction(1, 2)) == v
            assert shifted_fekete_limit(q, -R) == v


def test_shifted_preconditions():
    with pytest.raises(ValueError):
        shifted_fekete_limit(9, 0)
    with pytest.raises(ValueError):
        shifted_fekete_limit(0, 0)


# ---------------------------------------------------------------------------
# phi as an exact piecewise polynomial

# independent expansion helpers (kept local so the expected values do not
# flow through the code under test)


def _mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += Fraction(ca) * Fraction(cb)
    return out


def _add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += Fraction(c)
    for i, c in enumerate(b):
        out[i] += Fraction(c)
    return out


def _scale(a, s):
    return [Fraction(c) * Fraction(s) for c in a]


def _compose_half_minus_x(a):
    # p(1/2 - x) expanded
    acc = [Fraction(0)]
    lin = [Fraction(1, 2), Fraction(-1)]
    for c in reversed(a):
        acc = _add(_mul(acc, lin), [Fraction(c)])
    return acc


SQUARE_4X_MINUS_1 = [1, -8, 16]  # (4x-1)^2


def _phi2_closed_form():
    return _add([Fraction(7, 6)], _scale(SQUARE_4X_MINUS_1, Fraction(1, 2)))


def _phi3_closed_form():
    inner = _mul(SQUARE_4X_MINUS_1, [3, -8, 16])
    return _add([Fraction(31, 20)], _scale(inner, Fraction(3, 4)))


def _phi4_closed_form():
    quartic = [625, -4216, 20208, -52736, 60416]
    inner = _mul(SQUARE_4X_MINUS_1, quartic)
    left = _add([Fraction(653, 280)], _scale(inner, Fraction(1, 72)))
    right = _compose_half_minus_x(left)
    return left, right


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def test_phi2_closed_form():
    f = phi_piecewise(2)
    assert f.breakpoints == (0, Fraction(1, 2))
    assert f.pieces == (_trim(_phi2_closed_form()),)


def test_phi3_closed_form():
    f = phi_piecewise(3)
    assert f.breakpoints == (0, Fraction(1, 2))
    assert f.pieces == (_trim(_phi3_closed_form()),)


def test_phi4_closed_form():
    f = phi_piecewise(4)
    left, right = _phi4_closed_form()
    assert f.breakpoints == (0, Fraction(1, 4), Fraction(1, 2))
    assert f.pieces == (_trim(left), _trim(right))


def test_phi_matches_pointwise_evaluation():
    rng = random.Random(20)
    for q in range(1, 6):
        f = phi_piecewise(q)
        for _ in range(20):
            r = Fraction(rng.randint(0, 2**16), 2**17)
            assert f.evaluate(r) == shifted_fekete_limit(q, r), (q, r)


def test_phi1_constant():
    f = phi_piecewise(1)
    assert f.evaluate(0) == f.evaluate(Fraction(1, 3)) == 1


def test_phi_min():
    eps = Fraction(1, 1 << 20)
    for q in (2, 3, 4):
        res = phi_min(q, eps)
        assert res.argmin[0] <= Fraction(1, 4) <= res.argmin[1]
        assert res.argmin[1] - res.argmin[0] <= eps
        assert res.value == (PHI_QUARTER[q - 1], PHI_QUARTER[q - 1])
        assert res.alt_flag is False


def test_phi_min_preconditions():
    with pytest.raises(ValueError):
        phi_min(1, Fraction(1, 16))
    with pytest.raises(ValueError):
        phi_piecewise(7)

"""Closed-form coefficient calculators for the height formulas.

Every value here lands in (1/12)Z; each operation asserts that 12 times the
result is an integer, so a transcription slip in a closed form fails loudly.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _check_twelfth(x: Fraction) -> Fraction:
    assert (12 * x).denominator == 1, f"{x} is not in (1/12)Z"
    return x


def f_stab(d: int, n: int) -> Fraction:
    """Proportionality constant between the stable Griffiths height and the
    intersection height for pencils whose singular fibers have only ordinary
    double points.  Vanishes identically for n = 1 and at (d, n) = (3, 3)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n % 2 == 1:
        bracket = (d - 1) ** n * (d * d * n - d * d - 2 * d * n - 2) + 2 * (d * d - 1)
    else:
        bracket = (d - 1) ** n * (d * d * n + 2 * d * d - 2 * d * n - 2) - 2 * (d * d - 1)
    return _check_twelfth(Fraction(n + 1, 24 * d * d) * bracket)


def w(n: int, delta: int) -> Fraction:
    """Local weight of a semihomogeneous singular point of multiplicity delta
    on a fiber of an n-dimensional pencil.  Zero at delta = 1."""
    if n < 1 or delta < 1:
        raise ValueError("need n >= 1 and delta >= 1")
    bracket = (n * delta + 1) * (delta - 1) ** (n - 1) + (-1) ** n * (delta + 1)
    return _check_twelfth(Fraction((delta - 1) * bracket, 12 * delta * delta))


def g(n: int, delta: int) -> Fraction:
    """Normalized local weight 12*w(n, delta)/(delta-1)^n, defined for
    delta >= 2.  Non-increasing in delta; g(n, 2) is its maximum."""
    if delta < 2:
        raise ValueError("g is defined for delta >= 2 only")
    return 12 * w(n, delta) / Fraction((delta - 1) ** n)


def check_f_equals_fstab(d: int, n: int) -> bool:
    """Machine check of the identity
    -(n+1) w(n, d) + (n+1)(d-1)^n (2n+1+3(-1)^n)/48 = f_stab(d, n)."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    lhs = -(n + 1) * w(n, d) + Fraction(
        (n + 1) * (d - 1) ** n * (2 * n + 1 + 3 * (-1) ** n), 48
    )
    return lhs == f_stab(d, n)


def classify_equality_case(n: int, multiplicities: Iterable[int]) -> bool:
    """Whether a multiplicity list saturates the upper bound
    f_stab * ht_int for the stable Griffiths height.

    True exactly when n = 1, or n = 2 with all multiplicities 2, or n = 3
    with all multiplicities in {2, 3}, or n >= 4 with all multiplicities 2.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    ms = list(multiplicities)
    if any(m < 2 for m in ms):
        raise ValueError("multiplicities must be >= 2")
    if n == 1:
        return True
    if n == 3:
        return all(m in (2, 3) for m in ms)
    return all(m == 2 for m in ms)

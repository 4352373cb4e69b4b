"""Exact rational simplex for the tiny linear programs behind the torus test.

Solves  max c.x  subject to  A x <= b,  x >= 0  with every b_i >= 0, so the
slack basis is feasible and a single phase with Bland's rule terminates.
All arithmetic is over Fraction; no rounding anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def simplex_max(
    c: Sequence[Fraction],
    a_rows: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
) -> tuple[Fraction, list[Fraction]]:
    """Return (optimal value, optimal x).  Requires b >= 0 componentwise and a
    bounded objective; raises on an unbounded one."""
    m, n = len(a_rows), len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("simplex_max needs b >= 0")
    # tableau: n structural columns, m slack columns, rhs
    rows = [
        [Fraction(x) for x in a_rows[i]]
        + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    # objective row holds the negated reduced costs of max c.x
    obj = [-Fraction(x) for x in c] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best: Fraction | None = None
        for i in range(m):
            coef = rows[i][enter]
            if coef > 0:
                ratio = rows[i][-1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]  # type: ignore[index]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("unbounded linear program")
        piv = rows[leave][enter]
        rows[leave] = [x / piv for x in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, rows[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * (n + m)
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return obj[-1], x[:n]

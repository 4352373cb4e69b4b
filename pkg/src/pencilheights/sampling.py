"""Seeded random generators for the randomized verification suites.

Everything is driven by an explicit random.Random instance so that runs are
reproducible; nothing here draws from global randomness.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .algebra import HomPoly2, MultiForm, binary_form
from .git_binary import BinaryPencil, generic_fiber_semistable
from .pencils import PencilDescriptor, SingularFiberRecord


def random_budget_consistent_descriptor(
    rng: random.Random,
    n_max: int = 10,
    d_max: int = 12,
    odp_only: bool = False,
    budget_max: int = 60,
) -> PencilDescriptor:
    """Descriptor whose multiplicity list exactly exhausts the critical-point
    budget (n+1)(d-1)^n * ht_int.

    The budget total is drawn first and the height realized as an exact
    override, so arbitrary (n, d) stay cheap; mixed multiplicities partition
    the total into parts of the form (delta-1)^n."""
    n = rng.randint(1, n_max)
    d = rng.randint(2, d_max)
    total = rng.randint(0, budget_max)
    parts: list[int] = []
    remaining = total
    if odp_only:
        parts = [2] * remaining
        remaining = 0
    else:
        while remaining > 0:
            delta = rng.randint(2, d)
            size = (delta - 1) ** n
            if size > remaining:
                delta, size = 2, 1
            parts.append(delta)
            remaining -= size
    height = Fraction(total, (n + 1) * (d - 1) ** n)
    rng.shuffle(parts)
    return PencilDescriptor(
        n=n,
        d=d,
        genus=rng.randint(0, 3),
        deg_e=0,
        mu_max_e=Fraction(0),
        ht_int_override=height,
        singular_points=tuple(SingularFiberRecord(m) for m in parts),
    )


def random_hompoly2(rng: random.Random, degree: int, coeff_bound: int = 5) -> HomPoly2:
    coeffs = {
        i: rng.randint(-coeff_bound, coeff_bound) for i in range(degree + 1)
    }
    return HomPoly2(degree, {i: c for i, c in coeffs.items() if c != 0})


def random_binary_pencil(
    rng: random.Random, d: int, m_max: int, require_semistable: bool = True
) -> BinaryPencil:
    """Random pencil of binary d-ics with coefficient degree <= m_max; by
    default resampled until the generic fiber is semistable."""
    while True:
        m = rng.randint(0, m_max)
        coeffs = {}
        for j in range(d + 1):
            if rng.random() < 0.8:
                h = random_hompoly2(rng, m)
                if not h.is_zero():
                    coeffs[j] = h
        if not coeffs:
            continue
        try:
            pencil = BinaryPencil(d=d, m=m, coefficients=coeffs)
        except ValueError:
            continue
        if not require_semistable or generic_fiber_semistable(pencil):
            return pencil


def random_binary_form(rng: random.Random, d: int, coeff_bound: int = 6) -> MultiForm:
    while True:
        coeffs = {
            j: rng.randint(-coeff_bound, coeff_bound) for j in range(d + 1)
        }
        coeffs = {j: c for j, c in coeffs.items() if c != 0}
        if coeffs:
            return binary_form(d, coeffs)


def random_unstable_quartic(rng: random.Random, coeff_bound: int = 4) -> MultiForm:
    """(a X0 + b X1)^3 (c X0 + d X1): a quartic with a triple root."""
    while True:
        a, b = rng.randint(-coeff_bound, coeff_bound), rng.randint(-coeff_bound, coeff_bound)
        c, d = rng.randint(-coeff_bound, coeff_bound), rng.randint(-coeff_bound, coeff_bound)
        if (a, b) == (0, 0) or (c, d) == (0, 0):
            continue
        coeffs = {
            4: a**3 * c,
            3: 3 * a * a * b * c + a**3 * d,
            2: 3 * a * b * b * c + 3 * a * a * b * d,
            1: b**3 * c + 3 * a * b * b * d,
            0: b**3 * d,
        }
        coeffs = {j: v for j, v in coeffs.items() if v != 0}
        if coeffs:
            return binary_form(4, coeffs)


def random_sparse_form(
    rng: random.Random, nvars: int, degree: int, max_terms: int = 6
) -> MultiForm:
    """Sparse support drawn uniformly from the degree-d exponent lattice."""
    monomials = _exponent_vectors(nvars, degree)
    count = rng.randint(1, min(max_terms, len(monomials)))
    support = rng.sample(monomials, count)
    return MultiForm(nvars, degree, {m: rng.randint(1, 5) for m in support})


def random_unimodular_2x2(rng: random.Random, shears: int = 4, bound: int = 3):
    """Product of elementary shears: an integer matrix of determinant 1."""
    mat = [[1, 0], [0, 1]]
    for _ in range(shears):
        k = rng.randint(-bound, bound)
        if rng.random() < 0.5:
            mat = [[mat[0][0] + k * mat[1][0], mat[0][1] + k * mat[1][1]], mat[1]]
        else:
            mat = [mat[0], [mat[1][0] + k * mat[0][0], mat[1][1] + k * mat[0][1]]]
    return ((mat[0][0], mat[0][1]), (mat[1][0], mat[1][1]))


def _exponent_vectors(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree + 1):
        for rest in _exponent_vectors(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out

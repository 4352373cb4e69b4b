"""Independent oracles used by the acceptance suite.

The torus oracle enumerates every integer weight vector with entries bounded
by d * nvars (vectorized with numpy so that exhaustive support sweeps stay
fast); it shares no code with the hull/LP decision it checks.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from pencilheights.semistability import Stability


def exponent_vectors(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree + 1):
        for rest in exponent_vectors(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def weight_matrix(nvars: int, bound: int) -> np.ndarray:
    """All nonzero integer vectors with entries in [-bound, bound] summing to
    zero, one per row."""
    heads = np.array(
        list(product(range(-bound, bound + 1), repeat=nvars - 1)), dtype=np.int64
    )
    last = -heads.sum(axis=1)
    keep = np.abs(last) <= bound
    rows = np.column_stack([heads[keep], last[keep]])
    return rows[np.any(rows != 0, axis=1)]


class TorusOracle:
    """Exhaustive-weight status oracle for all supports of one (nvars, d)."""

    def __init__(self, nvars: int, degree: int):
        self.monomials = exponent_vectors(nvars, degree)
        self.index = {m: i for i, m in enumerate(self.monomials)}
        weights = weight_matrix(nvars, degree * nvars)
        # pairing[w, m] = <weight_w, monomial_m>
        self.pairing = weights @ np.array(self.monomials, dtype=np.int64).T

    def status(self, support) -> Stability:
        cols = [self.index[m] for m in support]
        mins = self.pairing[:, cols].min(axis=1)
        if bool((mins > 0).any()):
            return Stability.UNSTABLE
        if bool((mins == 0).any()):
            return Stability.SEMISTABLE
        return Stability.STABLE

"""Combinatorial pencils of hypersurfaces over a curve and their heights.

A pencil is modeled by its numerical data only: ambient parameter n (fibers
have dimension n - 1), relative degree d, base-curve genus, the degree and
maximal slope of the rank n + 1 bundle, the degree of the twisting line
bundle (or a direct intersection-height override), and one record per
singular fiber point.  All height formulas are evaluated exactly.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .algebra import rat
from .coeffs import classify_equality_case, f_stab, w


@dataclass(frozen=True)
class SingularFiberRecord:
    """One singular point of one fiber: its multiplicity (at least 2) and
    whether the singularity is semihomogeneous (smooth projective tangent
    cone)."""

    multiplicity: int
    semihomogeneous: bool = True

    def __post_init__(self) -> None:
        if self.multiplicity < 2:
            raise ValueError(
                "singular fiber records need multiplicity >= 2 "
                "(multiplicity-1 points are not critical points)"
            )


@dataclass(frozen=True)
class PencilDescriptor:
    n: int
    d: int
    genus: int
    deg_e: int
    mu_max_e: Fraction
    deg_m: int | None = None
    ht_int_override: Fraction | None = None
    singular_points: tuple[SingularFiberRecord, ...] = ()
    all_fibers_semistable: bool | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu_max_e", rat(self.mu_max_e))
        if self.ht_int_override is not None:
            object.__setattr__(self, "ht_int_override", rat(self.ht_int_override))
        object.__setattr__(self, "singular_points", tuple(self.singular_points))
        if self.n < 1:
            raise ValueError("field n: must be >= 1")
        if self.d < 2:
            raise ValueError("field d: must be >= 2")
        if self.genus < 0:
            raise ValueError("field genus: must be >= 0")
        if self.deg_m is None and self.ht_int_override is None:
            raise ValueError("field degM/htInt: at least one must be present")
        if self.mu_max_e < self.slope_e:
            raise ValueError("field muMaxE: maximal slope cannot be below the slope")
        if self.deg_m is not None and self.ht_int_override is not None:
            expected = self.deg_m - Fraction(self.d * self.deg_e, self.n + 1)
            if self.ht_int_override != expected:
                raise ValueError(
                    f"field htInt: inconsistent with degM (expected {expected})"
                )

    @property
    def slope_e(self) -> Fraction:
        return Fraction(self.deg_e, self.n + 1)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(r.multiplicity for r in self.singular_points)

    @property
    def all_semihomogeneous(self) -> bool:
        return all(r.semihomogeneous for r in self.singular_points)


@dataclass(frozen=True)
class HeightReport:
    ht_int: Fraction
    ht_gk_stab: Fraction
    bound: Fraction
    equality_case: bool
    singularity_budget_ok: bool
    generization_condition_ok: bool
    genericity_bound_ok: bool | None


def ht_int(p: PencilDescriptor) -> Fraction:
    """Intersection-theoretic height: degM - d/(n+1) * degE, or the explicit
    override."""
    if p.ht_int_override is not None:
        return p.ht_int_override
    assert p.deg_m is not None
    return p.deg_m - Fraction(p.d * p.deg_e, p.n + 1)


def _require_semihomogeneous(p: PencilDescriptor) -> None:
    if not p.all_semihomogeneous:
        raise ValueError(
            "formula out of validity domain: every singular fiber record "
            "must be semihomogeneous"
        )


def singularity_budget_sides(p: PencilDescriptor) -> tuple[int, Fraction]:
    """Both sides of the critical-point budget: sum of (delta-1)^n over the
    singular records, and (n+1)(d-1)^n * ht_int."""
    _require_semihomogeneous(p)
    lhs = sum((m - 1) ** p.n for m in p.multiplicities)
    rhs = (p.n + 1) * (p.d - 1) ** p.n * ht_int(p)
    return lhs, rhs


def singularity_budget_check(p: PencilDescriptor) -> bool:
    lhs, rhs = singularity_budget_sides(p)
    return Fraction(lhs) == rhs


def ht_gk_stab(p: PencilDescriptor) -> Fraction:
    """Stable Griffiths height of the middle cohomology:
    -(n+1) w(n, d) ht_int + sum over singular points of w(n, delta_P).

    Valid for pencils with smooth total space whose fibers have at most one
    semihomogeneous singular point each; when the singularity budget fails
    the descriptor is outside that validity domain and a warning is issued,
    but the formula is still evaluated.
    """
    _require_semihomogeneous(p)
    if not singularity_budget_check(p):
        warnings.warn(
            "singularity budget violated: descriptor lies outside the "
            "validity domain of the closed-form height",
            RuntimeWarning,
            stacklevel=2,
        )
    total = -(p.n + 1) * w(p.n, p.d) * ht_int(p)
    for m in p.multiplicities:
        total += w(p.n, m)
    return total


def upper_bound_verdict(p: PencilDescriptor) -> tuple[Fraction, bool]:
    """The bound f_stab(d, n) * ht_int and whether it is attained.

    For budget-consistent descriptors the bound provably dominates
    ht_gk_stab, with equality exactly on the classified multiplicity
    patterns; both facts are asserted.
    """
    bound = f_stab(p.d, p.n) * ht_int(p)
    equality = classify_equality_case(p.n, p.multiplicities)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        value = ht_gk_stab(p)
        budget_ok = singularity_budget_check(p)
    if budget_ok:
        assert value <= bound, "upper bound violated on a budget-consistent pencil"
        assert (value == bound) == equality, "equality classification mismatch"
    return bound, equality


def two_g_minus_two_tilde(genus: int) -> int:
    """2g - 2 for positive genus, -1 for genus zero."""
    return 2 * genus - 2 if genus > 0 else -1


def generization_condition(p: PencilDescriptor) -> bool:
    """Whether ht_int exceeds (2g-2)~ + d (mu_max(E) - mu(E)); under this
    condition the upper bound holds for every model by specialization."""
    gap = p.mu_max_e - p.slope_e
    return ht_int(p) > two_g_minus_two_tilde(p.genus) + p.d * gap


def genericity_bound(p: PencilDescriptor) -> bool:
    """Whether degM > 2g - 1 + d mu_max(E): above this degree a generic
    section gives a smooth total space with non-degenerate critical points,
    at most one per fiber."""
    if p.deg_m is None:
        raise ValueError("field degM: required for the genericity bound")
    return p.deg_m > 2 * p.genus - 1 + p.d * p.mu_max_e


def full_report(p: PencilDescriptor) -> HeightReport:
    bound, equality = upper_bound_verdict(p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        value = ht_gk_stab(p)
    return HeightReport(
        ht_int=ht_int(p),
        ht_gk_stab=value,
        bound=bound,
        equality_case=equality,
        singularity_budget_ok=singularity_budget_check(p),
        generization_condition_ok=generization_condition(p),
        genericity_bound_ok=None if p.deg_m is None else genericity_bound(p),
    )

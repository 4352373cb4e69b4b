"""Concrete GIT heights for pencils of binary cubics and quartics over the
projective line with a trivial rank-2 bundle.

A pencil is a binary form whose coefficients are homogeneous polynomials of
one common degree m in the base coordinates (s, t).  The classical invariant
generators (the discriminant for cubics; the degree-2 and degree-3 invariants
for quartics) give the map to the invariant-theory quotient; the GIT height
is the degree of the image curve against the descended polarization, and the
defect against the intersection height m is the length of the contact with
the unstable locus, read off as the degree of a bihomogeneous gcd.

The classical invariant formulas are entered once below and are quarantined
behind property tests (linear invariance, scaling weights, discriminant
proportionality); they are validated in-repo, never trusted.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import (
    HomPoly2,
    MultiForm,
    binary_form,
    content_hompoly2,
    exact_div_hompoly2,
    gcd_hompoly2,
    squarefree_factors_hompoly2,
)
from .semistability import Stability, StabilityVerdict, binary_semistable

CUBIC_DELTA = 4
QUARTIC_DELTA = 6


def _coefficient(form_terms: Mapping[tuple[int, ...], object], d: int, j: int, zero):
    return form_terms.get((j, d - j), zero)


def invariants_quartic(form: MultiForm):
    """The degree-2 and degree-3 invariants (I, J) of a binary quartic, for
    rational or bihomogeneous coefficients.

    With c_j the coefficient of X0^j X1^(4-j):
      I = c4 c0 - c3 c1 / 4 + c2^2 / 12
      J = c4 c2 c0 / 6 + c3 c2 c1 / 48 - c4 c1^2 / 16 - c3^2 c0 / 16 - c2^3 / 216
    """
    if form.nvars != 2 or form.degree != 4:
        raise ValueError("expected a binary quartic")
    zero = _ring_zero(form)
    c = [_coefficient(form.terms, 4, j, zero) for j in range(5)]
    i_inv = c[4] * c[0] + Fraction(-1, 4) * (c[3] * c[1]) + Fraction(1, 12) * (c[2] * c[2])
    j_inv = (
        Fraction(1, 6) * (c[4] * c[2] * c[0])
        + Fraction(1, 48) * (c[3] * c[2] * c[1])
        + Fraction(-1, 16) * (c[4] * c[1] * c[1])
        + Fraction(-1, 16) * (c[3] * c[3] * c[0])
        + Fraction(-1, 216) * (c[2] * c[2] * c[2])
    )
    return i_inv, j_inv


def invariant_cubic_disc(form: MultiForm):
    """Discriminant of a binary cubic (degree 4 in the coefficients), which
    generates its invariant algebra.  Vanishes iff the cubic has a repeated
    root.  With c_j the coefficient of X0^j X1^(3-j) and p(x) = c3 x^3 + ...:
      Disc = 18 c3 c2 c1 c0 - 4 c2^3 c0 + c2^2 c1^2 - 4 c3 c1^3 - 27 c3^2 c0^2
    """
    if form.nvars != 2 or form.degree != 3:
        raise ValueError("expected a binary cubic")
    zero = _ring_zero(form)
    c0, c1, c2, c3 = (_coefficient(form.terms, 3, j, zero) for j in range(4))
    return (
        18 * (c3 * c2 * c1 * c0)
        - 4 * (c2 * c2 * c2 * c0)
        + c2 * c2 * c1 * c1
        - 4 * (c3 * c1 * c1 * c1)
        - 27 * (c3 * c3 * c0 * c0)
    )


def _ring_zero(form: MultiForm):
    for c in form.terms.values():
        if isinstance(c, HomPoly2):
            return HomPoly2.zero(c.degree)
    return Fraction(0)


@dataclass(frozen=True)
class BinaryPencil:
    """Binary form of degree d in {3, 4} whose coefficients are homogeneous
    polynomials of one common degree m in the base coordinates (s, t)."""

    d: int
    m: int
    coefficients: dict[int, HomPoly2]

    def __post_init__(self) -> None:
        if self.d not in (3, 4):
            raise ValueError("field d: only cubic (3) and quartic (4) pencils")
        if self.m < 0:
            raise ValueError("field m: coefficient degree must be >= 0")
        clean: dict[int, HomPoly2] = {}
        for j, h in self.coefficients.items():
            if not 0 <= j <= self.d:
                raise ValueError(f"field coefficients: exponent {j} outside [0, {self.d}]")
            if h.is_zero():
                continue
            if h.degree != self.m:
                raise ValueError(
                    f"field coefficients: coefficient of exponent {j} has degree "
                    f"{h.degree}, expected {self.m}"
                )
            clean[j] = h
        if not clean:
            raise ValueError("field coefficients: the zero pencil is not allowed")
        object.__setattr__(self, "coefficients", clean)

    def as_form(self) -> MultiForm:
        return MultiForm(
            2, self.d, {(j, self.d - j): h for j, h in self.coefficients.items()}
        )

    def specialize(self, s0, t0) -> MultiForm:
        """The fiber at the base point (s0 : t0) as a binary form over Q."""
        coeffs = {j: h.evaluate(s0, t0) for j, h in self.coefficients.items()}
        form_coeffs = {j: c for j, c in coeffs.items() if c != 0}
        if not form_coeffs:
            raise ValueError("pencil coefficients all vanish at the given point")
        return binary_form(self.d, form_coeffs)

    @property
    def delta(self) -> int:
        return CUBIC_DELTA if self.d == 3 else QUARTIC_DELTA


@dataclass(frozen=True)
class GitHeightReport:
    ht_git: Fraction
    ht_int: Fraction
    contact_length: int
    delta: int
    all_fibers_semistable: bool


@dataclass(frozen=True)
class FiberLocus:
    """A closed point (or finite union of conjugate points) of the base line
    where semistability fails: an irreducible-over-Q squarefree factor of the
    invariant vanishing locus.  The factor s alone is the point at infinity."""

    locus: HomPoly2
    verdict: StabilityVerdict

    @property
    def at_infinity(self) -> bool:
        return self.locus.degree == 1 and list(self.locus.coeffs) == [0]


def remove_content(p: BinaryPencil) -> tuple[BinaryPencil, int]:
    """Divide out the common (s, t)-factor of all coefficients.

    A nontrivial content means the naive coefficient tuple vanishes on whole
    fibers; the section of the projective bundle is the content-free tuple,
    so heights are computed on the reduced pencil.  Returns the reduced
    pencil and the content degree."""
    content = content_hompoly2(list(p.coefficients.values()))
    if content.degree == 0:
        return p, 0
    reduced = {
        j: exact_div_hompoly2(h, content) for j, h in p.coefficients.items()
    }
    return BinaryPencil(p.d, p.m - content.degree, reduced), content.degree


def pencil_invariants(p: BinaryPencil) -> tuple[HomPoly2, ...]:
    """Generators of degree delta pulled back along the pencil: (Disc,) of
    (s, t)-degree 4m for cubics, (I^3, J^2) both of degree 6m for quartics."""
    form = p.as_form()
    if p.d == 3:
        disc = invariant_cubic_disc(form)
        return (_as_hom(disc, 4 * p.m),)
    i_inv, j_inv = invariants_quartic(form)
    i3 = _as_hom(i_inv, 2 * p.m) ** 3
    j2 = _as_hom(j_inv, 3 * p.m) ** 2
    return (i3, j2)


def _as_hom(value, degree: int) -> HomPoly2:
    if isinstance(value, HomPoly2):
        if not value.is_zero() and value.degree != degree:
            raise AssertionError("invariant degree bookkeeping broken")
        if value.is_zero():
            return HomPoly2.zero(degree)
        return value
    return HomPoly2(degree, {0: value}) if degree == 0 else HomPoly2.zero(degree)


def generic_fiber_semistable(p: BinaryPencil) -> bool:
    """Whether the fiber over the function field is semistable.

    Decided through exact invariant identities: a cubic over the function
    field has a repeated root iff its discriminant vanishes identically, and
    a quartic has a root of multiplicity >= 3 iff both invariants vanish
    identically.  Equivalent to the multiplicity > d/2 rule over the
    algebraic closure of the function field."""
    form = p.as_form()
    if p.d == 3:
        disc = invariant_cubic_disc(form)
        return not _is_zero_value(disc)
    i_inv, j_inv = invariants_quartic(form)
    return not (_is_zero_value(i_inv) and _is_zero_value(j_inv))


def _is_zero_value(v) -> bool:
    return v.is_zero() if isinstance(v, HomPoly2) else v == 0


def git_height(p: BinaryPencil) -> GitHeightReport:
    """GIT height, intersection height, and unstable-contact length.

    The pencil traces a curve in the invariant-theory quotient; its degree
    against the descended polarization is (common generator degree minus the
    degree of the bihomogeneous gcd of the pulled-back generators) / delta.
    For cubics the quotient is a point, so the GIT height vanishes and the
    full invariant degree 4m is contact length."""
    reduced, _dropped = remove_content(p)
    if not generic_fiber_semistable(reduced):
        raise ValueError(
            "GIT height undefined: the generic fiber lies outside the "
            "semistable locus"
        )
    m = reduced.m
    delta = reduced.delta
    gens = pencil_invariants(reduced)
    if reduced.d == 3:
        disc = gens[0]
        assert not disc.is_zero() and disc.degree == 4 * m
        contact = 4 * m
        ht_git = Fraction(0)
    else:
        i3, j2 = gens
        if i3.is_zero() or j2.is_zero():
            common = i3 if j2.is_zero() else j2
            common = gcd_hompoly2(common, common)
        else:
            common = gcd_hompoly2(i3, j2)
        contact = common.degree
        ht_git = Fraction(6 * m - contact, 6)
    ht_int = Fraction(m)
    report = GitHeightReport(
        ht_git=ht_git,
        ht_int=ht_int,
        contact_length=contact,
        delta=delta,
        all_fibers_semistable=(contact == 0),
    )
    assert report.ht_int == report.ht_git + Fraction(contact, delta)
    assert 0 <= report.ht_git <= report.ht_int
    return report


def verify_contact_identity(p: BinaryPencil) -> bool:
    """Machine check: ht_int = ht_git + contact_length / delta exactly."""
    r = git_height(p)
    return r.ht_int == r.ht_git + Fraction(r.contact_length, r.delta)


def fiber_semistability_profile(p: BinaryPencil) -> list[FiberLocus]:
    """All base loci carrying non-semistable fibers.

    The unstable locus of the fiber space is cut out by the degree-delta
    invariants, so the bad base points are the common zeros of the pulled
    back generators: the vanishing of Disc for cubics, of gcd(I, J) for
    quartics.  Loci over rational points get the full multiplicity-rule
    verdict on the specialized form (including a torus certificate when one
    exists); irrational loci are reported unstable by invariant vanishing.
    """
    reduced, _dropped = remove_content(p)
    form = reduced.as_form()
    if reduced.d == 3:
        bad = _as_hom(invariant_cubic_disc(form), 4 * reduced.m)
    else:
        raw_i, raw_j = invariants_quartic(form)
        i_inv = _as_hom(raw_i, 2 * reduced.m)
        j_inv = _as_hom(raw_j, 3 * reduced.m)
        if i_inv.is_zero() and j_inv.is_zero():
            raise ValueError("generic fiber is not semistable")
        if i_inv.is_zero() or j_inv.is_zero():
            bad = j_inv if i_inv.is_zero() else i_inv
        else:
            bad = gcd_hompoly2(i_inv, j_inv)
    if bad.is_zero():
        raise ValueError("generic fiber is not semistable")
    if bad.degree == 0:
        return []
    out: list[FiberLocus] = []
    for factor, _mult in squarefree_factors_hompoly2(bad):
        if factor.degree == 1:
            # linear factor alpha*s + beta*t vanishes at (s:t) = (beta:-alpha)
            alpha = factor.coeffs.get(0, Fraction(0))
            beta = factor.coeffs.get(1, Fraction(0))
            fiber = reduced.specialize(beta, -alpha)
            verdict = binary_semistable(fiber)
        else:
            verdict = StabilityVerdict(Stability.UNSTABLE, rule="invariant-vanishing")
        out.append(FiberLocus(locus=factor, verdict=verdict))
    return out

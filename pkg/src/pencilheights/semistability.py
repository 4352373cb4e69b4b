"""GIT semistability decisions for hypersurface forms.

Three routes, in decreasing completeness:

* ``binary_semistable`` decides binary forms completely through root
  multiplicities (a form of degree d is unstable exactly when some root has
  multiplicity > d/2).
* ``torus_semistable`` decides (semi)stability with respect to the fixed
  diagonal torus only: it is an exact convex-hull membership test of the
  barycenter exponent (d/(nvars), ..., d/(nvars)) in the Newton polytope,
  with an integer separating certificate in the unstable case.
* ``criteria_engine`` applies sufficient numeric criteria to a singularity
  profile and may return Unknown.

Sign convention: a weight vector a (integers summing to zero) destabilizes F
iff min over the support of <a, m> is strictly positive.  With this choice a
binary form with a root of multiplicity k at [0:1] has min-weight 2k - d
under a = (1, -1), which reproduces the multiplicity > d/2 rule.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .algebra import MultiForm, binary_dehomogenize, binary_root_multiplicities
from .linprog import simplex_max


class Stability(str, Enum):
    STABLE = "stable"
    SEMISTABLE = "semistable"
    UNSTABLE = "unstable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class StabilityVerdict:
    status: Stability
    certificate: tuple[int, ...] | None = None
    rule: str = ""

    def __post_init__(self) -> None:
        if self.certificate is not None:
            if self.status is not Stability.UNSTABLE:
                raise ValueError("certificate only allowed on unstable verdicts")
            if sum(self.certificate) != 0 or not any(self.certificate):
                raise ValueError("certificate must be a nonzero zero-sum weight")


def _require_nonzero(form: MultiForm) -> None:
    if form.is_zero():
        raise ValueError("zero form has no semistability type")


def hm_weight(form: MultiForm, a: Sequence[int]) -> int:
    """min over the support of F of <a, m>, for a diagonal weight a."""
    _require_nonzero(form)
    a = tuple(a)
    if len(a) != form.nvars:
        raise ValueError("weight vector length does not match the form")
    if sum(a) != 0:
        raise ValueError("weight vector entries must sum to zero")
    return min(sum(ai * mi for ai, mi in zip(a, m)) for m in form.terms)


def _centered_support(form: MultiForm) -> list[tuple[int, ...]]:
    """Integer vectors (nvars)*m - d*(1,...,1) over the support; they sum to
    zero, and the barycenter lies in the Newton polytope iff 0 lies in their
    hull."""
    n = form.nvars
    d = form.degree
    return [tuple(n * mi - d for mi in m) for m in form.support()]


def _reduce_weight(a: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in a:
        g = math.gcd(g, abs(x))
    return tuple(x // g for x in a) if g > 1 else tuple(a)


def _certified(form: MultiForm, a: Sequence[int], rule: str) -> StabilityVerdict:
    a = _reduce_weight(a)
    assert hm_weight(form, a) > 0, "unsound destabilizing certificate"
    return StabilityVerdict(Stability.UNSTABLE, a, rule)


# 1-dimensional decision: centered support is a list of integers.

def _decide_dim1(form: MultiForm, qs: list[tuple[int, ...]]) -> StabilityVerdict:
    vals = [q[0] for q in qs]
    lo, hi = min(vals), max(vals)
    if lo > 0:
        return _certified(form, (1, -1), "torus-hull")
    if hi < 0:
        return _certified(form, (-1, 1), "torus-hull")
    if lo < 0 < hi:
        return StabilityVerdict(Stability.STABLE, rule="torus-hull")
    return StabilityVerdict(Stability.SEMISTABLE, rule="torus-hull")


# 2-dimensional decision: exact integer angular sweep in the plane obtained
# by dropping the last coordinate of the zero-sum vectors.

def _half_plane(v: tuple[int, int]) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u: tuple[int, int], v: tuple[int, int]) -> int:
    hu, hv = _half_plane(u), _half_plane(v)
    if hu != hv:
        return -1 if hu < hv else 1
    cr = u[0] * v[1] - u[1] * v[0]
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


def _lift_2d(alpha: int, beta: int) -> tuple[int, int, int]:
    # functional (alpha, beta) on the projected plane, as a zero-sum weight
    return (2 * alpha - beta, 2 * beta - alpha, -alpha - beta)


def _decide_dim2(form: MultiForm, qs: list[tuple[int, ...]]) -> StabilityVerdict:
    pts = [(q[0], q[1]) for q in qs]
    has_zero = any(p == (0, 0) for p in pts)
    dirs: set[tuple[int, int]] = set()
    for x, y in pts:
        if (x, y) == (0, 0):
            continue
        g = math.gcd(abs(x), abs(y))
        dirs.add((x // g, y // g))
    if not dirs:
        return StabilityVerdict(Stability.SEMISTABLE, rule="torus-hull")
    order = sorted(dirs, key=cmp_to_key(_angle_cmp))
    k = len(order)
    if k == 1:
        if has_zero:
            return StabilityVerdict(Stability.SEMISTABLE, rule="torus-hull")
        return _certified(form, _lift_2d(*order[0]), "torus-hull")
    wide_gap = None
    exact_half = False
    for i in range(k):
        u = order[i]
        v = order[(i + 1) % k]
        cr = u[0] * v[1] - u[1] * v[0]
        if cr < 0:
            wide_gap = (u, v)
        elif cr == 0:
            exact_half = True
    if wide_gap is not None:
        if has_zero:
            return StabilityVerdict(Stability.SEMISTABLE, rule="torus-hull")
        p, q = wide_gap  # support directions fill the arc from q back to p
        alpha = p[1] - q[1]
        beta = q[0] - p[0]
        return _certified(form, _lift_2d(alpha, beta), "torus-hull")
    if exact_half:
        return StabilityVerdict(Stability.SEMISTABLE, rule="torus-hull")
    return StabilityVerdict(Stability.STABLE, rule="torus-hull")


# General decision through exact linear programming.

def _lp_destabilize(qs: list[tuple[int, ...]], n: int) -> list[Fraction] | None:
    """Maximize t subject to <a, q> >= t for all centered support points,
    sum a = 0 and -1 <= a_i <= 1; returns a if the optimum is positive."""
    nv = 2 * n + 1  # a = u - v, plus t
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for q in qs:
        row = [Fraction(-qi) for qi in q] + [Fraction(qi) for qi in q] + [Fraction(1)]
        rows.append(row)
        rhs.append(Fraction(0))
    ones = [Fraction(1)] * n
    rows.append(ones + [-x for x in ones] + [Fraction(0)])
    rhs.append(Fraction(0))
    rows.append([-x for x in ones] + ones + [Fraction(0)])
    rhs.append(Fraction(0))
    for j in range(n):
        row = [Fraction(0)] * nv
        row[j], row[n + j] = Fraction(1), Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(1))
        row = [Fraction(0)] * nv
        row[j], row[n + j] = Fraction(-1), Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    c = [Fraction(0)] * (2 * n) + [Fraction(1)]
    value, x = simplex_max(c, rows, rhs)
    if value <= 0:
        return None
    return [x[j] - x[n + j] for j in range(n)]


def _lp_boundary_witness(qs: list[tuple[int, ...]], n: int) -> bool:
    """Whether some nonzero zero-sum a has <a, q> >= 0 on the whole centered
    support (i.e. the barycenter sits on a supporting hyperplane)."""
    nv = 2 * n
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for q in qs:
        rows.append([Fraction(-qi) for qi in q] + [Fraction(qi) for qi in q])
        rhs.append(Fraction(0))
    ones = [Fraction(1)] * n
    rows.append(ones + [-x for x in ones])
    rhs.append(Fraction(0))
    rows.append([-x for x in ones] + ones)
    rhs.append(Fraction(0))
    for j in range(n):
        row = [Fraction(0)] * nv
        row[j], row[n + j] = Fraction(1), Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(1))
        row = [Fraction(0)] * nv
        row[j], row[n + j] = Fraction(-1), Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    for j in range(n):
        for sgn in (1, -1):
            c = [Fraction(0)] * nv
            c[j], c[n + j] = Fraction(sgn), Fraction(-sgn)
            value, _x = simplex_max(c, rows, rhs)
            if value > 0:
                return True
    return False


def _int_weight(a: Sequence[Fraction]) -> tuple[int, ...]:
    lcm = 1
    for x in a:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    return _reduce_weight([int(x * lcm) for x in a])


def _decide_lp(form: MultiForm, qs: list[tuple[int, ...]], n: int) -> StabilityVerdict:
    a = _lp_destabilize(qs, n)
    if a is not None:
        return _certified(form, _int_weight(a), "torus-hull")
    if _lp_boundary_witness(qs, n):
        return StabilityVerdict(Stability.SEMISTABLE, rule="torus-hull")
    return StabilityVerdict(Stability.STABLE, rule="torus-hull")


def torus_semistable(form: MultiForm) -> StabilityVerdict:
    """Hilbert-Mumford test restricted to the fixed coordinate torus.

    Unstable iff the barycenter exponent lies outside the convex hull of the
    support, with an exact integer separating weight as certificate; stable
    iff it lies in the interior.  The decision is coordinate-dependent: a
    torus-semistable form may still be unstable under the full linear group.
    """
    _require_nonzero(form)
    qs = _centered_support(form)
    n = form.nvars
    if n == 2:
        return _decide_dim1(form, qs)
    if n == 3:
        return _decide_dim2(form, qs)
    return _decide_lp(form, qs, n)


def binary_semistable(form: MultiForm) -> StabilityVerdict:
    """Complete decision for binary forms by the multiplicity > d/2 rule.

    A destabilizing torus certificate is attached when the offending root
    sits at [0:1] or [1:0]; roots elsewhere still decide the status but admit
    no certificate in these coordinates.
    """
    if form.nvars != 2:
        raise ValueError("binary_semistable expects a binary form")
    _require_nonzero(form)
    d = form.degree
    mults = binary_root_multiplicities(form)
    top = max(mults)
    if 2 * top > d:
        f = binary_dehomogenize(form)
        cert: tuple[int, ...] | None = None
        if 2 * f.trailing_degree() > d:
            cert = (1, -1)
        elif 2 * (d - f.degree) > d:
            cert = (-1, 1)
        return StabilityVerdict(Stability.UNSTABLE, cert, "binary-multiplicity")
    if 2 * top < d:
        return StabilityVerdict(Stability.STABLE, rule="binary-multiplicity")
    return StabilityVerdict(Stability.SEMISTABLE, rule="binary-multiplicity")


@dataclass(frozen=True)
class SingularityProfile:
    """Numeric singularity data of a projective hypersurface of dimension
    n - 1 and degree d: maximal multiplicity delta, dimension s of the
    singular locus (-1 when smooth), and three qualitative flags.

    The flags are taken at face value; in particular semihomogeneous does not
    automatically set the tangent-cone flag."""

    n: int
    d: int
    delta: int
    s: int
    tangent_cone_not_hyperplane_cone: bool = False
    semihomogeneous: bool = False
    odp_only: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.d < 2:
            raise ValueError("d must be >= 2")
        if not 1 <= self.delta <= self.d:
            raise ValueError("delta must satisfy 1 <= delta <= d")
        if not -1 <= self.s <= self.n - 1:
            raise ValueError("s must lie in [-1, n-1]")
        if (self.delta == 1) != (self.s == -1):
            raise ValueError("smooth means exactly delta = 1 and s = -1")
        if self.odp_only and self.delta > 2:
            raise ValueError("odp_only requires delta <= 2")
        if self.semihomogeneous and self.s > 0:
            raise ValueError("semihomogeneous singularities are isolated (s <= 0)")

    @property
    def smooth(self) -> bool:
        return self.delta == 1


def criteria_engine(profile: SingularityProfile) -> StabilityVerdict:
    """Sufficient criteria from the singularity profile.

    Returns Stable or Semistable when some criterion fires (preferring the
    strongest conclusion, recording the first rule that gives it in the order
    of attempt) and Unknown otherwise.  Never complete: Unknown only means no
    listed criterion applies.
    """
    n, d, delta, s = profile.n, profile.d, profile.delta, profile.s
    fired: list[tuple[Stability, str]] = []
    if profile.smooth:
        if d >= 3 and n >= 2:
            fired.append((Stability.STABLE, "smooth-stable"))
        if d == 2:
            fired.append((Stability.SEMISTABLE, "smooth-quadric"))
    else:
        if profile.odp_only and n >= 2 and d >= 3:
            fired.append((Stability.SEMISTABLE, "odp-semistable"))
        bound = min(n + 1, s + 3)
        if d > delta * bound:
            fired.append((Stability.STABLE, "multiplicity-gap"))
        elif d >= delta * bound:
            fired.append((Stability.SEMISTABLE, "multiplicity-gap"))
        if profile.tangent_cone_not_hyperplane_cone and n >= 2:
            if d > (delta - 1) * bound:
                fired.append((Stability.STABLE, "tangent-cone-gap"))
            elif d >= (delta - 1) * bound:
                fired.append((Stability.SEMISTABLE, "tangent-cone-gap"))
        if profile.semihomogeneous:
            if n >= 2 and d >= 3 * (delta - 1):
                fired.append((Stability.SEMISTABLE, "semihomogeneous-gap"))
            if d >= n + 1 and d * n >= delta * (n + 1):
                fired.append((Stability.SEMISTABLE, "semihomogeneous-lct"))
        if n == 3 and d == 3 and profile.odp_only:
            fired.append((Stability.SEMISTABLE, "cubic-surface-odp"))
    for status, rule in fired:
        if status is Stability.STABLE:
            return StabilityVerdict(status, rule=rule)
    for status, rule in fired:
        return StabilityVerdict(status, rule=rule)
    return StabilityVerdict(Stability.UNKNOWN, rule="none")


def destabilizing_weight_by_enumeration(
    form: MultiForm, bound: int | None = None
) -> tuple[int, ...] | None:
    """Lexicographically smallest integer weight a with entries in
    [-bound, bound], summing to zero, and hm_weight(form, a) > 0; None if no
    such weight exists.  Default bound: d * nvars."""
    _require_nonzero(form)
    n = form.nvars
    supp = form.support()
    if bound is None:
        bound = form.degree * n
    for head in itertools.product(range(-bound, bound + 1), repeat=n - 1):
        last = -sum(head)
        if abs(last) > bound:
            continue
        a = head + (last,)
        if not any(a):
            continue
        if min(sum(ai * mi for ai, mi in zip(a, m)) for m in supp) > 0:
            return a
    return None


def torus_status_by_enumeration(form: MultiForm, bound: int | None = None) -> Stability:
    """Independent oracle for torus_semistable by exhaustive weight search."""
    _require_nonzero(form)
    n = form.nvars
    supp = form.support()
    if bound is None:
        bound = form.degree * n
    boundary = False
    for head in itertools.product(range(-bound, bound + 1), repeat=n - 1):
        last = -sum(head)
        if abs(last) > bound:
            continue
        a = head + (last,)
        if not any(a):
            continue
        weight = min(sum(ai * mi for ai, mi in zip(a, m)) for m in supp)
        if weight > 0:
            return Stability.UNSTABLE
        if weight == 0:
            boundary = True
    return Stability.SEMISTABLE if boundary else Stability.STABLE

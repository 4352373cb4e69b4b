"""Exact arithmetic foundation.

Rationals are ``fractions.Fraction`` throughout (always in lowest terms,
positive denominator, no rounding anywhere).  On top of that this module
provides univariate polynomials over Q, homogeneous bivariate polynomials
in (s, t), and sparse homogeneous forms in several variables whose
coefficients are rationals or bivariate homogeneous polynomials.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def rat(x: Scalar | str) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rat(x: Scalar) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class UniPoly:
    """Univariate polynomial over Q, coefficients stored low degree first.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: Scalar, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        return cls([0] * e + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> Fraction:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return Fraction(0)

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def trailing_degree(self) -> int:
        """Smallest exponent with nonzero coefficient (t-adic valuation)."""
        if self.is_zero():
            raise ValueError("zero polynomial has no trailing degree")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unreachable")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tuple(self[i] - other[i] for i in range(n)))

    def __mul__(self, other: "UniPoly | Scalar") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other: Scalar) -> "UniPoly":
        return self.__mul__(other)

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative power")
        out = UniPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        dlead = other.leading()
        ddeg = other.degree
        while len(r) - 1 >= ddeg and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < ddeg:
                break
            shift = len(r) - 1 - ddeg
            c = r[-1] / dlead
            q[shift] = c
            for i, oc in enumerate(other.coeffs):
                r[shift + i] -= c * oc
        return UniPoly(q), UniPoly(r)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            raise ValueError("zero polynomial cannot be made monic")
        lead = self.leading()
        return UniPoly(tuple(c / lead for c in self.coeffs))

    def evaluate(self, x: Scalar) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(format_rat(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{format_rat(c)}*{var}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def gcd_unipoly(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd in Q[t] by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of zero polynomials")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def exact_div(a: UniPoly, b: UniPoly) -> UniPoly:
    q, r = divmod(a, b)
    if not r.is_zero():
        raise ValueError("inexact polynomial division")
    return q


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: pairwise-coprime monic squarefree factors with
    multiplicities, whose product reconstructs f up to a nonzero constant."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if f.degree == 0:
        return []
    f = f.monic()
    g = gcd_unipoly(f, f.derivative())
    b = exact_div(f, g)
    d = exact_div(f.derivative(), g) - b.derivative()
    out: list[tuple[UniPoly, int]] = []
    i = 1
    while b.degree > 0:
        a = gcd_unipoly(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = exact_div(b, a)
        d = exact_div(d, a) - b.derivative()
        i += 1
    return out


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with column pivoting."""
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor == 0:
                continue
            for c in range(col, n):
                rows[r][c] -= factor * rows[col][c]
    return det


def resultant_binary(f: UniPoly, g: UniPoly) -> Fraction:
    """Classical resultant as the Sylvester matrix determinant.

    For deg f = 0 or deg g = 0 the usual conventions apply:
    Res(c, g) = c^deg(g) and Res(f, c) = c^deg(f).
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    m, n = f.degree, g.degree
    if m == 0:
        return f.leading() ** n
    if n == 0:
        return g.leading() ** m
    size = m + n
    fh = [f[m - i] for i in range(m + 1)]  # high degree first
    gh = [g[n - i] for i in range(n + 1)]
    rows: list[list[Fraction]] = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fh + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gh + [Fraction(0)] * (size - n - 1 - i))
    return _det_fraction(rows)


class HomPoly2:
    """Homogeneous polynomial of fixed degree m in two variables (s, t).

    Stored sparsely as a map from the t-exponent i to the coefficient of
    s^(m-i) t^i.  The zero polynomial carries a formal degree so that
    degree bookkeeping through products stays exact.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[int, Scalar] | None = None):
        if degree < 0:
            raise ValueError("negative degree")
        self.degree = degree
        clean: dict[int, Fraction] = {}
        for i, c in (coeffs or {}).items():
            if not 0 <= i <= degree:
                raise ValueError(f"t-exponent {i} outside [0, {degree}]")
            c = rat(c)
            if c != 0:
                clean[i] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, degree: int = 0) -> "HomPoly2":
        return cls(degree, {})

    @classmethod
    def constant(cls, c: Scalar) -> "HomPoly2":
        return cls(0, {0: c})

    @classmethod
    def homogenize(cls, u: UniPoly, degree: int) -> "HomPoly2":
        """Pad a univariate polynomial in t with powers of s up to ``degree``."""
        if u.degree > degree:
            raise ValueError(
                f"declared degree {degree} below actual degree {u.degree}"
            )
        return cls(degree, {i: c for i, c in enumerate(u.coeffs) if c != 0})

    def dehomogenize(self) -> UniPoly:
        """Set s = 1; the s-multiplicity is degree - deg of the result."""
        if not self.coeffs:
            return UniPoly.zero()
        out = [Fraction(0)] * (max(self.coeffs) + 1)
        for i, c in self.coeffs.items():
            out[i] = c
        return UniPoly(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def s_multiplicity(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no s-multiplicity")
        return self.degree - max(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HomPoly2):
            if self.is_zero() and other.is_zero():
                return True
            return self.degree == other.degree and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(())
        return hash((self.degree, tuple(sorted(self.coeffs.items()))))

    def __neg__(self) -> "HomPoly2":
        return HomPoly2(self.degree, {i: -c for i, c in self.coeffs.items()})

    def __add__(self, other: "HomPoly2") -> "HomPoly2":
        if not isinstance(other, HomPoly2):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degrees")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return HomPoly2(self.degree, out)

    def __sub__(self, other: "HomPoly2") -> "HomPoly2":
        return self.__add__(-other)

    def __mul__(self, other: "HomPoly2 | Scalar") -> "HomPoly2":
        if isinstance(other, (int, Fraction)):
            return HomPoly2(self.degree, {i: c * other for i, c in self.coeffs.items()})
        if not isinstance(other, HomPoly2):
            return NotImplemented
        deg = self.degree + other.degree
        out: dict[int, Fraction] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                out[k] = out.get(k, Fraction(0)) + a * b
        return HomPoly2(deg, out)

    def __rmul__(self, other: Scalar) -> "HomPoly2":
        return self.__mul__(other)

    def __pow__(self, e: int) -> "HomPoly2":
        if e < 0:
            raise ValueError("negative power")
        out = HomPoly2.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def evaluate(self, s: Scalar, t: Scalar) -> Fraction:
        s, t = rat(s), rat(t)
        total = Fraction(0)
        for i, c in self.coeffs.items():
            total += c * s ** (self.degree - i) * t ** i
        return total

    def __repr__(self) -> str:
        return f"HomPoly2({self.degree}, {dict(sorted(self.coeffs.items()))})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in sorted(self.coeffs, reverse=True):
            c = self.coeffs[i]
            se, te = self.degree - i, i
            factors = []
            if se:
                factors.append("s" if se == 1 else f"s^{se}")
            if te:
                factors.append("t" if te == 1 else f"t^{te}")
            mono = "*".join(factors)
            if not mono:
                parts.append(format_rat(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rat(c)}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def gcd_hompoly2(a: HomPoly2, b: HomPoly2) -> HomPoly2:
    """Gcd of homogeneous bivariate polynomials, normalized so the highest
    t-exponent coefficient is 1.  gcd(a, 0) = a normalized."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of zero polynomials")
    if a.is_zero():
        return gcd_hompoly2(b, b)
    if b.is_zero():
        ua = a.dehomogenize().monic()
        return HomPoly2.homogenize(ua, ua.degree + a.s_multiplicity())
    ua, ub = a.dehomogenize(), b.dehomogenize()
    g = gcd_unipoly(ua, ub)
    s_mult = min(a.s_multiplicity(), b.s_multiplicity())
    return HomPoly2.homogenize(g, g.degree + s_mult)


def exact_div_hompoly2(a: HomPoly2, b: HomPoly2) -> HomPoly2:
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return HomPoly2.zero(max(a.degree - b.degree, 0))
    sa, sb = a.s_multiplicity(), b.s_multiplicity()
    if sa < sb:
        raise ValueError("inexact division (s-multiplicity)")
    q = exact_div(a.dehomogenize(), b.dehomogenize())
    return HomPoly2.homogenize(q, q.degree + sa - sb)


def content_hompoly2(polys: Sequence[HomPoly2]) -> HomPoly2:
    """Gcd of a family of homogeneous bivariate polynomials (not all zero)."""
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise ValueError("content of a family of zero polynomials")
    g = gcd_hompoly2(nonzero[0], nonzero[0])
    for p in nonzero[1:]:
        g = gcd_hompoly2(g, p)
        if g.degree == 0:
            break
    return g


def squarefree_factors_hompoly2(h: HomPoly2) -> list[tuple[HomPoly2, int]]:
    """Squarefree decomposition of a nonzero homogeneous bivariate polynomial.

    The pure power of s (the point at infinity t-chart-wise) comes out as the
    factor s with its multiplicity; the rest is Yun's decomposition of h(1, t)
    re-homogenized.
    """
    if h.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    out: list[tuple[HomPoly2, int]] = []
    s_mult = h.s_multiplicity()
    if s_mult > 0:
        out.append((HomPoly2(1, {0: 1}), s_mult))
    u = h.dehomogenize()
    for factor, mult in squarefree_decomposition(u):
        out.append((HomPoly2.homogenize(factor, factor.degree), mult))
    return out


CoeffRing = Union[Fraction, HomPoly2]


class MultiForm:
    """Sparse homogeneous form of degree d in nvars variables.

    Coefficients are rationals, or HomPoly2 values for pencils over the
    projective line.  Exponent vectors are tuples summing to d; stored
    coefficients are nonzero.  The zero form (no terms) is representable but
    has no semistability type.
    """

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms: Mapping[tuple[int, ...], CoeffRing | int]):
        if nvars < 2:
            raise ValueError("a form needs at least 2 variables")
        if degree < 1:
            raise ValueError("a form needs degree at least 1")
        self.nvars = nvars
        self.degree = degree
        clean: dict[tuple[int, ...], CoeffRing] = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if sum(exps) != degree:
                raise ValueError(f"exponent vector {exps} does not sum to {degree}")
            if isinstance(c, int):
                c = Fraction(c)
            if isinstance(c, Fraction):
                if c != 0:
                    clean[exps] = c
            elif isinstance(c, HomPoly2):
                if not c.is_zero():
                    clean[exps] = c
            else:
                raise TypeError(f"unsupported coefficient {c!r}")
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.terms))

    def scale(self, c: Scalar) -> "MultiForm":
        c = rat(c)
        return MultiForm(self.nvars, self.degree, {e: v * c for e, v in self.terms.items()})

    def permute_vars(self, perm: Sequence[int]) -> "MultiForm":
        """Apply X_i -> X_perm[i] to the variables."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("not a permutation of the variables")
        out: dict[tuple[int, ...], CoeffRing] = {}
        for exps, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i]] = e
            out[tuple(new)] = c
        return MultiForm(self.nvars, self.degree, out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiForm):
            return (self.nvars, self.degree, self.terms) == (other.nvars, other.degree, other.terms)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def __repr__(self) -> str:
        return f"MultiForm({self.nvars}, {self.degree}, {dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exps in self.support():
            c = self.terms[exps]
            mono = "*".join(
                f"X{i}" if e == 1 else f"X{i}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if isinstance(c, HomPoly2):
                parts.append(f"({c})*{mono}" if mono else f"({c})")
            elif c == 1 and mono:
                parts.append(mono)
            elif c == -1 and mono:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{format_rat(c)}*{mono}" if mono else format_rat(c))
        return " + ".join(parts)


def binary_form(d: int, coeffs: Mapping[int, Scalar]) -> MultiForm:
    """Binary form sum_j c_j X0^j X1^(d-j) from the map j -> c_j."""
    return MultiForm(2, d, {(j, d - j): c for j, c in coeffs.items()})


def binary_dehomogenize(form: MultiForm) -> UniPoly:
    """f(t) = F(t, 1) for a binary form with rational coefficients."""
    if form.nvars != 2:
        raise ValueError("expected a binary form")
    out: dict[int, Fraction] = {}
    for (j, _k), c in form.terms.items():
        if not isinstance(c, Fraction):
            raise TypeError("expected rational coefficients")
        out[j] = c
    coeffs = [Fraction(0)] * (max(out) + 1 if out else 0)
    for j, c in out.items():
        coeffs[j] = c
    return UniPoly(coeffs)


def binary_root_multiplicities(form: MultiForm) -> list[int]:
    """Multiplicities of the roots of a nonzero binary form on the projective
    line over the algebraic closure, each distinct root giving one entry.

    Detected through the squarefree decomposition of F(t, 1): a squarefree
    factor of degree k and multiplicity e contributes k entries equal to e;
    a root at [1:0] shows up as d - deg F(t, 1).
    """
    if form.is_zero():
        raise ValueError("zero form has no roots")
    f = binary_dehomogenize(form)
    mults: list[int] = []
    for factor, e in squarefree_decomposition(f):
        mults.extend([e] * factor.degree)
    inf = form.degree - f.degree
    if inf > 0:
        mults.append(inf)
    return mults


def binary_linear_action(form: MultiForm, mat: Sequence[Sequence[Scalar]]) -> MultiForm:
    """Substitute X0 -> a X0 + b X1, X1 -> c X0 + d X1 in a binary form,
    for mat = ((a, b), (c, d))."""
    if form.nvars != 2:
        raise ValueError("expected a binary form")
    (a, b), (c, d) = mat
    a, b, c, d = rat(a), rat(b), rat(c), rat(d)
    deg = form.degree
    # acc[j] is the coefficient of X0^j X1^(deg-j) of the substituted form
    acc = [Fraction(0)] * (deg + 1)
    for (j, k), coeff in form.terms.items():
        if not isinstance(coeff, Fraction):
            raise TypeError("expected rational coefficients")
        # (a X0 + b X1)^j (c X0 + d X1)^k, expanded by binomials
        left = [
            Fraction(math.comb(j, i)) * a ** i * b ** (j - i) for i in range(j + 1)
        ]
        right = [
            Fraction(math.comb(k, i)) * c ** i * d ** (k - i) for i in range(k + 1)
        ]
        for i, lc in enumerate(left):
            if lc == 0:
                continue
            for l, rc in enumerate(right):
                if rc == 0:
                    continue
                acc[i + l] += coeff * lc * rc
    return binary_form(deg, {j: c for j, c in enumerate(acc) if c != 0})

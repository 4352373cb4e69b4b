"""JSON encodings for every input and report type.

Rationals travel as exact "p/q" strings ("p" when the denominator is 1);
integers are also accepted on input.  No decimal output anywhere.  The
schemas are documented in the README.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping

from .algebra import HomPoly2, MultiForm, format_rat, rat
from .git_binary import BinaryPencil, FiberLocus, GitHeightReport
from .pencils import HeightReport, PencilDescriptor, SingularFiberRecord
from .semistability import SingularityProfile, Stability, StabilityVerdict


class SchemaError(ValueError):
    """Input does not match the documented JSON schema."""


def _get(obj: Mapping[str, Any], key: str, typ=None):
    if key not in obj:
        raise SchemaError(f"missing required key {key!r}")
    value = obj[key]
    if typ is not None and not isinstance(value, typ):
        raise SchemaError(f"key {key!r} has unexpected type {type(value).__name__}")
    return value


def _rat_in(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(f"expected an integer or 'p/q' string, got {value!r}")
    try:
        return rat(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {value!r}: {exc}") from exc


def _int_in(value, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"key {key!r} must be an integer")
    return value


# MultiForm: {"numVars": 3, "degree": 3, "terms": {"2,0,1": "1", ...}}

def multiform_to_json(form: MultiForm) -> dict[str, Any]:
    return {
        "numVars": form.nvars,
        "degree": form.degree,
        "terms": {
            ",".join(map(str, exps)): format_rat(c) for exps, c in sorted(form.terms.items())
        },
    }


def multiform_from_json(obj: Mapping[str, Any]) -> MultiForm:
    nvars = _int_in(_get(obj, "numVars"), "numVars")
    degree = _int_in(_get(obj, "degree"), "degree")
    raw = _get(obj, "terms", dict)
    terms: dict[tuple[int, ...], Fraction] = {}
    for key, value in raw.items():
        try:
            exps = tuple(int(part) for part in key.split(","))
        except ValueError as exc:
            raise SchemaError(f"bad exponent vector key {key!r}") from exc
        terms[exps] = _rat_in(value)
    try:
        return MultiForm(nvars, degree, terms)
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc


# HomPoly2 inside pencils: {"0": "1", "2": "-1/3"} maps t-exponent -> coeff

def _hompoly2_to_json(h: HomPoly2) -> dict[str, str]:
    return {str(i): format_rat(c) for i, c in sorted(h.coeffs.items())}


def _hompoly2_from_json(obj: Mapping[str, Any], degree: int) -> HomPoly2:
    coeffs: dict[int, Fraction] = {}
    for key, value in obj.items():
        try:
            i = int(key)
        except ValueError as exc:
            raise SchemaError(f"bad t-exponent key {key!r}") from exc
        coeffs[i] = _rat_in(value)
    try:
        return HomPoly2(degree, coeffs)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


# StabilityVerdict

def verdict_to_json(v: StabilityVerdict) -> dict[str, Any]:
    return {
        "status": v.status.value,
        "certificate": list(v.certificate) if v.certificate is not None else None,
        "rule": v.rule,
    }


def verdict_from_json(obj: Mapping[str, Any]) -> StabilityVerdict:
    status = Stability(_get(obj, "status", str))
    cert = obj.get("certificate")
    return StabilityVerdict(
        status,
        tuple(cert) if cert is not None else None,
        obj.get("rule", ""),
    )


# SingularityProfile

def profile_to_json(p: SingularityProfile) -> dict[str, Any]:
    return {
        "N": p.n,
        "d": p.d,
        "delta": p.delta,
        "s": p.s,
        "tangentConeNotHyperplaneCone": p.tangent_cone_not_hyperplane_cone,
        "semihomogeneous": p.semihomogeneous,
        "odpOnly": p.odp_only,
    }


def profile_from_json(obj: Mapping[str, Any]) -> SingularityProfile:
    return SingularityProfile(
        n=_int_in(_get(obj, "N"), "N"),
        d=_int_in(_get(obj, "d"), "d"),
        delta=_int_in(_get(obj, "delta"), "delta"),
        s=_int_in(_get(obj, "s"), "s"),
        tangent_cone_not_hyperplane_cone=bool(obj.get("tangentConeNotHyperplaneCone", False)),
        semihomogeneous=bool(obj.get("semihomogeneous", False)),
        odp_only=bool(obj.get("odpOnly", False)),
    )


# PencilDescriptor

def descriptor_to_json(p: PencilDescriptor) -> dict[str, Any]:
    out: dict[str, Any] = {
        "N": p.n,
        "d": p.d,
        "genus": p.genus,
        "degE": p.deg_e,
        "muMaxE": format_rat(p.mu_max_e),
        "singularPoints": [
            {"multiplicity": r.multiplicity, "semihomogeneous": r.semihomogeneous}
            for r in p.singular_points
        ],
    }
    if p.deg_m is not None:
        out["degM"] = p.deg_m
    if p.ht_int_override is not None:
        out["htInt"] = format_rat(p.ht_int_override)
    if p.all_fibers_semistable is not None:
        out["allFibersSemistable"] = p.all_fibers_semistable
    return out


def descriptor_from_json(obj: Mapping[str, Any]) -> PencilDescriptor:
    records = []
    for raw in obj.get("singularPoints", []):
        records.append(
            SingularFiberRecord(
                multiplicity=_int_in(_get(raw, "multiplicity"), "multiplicity"),
                semihomogeneous=bool(raw.get("semihomogeneous", True)),
            )
        )
    return PencilDescriptor(
        n=_int_in(_get(obj, "N"), "N"),
        d=_int_in(_get(obj, "d"), "d"),
        genus=_int_in(_get(obj, "genus"), "genus"),
        deg_e=_int_in(_get(obj, "degE"), "degE"),
        mu_max_e=_rat_in(_get(obj, "muMaxE")),
        deg_m=_int_in(obj["degM"], "degM") if "degM" in obj else None,
        ht_int_override=_rat_in(obj["htInt"]) if "htInt" in obj else None,
        singular_points=tuple(records),
        all_fibers_semistable=(
            bool(obj["allFibersSemistable"]) if "allFibersSemistable" in obj else None
        ),
    )


# HeightReport

def height_report_to_json(r: HeightReport) -> dict[str, Any]:
    return {
        "htInt": format_rat(r.ht_int),
        "htGKStab": format_rat(r.ht_gk_stab),
        "bound": format_rat(r.bound),
        "equalityCase": r.equality_case,
        "singularityBudgetOk": r.singularity_budget_ok,
        "generizationConditionOk": r.generization_condition_ok,
        "genericityBoundOk": r.genericity_bound_ok,
    }


def height_report_from_json(obj: Mapping[str, Any]) -> HeightReport:
    return HeightReport(
        ht_int=_rat_in(_get(obj, "htInt")),
        ht_gk_stab=_rat_in(_get(obj, "htGKStab")),
        bound=_rat_in(_get(obj, "bound")),
        equality_case=bool(_get(obj, "equalityCase")),
        singularity_budget_ok=bool(_get(obj, "singularityBudgetOk")),
        generization_condition_ok=bool(_get(obj, "generizationConditionOk")),
        genericity_bound_ok=(
            None if obj.get("genericityBoundOk") is None else bool(obj["genericityBoundOk"])
        ),
    )


# BinaryPencil: {"d": 4, "m": 1, "coefficients": {"4": {"0": "1"}, ...}}

def binary_pencil_to_json(p: BinaryPencil) -> dict[str, Any]:
    return {
        "d": p.d,
        "m": p.m,
        "coefficients": {
            str(j): _hompoly2_to_json(h) for j, h in sorted(p.coefficients.items())
        },
    }


def binary_pencil_from_json(obj: Mapping[str, Any]) -> BinaryPencil:
    d = _int_in(_get(obj, "d"), "d")
    m = _int_in(_get(obj, "m"), "m")
    raw = _get(obj, "coefficients", dict)
    coeffs: dict[int, HomPoly2] = {}
    for key, value in raw.items():
        try:
            j = int(key)
        except ValueError as exc:
            raise SchemaError(f"bad coefficient exponent {key!r}") from exc
        if not isinstance(value, dict):
            raise SchemaError(f"coefficient {key!r} must be a t-exponent map")
        coeffs[j] = _hompoly2_from_json(value, m)
    return BinaryPencil(d=d, m=m, coefficients=coeffs)


# GitHeightReport

def git_report_to_json(r: GitHeightReport) -> dict[str, Any]:
    return {
        "htGIT": format_rat(r.ht_git),
        "htInt": format_rat(r.ht_int),
        "contactLength": r.contact_length,
        "delta": r.delta,
        "allFibersSemistable": r.all_fibers_semistable,
    }


def git_report_from_json(obj: Mapping[str, Any]) -> GitHeightReport:
    return GitHeightReport(
        ht_git=_rat_in(_get(obj, "htGIT")),
        ht_int=_rat_in(_get(obj, "htInt")),
        contact_length=_int_in(_get(obj, "contactLength"), "contactLength"),
        delta=_int_in(_get(obj, "delta"), "delta"),
        all_fibers_semistable=bool(_get(obj, "allFibersSemistable")),
    )


def fiber_profile_to_json(entries: list[FiberLocus]) -> list[dict[str, Any]]:
    return [
        {
            "locus": _hompoly2_to_json(e.locus),
            "locusDegree": e.locus.degree,
            "atInfinity": e.at_infinity,
            "verdict": verdict_to_json(e.verdict),
        }
        for e in entries
    ]

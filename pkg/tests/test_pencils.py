import random
import warnings
from fractions import Fraction

import pytest

from pencilheights.coeffs import classify_equality_case, f_stab
from pencilheights.pencils import (
    HeightReport,
    PencilDescriptor,
    SingularFiberRecord,
    full_report,
    generization_condition,
    genericity_bound,
    ht_gk_stab,
    ht_int,
    singularity_budget_check,
    singularity_budget_sides,
    two_g_minus_two_tilde,
    upper_bound_verdict,
)
from pencilheights.sampling import random_budget_consistent_descriptor


def descriptor(**kw):
    base = dict(n=2, d=3, genus=0, deg_e=0, mu_max_e=0)
    base.update(kw)
    return PencilDescriptor(**base)


def odp_records(count):
    return tuple(SingularFiberRecord(2) for _ in range(count))


class TestDescriptor:
    def test_needs_a_height_source(self):
        with pytest.raises(ValueError, match="degM/htInt"):
            PencilDescriptor(n=2, d=3, genus=0, deg_e=0, mu_max_e=0)

    def test_consistency_when_both_given(self):
        descriptor(deg_m=7, deg_e=4, mu_max_e=2, ht_int_override=3)  # 7 - 4 = 3
        with pytest.raises(ValueError, match="htInt"):
            descriptor(deg_m=7, deg_e=4, mu_max_e=2, ht_int_override=4)

    def test_multiplicity_one_rejected_at_parse_time(self):
        with pytest.raises(ValueError, match="multiplicity"):
            SingularFiberRecord(1)

    def test_mu_max_at_least_slope(self):
        with pytest.raises(ValueError, match="muMaxE"):
            descriptor(deg_m=1, deg_e=6, mu_max_e=1)


class TestHtInt:
    def test_trivial_bundle(self):
        assert ht_int(descriptor(deg_m=5)) == 5

    def test_direct_substitution(self):
        # 7 - 3*4/3 = 3
        assert ht_int(descriptor(deg_m=7, deg_e=4, mu_max_e=2)) == 3

    def test_override_passthrough(self):
        assert ht_int(descriptor(ht_int_override=Fraction(2, 3))) == Fraction(2, 3)

    def test_twist_invariance(self):
        # (degE, degM) -> (degE + (n+1)k, degM + dk) leaves the height fixed
        rng = random.Random(2)
        for _ in range(100):
            n = rng.randint(1, 6)
            d = rng.randint(2, 8)
            deg_e = rng.randint(-4, 4)
            deg_m = rng.randint(-4, 8)
            k = rng.randint(-3, 3)
            mu = Fraction(deg_e, n + 1) + rng.randint(0, 3)
            base = PencilDescriptor(
                n=n, d=d, genus=0, deg_e=deg_e, mu_max_e=mu, deg_m=deg_m
            )
            twisted = PencilDescriptor(
                n=n,
                d=d,
                genus=0,
                deg_e=deg_e + (n + 1) * k,
                mu_max_e=mu + k,
                deg_m=deg_m + d * k,
            )
            assert ht_int(base) == ht_int(twisted)


class TestBudget:
    def test_twelve_nodes_on_a_cubic_pencil(self):
        p = descriptor(deg_m=1, singular_points=odp_records(12))
        assert singularity_budget_check(p)
        assert singularity_budget_sides(p) == (12, Fraction(12))

    def test_off_by_one(self):
        p = descriptor(deg_m=1, singular_points=odp_records(11))
        assert not singularity_budget_check(p)

    def test_requires_semihomogeneous_records(self):
        p = descriptor(
            deg_m=1,
            singular_points=(SingularFiberRecord(2, semihomogeneous=False),),
        )
        with pytest.raises(ValueError, match="validity domain"):
            singularity_budget_check(p)


class TestHtGkStab:
    def test_odp_reduction(self):
        p = descriptor(deg_m=1, singular_points=odp_records(12))
        assert ht_gk_stab(p) == f_stab(3, 2) * ht_int(p) == 1

    def test_cubic_surface_mix_vanishes(self):
        # budget: 4 * 8 * 1 = 32 = 3 * (3-1)^3 + 8 * 1
        records = tuple(
            [SingularFiberRecord(3)] * 3 + [SingularFiberRecord(2)] * 8
        )
        p = PencilDescriptor(
            n=3, d=3, genus=0, deg_e=0, mu_max_e=0, deg_m=1, singular_points=records
        )
        assert singularity_budget_check(p)
        assert ht_gk_stab(p) == 0

    def test_no_singular_fibers_zero_height(self):
        p = descriptor(ht_int_override=0)
        assert ht_gk_stab(p) == 0

    def test_warns_outside_validity_domain(self):
        p = descriptor(deg_m=1, singular_points=odp_records(11))
        with pytest.warns(RuntimeWarning, match="budget"):
            ht_gk_stab(p)

    def test_rejects_non_semihomogeneous(self):
        p = descriptor(
            deg_m=1, singular_points=(SingularFiberRecord(3, semihomogeneous=False),)
        )
        with pytest.raises(ValueError, match="validity domain"):
            ht_gk_stab(p)


class TestUpperBound:
    def test_equality_for_cubic_surfaces(self):
        records = tuple([SingularFiberRecord(3)] * 3 + [SingularFiberRecord(2)] * 8)
        p = PencilDescriptor(
            n=3, d=3, genus=0, deg_e=0, mu_max_e=0, deg_m=1, singular_points=records
        )
        bound, equality = upper_bound_verdict(p)
        assert bound == 0 and equality

    def test_strict_for_high_multiplicity_surface(self):
        # n = 2, one multiplicity-4 point: budget 3*(d-1)^2*ht = 9, realized
        # as ht = 1 with d = 2... use d = 9 instead: 3*64*ht = (4-1)^2 = 9
        p = PencilDescriptor(
            n=2,
            d=9,
            genus=0,
            deg_e=0,
            mu_max_e=0,
            ht_int_override=Fraction(9, 3 * 64),
            singular_points=(SingularFiberRecord(4),),
        )
        assert singularity_budget_check(p)
        bound, equality = upper_bound_verdict(p)
        assert not equality
        assert ht_gk_stab(p) < bound

    def test_dimension_one_always_equality(self):
        p = PencilDescriptor(
            n=1,
            d=5,
            genus=0,
            deg_e=0,
            mu_max_e=0,
            ht_int_override=Fraction(3, 8),
            singular_points=(SingularFiberRecord(2), SingularFiberRecord(2), SingularFiberRecord(2)),
        )
        bound, equality = upper_bound_verdict(p)
        assert equality and bound == 0 == ht_gk_stab(p)

    def test_randomized_budget_consistent_sweep(self):
        rng = random.Random(101)
        for _ in range(300):
            p = random_budget_consistent_descriptor(rng)
            assert singularity_budget_check(p)
            bound, equality = upper_bound_verdict(p)
            value = ht_gk_stab(p)
            assert value <= bound
            assert (value == bound) == equality
            assert equality == classify_equality_case(p.n, p.multiplicities)

    def test_odp_only_reduction_sweep(self):
        rng = random.Random(103)
        for _ in range(300):
            p = random_budget_consistent_descriptor(rng, odp_only=True)
            assert ht_gk_stab(p) == f_stab(p.d, p.n) * ht_int(p)


class TestNumericalConditions:
    def test_two_g_minus_two(self):
        assert two_g_minus_two_tilde(0) == -1
        assert two_g_minus_two_tilde(1) == 0
        assert two_g_minus_two_tilde(3) == 4

    def test_generization_examples(self):
        assert generization_condition(descriptor(ht_int_override=0))  # 0 > -1
        p = PencilDescriptor(
            n=3, d=4, genus=1, deg_e=0, mu_max_e=Fraction(1, 2), deg_m=2
        )
        assert ht_int(p) == 2
        assert not generization_condition(p)  # 2 > 0 + 2 fails
        q = PencilDescriptor(n=2, d=3, genus=2, deg_e=0, mu_max_e=0, deg_m=3)
        assert generization_condition(q)  # 3 > 2

    def test_genericity_examples(self):
        assert genericity_bound(descriptor(deg_m=0))  # 0 > -1
        assert not genericity_bound(
            PencilDescriptor(n=2, d=3, genus=1, deg_e=0, mu_max_e=0, deg_m=1)
        )
        assert genericity_bound(
            PencilDescriptor(n=2, d=4, genus=0, deg_e=1, mu_max_e=Fraction(1, 2), deg_m=2)
        )

    def test_genericity_needs_deg_m(self):
        with pytest.raises(ValueError, match="degM"):
            genericity_bound(descriptor(ht_int_override=1))


class TestFullReport:
    def test_aggregates_everything(self):
        p = descriptor(deg_m=1, singular_points=odp_records(12))
        report = full_report(p)
        assert report == HeightReport(
            ht_int=Fraction(1),
            ht_gk_stab=Fraction(1),
            bound=Fraction(1),
            equality_case=True,
            singularity_budget_ok=True,
            generization_condition_ok=True,
            genericity_bound_ok=True,
        )

    def test_genericity_unknown_without_deg_m(self):
        report = full_report(descriptor(ht_int_override=2))
        assert report.genericity_bound_ok is None

    def test_deterministic(self):
        p = descriptor(deg_m=1, singular_points=odp_records(12))
        assert full_report(p) == full_report(p)

    def test_flags_budget_violation_without_raising(self):
        p = descriptor(deg_m=1, singular_points=odp_records(11))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = full_report(p)
        assert not report.singularity_budget_ok

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from twokrein.funcspec import PathExpression
from twokrein.krein import DimensionError, make_space, random_coords
from twokrein.twometric import StandardizedTwoKrein
from twokrein.variation import (
    CallablePath,
    EvaluationError,
    IncompatibleBVError,
    NotBoundedVariationError,
    OracleUnavailableError,
    Partition,
    PartitionError,
    PolynomialPath,
    StepPath,
    adaptive_simpson,
    bv_element,
    bv_two_norm,
    check_variation_laws,
    estimate_variation,
    krein_variation,
    partial_variations,
    partition_sum,
    variation_oracle_quadrature,
)

from conftest import random_two_krein


def test_linear_path_value(plane):
    f = PolynomialPath("(-i*x, i)", (0, 1))
    t = plane.space.vector([1, 0])
    est = estimate_variation(plane, f, t)
    assert est.converged
    assert abs(est.value - 1.0) <= 1e-9
    assert partial_variations(plane, f, t) == pytest.approx((1.0, 0.0))
    assert krein_variation(plane, f) == pytest.approx(1.0)


def test_cusp_closed_form(plane):
    # speed sqrt(4x^2 + 9x^4); integral over [0, 1] is (13^1.5 - 8) / 27
    f = PolynomialPath("(x^2, x^3)", (0, 1))
    t = plane.space.vector([1, 1])
    exact = (13 ** 1.5 - 8) / 27
    est = estimate_variation(plane, f, t)
    assert est.converged
    assert est.value <= exact + 1e-12
    assert abs(est.value - exact) <= 1e-6
    assert variation_oracle_quadrature(plane, f, t) == pytest.approx(exact, rel=1e-9)


def test_adaptive_simpson_against_quad():
    for g, a, b in [(math.sin, 0, 3), (lambda x: math.sqrt(abs(x)), -1, 2), (math.exp, 0, 1)]:
        ref, _ = integrate.quad(g, a, b, epsabs=1e-13, epsrel=1e-13, limit=200)
        assert adaptive_simpson(g, a, b) == pytest.approx(ref, rel=1e-8)


def test_step_path_jumps(plane):
    t = plane.space.vector([1, 0])
    f = StepPath([0.3, 0.7], [[0, 0], [2, 0], [2, 3]], (0, 1))
    est = estimate_variation(plane, f, t)
    # two jumps: N((2, 0), t) = 2 and N((0, 3), t) = 0 with t in F+
    assert est.value == pytest.approx(2.0)
    with pytest.raises(OracleUnavailableError):
        variation_oracle_quadrature(plane, f, t)


def test_partition_sum_monotone_under_refinement(plane, rng):
    f = PolynomialPath("(x^3 - x, 2i*x^2 + 1)", (-1, 2))
    t = plane.space.vector([1, 0.5j])
    P = Partition.uniform(-1, 2, 5)
    prev = partition_sum(plane, f, t, P)
    for _ in range(5):
        P = P.refine(rng.uniform(-1, 2, size=7))
        s = partition_sum(plane, f, t, P)
        assert s >= prev - 1e-12
        prev = s
    assert prev <= variation_oracle_quadrature(plane, f, t) * (1 + 1e-9)


def test_partition_validation():
    with pytest.raises(PartitionError):
        Partition((0.0, 0.0))
    with pytest.raises(PartitionError):
        PolynomialPath("(x, 1)", (1, 0))


def test_dimension_mismatch(plane):
    with pytest.raises(DimensionError):
        estimate_variation(plane, PolynomialPath("(x)", (0, 1)), plane.space.vector([1, 0]))


def test_evaluation_error_reports_abscissa(plane):
    f = CallablePath(lambda xs: np.stack([1 / (xs - 0.5), xs], axis=-1), 2, (0, 1))
    with np.errstate(divide="ignore"), pytest.raises(EvaluationError) as info:
        estimate_variation(plane, f, plane.space.vector([1, 0]))
    assert info.value.abscissa == 0.5


def test_unbounded_variation_detected(plane):
    # x sin(1/x) has infinite variation near 0
    def fn(xs):
        with np.errstate(divide="ignore", invalid="ignore"):
            v = np.where(xs == 0, 0.0, xs * np.sin(1 / np.where(xs == 0, 1, xs)))
        return np.stack([v, 0 * xs], axis=-1)

    # on [0, 1] the first midpoint aliases (level-1 sum equals level 0), so use [0, 0.3]
    f = CallablePath(fn, 2, (0, 0.3))
    with pytest.raises(NotBoundedVariationError):
        bv_element(plane, f, plane.space.vector([1, 0]), max_depth=12)


def test_bv_two_norm_needs_same_weight(plane):
    f = PolynomialPath("(x, 1)", (0, 1))
    F = bv_element(plane, f, plane.space.vector([1, 0]))
    G = bv_element(plane, f, plane.space.vector([1, 1]))
    with pytest.raises(IncompatibleBVError):
        bv_two_norm(plane, F, G)
    # anchor (0, 1) lies in F- while t lies in F+, so N_J(f(a), t) = 0
    assert bv_two_norm(plane, F, F) == 0.0


def test_zero_variation_constancy(plane):
    f = PolynomialPath("(2, i)", (0, 1))
    t = plane.space.vector([1, 0])
    report = check_variation_laws(plane, f, f, t, t, 2.0)
    assert report.passed
    assert report.by_name("zero_variation_constancy").passed


def _random_poly(rng, dim, degree):
    return PathExpression.from_coefficients(random_coords(rng, (dim, degree + 1)))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_law_battery(seed):
    rng = np.random.default_rng(seed)
    S = random_two_krein(rng, dim=int(rng.integers(2, 5)))
    n = S.space.dim
    f = PolynomialPath(_random_poly(rng, n, int(rng.integers(1, 4))), (0, 1))
    g = PolynomialPath(_random_poly(rng, n, int(rng.integers(1, 4))), (0, 1))
    t, v = (S.space.vector(random_coords(rng, n)) for _ in range(2))
    report = check_variation_laws(S, f, g, t, v, complex(*rng.normal(size=2)), seed=seed)
    failed = [c.to_dict() for c in report.checks if not c.passed]
    assert not failed


def test_estimate_matches_oracle_on_random_paths(rng):
    for _ in range(10):
        S = random_two_krein(rng, dim=3)
        f = PolynomialPath(_random_poly(rng, 3, 4), (-0.5, 1.5))
        t = S.space.vector(random_coords(rng, 3))
        est = estimate_variation(S, f, t)
        oracle = variation_oracle_quadrature(S, f, t)
        assert est.converged
        assert abs(est.value - oracle) <= 1e-5 * (1 + est.value)
        assert all(d >= -1e-12 * (1 + est.value) for d in est.increments)

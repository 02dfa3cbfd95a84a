"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` or through pytest.
"""
import math
import string
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from twokrein.funcspec import MAX_DEGREE, ParseError, PathExpression, format_expression, parse
from twokrein.krein import (
    AngularOperator,
    canonical_symmetry,
    equivalence_constants,
    make_space,
    random_coords,
    random_signature,
    random_symmetry,
    symmetry_from_angular,
)
from twokrein.twometric import StandardizedTwoKrein, axiom_report, psi, psi_j, scan_equivalence
from twokrein.variation import (
    PolynomialPath,
    bv_element,
    bv_two_norm,
    check_variation_laws,
    estimate_variation,
    variation_oracle_quadrature,
)

from conftest import random_two_krein

RESULTS: dict[int, tuple[bool, str]] = {}


def _report(n: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} ({detail})"
    print(line, flush=True)


def _random_poly(rng, dim, degree):
    return PathExpression.from_coefficients(random_coords(rng, (dim, degree + 1)))


# 1 ---------------------------------------------------------------------------

def criterion_1():
    start = time.perf_counter()
    S = StandardizedTwoKrein.canonical(make_space([1, -1]))
    est = estimate_variation(S, PolynomialPath("(-i*x, i)", (0, 1)), S.space.vector([1, 0]))
    elapsed = time.perf_counter() - start
    ok = abs(est.value - 1.0) <= 1e-9 and est.converged and elapsed < 1.0
    return ok, f"value={est.value!r}, converged={est.converged}, {elapsed * 1e3:.1f} ms"


# 2 ---------------------------------------------------------------------------

def criterion_2():
    rng = np.random.default_rng(2)
    S = StandardizedTwoKrein.canonical(make_space([1, -1]))
    sp = S.space
    worst = 0.0
    for _ in range(1000):
        a, b = random_coords(rng, 2) * 10 ** rng.uniform(-1, 1, 2)
        x, y, z = (random_coords(rng, 2) for _ in range(3))
        z1, z2 = abs(z[0]) ** 2, abs(z[1]) ** 2
        zv = sp.vector(z)
        errs = [
            psi(S, sp.vector([a, 0]), sp.vector([a, 0]), zv) - abs(a) ** 2 * z1,
            psi(S, sp.vector([0, a]), sp.vector([0, a]), zv) + abs(a) ** 2 * z2,
            psi(S, sp.vector([a, 0]), sp.vector([0, b]), zv),
            psi_j(S, sp.vector(x), sp.vector(y), zv)
            - (x[0] * np.conj(y[0]) * z1 + x[1] * np.conj(y[1]) * z2),
        ]
        worst = max(worst, max(abs(e) for e in errs))
    return worst <= 1e-12, f"max error {worst:.2e} over 1000 instances"


# 3 ---------------------------------------------------------------------------

def criterion_3():
    rng = np.random.default_rng(3)
    start = time.perf_counter()
    worst, failures = 0.0, []
    for i in range(50):
        dim = int(rng.integers(2, 17))
        space = make_space(random_signature(rng, dim))
        S = StandardizedTwoKrein(space, random_symmetry(space, rng, max_norm=0.9))
        report = axiom_report(S, 1000, seed=i)
        worst = max(worst, max(o.defect for o in report.laws.values()))
        if not report.passed:
            failures.append((i, report.failed))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and not failures and elapsed <= 60
    return ok, f"max defect {worst:.2e}, failures {failures}, {elapsed:.1f} s"


# 4 ---------------------------------------------------------------------------

def criterion_4():
    rng = np.random.default_rng(4)
    worst_gap, worst_drop = 0.0, 0.0
    for _ in range(100):
        S = random_two_krein(rng, dim=int(rng.integers(2, 6)))
        a = float(rng.uniform(-1, 1))
        f = PolynomialPath(_random_poly(rng, S.space.dim, int(rng.integers(0, 6))),
                           (a, a + float(rng.uniform(0.1, 2))))
        t = S.space.vector(random_coords(rng, S.space.dim))
        est = estimate_variation(S, f, t, max_depth=20)
        oracle = variation_oracle_quadrature(S, f, t)
        worst_gap = max(worst_gap, abs(est.value - oracle) / (1 + est.value))
        drops = [-(d / (1 + est.value)) for d in est.increments]
        worst_drop = max([worst_drop] + drops)
    ok = worst_gap <= 1e-5 and worst_drop <= 1e-12
    return ok, f"max |est - oracle|/(1+V) {worst_gap:.2e}, max scaled drop {worst_drop:.2e}"


# 5 ---------------------------------------------------------------------------

def criterion_5():
    rng = np.random.default_rng(5)
    worst, failed = math.inf, []
    for case in range(100):
        S = random_two_krein(rng, dim=int(rng.integers(2, 5)))
        n = S.space.dim
        f = PolynomialPath(_random_poly(rng, n, 3), (0, 1))
        g = PolynomialPath(_random_poly(rng, n, 3), (0, 1))
        t, v = (S.space.vector(random_coords(rng, n)) for _ in range(2))
        alpha = complex(*rng.normal(size=2))
        report = check_variation_laws(S, f, g, t, v, alpha, seed=case)
        for c in report.checks:
            worst = min(worst, c.slack)
            if not c.passed:
                failed.append((case, c.name, c.slack))
    return not failed, f"min slack {worst:.2e}, failures {failed[:3]}"


# 6 ---------------------------------------------------------------------------

def criterion_6():
    rng = np.random.default_rng(6)
    S = random_two_krein(rng, dim=3)
    t = S.space.vector(random_coords(rng, 3))
    paths = [PolynomialPath(_random_poly(rng, 3, int(rng.integers(0, 4))), (0, 1)) for _ in range(40)]
    pool = [bv_element(S, f, t) for f in paths]
    worst = 0.0
    for _ in range(1000):
        i, j, k = rng.integers(0, len(pool), 3)
        F, G, H = pool[i], pool[j], pool[k]
        alpha = complex(*rng.normal(size=2))
        aF = bv_element(S, F.handle.scaled(alpha), t)
        FG = bv_element(S, F.handle + G.handle, t)
        n_fh, n_gh = bv_two_norm(S, F, H), bv_two_norm(S, G, H)
        scale = 1 + n_fh + n_gh
        d1 = abs(bv_two_norm(S, aF, H) - abs(alpha) * n_fh) / (1 + abs(alpha) * n_fh)
        d2 = max(0.0, bv_two_norm(S, FG, H) - n_fh - n_gh) / scale
        d3 = abs(bv_two_norm(S, F, G) - bv_two_norm(S, G, F))
        neg = max(0.0, -n_fh)
        worst = max(worst, d1, d2, d3, neg)
    return worst <= 1e-9, f"max scaled defect {worst:.2e} over 1000 pairs"


# 7 ---------------------------------------------------------------------------

def criterion_7():
    rng = np.random.default_rng(7)
    space0 = make_space([1, -1, 1, -1])
    J = random_symmetry(space0, rng)
    c = equivalence_constants(J, J)
    exact = (c.alpha, c.beta) == (1.0, 1.0)
    worst, missing = -math.inf, []
    for i in range(20):
        dim = int(rng.integers(2, 9))
        space = make_space(random_signature(rng, dim))
        norm = float(rng.uniform(0.1, 0.95)) if i else 0.1
        K = AngularOperator.random(space, rng, norm)
        S1 = StandardizedTwoKrein(space, canonical_symmetry(space))
        S2 = StandardizedTwoKrein(space, symmetry_from_angular(space, K))
        scan = scan_equivalence(S1, S2, 100_000, seed=i)
        worst = max(worst, scan.norm_bound_defect)
        if K.norm >= 0.1 and not scan.witness_verified:
            missing.append(i)
    ok = exact and worst <= 1e-9 and not missing
    return ok, f"(1,1) exact={exact}, max bound defect {worst:.2e}, missing witnesses {missing}"


# 8 ---------------------------------------------------------------------------

def _random_expression(rng):
    dim = int(rng.integers(1, 6))
    coords = []
    for _ in range(dim):
        deg = int(rng.integers(-1, MAX_DEGREE + 1))
        kind = rng.integers(0, 3)
        if kind == 0:
            c = rng.integers(-9, 10, size=(deg + 1, 2)).astype(float)
        elif kind == 1:
            c = rng.normal(size=(deg + 1, 2)) * 10.0 ** rng.integers(-12, 12, size=(deg + 1, 2))
        else:
            c = rng.normal(size=(deg + 1, 2)) * (rng.random((deg + 1, 2)) < 0.5)
        coords.append([complex(re, im) for re, im in c])
    return PathExpression.from_coefficients(coords)


def criterion_8():
    rng = np.random.default_rng(8)
    bad_trip = 0
    for _ in range(1000):
        expr = _random_expression(rng)
        if parse(format_expression(expr)) != expr:
            bad_trip += 1
    crashes = 0
    alphabet = list("()+-*^xi,.eE 0123456789") + list(string.ascii_letters[:6]) + ["é", "\t"]
    for _ in range(10_000):
        text = "".join(rng.choice(alphabet, size=int(rng.integers(0, 257))))
        if rng.random() < 0.5:
            text = "(" + text + ")"
        try:
            parse(text)
        except ParseError:
            pass
        except Exception:  # noqa: BLE001 - anything else is a crash
            crashes += 1
    reference = parse("(-i*x, i)").coords == ((0j, -1j), (1j,))
    ok = bad_trip == 0 and crashes == 0 and reference
    return ok, f"round-trip failures {bad_trip}/1000, crashes {crashes}/10000, reference coefficients {reference}"


CRITERIA = [
    (1, "reference variation value", criterion_1),
    (2, "two-inner product closed forms", criterion_2),
    (3, "axiom suite on random spaces", criterion_3),
    (4, "refinement monotonicity and oracle agreement", criterion_4),
    (5, "variation inequality battery", criterion_5),
    (6, "BV two-norm axioms", criterion_6),
    (7, "equivalence machinery", criterion_7),
    (8, "path parser", criterion_8),
]


@pytest.mark.parametrize("n, title, fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(n, title, fn):
    ok, detail = fn()
    _report(n, title, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    status = 0
    for n, title, fn in CRITERIA:
        ok, detail = fn()
        _report(n, title, ok, detail)
        status |= not ok
    sys.exit(status)

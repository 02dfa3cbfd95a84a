import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twokrein.krein import (
    FundamentalSymmetry,
    SpaceMismatchError,
    canonical_symmetry,
    make_space,
    random_coords,
    symmetry_from_angular,
)
from twokrein.twometric import (
    LAWS,
    DegenerateDirectionError,
    StandardizedTwoKrein,
    axiom_report,
    batch_psi,
    component_two_norms,
    degenerate_pair,
    psi,
    psi_j,
    recompute_defect,
    scan_equivalence,
    two_norm_j,
    witness_indefinite,
)

from conftest import random_two_krein


def test_plane_closed_forms(plane):
    space = plane.space
    x, z = space.vector([2, 0]), space.vector([1j, 3])
    assert psi(plane, x, x, z) == pytest.approx(4.0)
    y = space.vector([0, 2])
    assert psi(plane, y, y, z) == pytest.approx(-36.0)
    assert psi(plane, x, y, z) == 0
    assert psi_j(plane, y, y, z) == pytest.approx(36.0)
    assert two_norm_j(plane, x + y, z) == pytest.approx(np.sqrt(4 + 36))
    assert component_two_norms(plane, x + y, z) == pytest.approx((2.0, 6.0))


def test_swap_law_on_psi(plane, rng):
    for _ in range(50):
        x, z = (plane.space.vector(random_coords(rng, 2)) for _ in range(2))
        assert psi(plane, x, x, z) == pytest.approx(psi(plane, z, z, x), abs=1e-12)


def test_two_norm_can_vanish_for_nonzero_pair(plane):
    # x in F+, z in F-: N_J(x, z) = 0 although neither vector is zero
    e0, e1 = plane.space.basis(0), plane.space.basis(1)
    assert two_norm_j(plane, e0, e1) == 0.0
    assert two_norm_j(plane, e0, e0) == 1.0


def test_mismatched_symmetry_rejected():
    a, b = make_space([1, -1]), make_space([-1, 1])
    with pytest.raises(SpaceMismatchError):
        StandardizedTwoKrein(a, canonical_symmetry(b))


def test_witness_indefinite(plane):
    x1, x2 = witness_indefinite(plane, plane.space.vector([1, 1j]))
    z = plane.space.vector([1, 1j])
    assert psi(plane, x1, x1, z).real > 0 > psi(plane, x2, x2, z).real
    with pytest.raises(DegenerateDirectionError, match="degenerate direction"):
        witness_indefinite(plane, plane.space.vector([1, 0]))


def test_law_registry_names_unique():
    names = [law.name for law in LAWS]
    assert len(names) == len(set(names)) == 28


def test_canonical_report_passes(plane):
    report = axiom_report(plane, 5000, seed=1)
    assert report.passed, report.failed
    assert report.sample_count == 5000


def test_report_deterministic_and_worker_independent():
    S = random_two_krein(np.random.default_rng(5), dim=6)
    a = axiom_report(S, 10_000, seed=9)
    b = axiom_report(S, 10_000, seed=9, workers=3)
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)


def test_merge_is_order_independent():
    S = random_two_krein(np.random.default_rng(6), dim=4)
    parts = [axiom_report(S, 300, seed=s) for s in range(3)]
    left = parts[0].merge(parts[1]).merge(parts[2])
    right = parts[0].merge(parts[1].merge(parts[2]))
    swapped = parts[2].merge(parts[0]).merge(parts[1])
    for other in (right, swapped):
        assert {k: o.defect for k, o in left.laws.items()} == {k: o.defect for k, o in other.laws.items()}


def test_corrupted_symmetry_fails_with_reproducible_witness():
    space = make_space([1, -1, 1])
    bad = FundamentalSymmetry(np.diag([1.01, -1.0, 1.0]), space, check=False)
    S = StandardizedTwoKrein(space, bad)
    report = axiom_report(S, 2000, seed=0)
    assert not report.passed
    assert "involution" in report.failed
    for name in report.failed:
        outcome = report.laws[name]
        assert outcome.to_dict()["witness"]
        assert recompute_defect(S, name, outcome.witness) == pytest.approx(outcome.defect, rel=1e-9)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**32 - 1))
def test_random_spaces_pass(dim, seed):
    S = random_two_krein(np.random.default_rng(seed), dim=dim)
    assert axiom_report(S, 500, seed=seed).passed


def test_batch_psi_sesquilinear(rng):
    S = random_two_krein(rng, dim=5)
    x, y, w, z = (random_coords(rng, (20, 5)) for _ in range(4))
    a = 1.5 - 2j
    lhs = batch_psi(S.sigma, S.J, a * x + w, y, z)
    rhs = a * batch_psi(S.sigma, S.J, x, y, z) + batch_psi(S.sigma, S.J, w, y, z)
    assert np.allclose(lhs, rhs, atol=1e-10)


def test_degenerate_pair_hand_case():
    space = make_space([1, -1])
    S1 = StandardizedTwoKrein.canonical(space)
    S2 = StandardizedTwoKrein(space, symmetry_from_angular(space, np.array([[0.5]])))
    x, z, n1, n2 = degenerate_pair(S1, S2)
    assert n2 <= 1e-14
    assert n1 > 0.1


def test_scan_coincident_decompositions(plane):
    scan = scan_equivalence(plane, plane, 2000)
    assert scan.decompositions_coincide
    assert not scan.two_sided_claim_refuted
    assert scan.constants.alpha == scan.constants.beta == 1.0


def test_scan_finds_witnesses():
    space = make_space([1, 1, -1, -1])
    rng = np.random.default_rng(2)
    K = 0.4 * random_coords(rng, (2, 2))
    S2 = StandardizedTwoKrein(space, symmetry_from_angular(space, K / np.linalg.norm(K, 2) * 0.4))
    scan = scan_equivalence(StandardizedTwoKrein.canonical(space), S2, 5000, seed=1)
    assert scan.witness_verified and scan.two_sided_claim_refuted
    assert scan.norm_bound_defect <= 1e-9
    assert scan.cross_bound_defect <= 1e-9
    assert json.loads(json.dumps(scan.to_dict()))["witness"]["verified"]

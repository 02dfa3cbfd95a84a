import numpy as np
import pytest

from twokrein.krein import make_space, random_signature, random_symmetry
from twokrein.twometric import StandardizedTwoKrein


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def plane():
    """C^2 with signature (+, -) and the canonical symmetry."""
    return StandardizedTwoKrein.canonical(make_space([1, -1]))


def random_two_krein(rng, dim=None, canonical=False):
    dim = dim if dim is not None else int(rng.integers(2, 9))
    space = make_space(random_signature(rng, dim))
    if canonical:
        return StandardizedTwoKrein.canonical(space)
    return StandardizedTwoKrein(space, random_symmetry(space, rng, max_norm=0.9))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")

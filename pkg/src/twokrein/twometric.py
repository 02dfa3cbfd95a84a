"""Standardized indefinite two-inner product built from a Krein space.

    psi(x, y, z)  = [x+, y+] ||z+||_+^2 + [x-, y-] ||z-||_-^2
    psi_J(x, y, z) = psi(Jx, y, z)
    N_J(x, y)     = sqrt(psi_J(x, x, y))

Components are taken with respect to the symmetry carried by the
:class:`StandardizedTwoKrein`.  N_J is a two-norm without the
nondegeneracy axiom: N_J(x, y) = 0 as soon as x lies in F+ and y in F-.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np
import scipy.linalg

from .krein import (
    TOL,
    EquivalenceConstants,
    FundamentalSymmetry,
    KreinError,
    KreinSpace,
    KVector,
    SpaceMismatchError,
    batch_apply,
    batch_inner,
    batch_j_norm,
    batch_project,
    canonical_symmetry,
    clamped_sqrt,
    equivalence_constants,
    random_coords,
)

STRICT_TOL = 1e-12
CHUNK = 4096


class DegenerateDirectionError(KreinError):
    pass


@dataclass(frozen=True)
class StandardizedTwoKrein:
    space: KreinSpace
    symmetry: FundamentalSymmetry

    def __post_init__(self):
        if self.symmetry.space != self.space:
            raise SpaceMismatchError("space mismatch: symmetry belongs to another space")

    @classmethod
    def canonical(cls, space: KreinSpace) -> StandardizedTwoKrein:
        return cls(space, canonical_symmetry(space))

    @property
    def sigma(self) -> np.ndarray:
        return self.space.sigma

    @property
    def J(self) -> np.ndarray:
        return self.symmetry.matrix

    def _check(self, *vectors: KVector) -> None:
        for v in vectors:
            if v.space != self.space:
                raise SpaceMismatchError("space mismatch")


# -- array level -------------------------------------------------------------

def _sqnorm(x):
    return np.sum(np.abs(x) ** 2, axis=-1)


def batch_psi(sigma, jmat, x, y, z):
    xp, xm = batch_project(jmat, x)
    yp, ym = batch_project(jmat, y)
    zp, zm = batch_project(jmat, z)
    return (batch_inner(sigma, xp, yp) * batch_inner(sigma, zp, zp).real
            - batch_inner(sigma, xm, ym) * batch_inner(sigma, zm, zm).real)


def batch_psi_j(sigma, jmat, x, y, z):
    return batch_psi(sigma, jmat, batch_apply(jmat, x), y, z)


def batch_two_norm_j(sigma, jmat, x, y):
    r = batch_psi_j(sigma, jmat, x, x, y).real
    return clamped_sqrt(r, _sqnorm(x) * _sqnorm(y))


def batch_squared_components(sigma, jmat, x):
    """(||x+||_+^2, ||x-||_-^2) without clamping."""
    xp, xm = batch_project(jmat, x)
    return batch_inner(sigma, xp, xp).real, -batch_inner(sigma, xm, xm).real


def batch_weighted_two_norm(sigma, jmat, x, t):
    """N_J(x, t) from component norms; cheaper than going through psi."""
    ap, am = batch_squared_components(sigma, jmat, x)
    bp, bm = batch_squared_components(sigma, jmat, t)
    return clamped_sqrt(ap * bp + am * bm, _sqnorm(x) * _sqnorm(t))


# -- vector level ------------------------------------------------------------

def psi(S: StandardizedTwoKrein, x: KVector, y: KVector, z: KVector) -> complex:
    S._check(x, y, z)
    return complex(batch_psi(S.sigma, S.J, x.coords, y.coords, z.coords))


def psi_j(S: StandardizedTwoKrein, x: KVector, y: KVector, z: KVector) -> complex:
    S._check(x, y, z)
    return complex(batch_psi_j(S.sigma, S.J, x.coords, y.coords, z.coords))


def two_norm_j(S: StandardizedTwoKrein, x: KVector, y: KVector) -> float:
    S._check(x, y)
    return float(batch_two_norm_j(S.sigma, S.J, x.coords, y.coords))


def component_two_norms(S: StandardizedTwoKrein, x: KVector, y: KVector) -> tuple[float, float]:
    """(N+(x+, y+), N-(x-, y-)) as products of component norms."""
    S._check(x, y)
    ap, am = batch_squared_components(S.sigma, S.J, x.coords)
    bp, bm = batch_squared_components(S.sigma, S.J, y.coords)
    sx, sy = _sqnorm(x.coords), _sqnorm(y.coords)
    return (float(clamped_sqrt(ap, sx) * clamped_sqrt(bp, sy)),
            float(clamped_sqrt(am, sx) * clamped_sqrt(bm, sy)))


def witness_indefinite(S: StandardizedTwoKrein, z: KVector) -> tuple[KVector, KVector]:
    """x1 in F+ and x2 in F- with psi(x1, x1, z) > 0 > psi(x2, x2, z)."""
    S._check(z)
    zp, zm = batch_project(S.J, z.coords)
    np_, nm = batch_squared_components(S.sigma, S.J, z.coords)
    floor = STRICT_TOL * (1.0 + _sqnorm(z.coords))
    if np_ <= floor or nm <= floor:
        raise DegenerateDirectionError(
            "degenerate direction: z needs nonzero positive and negative components")
    x1 = KVector(zp / np.sqrt(np_), S.space)
    x2 = KVector(zm / np.sqrt(nm), S.space)
    return x1, x2


# -- axiom report ------------------------------------------------------------
#
# Each law maps a batch of samples to scaled defects (>= 0); a law passes when
# its worst defect is <= its tolerance.  Positive-part laws encode
# inequalities, absolute differences encode identities.

@dataclass(frozen=True)
class Law:
    name: str
    statement: str
    keys: tuple[str, ...]
    fn: Callable[..., np.ndarray]
    tolerance: float = TOL


def _nrm(v):
    return np.sqrt(_sqnorm(v))


def _raw_n(sigma, jmat, x, t):
    """Non-raising N_J for fault-injected symmetries."""
    return np.sqrt(np.maximum(batch_psi_j(sigma, jmat, x, x, t).real, 0.0))


def _raw_components(sigma, jmat, x):
    ap, am = batch_squared_components(sigma, jmat, x)
    return np.sqrt(np.maximum(ap, 0.0)), np.sqrt(np.maximum(am, 0.0))


def _law_involution(sg, J, x):
    return np.max(np.abs(batch_apply(J, batch_apply(J, x)) - x), axis=-1) / (1 + _nrm(x))


def _law_self_adjoint(sg, J, x, y):
    d = batch_inner(sg, batch_apply(J, x), y) - batch_inner(sg, x, batch_apply(J, y))
    return np.abs(d) / (1 + _nrm(x) * _nrm(y))


def _law_j_positivity(sg, J, x):
    return np.maximum(0.0, -batch_inner(sg, batch_apply(J, x), x).real) / (1 + _sqnorm(x))


def _law_component_positivity(sg, J, x):
    ap, am = batch_squared_components(sg, J, x)
    return np.maximum(0.0, -np.minimum(ap, am)) / (1 + _sqnorm(x))


def _law_decomposition_orthogonality(sg, J, x, y):
    xp, _ = batch_project(J, x)
    _, ym = batch_project(J, y)
    return np.abs(batch_inner(sg, xp, ym)) / (1 + _nrm(x) * _nrm(y))


def _law_pythagoras(sg, J, x):
    ap, am = batch_squared_components(sg, J, x)
    jn2 = batch_inner(sg, batch_apply(J, x), x).real
    return np.abs(jn2 - ap - am) / (1 + _sqnorm(x))


def _law_isometry(sg, J, x, y):
    d = batch_inner(sg, batch_apply(J, x), batch_apply(J, y)) - batch_inner(sg, x, y)
    return np.abs(d) / (1 + _nrm(x) * _nrm(y))


def _law_cauchy_schwarz_j(sg, J, x, y):
    jx = np.sqrt(np.maximum(batch_inner(sg, batch_apply(J, x), x).real, 0.0))
    jy = np.sqrt(np.maximum(batch_inner(sg, batch_apply(J, y), y).real, 0.0))
    return np.maximum(0.0, np.abs(batch_inner(sg, x, y)) - jx * jy) / (1 + _nrm(x) * _nrm(y))


def _law_additivity(sg, J, x, w, y, z):
    d = batch_psi(sg, J, x + w, y, z) - batch_psi(sg, J, x, y, z) - batch_psi(sg, J, w, y, z)
    return np.abs(d) / (1 + (_nrm(x) + _nrm(w)) * _nrm(y) * _sqnorm(z))


def _law_homogeneity(sg, J, x, y, z, alpha):
    d = batch_psi(sg, J, alpha[:, None] * x, y, z) - alpha * batch_psi(sg, J, x, y, z)
    return np.abs(d) / (1 + np.abs(alpha) * _nrm(x) * _nrm(y) * _sqnorm(z))


def _law_conjugate_symmetry(sg, J, x, y, z):
    d = batch_psi(sg, J, y, x, z) - np.conj(batch_psi(sg, J, x, y, z))
    return np.abs(d) / (1 + _nrm(x) * _nrm(y) * _sqnorm(z))


def _law_swap(sg, J, x, z):
    d = batch_psi(sg, J, x, x, z) - batch_psi(sg, J, z, z, x)
    return np.abs(d) / (1 + _sqnorm(x) * _sqnorm(z))


def _law_realness(sg, J, x, z):
    return np.abs(batch_psi(sg, J, x, x, z).imag) / (1 + _sqnorm(x) * _sqnorm(z))


def _law_psd(sg, J, x, z):
    return np.maximum(0.0, -batch_psi_j(sg, J, x, x, z).real) / (1 + _sqnorm(x) * _sqnorm(z))


def _law_orthogonality_transfer(sg, J, x, y, z):
    xp, _ = batch_project(J, x)
    _, ym = batch_project(J, y)
    return np.abs(batch_psi(sg, J, xp, ym, z)) / (1 + _nrm(x) * _nrm(y) * _sqnorm(z))


def _law_n_homogeneity(sg, J, x, z, alpha):
    d = _raw_n(sg, J, x, alpha[:, None] * z) - np.abs(alpha) * _raw_n(sg, J, x, z)
    return np.abs(d) / (1 + np.abs(alpha) * _nrm(x) * _nrm(z))


def _law_n_triangle(sg, J, x, y, z):
    d = _raw_n(sg, J, x, y + z) - _raw_n(sg, J, x, y) - _raw_n(sg, J, x, z)
    return np.maximum(0.0, d) / (1 + _nrm(x) * (_nrm(y) + _nrm(z)))


def _law_n_symmetry(sg, J, x, z):
    return np.abs(_raw_n(sg, J, x, z) - _raw_n(sg, J, z, x)) / (1 + _nrm(x) * _nrm(z))


def _law_cauchy_schwarz_two(sg, J, x, y, z):
    lhs = np.abs(batch_psi_j(sg, J, x, y, z)) ** 2
    rhs = batch_psi_j(sg, J, x, x, z).real * batch_psi_j(sg, J, y, y, z).real
    return np.maximum(0.0, lhs - rhs) / (1 + _sqnorm(x) * _sqnorm(y) * _sqnorm(z) ** 2)


def _law_third_slot(sg, J, x, t):
    d = batch_psi(sg, J, x, x, batch_apply(J, t)) - batch_psi(sg, J, x, x, t)
    return np.abs(d) / (1 + _sqnorm(x) * _sqnorm(t))


def _law_two_self_adjoint(sg, J, x, y, z):
    d = batch_psi(sg, J, batch_apply(J, x), y, z) - batch_psi(sg, J, x, batch_apply(J, y), z)
    return np.abs(d) / (1 + _nrm(x) * _nrm(y) * _sqnorm(z))


def _law_two_isometric(sg, J, x, y, z):
    d = batch_psi(sg, J, batch_apply(J, x), batch_apply(J, y), z) - batch_psi(sg, J, x, y, z)
    return np.abs(d) / (1 + _nrm(x) * _nrm(y) * _sqnorm(z))


def _j_pair_sum(sg, J, x, t):
    return _raw_n(sg, J, batch_apply(J, x), t) + _raw_n(sg, J, x, batch_apply(J, t))


def _law_two_bounded(sg, J, x, t):
    d = _j_pair_sum(sg, J, x, t) - 3.0 * _raw_n(sg, J, x, t)
    return np.maximum(0.0, d) / (1 + _nrm(x) * _nrm(t))


def _law_two_bounded_sharp(sg, J, x, t):
    d = _j_pair_sum(sg, J, x, t) - 2.0 * _raw_n(sg, J, x, t)
    return np.abs(d) / (1 + _nrm(x) * _nrm(t))


def _component_products(sg, J, x, z):
    xp, xm = _raw_components(sg, J, x)
    zp, zm = _raw_components(sg, J, z)
    return xp * zp, xm * zm


def _law_norm_sum(sg, J, x, z):
    npos, nneg = _component_products(sg, J, x, z)
    return np.maximum(0.0, _raw_n(sg, J, x, z) - npos - nneg) / (1 + _nrm(x) * _nrm(z))


def _law_norm_squares(sg, J, x, z):
    npos, nneg = _component_products(sg, J, x, z)
    d = _raw_n(sg, J, x, z) ** 2 - npos**2 - nneg**2
    return np.abs(d) / (1 + _sqnorm(x) * _sqnorm(z))


def _law_restriction(sg, J, x, z):
    xp, xm = batch_project(J, x)
    zp, zm = batch_project(J, z)
    pp, _ = _component_products(sg, J, xp, zp)
    _, mm = _component_products(sg, J, xm, zm)
    d = np.abs(_raw_n(sg, J, xp, zp) - pp) + np.abs(_raw_n(sg, J, xm, zm) - mm)
    return d / (1 + _nrm(x) * _nrm(z))


def _law_completeness(sg, J, x, t):
    xp, xm = batch_project(J, x)
    tp, tm = batch_project(J, t)
    np_ = np.sqrt(np.maximum(batch_psi(sg, J, xp, xp, tp).real, 0.0))
    nm_ = np.sqrt(np.maximum(-batch_psi(sg, J, xm, xm, tm).real, 0.0))
    pp, _ = _component_products(sg, J, xp, tp)
    _, mm = _component_products(sg, J, xm, tm)
    return (np.abs(np_ - pp) + np.abs(nm_ - mm)) / (1 + _nrm(x) * _nrm(t))


LAWS: tuple[Law, ...] = (
    Law("involution", "J(Jx) = x", ("x",), _law_involution),
    Law("self_adjoint", "[Jx, y] = [x, Jy]", ("x", "y"), _law_self_adjoint),
    Law("j_positivity", "[Jx, x] >= 0", ("x",), _law_j_positivity, STRICT_TOL),
    Law("component_positivity", "[x+, x+] >= 0 and -[x-, x-] >= 0", ("x",),
        _law_component_positivity, STRICT_TOL),
    Law("decomposition_orthogonality", "[x+, y-] = 0", ("x", "y"), _law_decomposition_orthogonality),
    Law("pythagoras", "||x||_J^2 = ||x+||^2 + ||x-||^2", ("x",), _law_pythagoras),
    Law("isometry", "[Jx, Jy] = [x, y]", ("x", "y"), _law_isometry),
    Law("cauchy_schwarz_j", "|[x, y]| <= ||x||_J ||y||_J", ("x", "y"), _law_cauchy_schwarz_j),
    Law("additivity", "psi(x + w, y, z) = psi(x, y, z) + psi(w, y, z)", ("x", "w", "y", "z"),
        _law_additivity),
    Law("homogeneity", "psi(a x, y, z) = a psi(x, y, z)", ("x", "y", "z", "alpha"), _law_homogeneity),
    Law("conjugate_symmetry", "psi(y, x, z) = conj psi(x, y, z)", ("x", "y", "z"),
        _law_conjugate_symmetry),
    Law("swap", "psi(x, x, z) = psi(z, z, x)", ("x", "z"), _law_swap),
    Law("realness", "Im psi(x, x, z) = 0", ("x", "z"), _law_realness, STRICT_TOL),
    Law("psd", "psi_J(x, x, z) >= 0", ("x", "z"), _law_psd, STRICT_TOL),
    Law("orthogonality_transfer", "psi(x+, y-, z) = 0", ("x", "y", "z"),
        _law_orthogonality_transfer, STRICT_TOL),
    Law("two_norm_homogeneity", "N_J(x, a z) = |a| N_J(x, z)", ("x", "z", "alpha"), _law_n_homogeneity),
    Law("two_norm_triangle", "N_J(x, y + z) <= N_J(x, y) + N_J(x, z)", ("x", "y", "z"), _law_n_triangle),
    Law("two_norm_symmetry", "N_J(x, z) = N_J(z, x)", ("x", "z"), _law_n_symmetry),
    Law("cauchy_schwarz_two", "|psi_J(x, y, z)|^2 <= psi_J(x, x, z) psi_J(y, y, z)",
        ("x", "y", "z"), _law_cauchy_schwarz_two),
    Law("third_slot_symmetry", "psi(x, x, Jt) = psi(x, x, t)", ("x", "t"), _law_third_slot),
    Law("two_self_adjoint", "psi(Jx, y, z) = psi(x, Jy, z)", ("x", "y", "z"), _law_two_self_adjoint),
    Law("two_isometric", "psi(Jx, Jy, z) = psi(x, y, z)", ("x", "y", "z"), _law_two_isometric),
    Law("two_bounded", "N_J(Jx, t) + N_J(x, Jt) <= 3 N_J(x, t)", ("x", "t"), _law_two_bounded),
    Law("two_bounded_sharp", "N_J(Jx, t) + N_J(x, Jt) = 2 N_J(x, t)", ("x", "t"), _law_two_bounded_sharp),
    Law("norm_sum", "N_J(x, z) <= N+(x+, z+) + N-(x-, z-)", ("x", "z"), _law_norm_sum),
    Law("norm_squares", "N_J(x, z)^2 = N+^2 + N-^2", ("x", "z"), _law_norm_squares),
    Law("restriction", "N_J restricted to F+ (F-) equals N+ (N-)", ("x", "z"), _law_restriction),
    Law("completeness_surrogate", "N+(x+, t+) = ||x+|| ||t+||, mirrored on F-", ("x", "t"),
        _law_completeness, STRICT_TOL),
)
LAWS_BY_NAME = {law.name: law for law in LAWS}


@dataclass
class LawOutcome:
    name: str
    tolerance: float
    defect: float
    witness: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return self.defect <= self.tolerance

    def to_dict(self) -> dict[str, Any]:
        out = {"name": self.name, "status": "pass" if self.passed else "fail",
               "defect": self.defect, "tolerance": self.tolerance}
        if not self.passed and self.witness is not None:
            out["witness"] = {k: _encode(v) for k, v in self.witness.items()}
        return out


@dataclass
class AxiomReport:
    laws: dict[str, LawOutcome]
    sample_count: int
    seed: int | None
    # tie-break key for merging: (chunk index) of the worst sample per law
    _origin: dict[str, int] = field(default_factory=dict, repr=False)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.laws.values())

    @property
    def failed(self) -> list[str]:
        return [name for name, o in self.laws.items() if not o.passed]

    def merge(self, other: AxiomReport) -> AxiomReport:
        """Per-law maximum; associative and independent of merge order."""
        laws, origin = {}, {}
        for name in self.laws.keys() | other.laws.keys():
            a, b = self.laws.get(name), other.laws.get(name)
            ka, kb = self._origin.get(name, 0), other._origin.get(name, 0)
            if b is None or (a is not None and (a.defect, -ka) >= (b.defect, -kb)):
                laws[name], origin[name] = a, ka
            else:
                laws[name], origin[name] = b, kb
        ordered = {law.name: laws[law.name] for law in LAWS if law.name in laws}
        seed = self.seed if self.seed == other.seed else None
        return AxiomReport(ordered, self.sample_count + other.sample_count, seed,
                           {k: origin[k] for k in ordered})

    def to_dict(self) -> dict[str, Any]:
        return {
            "sample_count": self.sample_count,
            "seed": self.seed,
            "status": "pass" if self.passed else "fail",
            "laws": [o.to_dict() for o in self.laws.values()],
        }


def _encode(v):
    arr = np.asarray(v)
    if arr.ndim == 0:
        return [float(arr.real), float(arr.imag)]
    return [[float(c.real), float(c.imag)] for c in arr]


def _sample(rng: np.random.Generator, n: int, m: int) -> dict[str, np.ndarray]:
    def vecs():
        scale = 10.0 ** rng.uniform(-1.0, 1.0, size=(m, 1))
        return scale * random_coords(rng, (m, n))

    out = {k: vecs() for k in ("x", "y", "z", "t", "w")}
    out["alpha"] = 2.0 * random_coords(rng, (m,))
    return out


def _run_chunk(S: StandardizedTwoKrein, m: int, seed_seq, chunk: int) -> AxiomReport:
    rng = np.random.default_rng(seed_seq)
    sample = _sample(rng, S.space.dim, m)
    laws = {}
    for law in LAWS:
        with np.errstate(all="ignore"):
            d = law.fn(S.sigma, S.J, *(sample[k] for k in law.keys))
        d = np.where(np.isnan(d), np.inf, d)
        i = int(np.argmax(d))
        witness = {k: sample[k][i].copy() for k in law.keys}
        laws[law.name] = LawOutcome(law.name, law.tolerance, float(d[i]), witness)
    return AxiomReport(laws, m, None, {name: chunk for name in laws})


def axiom_report(S: StandardizedTwoKrein, sample_count: int, seed: int = 0,
                 workers: int = 1) -> AxiomReport:
    """Evaluate every law on ``sample_count`` seeded random samples.

    Samples are drawn in fixed-size chunks, each from its own child seed, so
    the report does not depend on ``workers``.  Failures are recorded with
    the worst-case sample as witness, never raised.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    sizes = [CHUNK] * (sample_count // CHUNK)
    if sample_count % CHUNK:
        sizes.append(sample_count % CHUNK)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = [(S, m, s, i) for i, (m, s) in enumerate(zip(sizes, seeds))]
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda a: _run_chunk(*a), jobs))
    else:
        parts = [_run_chunk(*a) for a in jobs]
    report = parts[0]
    for part in parts[1:]:
        report = report.merge(part)
    report.seed = seed
    return report


def recompute_defect(S: StandardizedTwoKrein, law: str, witness: dict[str, Any]) -> float:
    """Re-evaluate one law on a single witness sample."""
    spec = LAWS_BY_NAME[law]
    args = []
    for k in spec.keys:
        v = np.asarray(witness[k], dtype=complex)
        args.append(v.reshape(1) if v.ndim == 0 else v.reshape(1, -1))
    with np.errstate(all="ignore"):
        return float(spec.fn(S.sigma, S.J, *args)[0])


# -- equivalence across decompositions ---------------------------------------

def batch_cross_two_norm(sigma, j_split, j_measure, x, z):
    """Two-norm with components split by ``j_split`` but measured in ||.||_{j_measure}."""
    xp, xm = batch_project(j_split, x)
    zp, zm = batch_project(j_split, z)
    def n(v):
        return batch_j_norm(sigma, j_measure, v)
    return np.sqrt((n(xp) * n(zp)) ** 2 + (n(xm) * n(zm)) ** 2)


def _orth_range(mat: np.ndarray) -> np.ndarray:
    return scipy.linalg.orth(mat)


def degenerate_pair(S1: StandardizedTwoKrein, S2: StandardizedTwoKrein,
                    rng: np.random.Generator | None = None, trials: int = 64):
    """Search x in F2+, z in F2- maximizing N_J1(x, z); then N_J2(x, z) = 0.

    Returns (x, z, N_J1, N_J2) as coordinate arrays and floats.
    """
    sigma, n = S1.sigma, S1.space.dim
    eye = np.eye(n)
    bp = _orth_range(0.5 * (eye + S2.J))
    bm = _orth_range(0.5 * (eye - S2.J))
    cand_x = [bp[:, i] for i in range(bp.shape[1])]
    cand_z = [bm[:, j] for j in range(bm.shape[1])]
    xs = np.array([cx for cx in cand_x for _ in cand_z])
    zs = np.array([cz for _ in cand_x for cz in cand_z])
    if rng is not None and trials:
        cx = random_coords(rng, (trials, bp.shape[1])) @ bp.T
        cz = random_coords(rng, (trials, bm.shape[1])) @ bm.T
        xs = np.vstack([xs, cx / _nrm(cx)[:, None]])
        zs = np.vstack([zs, cz / _nrm(cz)[:, None]])
    n1 = batch_two_norm_j(sigma, S1.J, xs, zs)
    i = int(np.argmax(n1))
    n2 = float(batch_two_norm_j(sigma, S2.J, xs[i], zs[i]))
    return xs[i], zs[i], float(n1[i]), n2


@dataclass
class EquivalenceScan:
    constants: EquivalenceConstants
    sample_count: int
    seed: int
    norm_bound_defect: float
    cross_bound_defect: float
    ratio_min: float
    ratio_max: float
    witness: dict[str, Any] | None
    reverse_witness: dict[str, Any] | None
    decompositions_coincide: bool

    @property
    def witness_verified(self) -> bool:
        return self.witness is not None and self.witness["verified"]

    @property
    def two_sided_claim_refuted(self) -> bool:
        return self.witness_verified or (
            self.reverse_witness is not None and self.reverse_witness["verified"])

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": self.constants.alpha,
            "beta": self.constants.beta,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "norm_bound_defect": self.norm_bound_defect,
            "cross_bound_defect": self.cross_bound_defect,
            "ratio_min": self.ratio_min,
            "ratio_max": self.ratio_max,
            "decompositions_coincide": self.decompositions_coincide,
            "two_sided_claim_refuted": self.two_sided_claim_refuted,
            "witness": self.witness,
            "reverse_witness": self.reverse_witness,
        }


def _witness_record(x, z, n_small, n_large):
    scale = 1.0 + _nrm(x) * _nrm(z)
    return {
        "x": _encode(x),
        "z": _encode(z),
        "vanishing_norm": n_small,
        "positive_norm": n_large,
        "verified": bool(n_small <= STRICT_TOL * scale and n_large > 1e-6),
    }


def scan_equivalence(S1: StandardizedTwoKrein, S2: StandardizedTwoKrein,
                     sample_count: int = 100_000, seed: int = 0) -> EquivalenceScan:
    """Check the provable norm bounds and hunt for degenerate two-norm pairs.

    With (alpha, beta) from :func:`equivalence_constants`:

    * alpha ||x||_J1 <= ||x||_J2 <= beta ||x||_J1 on samples;
    * alpha^2 C(x, z) <= N_J2(x, z) <= beta^2 C(x, z), where C splits x, z
      along decomposition 2 and measures the parts in ||.||_J1;
    * a pair with N_J2 = 0 < N_J1 (x in F2+, z in F2-) and the reverse pair,
      which rule out any two-sided bound between N_J1 and N_J2 directly.
    """
    if S1.space != S2.space:
        raise SpaceMismatchError("space mismatch")
    consts = equivalence_constants(S1.symmetry, S2.symmetry)
    a, b = consts.alpha, consts.beta
    rng = np.random.default_rng(seed)
    n, sigma = S1.space.dim, S1.sigma
    x = random_coords(rng, (sample_count, n))
    z = random_coords(rng, (sample_count, n))

    n1 = batch_j_norm(sigma, S1.J, x)
    n2 = batch_j_norm(sigma, S2.J, x)
    norm_def = float(np.max(np.maximum(a * n1 - n2, n2 - b * n1) / (1 + n1)))

    t1 = batch_two_norm_j(sigma, S1.J, x, z)
    t2 = batch_two_norm_j(sigma, S2.J, x, z)
    cross = batch_cross_two_norm(sigma, S2.J, S1.J, x, z)
    cross_def = float(np.max(np.maximum(a * a * cross - t2, t2 - b * b * cross) / (1 + cross)))

    keep = t1 > 1e-6
    ratio = t2[keep] / t1[keep]
    rmin = float(ratio.min()) if ratio.size else float("nan")
    rmax = float(ratio.max()) if ratio.size else float("nan")

    coincide = bool(np.max(np.abs(S1.J - S2.J)) <= TOL)
    witness = reverse = None
    if not coincide:
        wx, wz, big, small = degenerate_pair(S1, S2, rng)
        witness = _witness_record(wx, wz, small, big)
        rx, rz, big, small = degenerate_pair(S2, S1, rng)
        reverse = _witness_record(rx, rz, small, big)
    return EquivalenceScan(consts, sample_count, seed, norm_def, cross_def, rmin, rmax,
                           witness, reverse, coincide)


__all__ = [
    "AxiomReport", "DegenerateDirectionError", "EquivalenceScan", "LAWS", "LawOutcome",
    "StandardizedTwoKrein", "axiom_report", "component_two_norms", "degenerate_pair",
    "psi", "psi_j", "recompute_defect", "scan_equivalence", "two_norm_j", "witness_indefinite",
]

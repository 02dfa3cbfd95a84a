"""Finite-dimensional Krein spaces.

A space is C^n with the diagonal indefinite form [x, y] = sum_i s_i x_i conj(y_i),
s_i in {+1, -1}.  Fundamental symmetries are involutions J that are
self-adjoint for [., .] and make (x, y) -> [Jx, y] positive definite.
Besides the canonical J0 = diag(s), alternative symmetries are produced
from angular operators (strict contractions from the positive to the
negative coordinates).

Every public function has an array-level twin prefixed ``batch_`` that acts
on stacks of coordinate vectors with shape (..., n); the property reports
and the variation estimators are built on those.
"""
from __future__ import annotations

from dataclasses import InitVar, dataclass
from typing import Any, Iterable, Sequence

import numpy as np
import scipy.linalg

TOL = 1e-9
RADICAND_CLAMP = 1e-12
CONTRACTION_MARGIN = 1e-6
MAX_DIM = 64


class KreinError(ValueError):
    """Base class for invalid Krein-space input."""


class DimensionError(KreinError):
    pass


class DefiniteFormError(KreinError):
    pass


class SpaceMismatchError(KreinError):
    pass


class InvalidSymmetryError(KreinError):
    pass


class NotContractiveError(KreinError):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class KreinSpace:
    """C^n with a diagonal signature form; build it with :func:`make_space`."""

    signature: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.signature)

    @property
    def sigma(self) -> np.ndarray:
        return np.array(self.signature, dtype=float)

    @property
    def positive_indices(self) -> np.ndarray:
        return np.flatnonzero(self.sigma > 0)

    @property
    def negative_indices(self) -> np.ndarray:
        return np.flatnonzero(self.sigma < 0)

    @property
    def p(self) -> int:
        return int(self.positive_indices.size)

    @property
    def q(self) -> int:
        return int(self.negative_indices.size)

    @property
    def gram(self) -> np.ndarray:
        return np.diag(self.sigma).astype(complex)

    def vector(self, coords: Iterable[complex]) -> KVector:
        return KVector(np.asarray(list(coords), dtype=complex), self)

    def zero(self) -> KVector:
        return KVector(np.zeros(self.dim, dtype=complex), self)

    def basis(self, i: int) -> KVector:
        e = np.zeros(self.dim, dtype=complex)
        e[i] = 1.0
        return KVector(e, self)

    def to_dict(self) -> dict[str, Any]:
        return {"signature": list(self.signature)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> KreinSpace:
        return make_space(data["signature"])


def make_space(signature: Sequence[int]) -> KreinSpace:
    sig = tuple(int(s) for s in signature)
    if len(sig) < 2 or len(sig) > MAX_DIM:
        raise DimensionError(f"dimension must be between 2 and {MAX_DIM}, got {len(sig)}")
    if any(s not in (1, -1) for s in sig):
        raise KreinError(f"signature entries must be +1 or -1, got {list(signature)}")
    if all(s == 1 for s in sig) or all(s == -1 for s in sig):
        raise DefiniteFormError("definite form: signature needs both +1 and -1 entries")
    return KreinSpace(sig)


@dataclass(frozen=True, eq=False)
class KVector:
    coords: np.ndarray
    space: KreinSpace

    def __post_init__(self):
        c = _frozen(self.coords)
        if c.shape != (self.space.dim,):
            raise DimensionError(
                f"expected {self.space.dim} coordinates, got shape {c.shape}")
        object.__setattr__(self, "coords", c)

    def _check(self, other: KVector) -> None:
        if other.space != self.space:
            raise SpaceMismatchError("space mismatch")

    def __add__(self, other: KVector) -> KVector:
        self._check(other)
        return KVector(self.coords + other.coords, self.space)

    def __sub__(self, other: KVector) -> KVector:
        self._check(other)
        return KVector(self.coords - other.coords, self.space)

    def __neg__(self) -> KVector:
        return KVector(-self.coords, self.space)

    def __mul__(self, alpha: complex) -> KVector:
        return KVector(complex(alpha) * self.coords, self.space)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KVector):
            return NotImplemented
        return self.space == other.space and bool(np.array_equal(self.coords, other.coords))

    def __hash__(self) -> int:
        return hash((self.space, self.coords.tobytes()))

    def allclose(self, other: KVector, tol: float = TOL) -> bool:
        self._check(other)
        scale = 1.0 + max(np.linalg.norm(self.coords), np.linalg.norm(other.coords))
        return bool(np.max(np.abs(self.coords - other.coords), initial=0.0) <= tol * scale)


@dataclass(frozen=True, eq=False)
class FundamentalSymmetry:
    """Involution J on ``space`` with [Jx, y] Hermitian positive definite.

    The invariants are checked on construction; pass ``check=False`` to build
    a deliberately broken operator (fault injection in the axiom reports).
    """

    matrix: np.ndarray
    space: KreinSpace
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        m = _frozen(self.matrix)
        n = self.space.dim
        if m.shape != (n, n):
            raise DimensionError(f"symmetry must be {n}x{n}, got {m.shape}")
        object.__setattr__(self, "matrix", m)
        if check:
            d = self.defects()
            if d["involution"] > TOL:
                raise InvalidSymmetryError(f"invalid symmetry: J*J != I (defect {d['involution']:.3e})")
            if d["hermiticity"] > TOL:
                raise InvalidSymmetryError(
                    f"invalid symmetry: [Jx, y] is not Hermitian (defect {d['hermiticity']:.3e})")
            if d["min_eigenvalue"] <= 0:
                raise InvalidSymmetryError(
                    f"invalid symmetry: [Jx, x] not positive definite (min eig {d['min_eigenvalue']:.3e})")

    @property
    def form(self) -> np.ndarray:
        """Matrix M of the J-inner product: [x, y]_J = y^H M x."""
        return self.space.gram @ self.matrix

    def defects(self) -> dict[str, float]:
        m = self.matrix
        form = self.form
        herm = 0.5 * (form + form.conj().T)
        return {
            "involution": float(np.max(np.abs(m @ m - np.eye(self.space.dim)))),
            "hermiticity": float(np.max(np.abs(form - form.conj().T))),
            "min_eigenvalue": float(np.linalg.eigvalsh(herm)[0]),
        }

    def apply(self, x: KVector) -> KVector:
        _same_space(self.space, x)
        return KVector(self.matrix @ x.coords, self.space)

    def __matmul__(self, x: KVector) -> KVector:
        return self.apply(x)

    def to_dict(self) -> dict[str, Any]:
        return {"matrix": [[[z.real, z.imag] for z in row] for row in self.matrix.tolist()]}


@dataclass(frozen=True, eq=False)
class AngularOperator:
    """Strict contraction K (q x p) from positive to negative coordinates."""

    matrix: np.ndarray

    def __post_init__(self):
        k = np.atleast_2d(_frozen(self.matrix))
        k.setflags(write=False)
        object.__setattr__(self, "matrix", k)
        if self.norm >= 1.0 - CONTRACTION_MARGIN:
            raise NotContractiveError(
                f"not uniformly contractive: ||K|| = {self.norm:.9f} >= 1 - {CONTRACTION_MARGIN}")

    @property
    def norm(self) -> float:
        if self.matrix.size == 0:
            return 0.0
        return float(np.linalg.norm(self.matrix, 2))

    @classmethod
    def random(cls, space: KreinSpace, rng: np.random.Generator, norm: float) -> AngularOperator:
        """Random K of the requested spectral norm (0 <= norm < 1)."""
        k = rng.standard_normal((space.q, space.p)) + 1j * rng.standard_normal((space.q, space.p))
        return cls(k * (norm / np.linalg.norm(k, 2)))


@dataclass(frozen=True)
class EquivalenceConstants:
    alpha: float
    beta: float

    def __post_init__(self):
        if not 0 < self.alpha <= self.beta:
            raise ValueError(f"need 0 < alpha <= beta, got {self.alpha}, {self.beta}")


def _same_space(space: KreinSpace, *vectors: KVector) -> None:
    for v in vectors:
        if v.space != space:
            raise SpaceMismatchError("space mismatch")


def canonical_symmetry(space: KreinSpace) -> FundamentalSymmetry:
    return FundamentalSymmetry(np.diag(space.sigma), space)


# -- array level -------------------------------------------------------------

def batch_inner(sigma: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.sum(sigma * x * np.conj(y), axis=-1)


def batch_apply(jmat: np.ndarray, x: np.ndarray) -> np.ndarray:
    return x @ jmat.T


def batch_project(jmat: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    jx = batch_apply(jmat, x)
    return 0.5 * (x + jx), 0.5 * (x - jx)


def batch_component_radicands(sigma, jmat, x) -> tuple[np.ndarray, np.ndarray]:
    """[x+, x+] and -[x-, x-] before clamping."""
    xp, xm = batch_project(jmat, x)
    return batch_inner(sigma, xp, xp).real, -batch_inner(sigma, xm, xm).real


def clamped_sqrt(r: np.ndarray, scale=0.0) -> np.ndarray:
    """Square root of a radicand that may dip below zero by roundoff only."""
    r = np.asarray(r, dtype=float)
    if np.any(r < -RADICAND_CLAMP * (1.0 + np.asarray(scale))):
        raise InvalidSymmetryError(
            f"invalid symmetry: negative component radicand {float(np.min(r)):.3e}")
    return np.sqrt(np.maximum(r, 0.0))


def batch_component_norms(sigma, jmat, x) -> tuple[np.ndarray, np.ndarray]:
    rp, rm = batch_component_radicands(sigma, jmat, x)
    scale = _sqnorm(x)
    return clamped_sqrt(rp, scale), clamped_sqrt(rm, scale)


def batch_j_norm(sigma, jmat, x) -> np.ndarray:
    return clamped_sqrt(batch_inner(sigma, batch_apply(jmat, x), x).real, _sqnorm(x))


def _sqnorm(x: np.ndarray) -> np.ndarray:
    return np.sum(np.abs(x) ** 2, axis=-1)


# -- vector level ------------------------------------------------------------

def inner(x: KVector, y: KVector) -> complex:
    """Indefinite form [x, y], conjugate-linear in ``y``."""
    _same_space(x.space, y)
    return complex(batch_inner(x.space.sigma, x.coords, y.coords))


def project(J: FundamentalSymmetry, x: KVector) -> tuple[KVector, KVector]:
    _same_space(J.space, x)
    xp, xm = batch_project(J.matrix, x.coords)
    return KVector(xp, x.space), KVector(xm, x.space)


def component_norms(J: FundamentalSymmetry, x: KVector) -> tuple[float, float]:
    _same_space(J.space, x)
    np_, nm = batch_component_norms(J.space.sigma, J.matrix, x.coords)
    return float(np_), float(nm)


def j_inner(J: FundamentalSymmetry, x: KVector, y: KVector) -> complex:
    return inner(J.apply(x), y)


def j_norm(J: FundamentalSymmetry, x: KVector) -> float:
    _same_space(J.space, x)
    return float(batch_j_norm(J.space.sigma, J.matrix, x.coords))


def symmetry_from_angular(space: KreinSpace, K: AngularOperator | np.ndarray) -> FundamentalSymmetry:
    """Symmetry whose +1 eigenspace is {(u, Ku)} and -1 eigenspace {(K*v, v)}.

    Coordinates are split by signature, so the graphs are taken in the
    canonical positive/negative coordinate blocks whatever their order.
    """
    if not isinstance(K, AngularOperator):
        K = AngularOperator(np.asarray(K, dtype=complex).reshape(space.q, space.p))
    k = K.matrix
    if k.shape != (space.q, space.p):
        raise DimensionError(f"angular operator must be {space.q}x{space.p}, got {k.shape}")
    p, q = space.p, space.q
    basis = np.block([[np.eye(p), k.conj().T], [k, np.eye(q)]])
    diag = np.diag(np.concatenate([np.ones(p), -np.ones(q)]))
    j_blocks = basis @ diag @ np.linalg.inv(basis)
    perm = np.concatenate([space.positive_indices, space.negative_indices])
    jmat = np.empty((space.dim, space.dim), dtype=complex)
    jmat[np.ix_(perm, perm)] = j_blocks
    return FundamentalSymmetry(jmat, space)


def equivalence_constants(J1: FundamentalSymmetry, J2: FundamentalSymmetry) -> EquivalenceConstants:
    """(alpha, beta) with alpha ||x||_J1 <= ||x||_J2 <= beta ||x||_J1."""
    if J1.space != J2.space:
        raise SpaceMismatchError("space mismatch")
    if J1 is J2 or np.array_equal(J1.matrix, J2.matrix):
        return EquivalenceConstants(1.0, 1.0)
    m1 = J1.form
    m2 = J2.form
    m1 = 0.5 * (m1 + m1.conj().T)
    m2 = 0.5 * (m2 + m2.conj().T)
    try:
        lam = scipy.linalg.eigh(m2, m1, eigvals_only=True)
    except np.linalg.LinAlgError as exc:
        raise InvalidSymmetryError(f"invalid symmetry: {exc}") from exc
    if lam[0] <= 0:
        raise InvalidSymmetryError("invalid symmetry: J-form not positive definite")
    return EquivalenceConstants(float(np.sqrt(lam[0])), float(np.sqrt(lam[-1])))


# -- sampling helpers --------------------------------------------------------

def random_signature(rng: np.random.Generator, dim: int) -> list[int]:
    """Uniform random signature with at least one entry of each sign."""
    if dim < 2:
        raise DimensionError("dimension must be at least 2")
    sig = rng.choice([1, -1], size=dim)
    i, j = rng.choice(dim, size=2, replace=False)
    sig[i], sig[j] = 1, -1
    return [int(s) for s in sig]


def random_coords(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussian samples."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_symmetry(space: KreinSpace, rng: np.random.Generator, max_norm: float = 0.9) -> FundamentalSymmetry:
    norm = float(rng.uniform(0.0, max_norm))
    return symmetry_from_angular(space, AngularOperator.random(space, rng, norm))


def to_pairs(v: KVector) -> list[list[float]]:
    """Serialize coordinates as [re, im] pairs."""
    return [[float(z.real), float(z.imag)] for z in v.coords]


__all__ = [
    "AngularOperator", "DefiniteFormError", "DimensionError", "EquivalenceConstants",
    "FundamentalSymmetry", "InvalidSymmetryError", "KVector", "KreinError", "KreinSpace",
    "NotContractiveError", "SpaceMismatchError", "canonical_symmetry", "component_norms",
    "equivalence_constants", "inner", "j_inner", "j_norm", "make_space", "project",
    "random_coords", "random_signature", "random_symmetry", "symmetry_from_angular",
]

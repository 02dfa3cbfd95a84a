"""t-variation of paths into a standardized two-Krein space.

The supremum over partitions is approached from below by nested dyadic
partitions: level k is the uniform partition into 2**k pieces.  By the
triangle inequality of every increment functional used here, the level sums
are nondecreasing, so each one is a certified lower bound.  Refinement stops
once the gain of a level drops below ``tolerance * (1 + value)``.

An independent check for differentiable paths integrates the weighted speed
N_J(f'(x), t) with adaptive Simpson quadrature.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .funcspec import PathExpression, differentiate, evaluate_many, parse
from .krein import (
    DimensionError,
    KreinError,
    KVector,
    batch_j_norm,
    clamped_sqrt,
    equivalence_constants,
    j_norm,
    random_symmetry,
)
from .twometric import StandardizedTwoKrein, batch_squared_components, two_norm_j

DEFAULT_TOLERANCE = 1e-9
DEFAULT_MAX_DEPTH = 24
GRID_SIZE = 1024
LAW_SLACK = 1e-8
_CHUNK = 1 << 16


class VariationError(KreinError):
    pass


class EvaluationError(VariationError):
    def __init__(self, abscissa: float, reason: str = "non-finite value"):
        self.abscissa = abscissa
        super().__init__(f"evaluation error at x = {abscissa!r}: {reason}")


class OracleUnavailableError(VariationError):
    pass


class IncompatibleBVError(VariationError):
    pass


class NotBoundedVariationError(VariationError):
    pass


class PartitionError(VariationError):
    pass


# -- paths -------------------------------------------------------------------

class FunctionHandle:
    """A path [a, b] -> C^n evaluated on arrays of abscissae."""

    interval: tuple[float, float]
    dim: int

    def _raw(self, xs: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def values(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        try:
            out = np.asarray(self._raw(xs), dtype=complex)
        except (ArithmeticError, ValueError) as exc:
            raise EvaluationError(float(xs.flat[0]) if xs.size else math.nan, str(exc)) from exc
        bad = ~np.all(np.isfinite(out), axis=-1)
        if np.any(bad):
            raise EvaluationError(float(xs[np.flatnonzero(bad)[0]]))
        return out

    def __call__(self, x: float) -> np.ndarray:
        return self.values(np.array([x]))[0]

    def derivative(self) -> FunctionHandle | None:
        return None

    def scaled(self, alpha: complex) -> FunctionHandle:
        return MappedPath(self, complex(alpha) * np.eye(self.dim))

    def mapped(self, matrix: np.ndarray) -> FunctionHandle:
        return MappedPath(self, np.asarray(matrix, dtype=complex))

    def __add__(self, other: FunctionHandle) -> FunctionHandle:
        return SumPath(self, other)


def _check_interval(a: float, b: float) -> tuple[float, float]:
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise PartitionError(f"interval needs finite a < b, got [{a}, {b}]")
    return a, b


class PolynomialPath(FunctionHandle):
    def __init__(self, expr: PathExpression | str, interval: Sequence[float]):
        self.expr = parse(expr) if isinstance(expr, str) else expr
        self.interval = _check_interval(*interval)
        self.dim = self.expr.dim

    def _raw(self, xs):
        return evaluate_many(self.expr, xs)

    def derivative(self) -> PolynomialPath:
        return PolynomialPath(differentiate(self.expr), self.interval)

    def scaled(self, alpha: complex) -> PolynomialPath:
        return self.mapped(complex(alpha) * np.eye(self.dim))

    def mapped(self, matrix) -> PolynomialPath:
        coeffs = np.asarray(matrix, dtype=complex) @ self.expr.coefficient_matrix()
        return PolynomialPath(PathExpression.from_coefficients(coeffs), self.interval)

    def __add__(self, other: FunctionHandle) -> FunctionHandle:
        if not isinstance(other, PolynomialPath):
            return SumPath(self, other)
        _compatible(self, other)
        a, b = self.expr.coefficient_matrix(), other.expr.coefficient_matrix()
        width = max(a.shape[1], b.shape[1])
        a = np.pad(a, ((0, 0), (0, width - a.shape[1])))
        b = np.pad(b, ((0, 0), (0, width - b.shape[1])))
        return PolynomialPath(PathExpression.from_coefficients(a + b), self.interval)

    def __repr__(self) -> str:
        return f"PolynomialPath({str(self.expr)!r}, {self.interval})"


class StepPath(FunctionHandle):
    """Piecewise-constant path: ``levels[k]`` on [breaks[k-1], breaks[k])."""

    def __init__(self, breaks: Sequence[float], levels, interval: Sequence[float]):
        self.interval = _check_interval(*interval)
        self.breaks = np.asarray(breaks, dtype=float)
        self.levels = np.atleast_2d(np.asarray(levels, dtype=complex))
        if self.levels.shape[0] != self.breaks.size + 1:
            raise ValueError("need one more level than breakpoints")
        self.dim = self.levels.shape[1]

    def _raw(self, xs):
        return self.levels[np.searchsorted(self.breaks, xs, side="right")]


class CallablePath(FunctionHandle):
    """Wrap ``fn(xs) -> (len(xs), dim)``; no derivative is assumed."""

    def __init__(self, fn: Callable[[np.ndarray], np.ndarray], dim: int,
                 interval: Sequence[float], derivative: Callable | None = None):
        self.fn, self.dim = fn, dim
        self.interval = _check_interval(*interval)
        self._deriv = derivative

    def _raw(self, xs):
        return self.fn(xs)

    def derivative(self):
        if self._deriv is None:
            return None
        return CallablePath(self._deriv, self.dim, self.interval)


class MappedPath(FunctionHandle):
    def __init__(self, base: FunctionHandle, matrix: np.ndarray):
        self.base, self.matrix = base, matrix
        self.interval, self.dim = base.interval, matrix.shape[0]

    def _raw(self, xs):
        return self.base.values(xs) @ self.matrix.T

    def derivative(self):
        d = self.base.derivative()
        return None if d is None else MappedPath(d, self.matrix)


class SumPath(FunctionHandle):
    def __init__(self, left: FunctionHandle, right: FunctionHandle):
        _compatible(left, right)
        self.left, self.right = left, right
        self.interval, self.dim = left.interval, left.dim

    def _raw(self, xs):
        return self.left.values(xs) + self.right.values(xs)

    def derivative(self):
        dl, dr = self.left.derivative(), self.right.derivative()
        return None if dl is None or dr is None else SumPath(dl, dr)


def _compatible(f: FunctionHandle, g: FunctionHandle) -> None:
    if f.interval != g.interval or f.dim != g.dim:
        raise VariationError("paths must share interval and dimension")


def _bind(S: StandardizedTwoKrein, f: FunctionHandle) -> None:
    if f.dim != S.space.dim:
        raise DimensionError(f"dimension mismatch: path has {f.dim} coordinates, space has {S.space.dim}")


# -- partitions --------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    points: tuple[float, ...]

    def __post_init__(self):
        pts = tuple(float(p) for p in self.points)
        if len(pts) < 2 or any(b <= a for a, b in zip(pts, pts[1:])):
            raise PartitionError("partition points must be strictly increasing (at least two)")
        object.__setattr__(self, "points", pts)

    @classmethod
    def uniform(cls, a: float, b: float, pieces: int) -> Partition:
        return cls(tuple(a + (b - a) * np.arange(pieces + 1) / pieces))

    @property
    def interval(self) -> tuple[float, float]:
        return self.points[0], self.points[-1]

    def refine(self, extra: Sequence[float]) -> Partition:
        a, b = self.interval
        inside = [p for p in extra if a < p < b]
        return Partition(tuple(sorted(set(self.points) | set(inside))))


# -- increment functionals ---------------------------------------------------
#
# Each maps an (m, n) stack of increments f(t_i) - f(t_{i-1}) to m
# nonnegative contributions.

Increment = Callable[[np.ndarray], np.ndarray]


def _t_weights(S: StandardizedTwoKrein, t: KVector) -> tuple[float, float]:
    tp, tm = batch_squared_components(S.sigma, S.J, t.coords)
    scale = float(np.sum(np.abs(t.coords) ** 2))
    return float(clamped_sqrt(tp, scale)), float(clamped_sqrt(tm, scale))


def _components(S, d):
    ap, am = batch_squared_components(S.sigma, S.J, d)
    scale = np.sum(np.abs(d) ** 2, axis=-1)
    return clamped_sqrt(ap, scale), clamped_sqrt(am, scale)


def two_norm_increment(S: StandardizedTwoKrein, t: KVector) -> Increment:
    wp, wm = _t_weights(S, t)

    def incr(d):
        cp, cm = _components(S, d)
        return np.sqrt((cp * wp) ** 2 + (cm * wm) ** 2)
    return incr


def positive_increment(S, t) -> Increment:
    wp, _ = _t_weights(S, t)
    return lambda d: _components(S, d)[0] * wp


def negative_increment(S, t) -> Increment:
    _, wm = _t_weights(S, t)
    return lambda d: _components(S, d)[1] * wm


def krein_increment(S) -> Increment:
    def incr(d):
        cp, cm = _components(S, d)
        return cp + cm
    return incr


def j_norm_increment(S) -> Increment:
    return lambda d: batch_j_norm(S.sigma, S.J, d)


# -- estimation --------------------------------------------------------------

@dataclass
class VariationEstimate:
    value: float
    levels: int
    sums: list[float]
    increments: list[float]
    converged: bool
    partition_size: int
    tolerance: float = DEFAULT_TOLERANCE

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "levels": self.levels,
            "converged": self.converged,
            "partition_size": self.partition_size,
            "increments": self.increments,
            "tolerance": self.tolerance,
        }


def _level_sums(f: FunctionHandle, incrs: Sequence[Increment], k: int) -> list[float]:
    a, b = f.interval
    pieces = 1 << k
    partials: list[list[float]] = [[] for _ in incrs]
    for start in range(0, pieces, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, pieces) + 1)
        xs = a + (b - a) * (idx / pieces)
        if idx[-1] == pieces:
            xs[-1] = b
        vals = f.values(xs)
        diffs = vals[1:] - vals[:-1]
        for acc, incr in zip(partials, incrs):
            acc.append(float(np.sum(incr(diffs))))
    return [math.fsum(p) for p in partials]


def estimate_many(f: FunctionHandle, incrs: Sequence[Increment],
                  tolerance: float = DEFAULT_TOLERANCE,
                  max_depth: int = DEFAULT_MAX_DEPTH) -> list[VariationEstimate]:
    """Run the dyadic refinement for several functionals on shared evaluations.

    Each functional stops on its own criterion, so the results equal those of
    separate runs.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be > 0")
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    m = len(incrs)
    sums: list[list[float]] = [[] for _ in range(m)]
    best = [0.0] * m
    done: list[VariationEstimate | None] = [None] * m
    for k in range(max_depth + 1):
        active = [i for i in range(m) if done[i] is None]
        if not active:
            break
        level = _level_sums(f, [incrs[i] for i in active], k)
        for i, s in zip(active, level):
            sums[i].append(s)
            previous = best[i]
            best[i] = max(best[i], s) if k else s
            if k == 0:
                continue
            gain = s - previous
            converged = gain <= tolerance * (1.0 + best[i])
            if converged or k == max_depth:
                done[i] = VariationEstimate(
                    value=best[i], levels=k, sums=sums[i],
                    increments=[b - a for a, b in zip(sums[i], sums[i][1:])],
                    converged=converged, partition_size=(1 << k) + 1, tolerance=tolerance)
    return done  # type: ignore[return-value]


def partition_sum(S: StandardizedTwoKrein, f: FunctionHandle, t: KVector, P: Partition) -> float:
    """Sum of N_J(f(t_i) - f(t_{i-1}), t) over the partition."""
    _bind(S, f)
    S._check(t)
    if P.interval != f.interval:
        raise PartitionError(f"partition spans {P.interval}, path is defined on {f.interval}")
    incr = two_norm_increment(S, t)
    pts = np.asarray(P.points)
    total = []
    for start in range(0, pts.size - 1, _CHUNK):
        vals = f.values(pts[start: start + _CHUNK + 1])
        total.append(float(np.sum(incr(vals[1:] - vals[:-1]))))
    return math.fsum(total)


def estimate_variation(S: StandardizedTwoKrein, f: FunctionHandle, t: KVector,
                       tolerance: float = DEFAULT_TOLERANCE,
                       max_depth: int = DEFAULT_MAX_DEPTH) -> VariationEstimate:
    _bind(S, f)
    S._check(t)
    return estimate_many(f, [two_norm_increment(S, t)], tolerance, max_depth)[0]


def partial_variation_estimates(S, f, t, tolerance=DEFAULT_TOLERANCE, max_depth=DEFAULT_MAX_DEPTH):
    _bind(S, f)
    S._check(t)
    vp, vm = estimate_many(f, [positive_increment(S, t), negative_increment(S, t)],
                           tolerance, max_depth)
    return vp, vm


def partial_variations(S: StandardizedTwoKrein, f: FunctionHandle, t: KVector,
                       tolerance: float = DEFAULT_TOLERANCE,
                       max_depth: int = DEFAULT_MAX_DEPTH) -> tuple[float, float]:
    """(V+, V-): variations of f+ and f- weighted by ||t+|| and ||t-||."""
    vp, vm = partial_variation_estimates(S, f, t, tolerance, max_depth)
    return vp.value, vm.value


def krein_variation_estimate(S, f, tolerance=DEFAULT_TOLERANCE, max_depth=DEFAULT_MAX_DEPTH):
    _bind(S, f)
    return estimate_many(f, [krein_increment(S)], tolerance, max_depth)[0]


def krein_variation(S: StandardizedTwoKrein, f: FunctionHandle,
                    tolerance: float = DEFAULT_TOLERANCE,
                    max_depth: int = DEFAULT_MAX_DEPTH) -> float:
    """Strong variation: sup of sum ||df+||_+ + ||df-||_- over partitions."""
    return krein_variation_estimate(S, f, tolerance, max_depth).value


# -- quadrature oracle -------------------------------------------------------

def adaptive_simpson(g: Callable[[float], float], a: float, b: float,
                     rel_tol: float = 1e-9, panels: int = 16, max_depth: int = 50) -> float:
    """Adaptive Simpson with a relative target set from a composite first pass."""
    edges = np.linspace(a, b, panels + 1)
    mids = 0.5 * (edges[:-1] + edges[1:])
    fe = [g(float(x)) for x in edges]
    fm = [g(float(x)) for x in mids]
    wholes = [(edges[i + 1] - edges[i]) / 6.0 * (fe[i] + 4 * fm[i] + fe[i + 1]) for i in range(panels)]
    rough = abs(math.fsum(wholes))
    abs_tol = rel_tol * rough if rough > 0 else 1e-300
    stack = [(float(edges[i]), float(edges[i + 1]), fe[i], fm[i], fe[i + 1], wholes[i],
              abs_tol / panels, 0) for i in range(panels)]
    pieces: list[float] = []
    while stack:
        lo, hi, flo, fmid, fhi, whole, tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = g(lm), g(rm)
        left = (mid - lo) / 6.0 * (flo + 4 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4 * frm + fhi)
        err = left + right - whole
        if depth >= max_depth or abs(err) <= 15.0 * tol:
            pieces.append(left + right + err / 15.0)
        else:
            stack.append((lo, mid, flo, flm, fmid, left, tol / 2, depth + 1))
            stack.append((mid, hi, fmid, frm, fhi, right, tol / 2, depth + 1))
    return math.fsum(pieces)


def variation_oracle_quadrature(S: StandardizedTwoKrein, f: FunctionHandle, t: KVector,
                                rel_tol: float = 1e-9) -> float:
    """Integral of N_J(f'(x), t) over f's interval."""
    _bind(S, f)
    S._check(t)
    df = f.derivative()
    if df is None:
        raise OracleUnavailableError("oracle unavailable: path is not differentiable")
    incr = two_norm_increment(S, t)

    def speed(x: float) -> float:
        return float(incr(df.values(np.array([x])))[0])

    return adaptive_simpson(speed, *f.interval, rel_tol=rel_tol)


def krein_oracle_quadrature(S, f, rel_tol=1e-9) -> float:
    df = f.derivative()
    if df is None:
        raise OracleUnavailableError("oracle unavailable: path is not differentiable")
    incr = krein_increment(S)
    return adaptive_simpson(lambda x: float(incr(df.values(np.array([x])))[0]), *f.interval,
                            rel_tol=rel_tol)


# -- bounded-variation class -------------------------------------------------

@dataclass(frozen=True)
class BVElement:
    handle: FunctionHandle
    anchor: KVector
    variation: VariationEstimate
    weight: KVector
    two_krein: StandardizedTwoKrein = field(repr=False)


def bv_element(S: StandardizedTwoKrein, f: FunctionHandle, t: KVector,
               tolerance: float = DEFAULT_TOLERANCE,
               max_depth: int = DEFAULT_MAX_DEPTH) -> BVElement:
    est = estimate_variation(S, f, t, tolerance, max_depth)
    if not est.converged:
        raise NotBoundedVariationError(
            f"variation estimate did not converge within depth {max_depth} (last value {est.value})")
    anchor = KVector(f(f.interval[0]), S.space)
    return BVElement(f, anchor, est, t, S)


def bv_two_norm(S: StandardizedTwoKrein, F: BVElement, G: BVElement) -> float:
    """N_J(f(a), t) V(g) + N_J(g(a), t) V(f)."""
    if (F.handle.interval != G.handle.interval or F.weight != G.weight
            or F.two_krein != S or G.two_krein != S):
        raise IncompatibleBVError("incompatible BV elements: interval, weight or space differ")
    t = F.weight
    return (two_norm_j(S, F.anchor, t) * G.variation.value
            + two_norm_j(S, G.anchor, t) * F.variation.value)


# -- law checks --------------------------------------------------------------

@dataclass
class LawCheck:
    name: str
    lhs: float
    rhs: float
    kind: str  # "le" (lhs <= rhs) or "eq"
    slack_floor: float = -LAW_SLACK
    note: str = ""

    @property
    def slack(self) -> float:
        if self.kind == "eq":
            return -abs(self.lhs - self.rhs)
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.slack)) and self.slack >= self.slack_floor

    def to_dict(self) -> dict[str, Any]:
        out = {"name": self.name, "status": "pass" if self.passed else "fail",
               "lhs": self.lhs, "rhs": self.rhs, "slack": self.slack}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class LawReport:
    checks: list[LawCheck]
    values: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def by_name(self, name: str) -> LawCheck:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict[str, Any]:
        return {"status": "pass" if self.passed else "fail",
                "checks": [c.to_dict() for c in self.checks], "values": self.values}


def _anchor_profile(S, f, t, grid):
    xs = np.linspace(*f.interval, grid)
    vals = f.values(xs)
    return two_norm_increment(S, t)(vals)


def _weight_bounds(S1, S2, t):
    """Certified [lo, hi] for V_J2(f, t) / V_J1(f, t); None where undefined."""
    c = equivalence_constants(S1.symmetry, S2.symmetry)
    m1 = min(_t_weights(S1, t))
    m2 = min(_t_weights(S2, t))
    n1 = j_norm(S1.symmetry, t)
    n2 = j_norm(S2.symmetry, t)
    lo = c.alpha * m2 / n1 if n1 > 0 else None
    hi = c.beta * n2 / m1 if m1 > 0 else None
    return lo, hi


def check_variation_laws(S: StandardizedTwoKrein, f: FunctionHandle, g: FunctionHandle,
                         t: KVector, v: KVector, alpha: complex,
                         J2=None, tolerance: float = DEFAULT_TOLERANCE,
                         max_depth: int = DEFAULT_MAX_DEPTH, grid: int = GRID_SIZE,
                         seed: int = 0) -> LawReport:
    """Evaluate the variation inequalities on f, g with weights t, v.

    ``J2`` is a second fundamental symmetry for the decomposition-independence
    check; by default one is drawn from a seeded random angular operator.
    """
    _compatible(f, g)
    _bind(S, f)
    S._check(t, v)
    if J2 is None:
        J2 = random_symmetry(S.space, np.random.default_rng(seed), max_norm=0.9)
    S2 = StandardizedTwoKrein(S.space, J2)
    tol, depth = tolerance, max_depth

    vf, vp, vm, vk = estimate_many(
        f, [two_norm_increment(S, t), positive_increment(S, t), negative_increment(S, t),
            krein_increment(S)], tol, depth)
    vf_v, = estimate_many(f, [two_norm_increment(S, v)], tol, depth)
    vf_tv, = estimate_many(f, [two_norm_increment(S, t + v)], tol, depth)
    vg = estimate_variation(S, g, t, tol, depth)
    vfg = estimate_variation(S, f + g, t, tol, depth)
    v_alpha = estimate_variation(S, f.scaled(alpha), t, tol, depth)
    v2 = estimate_variation(S2, f, t, tol, depth)

    proj_plus = 0.5 * (np.eye(S.space.dim) + S.J)
    f_plus = f.mapped(proj_plus)
    t_plus = KVector(proj_plus @ t.coords, S.space)
    v_red = estimate_variation(S, f_plus, t_plus, tol, depth)
    v_hilb, = estimate_many(f_plus, [j_norm_increment(S)], tol, depth)

    # The identities compare two lower-bound estimates that may stop at
    # different levels; their gap scales with the magnitude, so re-estimate
    # both sides with the tolerance divided by it.
    scale = 1.0 + abs(alpha) * vf.value
    if scale > 2.0:
        v_alpha = estimate_variation(S, f.scaled(alpha), t, tol / scale, depth)
        vf_eq = estimate_variation(S, f, t, tol / scale, depth)
    else:
        vf_eq = vf
    w_plus = j_norm(S.symmetry, t_plus)
    scale = 1.0 + w_plus * v_hilb.value
    if scale > 2.0:
        v_red = estimate_variation(S, f_plus, t_plus, tol / scale, depth)
        v_hilb, = estimate_many(f_plus, [j_norm_increment(S)], tol / scale, depth)

    prof = _anchor_profile(S, f, t, grid)
    wp, wm = _t_weights(S, t)
    V = vf.value
    checks = [
        LawCheck("homogeneity", v_alpha.value, abs(alpha) * vf_eq.value, "eq"),
        LawCheck("subadditivity_paths", vfg.value, V + vg.value, "le"),
        LawCheck("subadditivity_weights", vf_tv.value, V + vf_v.value, "le"),
        LawCheck("decomposition", V, vp.value + vm.value, "le"),
        LawCheck("sandwich_lower", max(vp.value, vm.value), V, "le"),
        LawCheck("transfer", V, (wp + wm) * vk.value, "le"),
        LawCheck("boundedness", float(np.max(prof)), float(prof[0]) + V, "le"),
        LawCheck("lipschitz_anchor", float(np.max(prof) - np.min(prof)), V, "le"),
        LawCheck("two_hilbert_reduction", v_red.value, w_plus * v_hilb.value, "eq"),
    ]
    if V <= tolerance:
        checks.append(LawCheck("zero_variation_constancy",
                               float(np.max(np.abs(prof - prof[0]))), 0.0, "le",
                               note="variation vanishes"))

    lo, hi = _weight_bounds(S, S2, t)
    finite = vf.converged and v2.converged
    checks.append(LawCheck("decomposition_independence_finite", 0.0 if finite else 1.0, 0.0, "le",
                           note="both estimates converged" if finite else "estimate did not converge"))
    if hi is not None:
        checks.append(LawCheck("decomposition_independence_upper", v2.value, hi * V, "le"))
    if lo is not None:
        checks.append(LawCheck("decomposition_independence_lower", lo * V, v2.value, "le"))

    estimates = {"V": vf, "V_plus": vp, "V_minus": vm, "krein": vk, "V_g": vg,
                 "V_f_plus_g": vfg, "V_alpha_f": v_alpha, "V_weight_v": vf_v,
                 "V_weight_t_plus_v": vf_tv, "V_J2": v2}
    values: dict[str, Any] = {k: e.value for k, e in estimates.items()}
    values["converged"] = {k: e.converged for k, e in estimates.items()}
    values["ratio_bounds_J2"] = [lo, hi]
    return LawReport(checks, values)


__all__ = [
    "BVElement", "CallablePath", "EvaluationError", "FunctionHandle", "IncompatibleBVError",
    "LawCheck", "LawReport", "NotBoundedVariationError", "OracleUnavailableError", "Partition",
    "PartitionError", "PolynomialPath", "StepPath", "VariationEstimate", "bv_element",
    "bv_two_norm", "check_variation_laws", "estimate_many", "estimate_variation",
    "krein_variation", "partial_variations", "partition_sum", "variation_oracle_quadrature",
]

"""Command-line front end.

    twokrein COMMAND --config job.json [--seed N] [--tolerance X]
             [--max-depth N] [--json report.json] [--quiet]

Commands: axioms, psi, variation, equivalence, bvnorm, scan-equivalence.
Exit status: 0 when every check passes, 1 when one fails, 2 on a malformed
configuration (including path parse errors).

The job configuration is a JSON object.  Complex numbers are either plain
numbers or ``[re, im]`` pairs; vectors are lists of those.

    {
      "signature": [1, -1],
      "symmetry": "canonical",            # or {"angular": [[k11, ...], ...]} (q x p)
      "t": [1, 0],
      "path": "(-i*x, i)",
      "path2": "(x, 0)",                 # second path: bvnorm, variation laws
      "v": [0, 1],                       # second weight: variation laws
      "alpha": [0, 2],                   # scalar: variation laws
      "interval": [0, 1],
      "vectors": {"x": [1, 0], "y": [0, 1], "z": [1, 1]},
      "tolerance": 1e-9, "max_depth": 24, "sample_count": 1000, "seed": 0
    }
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .funcspec import ParseError, parse
from .krein import (
    TOL,
    AngularOperator,
    FundamentalSymmetry,
    KreinError,
    KreinSpace,
    KVector,
    canonical_symmetry,
    make_space,
    symmetry_from_angular,
    to_pairs,
)
from .twometric import (
    StandardizedTwoKrein,
    axiom_report,
    component_two_norms,
    psi,
    psi_j,
    scan_equivalence,
    two_norm_j,
)
from .variation import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_TOLERANCE,
    NotBoundedVariationError,
    OracleUnavailableError,
    PolynomialPath,
    bv_element,
    bv_two_norm,
    check_variation_laws,
    estimate_variation,
    variation_oracle_quadrature,
)

COMMANDS = ("axioms", "psi", "variation", "equivalence", "bvnorm", "scan-equivalence")
ORACLE_TOL = 1e-5

_KEYS = {"signature", "symmetry", "t", "path", "path2", "v", "alpha", "interval", "vectors",
         "tolerance", "max_depth", "sample_count", "seed"}


class ConfigError(ValueError):
    pass


# -- configuration -----------------------------------------------------------

def _complex(value, where: str) -> complex:
    if isinstance(value, bool):
        raise ConfigError(f"{where}: expected a number or [re, im]")
    if isinstance(value, (int, float)):
        return complex(value)
    if (isinstance(value, list) and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        return complex(value[0], value[1])
    raise ConfigError(f"{where}: expected a number or [re, im], got {value!r}")


def _vector(value, dim: int, where: str) -> np.ndarray:
    if not isinstance(value, list) or len(value) != dim:
        raise ConfigError(f"{where}: expected a list of {dim} complex entries")
    return np.array([_complex(v, f"{where}[{i}]") for i, v in enumerate(value)])


@dataclass
class JobConfig:
    signature: list[int]
    symmetry: Any = "canonical"
    t: Any = None
    path: str | None = None
    path2: str | None = None
    v: Any = None
    alpha: Any = 2.0
    interval: tuple[float, float] = (0.0, 1.0)
    vectors: dict[str, Any] = field(default_factory=dict)
    tolerance: float = DEFAULT_TOLERANCE
    max_depth: int = DEFAULT_MAX_DEPTH
    sample_count: int = 1000
    seed: int = 0

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> JobConfig:
        if not isinstance(data, dict):
            raise ConfigError("configuration must be a JSON object")
        unknown = set(data) - _KEYS
        if unknown:
            raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
        if "signature" not in data:
            raise ConfigError("missing required key 'signature'")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if not (isinstance(self.tolerance, (int, float)) and self.tolerance > 0):
            raise ConfigError("tolerance must be > 0")
        for name in ("max_depth", "sample_count", "seed"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ConfigError(f"{name} must be a nonnegative integer")
        if self.max_depth < 1 or self.sample_count < 1:
            raise ConfigError("max_depth and sample_count must be >= 1")
        if (not isinstance(self.interval, (list, tuple)) or len(self.interval) != 2
                or not all(isinstance(v, (int, float)) for v in self.interval)):
            raise ConfigError("interval must be [a, b]")
        a, b = (float(v) for v in self.interval)
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ConfigError("interval needs a < b")
        self.interval = (a, b)
        if not isinstance(self.vectors, dict):
            raise ConfigError("vectors must be an object")

    # builders --------------------------------------------------------------

    def space(self) -> KreinSpace:
        if not isinstance(self.signature, list):
            raise ConfigError("signature must be a list of +1/-1")
        return make_space(self.signature)

    def symmetry_for(self, space: KreinSpace) -> FundamentalSymmetry:
        spec = self.symmetry
        if spec == "canonical":
            return canonical_symmetry(space)
        if isinstance(spec, dict) and set(spec) == {"angular"}:
            rows = spec["angular"]
            if not isinstance(rows, list):
                rows = [[rows]]
            if (not all(isinstance(r, list) for r in rows) or len(rows) != space.q
                    or any(len(r) != space.p for r in rows)):
                raise ConfigError(f"angular operator must be {space.q}x{space.p}")
            k = np.array([[_complex(v, "symmetry.angular") for v in r] for r in rows])
            return symmetry_from_angular(space, AngularOperator(k))
        raise ConfigError('symmetry must be "canonical" or {"angular": [[...]]}')

    def two_krein(self) -> StandardizedTwoKrein:
        space = self.space()
        return StandardizedTwoKrein(space, self.symmetry_for(space))

    def kvector(self, space: KreinSpace, value, where: str) -> KVector:
        if value is None:
            raise ConfigError(f"missing required key {where!r}")
        return KVector(_vector(value, space.dim, where), space)

    def path_handle(self, key: str = "path") -> PolynomialPath:
        text = getattr(self, key)
        if not isinstance(text, str):
            raise ConfigError(f"missing required key {key!r}")
        return PolynomialPath(parse(text), self.interval)


def load_config(path: str | Path) -> JobConfig:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    return JobConfig.from_dict(data)


# -- reports -----------------------------------------------------------------

@dataclass
class Check:
    name: str
    status: str  # "pass", "fail" or "info"
    defect: float | None = None
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "status": self.status, "defect": self.defect}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class RunReport:
    command: str
    checks: list[Check]
    values: dict[str, Any]
    seed: int
    timing: float = 0.0

    @property
    def exit_status(self) -> int:
        return 1 if any(c.status == "fail" for c in self.checks) else 0

    def to_dict(self) -> dict[str, Any]:
        # timing is left out so that reruns are byte-identical
        return _clean({
            "command": self.command,
            "seed": self.seed,
            "status": "fail" if self.exit_status else "pass",
            "exit_code": self.exit_status,
            "checks": [c.to_dict() for c in self.checks],
            "values": self.values,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"twokrein {self.command}: {'FAIL' if self.exit_status else 'PASS'}"]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            defect = "" if c.defect is None else f"  defect={c.defect:.3e}"
            detail = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  {c.status.upper():4s}  {c.name:<{width}}{defect}{detail}")
        for key, value in _flatten(self.values):
            lines.append(f"  {key} = {value}")
        lines.append(f"  elapsed {self.timing:.3f} s")
        return "\n".join(lines) + "\n"


def _clean(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, complex):
        return [_clean(obj.real), _clean(obj.imag)]
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return _clean(obj.item())
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _flatten(values: dict[str, Any], prefix: str = ""):
    for key, value in values.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, name + ".")
        else:
            yield name, value


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


# -- commands ----------------------------------------------------------------

def _space_values(S: StandardizedTwoKrein) -> dict[str, Any]:
    return {"space": S.space.to_dict(), "symmetry": S.symmetry.to_dict()["matrix"]}


def _cmd_axioms(cfg: JobConfig) -> tuple[list[Check], dict]:
    S = cfg.two_krein()
    report = axiom_report(S, cfg.sample_count, cfg.seed)
    checks = []
    for o in report.laws.values():
        d = o.to_dict()
        checks.append(Check(o.name, d["status"], o.defect, d.get("witness")))
    return checks, {"sample_count": report.sample_count, **_space_values(S)}


def _cmd_psi(cfg: JobConfig) -> tuple[list[Check], dict]:
    S = cfg.two_krein()
    vec = cfg.vectors
    x, y, z = (cfg.kvector(S.space, vec.get(k), f"vectors.{k}") for k in ("x", "y", "z"))
    p, pj, pxx, pjxx = psi(S, x, y, z), psi_j(S, x, y, z), psi(S, x, x, z), psi_j(S, x, x, z)
    n_pos, n_neg = component_two_norms(S, x, z)
    scale = 1.0 + float(np.linalg.norm(x.coords) ** 2 * np.linalg.norm(z.coords) ** 2)
    checks = [
        Check("psi_xxz_real", _status(abs(pxx.imag) <= 1e-12 * scale), abs(pxx.imag)),
        Check("psi_j_xxz_nonnegative", _status(pjxx.real >= -1e-12 * scale), max(0.0, -pjxx.real)),
    ]
    values = {"psi": p, "psi_j": pj, "psi_xxz": pxx, "two_norm_j_xz": two_norm_j(S, x, z),
              "two_norm_j_yz": two_norm_j(S, y, z), "n_plus_xz": n_pos, "n_minus_xz": n_neg}
    return checks, values


def _cmd_variation(cfg: JobConfig) -> tuple[list[Check], dict]:
    S = cfg.two_krein()
    f = cfg.path_handle("path")
    t = cfg.kvector(S.space, cfg.t, "t")
    est = estimate_variation(S, f, t, cfg.tolerance, cfg.max_depth)
    checks = [Check("estimate_converged", _status(est.converged), est.increments[-1] if est.increments else 0.0,
                    detail=f"{est.levels} levels")]
    monotone = min((b - a + 1e-12 * (1 + abs(a)) for a, b in zip(est.sums, est.sums[1:])), default=0.0)
    checks.append(Check("refinement_monotone", _status(monotone >= 0), max(0.0, -monotone)))
    values: dict[str, Any] = {"estimate": est.to_dict()}
    try:
        oracle = variation_oracle_quadrature(S, f, t)
    except OracleUnavailableError as exc:
        checks.append(Check("oracle_agreement", "info", detail=str(exc)))
    else:
        gap = abs(est.value - oracle)
        checks.append(Check("oracle_agreement", _status(gap <= ORACLE_TOL * (1 + est.value)), gap))
        values["oracle"] = oracle

    g = cfg.path_handle("path2") if cfg.path2 is not None else f
    v = cfg.kvector(S.space, cfg.v, "v") if cfg.v is not None else t
    alpha = _complex(cfg.alpha, "alpha")
    laws = check_variation_laws(S, f, g, t, v, alpha, tolerance=cfg.tolerance,
                                max_depth=cfg.max_depth, seed=cfg.seed)
    for c in laws.checks:
        checks.append(Check(f"law.{c.name}", _status(c.passed), max(0.0, -c.slack), detail=c.note))
    values["laws"] = laws.values
    return checks, values


def _cmd_equivalence(cfg: JobConfig) -> tuple[list[Check], dict]:
    S2 = cfg.two_krein()
    S1 = StandardizedTwoKrein.canonical(S2.space)
    scan = scan_equivalence(S1, S2, cfg.sample_count, cfg.seed)
    checks = [Check("j_norm_bounds", _status(scan.norm_bound_defect <= TOL),
                    max(0.0, scan.norm_bound_defect))]
    values = {"alpha": scan.constants.alpha, "beta": scan.constants.beta,
              "sample_count": scan.sample_count, **_space_values(S2)}
    return checks, values


def _cmd_bvnorm(cfg: JobConfig) -> tuple[list[Check], dict]:
    S = cfg.two_krein()
    t = cfg.kvector(S.space, cfg.t, "t")
    f, g = cfg.path_handle("path"), cfg.path_handle("path2")
    checks: list[Check] = []
    try:
        F = bv_element(S, f, t, cfg.tolerance, cfg.max_depth)
        G = bv_element(S, g, t, cfg.tolerance, cfg.max_depth)
    except NotBoundedVariationError as exc:
        return [Check("bv_membership", "fail", detail=str(exc))], {}
    checks.append(Check("bv_membership", "pass"))
    value, swapped = bv_two_norm(S, F, G), bv_two_norm(S, G, F)
    checks.append(Check("symmetry", _status(abs(value - swapped) <= TOL * (1 + value)),
                        abs(value - swapped)))
    values = {"bv_two_norm": value, "variation_f": F.variation.value,
              "variation_g": G.variation.value, "anchor_f": to_pairs(F.anchor),
              "anchor_g": to_pairs(G.anchor)}
    return checks, values


def _cmd_scan(cfg: JobConfig) -> tuple[list[Check], dict]:
    S2 = cfg.two_krein()
    S1 = StandardizedTwoKrein.canonical(S2.space)
    scan = scan_equivalence(S1, S2, cfg.sample_count, cfg.seed)
    checks = [
        Check("j_norm_bounds", _status(scan.norm_bound_defect <= TOL), max(0.0, scan.norm_bound_defect)),
        Check("cross_two_norm_bounds", _status(scan.cross_bound_defect <= TOL),
              max(0.0, scan.cross_bound_defect)),
    ]
    if scan.decompositions_coincide:
        checks.append(Check("degenerate_witness", "info", detail="decompositions coincide"))
    else:
        w = scan.witness
        checks.append(Check("degenerate_witness", _status(scan.witness_verified), w["vanishing_norm"],
                            witness=w, detail="N_J2 = 0 < N_J1"))
        r = scan.reverse_witness
        checks.append(Check("reverse_degenerate_witness", _status(r["verified"]), r["vanishing_norm"],
                            witness=r, detail="N_J1 = 0 < N_J2"))
    checks.append(Check("two_sided_two_norm_equivalence", "info",
                        detail="refuted by witness" if scan.two_sided_claim_refuted else "no witness"))
    return checks, scan.to_dict()


_DISPATCH = {
    "axioms": _cmd_axioms,
    "psi": _cmd_psi,
    "variation": _cmd_variation,
    "equivalence": _cmd_equivalence,
    "bvnorm": _cmd_bvnorm,
    "scan-equivalence": _cmd_scan,
}


def run(command: str, config: JobConfig) -> RunReport:
    """Execute one command; raises ConfigError / ParseError / KreinError on bad input."""
    if command not in _DISPATCH:
        raise ConfigError(f"unknown command {command!r}")
    start = time.perf_counter()
    checks, values = _DISPATCH[command](config)
    return RunReport(command, checks, values, config.seed, time.perf_counter() - start)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twokrein", description=__doc__.split("\n\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="job configuration (JSON)")
    parser.add_argument("--seed", type=int, help="override the configured seed")
    parser.add_argument("--tolerance", type=float, help="refinement stopping tolerance")
    parser.add_argument("--max-depth", type=int, help="maximum dyadic refinement level")
    parser.add_argument("--json", dest="json_path", help="write the machine-readable report here")
    parser.add_argument("--quiet", action="store_true", help="suppress the text report")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.seed is not None:
            cfg.seed = args.seed
        if args.tolerance is not None:
            cfg.tolerance = args.tolerance
        if args.max_depth is not None:
            cfg.max_depth = args.max_depth
        cfg.validate()
        report = run(args.command, cfg)
    except ParseError as exc:
        print(f"twokrein: path parse error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, KreinError, TypeError) as exc:
        print(f"twokrein: invalid configuration: {exc}", file=sys.stderr)
        return 2
    if args.json_path:
        Path(args.json_path).write_text(report.to_json(), encoding="utf-8")
    if not args.quiet:
        sys.stdout.write(report.to_text())
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())

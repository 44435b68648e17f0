"""Verification CLI emitting machine-readable JSON reports.

A job is a JSON config document read from --config or stdin:

    {"command": "tpr", "m": 1, "a": [0.3, 0.0], "b": [0.45, 0.0],
     "c": [[0.7, 0.0]], "x": [[0.05, 0.0]], "seed": 7, "trials": 0}

Complex numbers are two-element [re, im] arrays (bare numbers accepted).
Commands: eval, basis, ih, ic, pde, euler, tpr. With trials > 0 the
pde/euler/tpr commands verify that many random generic instances drawn
from a PCG64 generator seeded by "seed", so reports are reproducible;
identical config and seed give byte-identical reports. Every float is
serialized with 17 significant digits (round-trip exact). runtime_ms is 0
unless --timing is passed, keeping default reports deterministic; actual
timing always goes to stderr.

Exit status: 0 all verdicts pass, 1 verification failure, 2 input error
(diagnostic on stderr, no partial report).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from .basis import enumerate_basis, eval_local_solution
from .core import (EvaluationPoint, ParameterSet, SubsetIndex, as_point,
                   validate_parameters)
from .errors import FCError
from .intersection import enumerate_flags, ic_phi_phi, ic_phi_phiprime, ih_matrix
from .pde import pde_residual
from .quadrature import verify_integral_identity
from .relations import RelationReport, tpr1_raw, tpr1_reduced, tpr2_reduced
from .sampling import (random_generic_parameters, random_point,
                       random_quadrature_parameters)
from .series import DEFAULT_REL_TOL, eval_fc

COMMANDS = ("eval", "basis", "ih", "ic", "pde", "euler", "tpr")

DEFAULT_TOLERANCES = {
    "tpr1_reduced": 1e-8,
    "tpr2_reduced": 1e-8,
    "tpr1_raw": 1e-7,
    "pde": 1e-12,
    "euler": 1e-7,
}

_EULER_X_GRID = (0.01, 0.05, 0.1)


class ConfigError(ValueError):
    """Config document failed to parse or validate."""


# ---------------------------------------------------------------------------
# config parsing

@dataclass
class JobConfig:
    command: str
    m: int
    a: complex | None
    b: complex | None
    c: tuple[complex, ...] | None
    x: tuple[complex, ...] | None
    seed: int
    trials: int
    degree: int
    tol_int: float
    rel_tol: float
    tolerances: dict[str, float]
    timing: bool = False


def _as_complex(value, name: str) -> complex:
    if isinstance(value, bool):
        raise ConfigError(f"{name}: expected a number or [re, im] pair")
    if isinstance(value, (int, float)):
        return complex(value)
    if (isinstance(value, list) and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        return complex(value[0], value[1])
    raise ConfigError(f"{name}: expected a number or [re, im] pair, got {value!r}")


def _as_complex_vector(value, name: str) -> tuple[complex, ...]:
    if not isinstance(value, list):
        raise ConfigError(f"{name}: expected an array")
    return tuple(_as_complex(v, f"{name}[{i}]") for i, v in enumerate(value))


def _load_config(raw: dict, args: argparse.Namespace) -> JobConfig:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    known = {"command", "m", "a", "b", "c", "x", "seed", "trials", "degree",
             "tol_int", "rel_tol", "tolerances"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    command = raw.get("command")
    if command not in COMMANDS:
        raise ConfigError(f"command must be one of {COMMANDS}, got {command!r}")
    m = raw.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ConfigError(f"m must be a positive integer, got {m!r}")

    a = _as_complex(raw["a"], "a") if "a" in raw else None
    b = _as_complex(raw["b"], "b") if "b" in raw else None
    c = _as_complex_vector(raw["c"], "c") if "c" in raw else None
    x = _as_complex_vector(raw["x"], "x") if "x" in raw else None
    if c is not None and len(c) != m:
        raise ConfigError(f"len(c) = {len(c)} inconsistent with m = {m}")
    if x is not None and len(x) != m:
        raise ConfigError(f"len(x) = {len(x)} inconsistent with m = {m}")

    tolerances = dict(DEFAULT_TOLERANCES)
    for key, val in (raw.get("tolerances") or {}).items():
        if key not in DEFAULT_TOLERANCES:
            raise ConfigError(f"unknown tolerance key {key!r}")
        tolerances[key] = float(val)
    if args.tol is not None:
        tolerances = {k: float(args.tol) for k in tolerances}

    seed = args.seed if args.seed is not None else raw.get("seed", 0)
    trials = args.trials if args.trials is not None else raw.get("trials", 0)
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ConfigError(f"seed must be an integer, got {seed!r}")
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 0:
        raise ConfigError(f"trials must be a nonnegative integer, got {trials!r}")

    degree = raw.get("degree", 15)
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 3:
        raise ConfigError(f"degree must be an integer >= 3, got {degree!r}")

    return JobConfig(
        command=command, m=m, a=a, b=b, c=c, x=x,
        seed=seed, trials=trials, degree=degree,
        tol_int=float(raw.get("tol_int", 1e-6)),
        rel_tol=float(raw.get("rel_tol", DEFAULT_REL_TOL)),
        tolerances=tolerances,
        timing=bool(getattr(args, "timing", False)),
    )


def _require_parameters(cfg: JobConfig) -> ParameterSet:
    if cfg.a is None or cfg.b is None or cfg.c is None:
        raise ConfigError(f"command {cfg.command!r} requires a, b and c")
    p = ParameterSet(cfg.m, cfg.a, cfg.b, cfg.c)
    verdict = validate_parameters(p, cfg.tol_int)
    if not verdict.ok:
        lines = "; ".join(v.describe() for v in verdict.violations)
        raise ConfigError(f"parameters violate genericity: {lines}")
    return p


def _require_point(cfg: JobConfig) -> EvaluationPoint:
    if cfg.x is None:
        raise ConfigError(f"command {cfg.command!r} requires x")
    return as_point(cfg.x)


# ---------------------------------------------------------------------------
# report assembly

def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _relation_json(rep: RelationReport) -> dict:
    return {
        "identity": rep.identity_name,
        "lhs": _pair(rep.lhs),
        "rhs": _pair(rep.rhs),
        "residual": rep.residual,
        "tolerance": rep.tolerance,
        "verdict": rep.verdict,
        "terms": [{"subset": list(members), "value": _pair(val)}
                  for members, val in rep.terms],
    }


def _canonical_inputs(cfg: JobConfig) -> dict:
    return {
        "m": cfg.m,
        "a": _pair(cfg.a) if cfg.a is not None else None,
        "b": _pair(cfg.b) if cfg.b is not None else None,
        "c": [_pair(v) for v in cfg.c] if cfg.c is not None else None,
        "x": [_pair(v) for v in cfg.x] if cfg.x is not None else None,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "degree": cfg.degree,
        "tol_int": cfg.tol_int,
        "rel_tol": cfg.rel_tol,
        "tolerances": {k: cfg.tolerances[k] for k in sorted(cfg.tolerances)},
    }


# ---------------------------------------------------------------------------
# command implementations

def _run_eval(cfg: JobConfig) -> tuple[dict, bool]:
    p = _require_parameters(cfg)
    pt = _require_point(cfg)
    sv = eval_fc(p, pt, cfg.rel_tol)
    results = {
        "value": _pair(sv.value),
        "order": sv.order,
        "tail_estimate": sv.tail_estimate,
        "converged": sv.converged,
    }
    return results, sv.converged


def _run_basis(cfg: JobConfig) -> tuple[dict, bool]:
    p = _require_parameters(cfg)
    specs = enumerate_basis(p)
    pt = as_point(cfg.x) if cfg.x is not None else None
    evaluate = pt is not None and all(v != 0 for v in pt.x)
    solutions = []
    for spec in specs:
        entry = {
            "subset": list(spec.subset.members),
            "rank": spec.subset.rank,
            "a": _pair(spec.a),
            "b": _pair(spec.b),
            "c": [_pair(v) for v in spec.c],
            "prefactor_exponents": [_pair(v) for v in spec.prefactor_exponents],
        }
        if evaluate:
            sv = eval_local_solution(p, spec.subset, pt, cfg.rel_tol)
            entry["value"] = _pair(sv.value)
        solutions.append(entry)
    exps = {spec.prefactor_exponents for spec in specs}
    distinct = len(exps) == len(specs)
    count_ok = len(specs) == (1 << p.m)
    results = {
        "count": len(specs),
        "expected_count": 1 << p.m,
        "distinct_prefactor_exponents": distinct,
        "solutions": solutions,
    }
    return results, count_ok and distinct


def _run_ih(cfg: JobConfig) -> tuple[dict, bool]:
    p = _require_parameters(cfg)
    matrix = ih_matrix(p)
    diag = np.diag(matrix.entries)
    det = matrix.determinant
    results = {
        "dimension": 1 << p.m,
        "diagonal": [_pair(v) for v in diag],
        "determinant": _pair(det),
    }
    return results, bool(abs(det) > 0)


def _run_ic(cfg: JobConfig) -> tuple[dict, bool]:
    p = _require_parameters(cfg)
    flags = enumerate_flags(p.m)
    value = ic_phi_phi(p)
    expected = math.factorial(p.m)
    results = {
        "value": _pair(value),
        "flag_count": len(flags),
        "expected_flag_count": expected,
        "flags": [[list(s.members) for s in flag] for flag in flags],
        "phi_phiprime": _pair(ic_phi_phiprime()),
    }
    return results, len(flags) == expected


def _pde_entries(p: ParameterSet, degree: int) -> list[dict]:
    entries = [{"subset": None, "residual": pde_residual(p, degree)}]
    for spec in enumerate_basis(p):
        if spec.subset.r == 0:
            continue
        q = spec.parameter_set()
        entries.append({"subset": list(spec.subset.members),
                        "residual": pde_residual(q, degree)})
    return entries


def _run_pde(cfg: JobConfig) -> tuple[dict, bool]:
    tol = cfg.tolerances["pde"]
    groups = []
    if cfg.trials > 0:
        rng = np.random.default_rng(cfg.seed)
        for trial in range(cfg.trials):
            p = random_generic_parameters(rng, cfg.m)
            groups.append({
                "trial": trial,
                "parameters": {"a": _pair(p.a), "b": _pair(p.b), "c": [_pair(v) for v in p.c]},
                "residuals": _pde_entries(p, cfg.degree),
            })
    else:
        p = _require_parameters(cfg)
        groups.append({"trial": None,
                       "parameters": {"a": _pair(p.a), "b": _pair(p.b),
                                      "c": [_pair(v) for v in p.c]},
                       "residuals": _pde_entries(p, cfg.degree)})
    worst = max(e["residual"] for g in groups for e in g["residuals"])
    results = {"degree": cfg.degree, "tolerance": tol,
               "worst_residual": worst, "groups": groups}
    return results, worst <= tol


def _run_euler(cfg: JobConfig) -> tuple[dict, bool]:
    if cfg.m != 1:
        raise ConfigError("euler requires m = 1")
    tol = cfg.tolerances["euler"]
    checks = []
    if cfg.trials > 0:
        rng = np.random.default_rng(cfg.seed)
        for trial in range(cfg.trials):
            p = random_quadrature_parameters(rng)
            for xv in _EULER_X_GRID:
                rep = verify_integral_identity(p, xv, tol)
                checks.append({
                    "trial": trial,
                    "parameters": {"a": _pair(p.a), "b": _pair(p.b), "c": [_pair(v) for v in p.c]},
                    "x": xv,
                    "report": _relation_json(rep),
                })
    else:
        p = _require_parameters(cfg)
        pt = _require_point(cfg)
        xv = pt.x[0]
        if xv.imag != 0:
            raise ConfigError("euler requires real x")
        rep = verify_integral_identity(p, xv.real, tol)
        checks.append({"trial": None,
                       "parameters": {"a": _pair(p.a), "b": _pair(p.b),
                                      "c": [_pair(v) for v in p.c]},
                       "x": xv.real,
                       "report": _relation_json(rep)})
    passed = all(ch["report"]["verdict"] == "pass" for ch in checks)
    results = {"tolerance": tol, "checks": checks}
    return results, passed


def _tpr_reports(p: ParameterSet, pt: EvaluationPoint, cfg: JobConfig,
                 include_raw: bool) -> list[dict]:
    reports = [
        _relation_json(tpr1_reduced(p, pt, cfg.tolerances["tpr1_reduced"])),
        _relation_json(tpr2_reduced(p, pt, cfg.tolerances["tpr2_reduced"])),
    ]
    if include_raw:
        reports.append(_relation_json(tpr1_raw(p, pt, cfg.tolerances["tpr1_raw"])))
    return reports


def _run_tpr(cfg: JobConfig) -> tuple[dict, bool]:
    groups = []
    if cfg.trials > 0:
        rng = np.random.default_rng(cfg.seed)
        for trial in range(cfg.trials):
            p = random_generic_parameters(rng, cfg.m)
            pt = random_point(rng, cfg.m, 0.01)
            groups.append({
                "trial": trial,
                "parameters": {"a": _pair(p.a), "b": _pair(p.b), "c": [_pair(v) for v in p.c]},
                "x": [_pair(v) for v in pt.x],
                "identities": _tpr_reports(p, pt, cfg, include_raw=cfg.m <= 2),
            })
    else:
        p = _require_parameters(cfg)
        pt = _require_point(cfg)
        groups.append({
            "trial": None,
            "parameters": {"a": _pair(p.a), "b": _pair(p.b), "c": [_pair(v) for v in p.c]},
            "x": [_pair(v) for v in pt.x],
            "identities": _tpr_reports(p, pt, cfg, include_raw=True),
        })
    passed = all(rep["verdict"] == "pass" for g in groups for rep in g["identities"])
    results = {"groups": groups}
    return results, passed


_RUNNERS = {
    "eval": _run_eval,
    "basis": _run_basis,
    "ih": _run_ih,
    "ic": _run_ic,
    "pde": _run_pde,
    "euler": _run_euler,
    "tpr": _run_tpr,
}


def run(config: JobConfig) -> tuple[dict, int]:
    """Execute a job; returns (report document, exit status)."""
    start = time.perf_counter()
    results, passed = _RUNNERS[config.command](config)
    elapsed_ms = int(round((time.perf_counter() - start) * 1000.0))
    report = {
        "command": config.command,
        "inputs": _canonical_inputs(config),
        "results": results,
        "verdict": "pass" if passed else "fail",
        "runtime_ms": elapsed_ms if config.timing else 0,
    }
    print(f"fc-verify: command={config.command} elapsed_ms={elapsed_ms}", file=sys.stderr)
    return report, 0 if passed else 1


# ---------------------------------------------------------------------------
# deterministic JSON emission

def _format_number(v) -> str:
    if isinstance(v, int):
        return str(v)
    f = float(v)
    if math.isnan(f) or math.isinf(f):
        raise ValueError("non-finite number in report")
    return format(f, ".17g")


def _is_flat_number_list(obj) -> bool:
    return (isinstance(obj, list)
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj))


def _emit(obj, parts: list[str], indent: int) -> None:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            parts.append("{}")
            return
        parts.append("{\n")
        for i, (key, val) in enumerate(obj.items()):
            parts.append(inner + json.dumps(str(key)) + ": ")
            _emit(val, parts, indent + 1)
            parts.append(",\n" if i < len(obj) - 1 else "\n")
        parts.append(pad + "}")
    elif isinstance(obj, bool):
        parts.append("true" if obj else "false")
    elif obj is None:
        parts.append("null")
    elif isinstance(obj, (int, float)):
        parts.append(_format_number(obj))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif isinstance(obj, list):
        if _is_flat_number_list(obj):
            parts.append("[" + ", ".join(_format_number(v) for v in obj) + "]")
            return
        if not obj:
            parts.append("[]")
            return
        parts.append("[\n")
        for i, val in enumerate(obj):
            parts.append(inner)
            _emit(val, parts, indent + 1)
            parts.append(",\n" if i < len(obj) - 1 else "\n")
        parts.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps_report(report: dict) -> str:
    parts: list[str] = []
    _emit(report, parts, 0)
    parts.append("\n")
    return "".join(parts)


# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fc-verify",
        description="Verify hypergeometric identities and emit a JSON report.")
    parser.add_argument("--config", help="job config path (default: read stdin)")
    parser.add_argument("--out", help="report path (default: stdout)")
    parser.add_argument("--seed", type=int, help="override config seed")
    parser.add_argument("--trials", type=int, help="override config trials")
    parser.add_argument("--tol", type=float, help="override every tolerance")
    parser.add_argument("--timing", action="store_true",
                        help="record real runtime_ms in the report (breaks byte determinism)")
    args = parser.parse_args(argv)

    try:
        if args.config:
            with open(args.config, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        else:
            raw = json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"fc-verify: cannot read config: {exc}", file=sys.stderr)
        return 2

    try:
        config = _load_config(raw, args)
        report, status = run(config)
        text = dumps_report(report)
    except (ConfigError, FCError) as exc:
        print(f"fc-verify: {exc}", file=sys.stderr)
        return 2

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

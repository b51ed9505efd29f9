"""Command-line entry point.

Every command prints a JSON envelope::

    {"command": ..., "parameters": {...}, "results": {...},
     "artifact_version": ..., "seed": ...}

Exit codes: 0 success (or "realizable"), 1 "not realizable", 2 usage or
domain error.

State files are ``{"n": int, "amplitudes": [[re, im], ...]}`` in basis-index
order; the output of ``dicke`` or ``symmetrize`` is accepted as well.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .assembly import (
    AssemblyReport,
    DelayStats,
    PipelineConfig,
    SourceModel,
    assemble,
    balanced_sources,
    compare_pictures,
    delay_simulate,
)
from .errors import QRegError
from .statespace import MAX_QUBITS, DensityMatrix, QubitSpec, StateVector
from .symmetry import DEFAULT_TOLERANCE, SymmetryReport, check_realizable, dicke, symmetrize
from .thermo import EntropyBudget, budget_for_register

log = logging.getLogger("qregstat")

SCHEMA_DIR = Path(__file__).with_name("schemas")
RENORMALIZE_TOL = 1e-6

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class CliError(Exception):
    """Input problem detected by the CLI layer (bad file, bad config)."""


# --------------------------------------------------------------------------- #
# serialization


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def state_to_json(psi: StateVector) -> dict[str, Any]:
    return {"n": psi.n_qubits, "amplitudes": [_complex_pair(z) for z in psi.amplitudes]}


def matrix_to_json(rho: DensityMatrix) -> list[list[list[float]]]:
    return [[_complex_pair(z) for z in row] for row in rho.matrix]


def state_from_json(obj: Any) -> StateVector:
    """Parse a state object, renormalizing small drift (<= 1e-6 in the norm)."""
    if isinstance(obj, dict) and "results" in obj:
        obj = obj["results"]
    if isinstance(obj, dict) and "state" in obj:
        obj = obj["state"]
    if not isinstance(obj, dict) or "n" not in obj or "amplitudes" not in obj:
        raise CliError("state file must contain 'n' and 'amplitudes'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise CliError("'n' must be an integer")
    try:
        amps = np.array([complex(re, im) for re, im in obj["amplitudes"]], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise CliError(f"amplitudes must be [re, im] pairs: {exc}") from None
    if not 1 <= n <= MAX_QUBITS:
        raise CliError(f"'n' must lie in 1..{MAX_QUBITS}, got {n}")
    if amps.size != 2**n:
        raise CliError(f"expected {2**n} amplitudes, got {amps.size}")
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > RENORMALIZE_TOL:
        raise CliError(f"state norm {norm!r} differs from 1 by more than {RENORMALIZE_TOL}")
    if norm != 1.0:
        log.warning("renormalizing input state (norm %r)", norm)
        amps = amps / norm
    return StateVector(n, amps)


def budget_to_json(b: EntropyBudget) -> dict[str, Any]:
    return {
        "n_qubits": b.n_qubits,
        "entropy_before": b.entropy_before,
        "entropy_after": b.entropy_after,
        "delta_bits": b.delta_bits,
        "temperature": b.temperature,
        "energy": b.energy,
    }


def symmetry_to_json(r: SymmetryReport) -> dict[str, Any]:
    return {
        "n_qubits": r.n_qubits,
        "overlap": r.overlap,
        "realizable": r.realizable,
        "tolerance_used": r.tolerance_used,
    }


def assembly_to_json(r: AssemblyReport, include_state: bool = False) -> dict[str, Any]:
    out = {
        "n_qubits": r.register_state.n_qubits,
        "purity": r.purity,
        "entropy_bits": r.entropy_bits,
        "fidelity_to_target": r.fidelity_to_target,
        "target": state_to_json(r.target),
    }
    if include_state:
        out["register_state"] = matrix_to_json(r.register_state)
    return out


def delay_to_json(s: DelayStats) -> dict[str, Any]:
    return {
        "mean_rounds": s.mean_rounds,
        "variance": s.variance,
        "standard_error": s.standard_error,
        "analytic_mean": s.analytic_mean,
        "trials": s.trials,
        "histogram": {str(k): v for k, v in sorted(s.histogram.items())},
        "mean_visibility_factor": s.mean_visibility_factor,
    }


def histogram_csv(s: DelayStats) -> str:
    lines = ["rounds,count"] + [f"{k},{v}" for k, v in sorted(s.histogram.items())]
    return "\n".join(lines) + "\n"


def envelope(command: str, parameters: dict, results: Any, seed: int | None = None) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "results": results,
        "artifact_version": __version__,
        "seed": seed,
    }


def dumps(obj: Any) -> str:
    # repr-based float output is the shortest string that round-trips exactly
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# --------------------------------------------------------------------------- #
# commands


def cmd_dicke(args) -> int:
    psi = dicke(args.n, args.k)
    _write(dumps(envelope("dicke", {"n": args.n, "k": args.k}, state_to_json(psi))), args.output)
    return EXIT_OK


def cmd_symmetrize(args) -> int:
    psi = state_from_json(_load_json(args.state))
    sym, overlap = symmetrize(psi)
    results = {"state": state_to_json(sym), "overlap": overlap}
    _write(dumps(envelope("symmetrize", {"state": args.state}, results)), args.output)
    return EXIT_OK


def cmd_realizable(args) -> int:
    psi = state_from_json(_load_json(args.state))
    report = check_realizable(psi, args.tolerance)
    params = {"state": args.state, "tolerance": args.tolerance}
    _write(dumps(envelope("realizable", params, symmetry_to_json(report))), args.output)
    return EXIT_OK if report.realizable else EXIT_NEGATIVE


def cmd_budget(args) -> int:
    b = budget_for_register(args.n, args.temp)
    params = {"n": args.n, "temperature": args.temp}
    _write(dumps(envelope("budget", params, budget_to_json(b))), args.output)
    return EXIT_OK


def _sources_from_config(cfg: Any) -> list[SourceModel]:
    if not isinstance(cfg, dict):
        raise CliError("assemble config must be a JSON object")
    if "sources" in cfg:
        out = []
        for i, s in enumerate(cfg["sources"]):
            try:
                spec = QubitSpec(
                    float(s["alpha"]), float(s["beta"]),
                    float(s.get("theta1", 0.0)), float(s.get("theta2", 0.0)),
                )
                out.append(SourceModel(spec, float(s.get("visibility", 1.0)), int(s.get("seed", i))))
            except (KeyError, TypeError) as exc:
                raise CliError(f"source {i} is malformed: {exc}") from None
        return out
    if "n" in cfg:
        n = cfg["n"]
        if not isinstance(n, int) or n < 1:
            raise CliError("'n' must be a positive integer")
        return balanced_sources(n, float(cfg.get("visibility", 1.0)))
    raise CliError("assemble config needs either 'sources' or 'n'")


def cmd_assemble(args) -> int:
    cfg = _load_json(args.config)
    report = assemble(_sources_from_config(cfg))
    results = assembly_to_json(report, args.include_state)
    _write(dumps(envelope("assemble", {"config": cfg}, results)), args.output)
    return EXIT_OK


def _pipeline_config(cfg: Any, seed: int | None) -> PipelineConfig:
    if not isinstance(cfg, dict):
        raise CliError("pipeline config must be a JSON object")
    try:
        return PipelineConfig(
            n_qubits=cfg["n_qubits"],
            pass_probability=float(cfg["pass_probability"]),
            mode=cfg.get("mode", "parallel-retry"),
            trials=cfg.get("trials", 100_000),
            seed=seed if seed is not None else cfg.get("seed", 0),
            visibility_decay=cfg.get("visibility_decay"),
        )
    except KeyError as exc:
        raise CliError(f"pipeline config is missing {exc}") from None


def cmd_pipeline(args) -> int:
    cfg = _pipeline_config(_load_json(args.config), args.seed)
    stats = delay_simulate(cfg, workers=args.workers)
    if args.histogram_csv:
        Path(args.histogram_csv).write_text(histogram_csv(stats))
    if args.format == "csv":
        _write(histogram_csv(stats), args.output)
        return EXIT_OK
    params = {
        "n_qubits": cfg.n_qubits,
        "pass_probability": cfg.pass_probability,
        "mode": cfg.mode,
        "trials": cfg.trials,
        "visibility_decay": cfg.visibility_decay,
    }
    _write(dumps(envelope("pipeline", params, delay_to_json(stats), seed=cfg.seed)), args.output)
    return EXIT_OK


def cmd_compare(args) -> int:
    c = compare_pictures(args.n, args.visibility, args.temp)
    results = {
        "n_qubits": c.n_qubits,
        "assembly": assembly_to_json(c.assembly, args.include_state),
        "symmetry": symmetry_to_json(c.symmetry),
        "budget": budget_to_json(c.budget),
        "distinguishable_states": {"product": 2**c.n_qubits, "symmetric": c.n_qubits + 1},
    }
    params = {"n": args.n, "visibility": args.visibility, "temperature": args.temp}
    _write(dumps(envelope("compare", params, results)), args.output)
    return EXIT_OK


# --------------------------------------------------------------------------- #
# parser


def _finite(text: str) -> float:
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"{text} is not a finite number")
    return v


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qregstat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--output", "-o", default=None, help="output path (default stdout)")
        p.set_defaults(func=func)
        return p

    p = add("dicke", cmd_dicke, "Dicke state with n cells and Hamming weight k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("symmetrize", cmd_symmetrize, "project a state file onto the symmetric subspace")
    p.add_argument("state")

    p = add("realizable", cmd_realizable, "check whether a state lies in the symmetric subspace")
    p.add_argument("state")
    p.add_argument("--tolerance", type=_finite, default=DEFAULT_TOLERANCE)

    p = add("budget", cmd_budget, "entropy and energy to remove when n qubits become one system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--temp", type=_finite, required=True, help="temperature in kelvin")

    p = add("assemble", cmd_assemble, "assemble a register from independent noisy sources")
    p.add_argument("config")
    p.add_argument("--include-state", action="store_true", help="emit the full density matrix")

    p = add("pipeline", cmd_pipeline, "Monte Carlo of test-and-retry preparation delay")
    p.add_argument("config")
    p.add_argument("--seed", type=_seed, default=None, help="overrides the config seed")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--histogram-csv", default=None, help="also write the histogram here")
    p.add_argument("--workers", type=int, default=1)

    p = add("compare", cmd_compare, "product picture vs. symmetric picture for n balanced qubits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--visibility", type=_finite, required=True)
    p.add_argument("--temp", type=_finite, required=True, help="temperature in kelvin")
    p.add_argument("--include-state", action="store_true")

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QRegError, CliError, TypeError) as exc:
        print(f"qregstat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

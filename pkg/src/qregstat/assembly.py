"""Assembling a register from independently prepared qubits.

Each source emits its intended qubit through a phase-damping channel with a
single ``visibility`` parameter (1 keeps the coherences, 0 erases them). The
register is the product of the emitted states and is compared against the
coherent product the sources were aiming for.

The second half of the module simulates the test-and-retry loop used to
obtain n qubits that pass a preparation test with probability ``p`` each.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import DomainError, SizeError
from .statespace import (
    MAX_QUBITS,
    DensityMatrix,
    QubitSpec,
    StateVector,
    fidelity,
    make_qubit,
    product_density,
    purity,
    tensor,
    uniform,
)
from .symmetry import SymmetryReport, check_realizable
from .thermo import EntropyBudget, budget_for_register, von_neumann_entropy

Mode = Literal["sequential", "parallel-retry"]
MODES = ("sequential", "parallel-retry")

SERIES_TOL = 1e-12
SERIES_MAX_TERMS = 10**6
# Trials per RNG block. Fixed so results do not depend on the worker count.
BLOCK_SIZE = 1 << 16


def _check_visibility(v: float) -> None:
    if not (0.0 <= v <= 1.0):
        raise DomainError(f"visibility must lie in [0, 1], got {v}")


@dataclass(frozen=True)
class SourceModel:
    spec: QubitSpec
    visibility: float = 1.0
    seed: int = 0

    def __post_init__(self):
        _check_visibility(self.visibility)
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class AssemblyReport:
    register_state: DensityMatrix
    purity: float
    entropy_bits: float
    fidelity_to_target: float
    target: StateVector


@dataclass(frozen=True)
class PipelineConfig:
    """Settings for :func:`delay_simulate`.

    ``visibility_decay`` is an optional per-round coherence retention factor
    applied while a register waits for its slowest cell; it is an
    extrapolation and is off by default.
    """

    n_qubits: int
    pass_probability: float
    mode: Mode = "parallel-retry"
    trials: int = 100_000
    seed: int = 0
    visibility_decay: float | None = None

    def __post_init__(self):
        if not isinstance(self.n_qubits, (int, np.integer)) or self.n_qubits < 1:
            raise DomainError(f"n_qubits must be a positive integer, got {self.n_qubits}")
        if not 0.0 < self.pass_probability <= 1.0:
            raise DomainError(f"pass_probability must lie in (0, 1], got {self.pass_probability}")
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not isinstance(self.trials, (int, np.integer)) or self.trials < 1:
            raise DomainError(f"trials must be a positive integer, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.visibility_decay is not None:
            _check_visibility(self.visibility_decay)


@dataclass(frozen=True)
class DelayStats:
    mean_rounds: float
    variance: float
    histogram: dict[int, int]
    analytic_mean: float
    trials: int
    mean_visibility_factor: float | None = None

    @property
    def standard_error(self) -> float:
        return math.sqrt(self.variance / self.trials)


@dataclass(frozen=True)
class PictureComparison:
    """Both descriptions of an n-qubit register side by side."""

    n_qubits: int
    assembly: AssemblyReport
    symmetry: SymmetryReport
    budget: EntropyBudget


# --------------------------------------------------------------------------- #
# assembly


def emit(source: SourceModel) -> DensityMatrix:
    """Single-qubit state delivered by ``source`` after phase damping."""
    s = source.spec
    coherence = source.visibility * s.alpha * s.beta * np.exp(1j * (s.theta1 - s.theta2))
    m = np.array([[s.alpha**2, coherence], [np.conj(coherence), s.beta**2]], dtype=complex)
    return DensityMatrix(1, m, check_psd=False)


def assemble(sources: Sequence[SourceModel]) -> AssemblyReport:
    sources = list(sources)
    if not sources:
        raise DomainError("need at least one source")
    if len(sources) > MAX_QUBITS:
        raise SizeError(f"{len(sources)} sources exceeds the dense cap of {MAX_QUBITS}")
    rho = product_density(emit(s) for s in sources)
    target = make_qubit(sources[0].spec)
    for s in sources[1:]:
        target = tensor(target, make_qubit(s.spec))
    return AssemblyReport(
        register_state=rho,
        purity=purity(rho),
        entropy_bits=von_neumann_entropy(rho),
        fidelity_to_target=fidelity(target, rho),
        target=target,
    )


def balanced_sources(n: int, visibility: float) -> list[SourceModel]:
    return [SourceModel(QubitSpec.balanced(), visibility, seed=i) for i in range(n)]


def compare_pictures(n: int, visibility: float, temperature: float) -> PictureComparison:
    """Assemble n balanced qubits, test realizability of uniform(n), and cost the entropy drop."""
    _check_visibility(visibility)
    report = assemble(balanced_sources(n, visibility))
    return PictureComparison(
        n_qubits=n,
        assembly=report,
        symmetry=check_realizable(uniform(n)),
        budget=budget_for_register(n, temperature),
    )


# --------------------------------------------------------------------------- #
# retry delay


def analytic_mean_rounds(n: int, p: float, mode: Mode = "parallel-retry") -> float:
    """Expected rounds until all n cells have passed.

    Sequential cells are tested one after another, so the expectation is n/p.
    With all cells retried in parallel the round count is the maximum of n
    geometric variables, whose mean is sum_{r>=0} [1 - (1 - q^r)^n], q = 1 - p.
    """
    if mode == "sequential":
        return n / p
    if mode != "parallel-retry":
        raise DomainError(f"unknown mode {mode!r}")
    q = 1.0 - p
    total = 0.0
    for r in range(SERIES_MAX_TERMS):
        qr = q**r
        # 1 - (1 - q^r)^n without cancellation for small q^r
        term = 1.0 if qr == 1.0 else -math.expm1(n * math.log1p(-qr))
        total += term
        if term < SERIES_TOL:
            return total
    raise DomainError(f"series did not converge in {SERIES_MAX_TERMS} terms (p={p} too small)")


def _block_rounds(seed: int, block: int, size: int, n: int, p: float) -> np.ndarray:
    """Geometric draws of shape (size, n); cell c of block b uses its own Philox substream."""
    out = np.empty((size, n), dtype=np.int64)
    for cell in range(n):
        ss = np.random.SeedSequence(seed, spawn_key=(block, cell))
        out[:, cell] = np.random.Generator(np.random.Philox(ss)).geometric(p, size=size)
    return out


def delay_simulate(config: PipelineConfig, workers: int = 1) -> DelayStats:
    """Monte Carlo estimate of preparation rounds.

    Every cell repeats a Bernoulli(p) test until it passes. In
    ``parallel-retry`` mode a trial takes as many rounds as its slowest cell;
    in ``sequential`` mode the per-cell rounds add up. Both modes consume
    identical draws for the same seed.
    """
    n, p, trials = config.n_qubits, config.pass_probability, config.trials
    blocks = [(b, min(BLOCK_SIZE, trials - b * BLOCK_SIZE)) for b in range((trials + BLOCK_SIZE - 1) // BLOCK_SIZE)]

    def run(block):
        b, size = block
        draws = _block_rounds(config.seed, b, size, n, p)
        rounds = draws.max(axis=1) if config.mode == "parallel-retry" else draws.sum(axis=1)
        return np.bincount(rounds)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(run, blocks))
    else:
        counts = [run(b) for b in blocks]

    width = max(c.size for c in counts)
    total = np.zeros(width, dtype=np.int64)
    for c in counts:
        total[: c.size] += c

    values = np.arange(width, dtype=float)
    mean = float(np.dot(values, total) / trials)
    var = float(np.dot((values - mean) ** 2, total) / (trials - 1)) if trials > 1 else 0.0
    histogram = {int(r): int(c) for r, c in enumerate(total) if c}

    vis = None
    if config.visibility_decay is not None:
        vis = float(np.dot(config.visibility_decay ** (values - 1).clip(0), total) / trials)

    return DelayStats(
        mean_rounds=mean,
        variance=var,
        histogram=histogram,
        analytic_mean=analytic_mean_rounds(n, p, config.mode),
        trials=trials,
        mean_visibility_factor=vis,
    )

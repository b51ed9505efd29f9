"""Entropy bookkeeping and the kT ln 2 energy cost of shrinking a register's state count."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotAStateError
from .statespace import DensityMatrix

# Exact since the 2019 SI redefinition.
BOLTZMANN = 1.380649e-23  # J/K
LN2 = math.log(2.0)

EIGEN_CLAMP = 1e-8


@dataclass(frozen=True)
class EntropyBudget:
    n_qubits: int
    entropy_before: float
    entropy_after: float
    delta_bits: float
    temperature: float
    energy: float


def shannon_entropy(p) -> float:
    """Entropy in bits of a probability vector, with 0 log 0 = 0."""
    p = np.asarray(p, dtype=float).reshape(-1)
    if p.size == 0 or np.any(p < 0) or not np.all(np.isfinite(p)):
        raise DomainError("probabilities must be finite and non-negative")
    if abs(p.sum() - 1.0) > 1e-9:
        raise DomainError(f"probabilities sum to {p.sum()!r}, expected 1")
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)) + 0.0)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy in bits of the eigenvalue spectrum of ``rho``.

    Eigenvalues in (-1e-8, 0) are rounding noise and are set to zero;
    anything more negative is rejected.
    """
    m = rho.matrix
    ev = np.linalg.eigvalsh(m.real if not np.any(m.imag) else m)
    if ev[0] < -EIGEN_CLAMP:
        raise NotAStateError(f"eigenvalue {ev[0]!r} is below -{EIGEN_CLAMP}")
    ev = np.clip(ev, 0.0, None)
    ev = ev / ev.sum()
    return shannon_entropy(ev)


def entropy_reduction(n: int) -> float:
    """Bits lost going from 2**n distinguishable states to n + 1: ``n - log2(n + 1)``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return n - math.log2(n + 1)


def landauer_energy(delta_bits: float, temperature: float) -> float:
    """Joules removed for ``delta_bits`` of entropy at ``temperature`` kelvin."""
    if not temperature > 0 or not math.isfinite(temperature):
        raise DomainError(f"temperature must be a positive number of kelvin, got {temperature}")
    if delta_bits < 0:
        raise DomainError(f"entropy change must be non-negative, got {delta_bits}")
    return delta_bits * BOLTZMANN * temperature * LN2


def budget_for_register(n: int, temperature: float) -> EntropyBudget:
    before = float(n)
    after = math.log2(n + 1)
    delta = entropy_reduction(n)
    return EntropyBudget(
        n_qubits=n,
        entropy_before=before,
        entropy_after=after,
        delta_bits=delta,
        temperature=float(temperature),
        energy=landauer_energy(delta, temperature),
    )

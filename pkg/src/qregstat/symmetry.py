"""Permutation symmetry of qubit registers.

The production symmetric projector is assembled from the n+1 Dicke states.
The n!-term permutation averages are kept as brute-force references and are
capped at seven cells.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, SizeError, ZeroProjectionError
from .statespace import StateVector, _check_cap

BRUTE_FORCE_MAX = 7
DEFAULT_TOLERANCE = 1e-9
ZERO_PROJECTION = 1e-12


@lru_cache(maxsize=None)
def _weights(n: int) -> np.ndarray:
    """Hamming weight of every basis index for an n-cell register."""
    idx = np.arange(2**n)
    w = np.zeros(2**n, dtype=np.int64)
    for b in range(n):
        w += (idx >> b) & 1
    w.setflags(write=False)
    return w


def _norms(n: int) -> np.ndarray:
    return np.array([1.0 / math.sqrt(math.comb(n, k)) for k in range(n + 1)])


@dataclass(frozen=True, eq=False)
class DickeCoordinates:
    """Components of a state along D_0..D_n, plus the norm of what is left over."""

    n_qubits: int
    coeffs: np.ndarray
    residual_norm: float

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.size != self.n_qubits + 1:
            raise ValueError(f"expected {self.n_qubits + 1} coefficients, got {c.size}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def symmetric_weight(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def reconstruct(self) -> np.ndarray:
        """Unnormalized symmetric part sum_k c_k |D_k>."""
        n = self.n_qubits
        w = _weights(n)
        return (self.coeffs * _norms(n))[w]


@dataclass(frozen=True)
class SymmetryReport:
    n_qubits: int
    overlap: float
    realizable: bool
    tolerance_used: float


def dicke(n: int, k: int) -> StateVector:
    """Equal-amplitude superposition of all n-bit strings with k ones.

    ``dicke(3, 1)`` is (|100> + |010> + |001>)/sqrt(3).
    """
    _check_cap(n)
    if not 0 <= k <= n:
        raise DomainError(f"Hamming weight k={k} outside 0..{n}")
    amps = np.where(_weights(n) == k, 1.0 / math.sqrt(math.comb(n, k)), 0.0)
    return StateVector(n, amps.astype(complex))


def dicke_projector(n: int) -> np.ndarray:
    """sum_k |D_k><D_k| as a dense real matrix."""
    _check_cap(n)
    w = _weights(n)
    same = w[:, None] == w[None, :]
    scale = np.array([1.0 / math.comb(n, k) for k in range(n + 1)])[w]
    return np.where(same, scale[:, None], 0.0)


def symmetric_dim(n: int) -> int:
    """Number of linearly independent permutation-symmetric n-qubit states."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return n + 1


def to_dicke(psi: StateVector) -> DickeCoordinates:
    n = psi.n_qubits
    w = _weights(n)
    a = psi.amplitudes
    sums = np.bincount(w, weights=a.real, minlength=n + 1) + 1j * np.bincount(
        w, weights=a.imag, minlength=n + 1
    )
    coeffs = sums * _norms(n)
    sym = (coeffs * _norms(n))[w]
    residual = float(np.linalg.norm(a - sym))
    return DickeCoordinates(n, coeffs, residual)


def symmetrize(psi: StateVector) -> tuple[StateVector, float]:
    """Project onto the symmetric subspace.

    Returns the normalized projection and the squared norm of the
    unnormalized one.

    Raises
    ------
    ZeroProjectionError
        If the state has no symmetric component, e.g. the two-qubit singlet.
    """
    coords = to_dicke(psi)
    proj = coords.reconstruct()
    norm = float(np.linalg.norm(proj))
    if norm < ZERO_PROJECTION:
        raise ZeroProjectionError("state has no component in the symmetric subspace")
    return StateVector(psi.n_qubits, proj / norm), norm**2


def check_realizable(psi: StateVector, tolerance: float = DEFAULT_TOLERANCE) -> SymmetryReport:
    """Decide whether ``psi`` lies in the symmetric subspace up to ``tolerance``."""
    if not 0 < tolerance <= 0.1:
        raise DomainError(f"tolerance must lie in (0, 0.1], got {tolerance}")
    coords = to_dicke(psi)
    overlap = min(max(1.0 - coords.residual_norm**2, 0.0), 1.0)
    return SymmetryReport(psi.n_qubits, overlap, overlap >= 1.0 - tolerance, tolerance)


# --------------------------------------------------------------------------- #
# permutations and brute-force references


def permutation_parity(perm: Sequence[int]) -> int:
    """+1 for even, -1 for odd, counting transpositions via cycle decomposition."""
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def permutation_index_map(n: int, perm: Sequence[int]) -> np.ndarray:
    """Basis-index image of every index when cell contents move ``i -> perm[i]`` (0-based)."""
    idx = np.arange(2**n)
    out = np.zeros_like(idx)
    for src, dst in enumerate(perm):
        bit = (idx >> (n - 1 - src)) & 1
        out |= bit << (n - 1 - dst)
    return out


def permute_cells(psi: StateVector, perm: Sequence[int]) -> StateVector:
    """Move the content of cell i to cell perm[i] (0-based cell labels)."""
    n = psi.n_qubits
    if sorted(perm) != list(range(n)):
        raise DomainError(f"{perm} is not a permutation of 0..{n - 1}")
    amps = np.zeros_like(psi.amplitudes)
    amps[permutation_index_map(n, perm)] = psi.amplitudes
    return StateVector(n, amps)


def _pairwise_sum(terms: Iterable[np.ndarray]) -> np.ndarray:
    """Streaming pairwise (binary-tree) sum.

    Terms are merged like a binary counter: two partial sums of equal level
    are added as soon as both exist, and leftovers are folded from the
    newest to the oldest. The order depends only on the term count, so any
    producer yielding the same sequence gives bit-identical output.
    """
    stack: list[tuple[int, np.ndarray]] = []
    for t in terms:
        level, acc = 0, t
        while stack and stack[-1][0] == level:
            _, prev = stack.pop()
            acc = prev + acc
            level += 1
        stack.append((level, acc))
    if not stack:
        raise ValueError("nothing to sum")
    _, total = stack.pop()
    while stack:
        _, prev = stack.pop()
        total = prev + total
    return total


def _permutation_average(n: int, signed: bool) -> np.ndarray:
    _check_cap(n)
    if n > BRUTE_FORCE_MAX:
        raise SizeError(f"brute-force permutation sum limited to n <= {BRUTE_FORCE_MAX}, got {n}")
    d = 2**n
    cols = np.arange(d)

    def terms():
        for perm in itertools.permutations(range(n)):
            p = np.zeros((d, d))
            p[permutation_index_map(n, perm), cols] = permutation_parity(perm) if signed else 1.0
            yield p

    return _pairwise_sum(terms()) / math.factorial(n)


def symmetrizer_bruteforce(n: int) -> np.ndarray:
    """(1/n!) sum over all cell permutation matrices."""
    return _permutation_average(n, signed=False)


def antisymmetrizer_bruteforce(n: int) -> np.ndarray:
    """(1/n!) sum of sgn(pi) times each cell permutation matrix."""
    return _permutation_average(n, signed=True)


def numerical_rank(op: np.ndarray, threshold: float = 1e-8) -> int:
    """Count eigenvalues of a Hermitian operator above ``threshold`` in magnitude."""
    return int(np.sum(np.abs(np.linalg.eigvalsh(op)) > threshold))

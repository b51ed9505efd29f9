"""Dense state vectors and density matrices for small qubit registers.

Basis index convention: cell 1 is the most significant bit, so the
three-cell string ``|100>`` has index 4.
"""
from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CellIndexError, InvalidSpecError, ShapeError, SizeError

MAX_QUBITS = 12
ATOL = 1e-10

# Balanced single-qubit rotation R_y(pi/2): |0> -> (|0> + |1>)/sqrt(2).
_C = math.cos(math.pi / 4)
BALANCED_ROTATION = np.array([[_C, -_C], [_C, _C]], dtype=complex)


def _check_cap(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"qubit count must be an integer, got {type(n).__name__}")
    if n < 1:
        raise SizeError(f"qubit count must be >= 1, got {n}")
    if n > MAX_QUBITS:
        raise SizeError(f"{n} qubits exceeds the dense cap of {MAX_QUBITS}")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class QubitSpec:
    """Single-qubit parameters for ``alpha e^{i theta1}|0> + beta e^{i theta2}|1>``."""

    alpha: float
    beta: float
    theta1: float = 0.0
    theta2: float = 0.0

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise InvalidSpecError("alpha and beta must be non-negative; put signs in the phases")
        if abs(self.alpha**2 + self.beta**2 - 1.0) > ATOL:
            raise InvalidSpecError(
                f"alpha^2 + beta^2 = {self.alpha**2 + self.beta**2!r}, expected 1"
            )

    @classmethod
    def balanced(cls) -> "QubitSpec":
        s = 1.0 / math.sqrt(2.0)
        return cls(s, s, 0.0, 0.0)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized amplitude vector over the 2**n computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        _check_cap(self.n_qubits)
        amps = _frozen(self.amplitudes).reshape(-1)
        if amps.shape != (2**self.n_qubits,):
            raise ShapeError(
                f"expected {2**self.n_qubits} amplitudes for {self.n_qubits} qubits, got {amps.size}"
            )
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > ATOL:
            raise InvalidSpecError(f"state is not normalized: sum |c_x|^2 = {norm2!r}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @classmethod
    def from_amplitudes(cls, amplitudes: Sequence[complex]) -> "StateVector":
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        n = int(round(math.log2(amps.size))) if amps.size > 0 else 0
        if amps.size == 0 or 2**n != amps.size:
            raise ShapeError(f"amplitude count {amps.size} is not a power of two")
        return cls(n, amps)

    @classmethod
    def basis(cls, bits: str) -> "StateVector":
        """Computational basis state from a bit string such as ``"100"``."""
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        n = len(bits)
        _check_cap(n)
        amps = np.zeros(2**n, dtype=complex)
        amps[int(bits, 2)] = 1.0
        return cls(n, amps)

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits}, amplitudes={np.array2string(self.amplitudes, precision=4)})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite operator on n qubits.

    Set ``check_psd=False`` to skip the eigenvalue test for matrices that are
    positive by construction; hermiticity and trace are always checked.
    """

    n_qubits: int
    matrix: np.ndarray
    check_psd: InitVar[bool] = True

    def __post_init__(self, check_psd):
        _check_cap(self.n_qubits)
        m = _frozen(self.matrix)
        d = 2**self.n_qubits
        if m.shape != (d, d):
            raise ShapeError(f"expected a {d}x{d} matrix, got shape {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > ATOL:
            raise InvalidSpecError("matrix is not Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > ATOL:
            raise InvalidSpecError(f"trace is {tr!r}, expected 1")
        if check_psd:
            lo = np.linalg.eigvalsh(m)[0]
            if lo < -ATOL:
                raise InvalidSpecError(f"matrix has negative eigenvalue {lo!r}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def maximally_mixed(cls, n: int) -> "DensityMatrix":
        _check_cap(n)
        return cls(n, np.eye(2**n) / 2**n, check_psd=False)

    @classmethod
    def from_matrix(cls, matrix) -> "DensityMatrix":
        m = np.asarray(matrix, dtype=complex)
        n = int(round(math.log2(m.shape[0]))) if m.ndim == 2 and m.shape[0] > 0 else 0
        if m.ndim != 2 or 2**n != m.shape[0]:
            raise ShapeError(f"matrix side {m.shape} is not a power of two")
        return cls(n, m)


# --------------------------------------------------------------------------- #
# constructors


def make_qubit(spec: QubitSpec) -> StateVector:
    if not isinstance(spec, QubitSpec):
        raise InvalidSpecError("make_qubit expects a QubitSpec")
    amps = np.array(
        [spec.alpha * np.exp(1j * spec.theta1), spec.beta * np.exp(1j * spec.theta2)]
    )
    return StateVector(1, amps)


def all_zero(n: int) -> StateVector:
    """The register state |0...0>, amplitude vector (1, 0, ..., 0)."""
    _check_cap(n)
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 1.0
    return StateVector(n, amps)


def apply_single_qubit(psi: StateVector, gate: np.ndarray, cell: int) -> StateVector:
    """Apply a 2x2 unitary to one cell (1-based, cell 1 = most significant bit)."""
    n = psi.n_qubits
    if not 1 <= cell <= n:
        raise CellIndexError(f"cell {cell} outside 1..{n}")
    gate = np.asarray(gate, dtype=complex)
    if gate.shape != (2, 2):
        raise ShapeError(f"single-qubit gate must be 2x2, got {gate.shape}")
    t = psi.amplitudes.reshape((2,) * n)
    t = np.tensordot(gate, t, axes=([1], [cell - 1]))
    t = np.moveaxis(t, 0, cell - 1)
    return StateVector(n, t.reshape(-1))


def uniform(n: int) -> StateVector:
    """Equal superposition of all 2**n basis states.

    Built the long way round: the balanced rotation is applied to each cell
    of ``all_zero(n)`` in turn.
    """
    psi = all_zero(n)
    for cell in range(1, n + 1):
        psi = apply_single_qubit(psi, BALANCED_ROTATION, cell)
    return psi


def uniform_direct(n: int) -> StateVector:
    """Direct fill with 1/sqrt(2**n); reference for :func:`uniform`."""
    _check_cap(n)
    return StateVector(n, np.full(2**n, 1.0 / math.sqrt(2**n), dtype=complex))


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """Kronecker product with ``a`` occupying the leading cells."""
    n = a.n_qubits + b.n_qubits
    if n > MAX_QUBITS:
        raise SizeError(f"{n} qubits exceeds the dense cap of {MAX_QUBITS}")
    return StateVector(n, np.kron(a.amplitudes, b.amplitudes))


# --------------------------------------------------------------------------- #
# density matrices


def pure_density(psi: StateVector) -> DensityMatrix:
    return DensityMatrix(psi.n_qubits, np.outer(psi.amplitudes, psi.amplitudes.conj()), check_psd=False)


def product_density(parts: Iterable[DensityMatrix]) -> DensityMatrix:
    """Kronecker product of the parts in cell order."""
    parts = list(parts)
    if not parts:
        raise ValueError("product_density needs at least one part")
    n = sum(p.n_qubits for p in parts)
    if n > MAX_QUBITS:
        raise SizeError(f"{n} qubits exceeds the dense cap of {MAX_QUBITS}")
    m = parts[0].matrix
    for p in parts[1:]:
        m = np.kron(m, p.matrix)
    # Kronecker products of PSD matrices are PSD; tiny trace drift is renormalized.
    return DensityMatrix(n, m / np.trace(m).real, check_psd=False)


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Reduced state on the cells in ``keep`` (1-based), in ascending cell order."""
    n = rho.n_qubits
    keep = sorted(set(int(c) for c in keep))
    if not keep:
        raise CellIndexError("keep must name at least one cell")
    if keep[0] < 1 or keep[-1] > n:
        raise CellIndexError(f"cells {keep} outside 1..{n}")
    t = rho.matrix.reshape((2,) * (2 * n))
    row = list(range(n))
    col = [n + i for i in range(n)]
    for i in range(n):
        if i + 1 not in keep:
            col[i] = row[i]
    out = [row[c - 1] for c in keep] + [col[c - 1] for c in keep]
    reduced = np.einsum(t, row + col, out)
    d = 2 ** len(keep)
    return DensityMatrix(len(keep), reduced.reshape(d, d), check_psd=False)


def purity(rho: DensityMatrix) -> float:
    """trace(rho^2); equals 1 for pure states and 2**-n for the maximally mixed state."""
    m = rho.matrix
    # trace(rho rho) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho
    return float(np.sum(np.abs(m) ** 2))


def fidelity(psi: StateVector, rho: DensityMatrix) -> float:
    """<psi|rho|psi>."""
    if psi.dim != rho.dim:
        raise ShapeError(f"state has dimension {psi.dim}, density matrix {rho.dim}")
    v = psi.amplitudes
    f = float(np.vdot(v, rho.matrix @ v).real)
    return min(max(f, 0.0), 1.0)


def equal_up_to_phase(a: StateVector, b: StateVector, atol: float = ATOL) -> bool:
    """True when ``a = e^{i phi} b`` for some global phase, entrywise within ``atol``."""
    if a.dim != b.dim:
        return False
    overlap = np.vdot(b.amplitudes, a.amplitudes)
    if abs(overlap) < atol:
        return False
    phase = overlap / abs(overlap)
    return bool(np.max(np.abs(a.amplitudes - phase * b.amplitudes)) <= atol)

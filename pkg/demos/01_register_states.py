"""Register states: |0...0>, the rotation cascade, and product composition.

Run with ``python demos/01_register_states.py``.
"""
import math

import numpy as np

from qregstat import QubitSpec, StateVector, all_zero, make_qubit, tensor, uniform
from qregstat.statespace import BALANCED_ROTATION, apply_single_qubit

np.set_printoptions(precision=4, suppress=True)

# A single cell: alpha e^{i theta1}|0> + beta e^{i theta2}|1>
q = make_qubit(QubitSpec(math.cos(0.3), math.sin(0.3), 0.0, math.pi / 2))
print("one qubit:", q.amplitudes)

# The usual starting point and the cell-by-cell rotation into the uniform state
n = 3
psi = all_zero(n)
print(f"\n|{'0' * n}>:", psi.amplitudes.real)
for cell in range(1, n + 1):
    psi = apply_single_qubit(psi, BALANCED_ROTATION, cell)
    print(f"after rotating cell {cell}:", psi.amplitudes.real)
print("matches uniform(3):", np.allclose(psi.amplitudes, uniform(3).amplitudes))

# Cell 1 is the most significant bit
print("\n|1> (x) |0> =", tensor(StateVector.basis("1"), StateVector.basis("0")).amplitudes.real)

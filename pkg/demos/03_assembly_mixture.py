"""Independently prepared qubits brought together: purity, entropy and fidelity vs. visibility.

Run with ``python demos/03_assembly_mixture.py``.
"""
import numpy as np

from qregstat import assemble
from qregstat.assembly import balanced_sources

n = 3
print(f"{n} balanced sources, target = uniform({n})")
print("visibility  purity   entropy[bits]  fidelity")
for v in np.linspace(0.0, 1.0, 6):
    r = assemble(balanced_sources(n, v))
    print(f"{v:10.1f}  {r.purity:.4f}  {r.entropy_bits:13.4f}  {r.fidelity_to_target:.4f}")

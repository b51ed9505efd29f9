"""The 2**n product picture against the n+1 dimensional symmetric subspace.

Run with ``python demos/02_symmetric_subspace.py``.
"""
import numpy as np

from qregstat import (
    StateVector,
    check_realizable,
    dicke,
    partial_trace,
    pure_density,
    symmetric_dim,
    symmetrize,
    symmetrizer_bruteforce,
    to_dicke,
    uniform,
)
from qregstat.symmetry import numerical_rank

np.set_printoptions(precision=4, suppress=True)

# One excitation among three cells cannot be pinned to cell 1.
sym, overlap = symmetrize(StateVector.basis("100"))
print("symmetrized |100>:", sym.amplitudes.real)
print("weight of |100> inside the symmetric subspace:", round(overlap, 6))
print("equals dicke(3, 1):", np.allclose(sym.amplitudes, dicke(3, 1).amplitudes))

# Each cell carries a third of the excitation.
print("reduced state of cell 1:\n", partial_trace(pure_density(sym), {1}).matrix.real)

print("\n n   2**n   symmetric dim   rank of permutation average")
for n in range(1, 7):
    print(f"{n:2d} {2**n:6d} {symmetric_dim(n):15d} {numerical_rank(symmetrizer_bruteforce(n)):29d}")

print("\nrealizability checks (tolerance 1e-9):")
for label, psi in [
    ("uniform(4)", uniform(4)),
    ("dicke(4, 2)", dicke(4, 2)),
    ("|0110>", StateVector.basis("0110")),
]:
    r = check_realizable(psi)
    print(f"  {label:12s} overlap={r.overlap:.6f} realizable={r.realizable}")

print("\nuniform(4) in Dicke coordinates:", np.abs(to_dicke(uniform(4)).coeffs) ** 2)

"""Entropy drop n -> log2(n+1) and the energy it costs at a few temperatures.

Run with ``python demos/05_entropy_budget.py``.
"""
from qregstat import budget_for_register, compare_pictures

print(" n   delta[bits]   E(300 K) [J]   E(4 K) [J]   E(10 mK) [J]")
for n in (1, 2, 3, 5, 8, 12):
    row = [budget_for_register(n, t) for t in (300.0, 4.0, 0.01)]
    print(f"{n:2d}  {row[0].delta_bits:11.4f}  " + "  ".join(f"{b.energy:11.4e}" for b in row))

c = compare_pictures(3, visibility=0.5, temperature=300.0)
print("\nn=3, visibility 0.5, T=300 K")
print("  assembled register entropy [bits]:", round(c.assembly.entropy_bits, 4))
print("  counting-argument entropy drop [bits]:", c.budget.delta_bits)
print("  uniform(3) realizable:", c.symmetry.realizable)

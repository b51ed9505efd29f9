"""How many rounds until every cell has passed its preparation test?

Run with ``python demos/04_retry_delay.py``. Writes ``retry_histogram.csv``
next to the current working directory for plotting elsewhere.
"""
from pathlib import Path

from qregstat import PipelineConfig, delay_simulate
from qregstat.cli import histogram_csv

print(" n    p   mode            MC mean   analytic   SE")
for n in (1, 2, 5, 10):
    for p in (0.3, 0.9):
        for mode in ("parallel-retry", "sequential"):
            s = delay_simulate(PipelineConfig(n, p, mode, trials=50_000, seed=7))
            print(f"{n:2d}  {p:.1f}  {mode:14s} {s.mean_rounds:8.4f}  {s.analytic_mean:9.4f}  {s.standard_error:.4f}")

stats = delay_simulate(PipelineConfig(5, 0.5, trials=100_000, seed=42))
Path("retry_histogram.csv").write_text(histogram_csv(stats))
print("\nhistogram for n=5, p=0.5 written to retry_histogram.csv")

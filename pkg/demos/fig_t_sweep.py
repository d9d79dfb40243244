"""Scrambling speed versus temperature.

Sweeps the temperature of the initial thermal state at fixed D = 1. The
hotter the state, the more mixed it is (Tr rho^2 drops), and the less
quantum information there is to scramble: F(t) stays closer to 1 and
the scrambling time grows.

Run:  python3 demos/fig_t_sweep.py
"""

from dmscramble import ChainConfig, SweepSpec, TimeGrid, render_svg, run_sweep, write_csv

spec = SweepSpec(
    base=ChainConfig(n=6, d_strength=1.0),
    swept_parameter="temperature",
    values=(0.05, 0.5, 1.0, 2.0),
    grid=TimeGrid(t_start=0.0, t_end=10.0, steps=201),
    threshold=0.9,
)

result = run_sweep(spec)

print("temperature vs scrambling time and initial purity:")
for T, t_star, p in zip(spec.values, result.scrambling_times,
                        result.initial_purities):
    shown = "never crosses" if t_star is None else f"t* = {t_star:.3f}"
    print(f"  T = {T:4.2f}:  {shown}   Tr rho^2 = {p:.4f}")

write_csv(result, "t_sweep.csv")
render_svg(result, "t_sweep.svg")
print("wrote t_sweep.csv and t_sweep.svg")

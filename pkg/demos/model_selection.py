"""Which Hamiltonian should generate the time evolution?

Three candidates: the Ising chain alone, the DM chain alone, or their
sum. This script scores each against the two expected trends (faster
scrambling with stronger DM coupling, slower scrambling with higher
temperature) and prints the recommendation. Only the summed Hamiltonian
satisfies both at the default operating point, which is why it is the
shipped default.

Run:  python3 demos/model_selection.py   (about a minute)
"""

from dmscramble import ChainConfig, model_selection_report

report = model_selection_report()

print("model      faster with D   slower with T")
for row in report.rows:
    if row.error is not None:
        print(f"{row.model:<10} failed: {row.error}")
    else:
        print(f"{row.model:<10} {str(row.d_trend_ok):<15} {row.t_trend_ok}")
print(f"\nrecommended evolution model: {report.recommended}")
print(f"shipped default: {ChainConfig().evolution_model}")

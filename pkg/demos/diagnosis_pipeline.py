"""End-to-end decision run on the two expert tables.

Combines the tables (extended intersection), derives expectation-score
weights, aggregates each patient's row, and ranks.  The same data ships as
CSV in demos/data/, so the equivalent command line is:

    phisoft decide demos/data/table1.csv demos/data/table2.csv

Run:  python demos/diagnosis_pipeline.py
"""

from pathlib import Path

from phisoft import (
    DecisionConfig,
    Aggregator,
    decide,
    parse_csv,
    weights_from_importances,
)

DATA = Path(__file__).parent / "data"

expert_x = parse_csv((DATA / "table1.csv").read_bytes())
expert_y = parse_csv((DATA / "table2.csv").read_bytes())

# ---------------------------------------------------------------------------
# Step 2 preview: the combined importances drive the weights.

report = decide(expert_x, expert_y)
combined = report.combined
print("combined symptoms:", ", ".join(combined.parameter_names))
weights = weights_from_importances(combined.parameters)
for p, w in zip(combined.parameters, weights):
    print(f"  weight({p.name}) = {w:.8f}   from importance "
          f"({p.importance.m:.1f}, {p.importance.n:.1f})")

# ---------------------------------------------------------------------------
# Steps 3-5: aggregated decision values, measures, ranking.

print("\nper-patient measures:")
print(f"{'id':<4} {'apfdv':<22} {'ES':>9} {'SF':>9} {'AF':>9}  rank")
for row in report.rows:
    apfdv = f"({row.apfdv.m:.4f}, {row.apfdv.n:.4f})"
    print(f"{row.alternative:<4} {apfdv:<22} {row.es:9.4f} {row.sf:9.4f} "
          f"{row.af:9.4f}  {row.rank:>4}")

print("\nranking:", " > ".join(report.ranking()))
print("optimal:", report.optimal())

# The p1/p2 call is tight: about 0.001 of expectation score.
margin = report.row("p1").es - report.row("p2").es
print(f"p1 over p2 margin: {margin:.6f}")

# ---------------------------------------------------------------------------
# The linear aggregator is available as an alternative reading of the
# weighted average; on this data it agrees on the winner.

linear = decide(expert_x, expert_y, DecisionConfig(aggregator=Aggregator.LINEAR))
print("\nlinear-aggregator ranking:", " > ".join(linear.ranking()))

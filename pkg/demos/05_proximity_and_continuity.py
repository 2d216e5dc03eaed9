"""
Two stability impossibilities: proximity and continuity
========================================================

Stability would mean close inputs give close outputs. For ordinal
rules the audit finds profiles where an input that is no farther
away lands strictly farther in outcome space. For the spherical
mean-direction aggregator the failure is sharper: an arbitrarily
small input change can flip the output to the opposite pole.
"""

from foldvote.audit import AxiomId, audit, exhaustive, standard_rules

rules = standard_rules()

print("proximity preservation, exhaustive m=3 n=3:")
for name in ("may", "borda", "kemeny"):
    res = audit(rules[name], AxiomId.PROXIMITY_PRESERVATION, exhaustive(3, 3))
    w = res.witness
    print(
        f"  {name}: input distances {w['D_near']} <= {w['D_far']} "
        f"yet output distances {w['d_near']} > {w['d_far']}"
    )
print(f"  note: {res.notes}")

# the continuity failure is constructed, not searched: two profiles
# straddling an antipodal configuration
from foldvote.directions import continuity_probe

print("\nmean-direction discontinuity:")
for eps in (1e-3, 1e-6, 1e-9):
    w = continuity_probe(dimension=2, epsilon=eps)
    print(
        f"  epsilon {eps:.0e}: inputs {w.input_distance:.2e} apart, "
        f"outputs {w.output_distance:.4f} apart  "
        f"(re-verified: {w.verify()})"
    )

# away from the antipode the aggregator is perfectly well behaved
from foldvote.directions import DirectionPoint, aggregate_directions

a = DirectionPoint((1.0, 0.0))
b = DirectionPoint((0.0, 1.0))
out = aggregate_directions([a, b])
print(f"\nmean of east and north: ({out.coordinates[0]:.4f}, {out.coordinates[1]:.4f})")

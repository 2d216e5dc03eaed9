"""
Two characterizations: counting votes and summing utilities
============================================================

Majority rule is the unique pairwise method satisfying unanimity,
anonymity, neutrality, and positive responsiveness; the coincidence
check audits those premises and then confirms the count formula on
sampled profiles. Summing utilities is likewise pinned down by
utility-level independence plus strict unanimity, and is invariant
under shared rescaling with per-protein offsets.
"""

from foldvote.audit import may_coincidence_check, standard_rules

rules = standard_rules()

print("premise audit + coincidence sampling:")
for name in ("may", "borda", "dictator"):
    res = may_coincidence_check(rules[name], m=3, n=3, trials=2000, seed=0)
    if res.verdict == "pass_within_search":
        print(f"  {name}: coincides with the majority count formula")
    else:
        print(f"  {name}: fails the {res.axiom.value} premise first")

# utilitarian aggregation over explicit utility vectors
from foldvote.preferences import UtilityVector
from foldvote.profiles import Profile, synthetic_universe
from foldvote.rules import UtilityTransform, apply_transform, utilitarian

u = synthetic_universe(3)
profile = Profile(
    u,
    (
        UtilityVector("lysozyme", u, dict(zip(u, (2.0, 1.0, 0.0)))),
        UtilityVector("myoglobin", u, dict(zip(u, (0.0, 3.0, 1.0)))),
    ),
    mode="utility",
)
out = utilitarian(profile)
print(f"\nsummed ranking: {[[c.render() for c in t] for t in out.ranking.tiers]}")

# rescale everything by 10 and shift each protein separately: the
# ranking cannot move, which is exactly what makes the sums meaningful
moved = apply_transform(
    profile, UtilityTransform(10.0, {"lysozyme": -5.0, "myoglobin": 2.5})
)
assert utilitarian(moved).ranking.tiers == out.ranking.tiers
print("ranking unchanged under alpha=10 with per-protein offsets")

# strict unanimity audited exhaustively over the rational grid
from foldvote.audit import AxiomId, audit, exhaustive

res = audit(rules["utilitarian"], AxiomId.STRICT_UNANIMITY, exhaustive(3, 2))
print(f"strict unanimity: {res.verdict} ({res.search_budget})")

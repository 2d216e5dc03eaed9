"""
Auditing rules against the classical axiom set
===============================================

Each aggregation rule is treated as a black box and searched,
exhaustively over small profile spaces, for axiom violations. The
classical impossibility result says no rule can satisfy all of them;
the audit makes that concrete by returning the violating profile as
a machine-checkable witness.
"""

from foldvote.audit import arrow_audit, standard_rules, verify_result

rules = standard_rules()

for name in ("may", "borda", "kemeny", "dictator"):
    rule = rules[name]
    results = arrow_audit(rule, m=3, n=3)
    print(f"\n{name}:")
    for r in results:
        mark = "FAIL" if r.failed else "pass"
        print(f"  {r.axiom.value:<20} {mark}")
        if r.failed:
            # every fail carries a witness; re-run the rule to confirm
            assert verify_result(rule, r)

# the may_rule transitivity witness is the cycle template itself
from foldvote.audit import AxiomId, audit, exhaustive

res = audit(rules["may"], AxiomId.TRANSITIVITY, exhaustive(3, 3))
print("\nmajority's transitivity witness (first in lexicographic order):")
for ind in res.witness["profile"]["individuals"]:
    order = " > ".join(c for tier in ind["tiers"] for c in tier)
    print(f"  {ind['owner']}: {order}")
print(f"violating triple: {res.witness['violating_triple']}")
print(f"searched: {res.search_budget}")

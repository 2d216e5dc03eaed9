"""Protein-contact preference construction and social-choice aggregation.

The package splits into a structural side (PDB parsing, contact
extraction, utility vectors, rankings) and a collective side (voting
rules over profiles, axiom audits with machine-checkable witnesses,
domain restrictions, and the spherical continuity probe).

Submodule attributes load lazily so that light command paths do not pay
for the numeric stack.
"""

from __future__ import annotations

from importlib import import_module

__version__ = "0.1.0"

# public name -> defining submodule
_EXPORTS = {
    # errors
    "FoldvoteError": "errors",
    "BudgetExceeded": "errors",
    "InapplicableAxiom": "errors",
    # structure side
    "parse_pdb": "pdb",
    "ProteinStructure": "pdb",
    "residue_distance": "pdb",
    "InteractionClass": "contacts",
    "InteractionInstance": "contacts",
    "ContactConfig": "contacts",
    "Scorer": "contacts",
    "class_universe": "contacts",
    "extract_instances": "contacts",
    "load_score_table": "contacts",
    "parse_score_table": "contacts",
    "UtilityVector": "preferences",
    "RankingWithTies": "preferences",
    "utility_from_instances": "preferences",
    "ordinal_from_utility": "preferences",
    # collective side
    "Profile": "profiles",
    "SynthSpec": "profiles",
    "generate": "profiles",
    "kendall_distance": "profiles",
    "profile_distance": "profiles",
    "synthetic_universe": "profiles",
    "AggregationOutcome": "rules",
    "UtilityTransform": "rules",
    "apply_transform": "rules",
    "borda": "rules",
    "dictator": "rules",
    "kemeny": "rules",
    "may_rule": "rules",
    "outcome_distance": "rules",
    "utilitarian": "rules",
    "AuditResult": "audit",
    "AxiomId": "audit",
    "Rule": "audit",
    "arrow_audit": "audit",
    "exhaustive": "audit",
    "may_coincidence_check": "audit",
    "sampled": "audit",
    "standard_rules": "audit",
    "verify_result": "audit",
    "find_axis": "restrictions",
    "is_quasi_transitive": "restrictions",
    "is_single_peaked_on": "restrictions",
    "DirectionPoint": "directions",
    "DiscontinuityWitness": "directions",
    "aggregate_directions": "directions",
    "continuity_probe": "directions",
    "direction_from_utility": "directions",
}

__all__ = sorted(_EXPORTS)


def __getattr__(name: str):
    submodule = _EXPORTS.get(name)
    if submodule is None:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    module = import_module(f".{submodule}", __name__)
    value = getattr(module, name)
    globals()[name] = value  # cache for next access
    return value


def __dir__():
    return sorted(set(globals()) | set(__all__))

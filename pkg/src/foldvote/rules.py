"""Rules that aggregate a profile into one global preference.

Every ordinal rule returns an AggregationOutcome wrapping the complete
pairwise weak relation it decided, a transitivity flag, a ranking when
the relation is a total preorder, and a cycle witness when it is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations

from .contacts import InteractionClass
from .errors import BadIndex, TooLarge, WrongMode
from .preferences import RankingWithTies, Universe, UtilityVector
from .profiles import Profile

KEMENY_MAX_CLASSES = 8

Relation = tuple[tuple[bool, ...], ...]  # weak preference, row >= column


@dataclass(frozen=True)
class Tournament:
    universe: Universe
    counts: tuple[tuple[int, ...], ...]  # counts[i][j] = #{strictly prefer i to j}


@dataclass(frozen=True)
class AggregationOutcome:
    rule_name: str
    universe: Universe
    relation: Relation
    transitive: bool
    ranking: RankingWithTies | None
    cycle_witness: tuple[InteractionClass, ...] | None

    def pair_value(self, i: int, j: int) -> float:
        """1.0 if class i beats class j, 0.0 if beaten, 0.5 on a tie."""
        fwd, back = self.relation[i][j], self.relation[j][i]
        if fwd and back:
            return 0.5
        return 1.0 if fwd else 0.0

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule_name,
            "universe": [c.render() for c in self.universe],
            "transitive": self.transitive,
            "tiers": (
                [[c.render() for c in t] for t in self.ranking.tiers]
                if self.ranking is not None
                else None
            ),
            "cycle_witness": (
                [c.render() for c in self.cycle_witness]
                if self.cycle_witness is not None
                else None
            ),
        }


@dataclass(frozen=True)
class UtilityTransform:
    """Shared positive rescaling plus per-protein offsets."""

    scale_alpha: float
    offsets_beta: dict[str, float]

    def __post_init__(self) -> None:
        if self.scale_alpha <= 0:
            raise ValueError("scale_alpha must be positive")


def is_transitive(relation: Relation) -> bool:
    m = len(relation)
    for i in range(m):
        for j in range(m):
            if i == j or not relation[i][j]:
                continue
            row_i, row_j = relation[i], relation[j]
            for k in range(m):
                if row_j[k] and not row_i[k]:
                    return False
    return True


def _cycle_witness(
    universe: Universe, relation: Relation
) -> tuple[InteractionClass, ...]:
    """Lexicographically first triple (x, y, z) with x >= y >= z yet z > x
    strictly; every intransitivity of a complete relation contains one."""
    m = len(universe)
    for i in range(m):
        for j in range(m):
            if i == j or not relation[i][j]:
                continue
            for k in range(m):
                if k in (i, j):
                    continue
                if relation[j][k] and not relation[i][k] and relation[k][i]:
                    return (universe[i], universe[j], universe[k])
    raise AssertionError("no witness in an intransitive relation")


def _ranking_from_relation(
    rule_name: str, universe: Universe, relation: Relation
) -> RankingWithTies:
    # For a complete transitive relation, classes strictly dominating the
    # same number of others form exactly the indifference tiers.
    m = len(universe)
    dom = [
        sum(1 for j in range(m) if j != i and relation[i][j] and not relation[j][i])
        for i in range(m)
    ]
    tiers: dict[int, list[InteractionClass]] = {}
    for i, cls in enumerate(universe):
        tiers.setdefault(dom[i], []).append(cls)
    ordered = tuple(
        tuple(tiers[score]) for score in sorted(tiers, reverse=True)
    )
    return RankingWithTies(owner=rule_name, universe=universe, tiers=ordered)


def outcome_from_relation(
    rule_name: str, universe: Universe, relation: Relation
) -> AggregationOutcome:
    transitive = is_transitive(relation)
    return AggregationOutcome(
        rule_name=rule_name,
        universe=universe,
        relation=relation,
        transitive=transitive,
        ranking=(
            _ranking_from_relation(rule_name, universe, relation)
            if transitive
            else None
        ),
        cycle_witness=None if transitive else _cycle_witness(universe, relation),
    )


def outcome_from_ranking(rule_name: str, ranking: RankingWithTies) -> AggregationOutcome:
    pos = ranking.positions()
    universe = ranking.universe
    relation = tuple(
        tuple(pos[a] <= pos[b] for b in universe) for a in universe
    )
    return AggregationOutcome(
        rule_name=rule_name,
        universe=universe,
        relation=relation,
        transitive=True,
        ranking=ranking,
        cycle_witness=None,
    )


def outcome_distance(a: AggregationOutcome, b: AggregationOutcome) -> float:
    """Kendall distance extended to outcome relations, transitive or not."""
    if a.universe != b.universe:
        raise WrongMode("outcomes over different universes")
    m = len(a.universe)
    return sum(
        abs(a.pair_value(i, j) - b.pair_value(i, j))
        for i, j in combinations(range(m), 2)
    )


def _require_mode(profile: Profile, mode: str, rule_name: str) -> None:
    if profile.mode != mode:
        raise WrongMode(f"{rule_name} needs a {mode} profile, got {profile.mode}")


def majority_tournament(profile: Profile) -> Tournament:
    """Pairwise strict-preference counts N(a > b) over the profile."""
    _require_mode(profile, "ordinal", "majority_tournament")
    universe = profile.universe
    m = len(universe)
    counts = [[0] * m for _ in range(m)]
    for ind in profile.individuals:
        pos = ind.positions()
        for i in range(m):
            for j in range(m):
                if i != j and pos[universe[i]] < pos[universe[j]]:
                    counts[i][j] += 1
    return Tournament(universe, tuple(tuple(row) for row in counts))


def may_rule(profile: Profile) -> AggregationOutcome:
    """Simple pairwise majority: a weakly beats b when at least as many
    individuals strictly prefer a to b as prefer b to a."""
    tournament = majority_tournament(profile)
    counts = tournament.counts
    m = len(tournament.universe)
    relation = tuple(
        tuple(i != j and counts[i][j] >= counts[j][i] or i == j for j in range(m))
        for i in range(m)
    )
    return outcome_from_relation("may", tournament.universe, relation)


def _borda_scores(profile: Profile) -> dict[InteractionClass, float]:
    scores = {c: 0.0 for c in profile.universe}
    for ind in profile.individuals:
        below = len(profile.universe)
        for tier in ind.tiers:
            below -= len(tier)
            # ties share the midpoint of the positions the tier spans
            tier_score = below + (len(tier) - 1) / 2.0
            for cls in tier:
                scores[cls] += tier_score
    return scores


def borda(profile: Profile) -> AggregationOutcome:
    """Positional scoring: each class earns the count of classes strictly
    below it per individual, ties sharing the midpoint; sums rank."""
    _require_mode(profile, "ordinal", "borda")
    scores = _borda_scores(profile)
    return _outcome_from_scores("borda", profile.universe, scores)


def _outcome_from_scores(
    rule_name: str, universe: Universe, scores: dict[InteractionClass, float]
) -> AggregationOutcome:
    tiers: dict[float, list[InteractionClass]] = {}
    for cls in universe:
        tiers.setdefault(scores[cls], []).append(cls)
    ordered = tuple(tuple(tiers[s]) for s in sorted(tiers, reverse=True))
    ranking = RankingWithTies(owner=rule_name, universe=universe, tiers=ordered)
    return outcome_from_ranking(rule_name, ranking)


def kemeny(profile: Profile) -> AggregationOutcome:
    """Strict order minimizing total Kendall distance to the profile.

    Exhaustive over all orders (class count capped at 8); among distance
    ties the lexicographically first order wins, so the result is
    deterministic but deliberately not neutral on tie profiles.
    """
    _require_mode(profile, "ordinal", "kemeny")
    universe = profile.universe
    m = len(universe)
    if m > KEMENY_MAX_CLASSES:
        raise TooLarge(f"kemeny supports at most {KEMENY_MAX_CLASSES} classes")
    pairs = list(combinations(range(m), 2))
    # pair values per individual, aligned with `pairs`
    ind_values = [
        [ind.pair_value(universe[i], universe[j]) for i, j in pairs]
        for ind in profile.individuals
    ]
    best_order = None
    best_total = math.inf
    for cand in permutations(range(m)):
        pos = [0] * m
        for rank, cls_idx in enumerate(cand):
            pos[cls_idx] = rank
        total = 0.0
        for values in ind_values:
            for (i, j), v in zip(pairs, values):
                cand_v = 1.0 if pos[i] < pos[j] else 0.0
                total += abs(cand_v - v)
        if total < best_total:
            best_total = total
            best_order = cand
    assert best_order is not None
    ranking = RankingWithTies.from_strict_order(
        "kemeny", universe, tuple(universe[i] for i in best_order)
    )
    return outcome_from_ranking("kemeny", ranking)


def dictator(profile: Profile, k: int) -> AggregationOutcome:
    """Copy individual k's ranking (1-based); a negative control rule."""
    _require_mode(profile, "ordinal", "dictator")
    if not 1 <= k <= profile.n:
        raise BadIndex(f"dictator index {k} outside 1..{profile.n}")
    chosen = profile.individuals[k - 1]
    ranking = RankingWithTies(
        owner=f"dictator[{k}]", universe=profile.universe, tiers=chosen.tiers
    )
    return outcome_from_ranking(f"dictator[{k}]", ranking)


def utilitarian(profile: Profile) -> AggregationOutcome:
    """Rank classes by the sum of individual utilities.

    Sums use math.fsum, so the outcome is exactly invariant under
    individual reordering.
    """
    _require_mode(profile, "utility", "utilitarian")
    totals = {
        cls: math.fsum(ind.values[cls] for ind in profile.individuals)
        for cls in profile.universe
    }
    return _outcome_from_scores("utilitarian", profile.universe, totals)


def apply_transform(profile: Profile, transform: UtilityTransform) -> Profile:
    """Rescale every utility by the shared alpha and shift each protein
    by its own beta; such transforms must not change the utilitarian
    outcome."""
    _require_mode(profile, "utility", "apply_transform")
    individuals = []
    for ind in profile.individuals:
        beta = transform.offsets_beta.get(ind.protein_id, 0.0)
        individuals.append(
            UtilityVector(
                protein_id=ind.protein_id,
                universe=ind.universe,
                values={
                    c: transform.scale_alpha * v + beta
                    for c, v in ind.values.items()
                },
            )
        )
    return Profile(profile.universe, tuple(individuals), "utility")

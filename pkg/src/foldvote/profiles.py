"""Profiles of per-protein preferences and distances between them.

The ranking distance is Kendall tau generalized to ties: oppositely
ordered pairs count 1, pairs tied in exactly one ranking count 1/2.
Summed over aligned individuals it gives the profile distance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .contacts import InteractionClass, class_universe
from .errors import BadSpec, Incompatible, UniverseMismatch
from .preferences import RankingWithTies, Universe, UtilityVector

SYNTH_KINDS = ("impartial_culture", "single_peaked", "condorcet_cycle", "custom")

# Seeded randomness uses the stdlib Mersenne Twister (random.Random) with
# the in-repo Fisher-Yates shuffle below, so generated profiles are
# reproducible across platforms and sessions for a fixed seed.


def _fisher_yates(rng: random.Random, items: list) -> list:
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = rng.randrange(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


@dataclass(frozen=True)
class Profile:
    universe: Universe
    individuals: tuple
    mode: str = "ordinal"  # "ordinal" | "utility"

    def __post_init__(self) -> None:
        if self.mode not in ("ordinal", "utility"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if len(self.individuals) < 2:
            raise ValueError("a profile needs at least 2 individuals")
        want = RankingWithTies if self.mode == "ordinal" else UtilityVector
        for ind in self.individuals:
            if not isinstance(ind, want):
                raise ValueError(
                    f"{self.mode} profile holds a {type(ind).__name__}"
                )
            if ind.universe != self.universe:
                raise UniverseMismatch("individual universe differs from profile")

    @property
    def n(self) -> int:
        return len(self.individuals)

    @property
    def m(self) -> int:
        return len(self.universe)

    def to_json_dict(self) -> dict:
        individuals = []
        for ind in self.individuals:
            if self.mode == "ordinal":
                individuals.append(
                    {
                        "owner": ind.owner,
                        "tiers": [[c.render() for c in t] for t in ind.tiers],
                    }
                )
            else:
                individuals.append(
                    {
                        "owner": ind.protein_id,
                        "values": {
                            c.render(): ind.values[c] for c in self.universe
                        },
                    }
                )
        return {
            "universe": [c.render() for c in self.universe],
            "mode": self.mode,
            "individuals": individuals,
        }

    @staticmethod
    def from_json_dict(obj: dict) -> Profile:
        universe = tuple(InteractionClass.parse(c) for c in obj["universe"])
        mode = obj.get("mode", "ordinal")
        individuals = []
        for ind in obj["individuals"]:
            if mode == "ordinal":
                tiers = tuple(
                    tuple(InteractionClass.parse(c) for c in t)
                    for t in ind["tiers"]
                )
                individuals.append(RankingWithTies(ind["owner"], universe, tiers))
            else:
                values = {
                    InteractionClass.parse(c): float(v)
                    for c, v in ind["values"].items()
                }
                individuals.append(UtilityVector(ind["owner"], universe, values))
        return Profile(universe, tuple(individuals), mode)


def kendall_distance(a: RankingWithTies, b: RankingWithTies) -> float:
    """Tie-aware Kendall tau distance between two rankings.

    Each unordered class pair contributes |v_a - v_b| where v is 1, 1/2,
    or 0 for preferred / tied / dispreferred; so opposite strict orders
    contribute 1 and a tie against a strict order contributes 1/2.
    Contributions are halves, so float sums stay exact.
    """
    if a.universe != b.universe:
        raise UniverseMismatch("rankings over different universes")
    total = 0.0
    for x, y in combinations(a.universe, 2):
        total += abs(a.pair_value(x, y) - b.pair_value(x, y))
    return total


def profile_distance(a: Profile, b: Profile) -> float:
    """Sum of Kendall distances between aligned individuals."""
    if a.mode != "ordinal" or b.mode != "ordinal":
        raise Incompatible("profile distance is defined for ordinal profiles")
    if a.n != b.n:
        raise Incompatible(f"profile sizes differ: {a.n} vs {b.n}")
    if a.universe != b.universe:
        raise Incompatible("profiles over different universes")
    return sum(
        kendall_distance(ra, rb) for ra, rb in zip(a.individuals, b.individuals)
    )


@dataclass(frozen=True)
class SynthSpec:
    kind: str
    m: int
    n: int
    seed: int = 0


def synthetic_universe(m: int) -> Universe:
    """First m interaction classes of the full 210-class universe."""
    full = class_universe(include_homopairs=True)
    if not 1 <= m <= len(full):
        raise BadSpec(f"m must be in 1..{len(full)}, got {m}")
    return full[:m]


def generate(spec: SynthSpec) -> Profile:
    """Deterministically generate a synthetic ordinal profile.

    Kinds: impartial_culture (uniform strict orders), single_peaked
    (strict orders single-peaked on a seeded random axis), and
    condorcet_cycle (the classic 3-template rotation, n must be a
    multiple of 3). Same spec, same profile.
    """
    if spec.kind not in SYNTH_KINDS:
        raise BadSpec(f"unknown kind {spec.kind!r}")
    if spec.kind == "custom":
        raise BadSpec("custom profiles are constructed directly, not generated")
    if spec.n < 2:
        raise BadSpec("n must be >= 2")
    universe = synthetic_universe(spec.m)
    rng = random.Random(spec.seed)
    owners = [f"v{i + 1}" for i in range(spec.n)]

    if spec.kind == "condorcet_cycle":
        if spec.m < 3:
            raise BadSpec("condorcet_cycle needs m >= 3")
        if spec.n % 3 != 0:
            raise BadSpec("condorcet_cycle needs n divisible by 3")
        trio = list(universe[:3])
        rest = list(universe[3:])
        templates = [
            trio + rest,
            trio[1:] + trio[:1] + rest,
            trio[2:] + trio[:2] + rest,
        ]
        orders = [templates[i % 3] for i in range(spec.n)]
    elif spec.kind == "impartial_culture":
        orders = [_fisher_yates(rng, list(universe)) for _ in range(spec.n)]
    else:  # single_peaked
        axis = _fisher_yates(rng, list(universe))
        orders = [_single_peaked_order(rng, axis) for _ in range(spec.n)]

    individuals = tuple(
        RankingWithTies.from_strict_order(owner, universe, tuple(order))
        for owner, order in zip(owners, orders)
    )
    return Profile(universe, individuals, "ordinal")


def _single_peaked_order(rng: random.Random, axis: list) -> list:
    """A strict order single-peaked on the axis: walk out from a random
    peak, taking the nearer-left or nearer-right frontier at random."""
    m = len(axis)
    peak = rng.randrange(m)
    order = [axis[peak]]
    left, right = peak - 1, peak + 1
    while left >= 0 or right < m:
        if left < 0:
            take_right = True
        elif right >= m:
            take_right = False
        else:
            take_right = rng.randrange(2) == 1
        if take_right:
            order.append(axis[right])
            right += 1
        else:
            order.append(axis[left])
            left -= 1
    return order

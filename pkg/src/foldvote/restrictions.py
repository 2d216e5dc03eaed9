"""Structured-domain escape checks: single-peakedness and quasi-transitivity.

A profile that is single-peaked on some axis sidesteps majority cycles
(odd panels get a transitive majority relation via the median positions),
and an outcome whose strict part is transitive is still usable for
choice even when indifference chains are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .contacts import InteractionClass
from .errors import TiesUnsupported, TooLarge
from .profiles import Profile
from .rules import AggregationOutcome

Axis = tuple[InteractionClass, ...]

FIND_AXIS_MAX_CLASSES = 8


@dataclass(frozen=True)
class SinglePeakedReport:
    single_peaked: bool
    # one entry per violating individual: owner plus the witnessing
    # valley (a class less preferred than classes on both of its sides)
    violations: tuple[dict, ...]

    def __bool__(self) -> bool:
        return self.single_peaked


def _preference_heights(profile: Profile, axis: Axis) -> list[tuple[str, list[int]]]:
    if profile.mode != "ordinal":
        raise TiesUnsupported("single-peakedness is defined for ordinal profiles")
    if tuple(sorted(axis)) != tuple(sorted(profile.universe)):
        raise ValueError("axis must be a permutation of the profile universe")
    rows = []
    for ind in profile.individuals:
        if not ind.is_strict:
            raise TiesUnsupported(f"individual {ind.owner!r} has tied classes")
        pos = ind.positions()
        rows.append((ind.owner, [len(axis) - pos[c] for c in axis]))
    return rows


def _first_valley(heights: list[int]) -> tuple[int, int, int] | None:
    m = len(heights)
    for j in range(1, m - 1):
        left = next((i for i in range(j) if heights[i] > heights[j]), None)
        if left is None:
            continue
        right = next((k for k in range(j + 1, m) if heights[k] > heights[j]), None)
        if right is not None:
            return left, j, right
    return None


def is_single_peaked_on(profile: Profile, axis: Axis) -> SinglePeakedReport:
    """Check every individual's preference for unimodality along axis.

    Strict orders only. A violation is a valley: some class on the axis
    with a strictly more preferred class on each side of it.
    """
    violations = []
    for owner, heights in _preference_heights(profile, axis):
        valley = _first_valley(heights)
        if valley is not None:
            i, j, k = valley
            violations.append(
                {
                    "owner": owner,
                    "valley": axis[j].render(),
                    "higher_left": axis[i].render(),
                    "higher_right": axis[k].render(),
                }
            )
    return SinglePeakedReport(not violations, tuple(violations))


def find_axis(profile: Profile) -> Axis | None:
    """First axis (lexicographic order) on which the profile is
    single-peaked, or None. Brute force, so the universe is capped."""
    m = profile.m
    if m > FIND_AXIS_MAX_CLASSES:
        raise TooLarge(
            f"axis search enumerates m! arrangements; m={m} exceeds "
            f"{FIND_AXIS_MAX_CLASSES}"
        )
    # validate strictness once up front so the error does not depend on
    # how early the axis scan fails
    _preference_heights(profile, profile.universe)
    for axis in permutations(sorted(profile.universe)):
        if is_single_peaked_on(profile, axis).single_peaked:
            return axis
    return None


def is_quasi_transitive(outcome: AggregationOutcome) -> bool:
    """True iff the strict part of the outcome relation is transitive;
    intransitive indifference is allowed."""
    relation = outcome.relation
    m = len(relation)

    def strict(i: int, j: int) -> bool:
        return relation[i][j] and not relation[j][i]

    for i in range(m):
        for j in range(m):
            if i != j and strict(i, j):
                for k in range(m):
                    if k not in (i, j) and strict(j, k) and not strict(i, k):
                        return False
    return True

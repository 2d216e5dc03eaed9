"""Residue contact extraction and interaction-class scoring.

An interaction class is an unordered pair of one-letter residue codes;
a contact instance is a concrete residue pair at spatial distance below
a threshold, labeled with its class and a score.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .aminoacids import LETTER_INDEX, ONE_LETTER
from .errors import BadTable, MissingAtom
from .pdb import DISTANCE_MODES, ProteinStructure, residue_distance


@dataclass(frozen=True, order=True)
class InteractionClass:
    """Unordered residue-type pair, stored canonically (first <= second)."""

    first: str
    second: str

    @staticmethod
    def of(a: str, b: str) -> InteractionClass:
        if a not in LETTER_INDEX or b not in LETTER_INDEX:
            raise ValueError(f"not standard residue codes: {a!r}, {b!r}")
        if a > b:
            a, b = b, a
        return InteractionClass(a, b)

    def render(self) -> str:
        return f"{self.first}-{self.second}"

    @staticmethod
    def parse(text: str) -> InteractionClass:
        a, sep, b = text.partition("-")
        if not sep:
            raise ValueError(f"not a class label: {text!r}")
        return InteractionClass.of(a, b)


@dataclass(frozen=True)
class ContactConfig:
    threshold_tau: float = 8.0
    mode: str = "c_alpha"
    min_seq_separation: int = 3
    cross_chain: bool = False

    def __post_init__(self) -> None:
        if self.threshold_tau <= 0:
            raise ValueError("threshold_tau must be positive")
        if self.mode not in DISTANCE_MODES:
            raise ValueError(f"unknown distance mode {self.mode!r}")
        if self.min_seq_separation < 0:
            raise ValueError("min_seq_separation must be >= 0")


@dataclass(frozen=True)
class InteractionInstance:
    protein_id: str
    interaction_class: InteractionClass
    residues: tuple[tuple[str, int], tuple[str, int]]  # ((chain, seq), (chain, seq))
    distance: float
    score: float


@dataclass(frozen=True, eq=False)
class Scorer:
    """Scores an interaction class: unit counting or a 20x20 table lookup."""

    kind: str = "unit_count"  # "unit_count" | "table"
    table: np.ndarray | None = None  # indexed by ONE_LETTER order
    negate: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("unit_count", "table"):
            raise ValueError(f"unknown scorer kind {self.kind!r}")
        if self.kind == "table" and self.table is None:
            raise ValueError("table scorer needs a table")

    def score(self, cls: InteractionClass) -> float:
        if self.kind == "unit_count":
            raw = 1.0
        else:
            assert self.table is not None
            raw = float(
                self.table[LETTER_INDEX[cls.first], LETTER_INDEX[cls.second]]
            )
        return -raw if self.negate else raw


def class_universe(include_homopairs: bool = True) -> tuple[InteractionClass, ...]:
    """All interaction classes in lexicographic order.

    210 classes with homopairs, 190 without.
    """
    out = []
    for i, a in enumerate(ONE_LETTER):
        for b in ONE_LETTER[i:]:
            if a == b and not include_homopairs:
                continue
            out.append(InteractionClass(a, b))
    return tuple(out)


def parse_score_table(text: str, negate: bool = True) -> Scorer:
    """Parse a 20x20 symmetric score table from CSV text.

    Expected layout: header row of one-letter codes (leading empty cell),
    then 20 rows each starting with its code. Asymmetry beyond 1e-9 or
    any dimension/label problem raises BadTable.
    """
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows:
        raise BadTable("empty table")
    header = [c.strip() for c in rows[0][1:]]
    if sorted(header) != sorted(ONE_LETTER) or len(header) != 20:
        raise BadTable(f"header must hold the 20 residue codes, got {header}")
    if len(rows) != 21:
        raise BadTable(f"expected 20 data rows, got {len(rows) - 1}")
    table = np.full((20, 20), np.nan)
    seen = set()
    for row in rows[1:]:
        label = row[0].strip()
        if label not in LETTER_INDEX or label in seen:
            raise BadTable(f"bad or repeated row label {label!r}")
        seen.add(label)
        if len(row) != 21:
            raise BadTable(f"row {label} has {len(row) - 1} values, expected 20")
        try:
            values = [float(v) for v in row[1:]]
        except ValueError as exc:
            raise BadTable(f"non-numeric value in row {label}") from exc
        for col_label, value in zip(header, values):
            table[LETTER_INDEX[label], LETTER_INDEX[col_label]] = value
    if np.isnan(table).any():
        raise BadTable("table has missing entries")
    if np.abs(table - table.T).max() > 1e-9:
        raise BadTable("table is asymmetric beyond 1e-9")
    return Scorer(kind="table", table=table, negate=negate)


def load_score_table(path: str | Path, negate: bool = True) -> Scorer:
    return parse_score_table(Path(path).read_text(), negate=negate)


def extract_instances(
    structure: ProteinStructure,
    config: ContactConfig = ContactConfig(),
    scorer: Scorer = Scorer(),
) -> list[InteractionInstance]:
    """All residue pairs in contact under the config's predicates.

    Intra-chain pairs must satisfy the sequence-separation minimum;
    cross-chain pairs (only when enabled) are exempt from it. Output is
    sorted by residue coordinates, so extraction is deterministic.
    """
    flat = structure.residues()
    n = len(flat)

    # Candidate pairs by chain/separation predicates, before distances.
    candidates: list[tuple[int, int]] = []
    for i in range(n):
        chain_i, res_i = flat[i]
        for j in range(i + 1, n):
            chain_j, res_j = flat[j]
            if chain_i == chain_j:
                if abs(res_i.seq_index - res_j.seq_index) < config.min_seq_separation:
                    continue
            elif not config.cross_chain:
                continue
            candidates.append((i, j))

    distances = _candidate_distances(flat, candidates, config.mode)

    instances = []
    for (i, j), dist in zip(candidates, distances):
        if dist > config.threshold_tau:
            continue
        chain_i, res_i = flat[i]
        chain_j, res_j = flat[j]
        cls = InteractionClass.of(res_i.one_letter_code, res_j.one_letter_code)
        first, second = sorted(
            [(chain_i, res_i.seq_index), (chain_j, res_j.seq_index)]
        )
        instances.append(
            InteractionInstance(
                protein_id=structure.id,
                interaction_class=cls,
                residues=(first, second),
                distance=float(dist),
                score=scorer.score(cls),
            )
        )
    instances.sort(key=lambda inst: inst.residues)
    return instances


def _candidate_distances(
    flat: list, candidates: list[tuple[int, int]], mode: str
) -> np.ndarray:
    """Distances for candidate pairs; vectorized for point-like modes."""
    if not candidates:
        return np.empty(0)
    if mode in ("c_alpha", "centroid"):
        reps = np.full((len(flat), 3), np.nan)
        for k, (_, res) in enumerate(flat):
            if mode == "c_alpha":
                ca = res.atom("CA")
                if ca is not None:
                    reps[k] = ca.position
            else:
                reps[k] = res.coordinates().mean(axis=0)
        ii = np.array([i for i, _ in candidates])
        jj = np.array([j for _, j in candidates])
        touched = np.unique(np.concatenate([ii, jj]))
        bad = touched[np.isnan(reps[touched]).any(axis=1)]
        if bad.size:
            seq = flat[int(bad[0])][1].seq_index
            raise MissingAtom(f"residue {seq} has no CA atom")
        return np.linalg.norm(reps[ii] - reps[jj], axis=1)
    return np.array(
        [
            residue_distance(flat[i][1], flat[j][1], mode)
            for i, j in candidates
        ]
    )


CSV_HEADER = "protein_id,class,chain_i,seq_i,chain_j,seq_j,distance,score"


def instances_to_csv(instances: list[InteractionInstance]) -> str:
    """Render instances in the interchange CSV format."""
    lines = [CSV_HEADER]
    for inst in instances:
        (ci, si), (cj, sj) = inst.residues
        lines.append(
            f"{inst.protein_id},{inst.interaction_class.render()},"
            f"{ci},{si},{cj},{sj},{inst.distance!r},{inst.score!r}"
        )
    return "\n".join(lines) + "\n"


def instances_from_csv(text: str) -> list[InteractionInstance]:
    reader = csv.DictReader(io.StringIO(text))
    expected = CSV_HEADER.split(",")
    if reader.fieldnames != expected:
        raise ValueError(
            f"bad instance CSV header: {reader.fieldnames}, expected {expected}"
        )
    out = []
    for row in reader:
        out.append(
            InteractionInstance(
                protein_id=row["protein_id"],
                interaction_class=InteractionClass.parse(row["class"]),
                residues=(
                    (row["chain_i"], int(row["seq_i"])),
                    (row["chain_j"], int(row["seq_j"])),
                ),
                distance=float(row["distance"]),
                score=float(row["score"]),
            )
        )
    return out

"""Interaction classes, contact extraction, score tables, CSV round trip."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from foldvote.aminoacids import ONE_LETTER
from foldvote.contacts import (
    ContactConfig,
    InteractionClass,
    Scorer,
    class_universe,
    extract_instances,
    instances_from_csv,
    instances_to_csv,
    parse_score_table,
)
from foldvote.errors import BadTable, MissingAtom
from foldvote.pdb import AtomRecord, ProteinStructure, Residue, residue_distance


def ca_structure(spec, pid="toy"):
    """spec: list of (chain, code, seq, xyz) with a single CA atom each."""
    chains: dict[str, list] = {}
    for chain, code, seq, xyz in spec:
        atom = AtomRecord(name="CA", position=np.array(xyz, dtype=float))
        chains.setdefault(chain, []).append(
            Residue(one_letter_code=code, seq_index=seq, atoms=[atom])
        )
    return ProteinStructure(
        id=pid, chains=[(c, rs) for c, rs in sorted(chains.items())]
    )


FOUR_RESIDUE = [
    ("A", "A", 1, (0, 0, 0)),
    ("A", "V", 2, (4, 0, 0)),
    ("A", "G", 5, (6, 0, 0)),
    ("A", "L", 9, (30, 0, 0)),
]


class TestInteractionClass:
    def test_canonicalization(self):
        assert InteractionClass.of("V", "A") == InteractionClass.of("A", "V")
        assert InteractionClass.of("V", "A").render() == "A-V"

    def test_parse_render_roundtrip(self):
        for cls in class_universe(True):
            assert InteractionClass.parse(cls.render()) == cls

    def test_rejects_unknown_letter(self):
        with pytest.raises(ValueError):
            InteractionClass.of("A", "B")  # B is not an amino-acid code


class TestClassUniverse:
    def test_with_homopairs(self):
        u = class_universe(True)
        assert len(u) == 210
        assert u[0] == InteractionClass.of("A", "A")
        assert list(u) == sorted(u)

    def test_without_homopairs(self):
        u = class_universe(False)
        assert len(u) == 190
        assert all(c.first != c.second for c in u)

    def test_oracle_count(self):
        # independent enumeration over the letter alphabet
        letters = sorted(ONE_LETTER)
        hetero = {(a, b) for i, a in enumerate(letters) for b in letters[i + 1 :]}
        assert len(class_universe(False)) == len(hetero)
        assert len(class_universe(True)) == len(hetero) + len(letters)

    def test_membership(self):
        assert InteractionClass.of("V", "A") in set(class_universe(True))


class TestExtract:
    def test_four_residue_example(self):
        s = ca_structure(FOUR_RESIDUE)
        inst = extract_instances(s, ContactConfig(), Scorer("unit_count"))
        keyed = {(i.residues, i.distance) for i in inst}
        assert keyed == {
            ((("A", 1), ("A", 5)), 6.0),
            ((("A", 2), ("A", 5)), 2.0),
        }
        assert {i.interaction_class.render() for i in inst} == {"A-G", "G-V"}

    def test_tiny_threshold_empty(self):
        s = ca_structure(FOUR_RESIDUE)
        inst = extract_instances(
            s, ContactConfig(threshold_tau=0.5), Scorer("unit_count")
        )
        assert inst == []

    def test_unit_scores(self):
        s = ca_structure(FOUR_RESIDUE)
        inst = extract_instances(s, ContactConfig(), Scorer("unit_count"))
        assert all(i.score == 1.0 for i in inst)

    def test_cross_chain(self):
        spec = [
            ("A", "A", 1, (0, 0, 0)),
            ("B", "V", 1, (1, 0, 0)),
        ]
        s = ca_structure(spec)
        off = extract_instances(s, ContactConfig(), Scorer("unit_count"))
        assert off == []
        on = extract_instances(
            s, ContactConfig(cross_chain=True), Scorer("unit_count")
        )
        assert len(on) == 1
        # separation predicate is intra-chain only
        assert on[0].residues == ((("A", 1), ("B", 1)))

    def test_tau_monotonicity(self):
        s = ca_structure(FOUR_RESIDUE)
        seen = set()
        for tau in (1.0, 2.0, 6.0, 8.0, 40.0):
            inst = extract_instances(
                s, ContactConfig(threshold_tau=tau), Scorer("unit_count")
            )
            now = {i.residues for i in inst}
            assert seen <= now
            seen = now

    def test_missing_ca_raises(self):
        bad = Residue(
            one_letter_code="A",
            seq_index=1,
            atoms=[AtomRecord(name="CB", position=np.zeros(3))],
        )
        ok = Residue(
            one_letter_code="G",
            seq_index=5,
            atoms=[AtomRecord(name="CA", position=np.zeros(3))],
        )
        s = ProteinStructure(id="x", chains=[("A", [bad, ok])])
        with pytest.raises(MissingAtom):
            extract_instances(s, ContactConfig(), Scorer("unit_count"))

    def test_bad_config(self):
        with pytest.raises(ValueError):
            ContactConfig(threshold_tau=0.0)
        with pytest.raises(ValueError):
            ContactConfig(mode="nonsense")
        with pytest.raises(ValueError):
            ContactConfig(min_seq_separation=-1)

    @given(st.integers(0, 2**31 - 1))
    def test_brute_force_equivalence(self, seed):
        # random <= 12-residue single-chain structure vs an all-pairs oracle
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 12))
        seqs = sorted(rng.choice(np.arange(1, 40), size=n, replace=False).tolist())
        spec = [
            ("A", ONE_LETTER[int(rng.integers(20))], s, tuple(rng.uniform(0, 15, 3)))
            for s in seqs
        ]
        s = ca_structure(spec)
        config = ContactConfig(threshold_tau=7.0, min_seq_separation=2)
        got = {
            i.residues for i in extract_instances(s, config, Scorer("unit_count"))
        }
        residues = s.chains[0][1]
        want = set()
        for i in range(n):
            for j in range(i + 1, n):
                a, b = residues[i], residues[j]
                if abs(a.seq_index - b.seq_index) < 2:
                    continue
                if residue_distance(a, b, "c_alpha") <= 7.0:
                    want.add((("A", a.seq_index), ("A", b.seq_index)))
        assert got == want


def table_csv(value_fn):
    letters = sorted(ONE_LETTER)
    lines = ["," + ",".join(letters)]
    for a in letters:
        lines.append(a + "," + ",".join(str(value_fn(a, b)) for b in letters))
    return "\n".join(lines) + "\n"


class TestScoreTable:
    def test_symmetric_lookup(self):
        text = table_csv(lambda a, b: ord(a) + ord(b))
        scorer = parse_score_table(text, negate=False)
        av = scorer.score(InteractionClass.of("A", "V"))
        va = scorer.score(InteractionClass.of("V", "A"))
        assert av == va == ord("A") + ord("V")

    def test_negate_default(self):
        text = table_csv(lambda a, b: 2.5)
        scorer = parse_score_table(text)
        assert scorer.score(InteractionClass.of("A", "V")) == -2.5

    def test_missing_row(self):
        text = table_csv(lambda a, b: 1.0)
        truncated = "\n".join(text.splitlines()[:-1]) + "\n"
        with pytest.raises(BadTable):
            parse_score_table(truncated)

    def test_asymmetric(self):
        text = table_csv(lambda a, b: 1.0 if a <= b else 2.0)
        with pytest.raises(BadTable):
            parse_score_table(text)

    def test_bad_header(self):
        text = table_csv(lambda a, b: 0.0).replace(",A,", ",B,", 1)
        with pytest.raises(BadTable):
            parse_score_table(text)

    def test_extract_with_table(self):
        text = table_csv(lambda a, b: 3.0)
        scorer = parse_score_table(text)  # negate=True
        s = ca_structure(FOUR_RESIDUE)
        inst = extract_instances(s, ContactConfig(), scorer)
        assert all(i.score == -3.0 for i in inst)


class TestCsvRoundTrip:
    def test_roundtrip(self):
        s = ca_structure(FOUR_RESIDUE)
        inst = extract_instances(s, ContactConfig(), Scorer("unit_count"))
        text = instances_to_csv(inst)
        back = instances_from_csv(text)
        assert [
            (i.protein_id, i.interaction_class, i.residues, i.distance, i.score)
            for i in back
        ] == [
            (i.protein_id, i.interaction_class, i.residues, i.distance, i.score)
            for i in inst
        ]

    def test_bad_header_rejected(self):
        with pytest.raises(ValueError):
            instances_from_csv("wrong,header\n1,2\n")

"""Bundled data files: a tiny synthetic structure for pipeline checks."""

from __future__ import annotations

from pathlib import Path

_HERE = Path(__file__).resolve().parent


def four_residue_pdb_path() -> Path:
    """Synthetic single-chain structure with four residues placed so that
    exactly two residue pairs fall under an 8 Angstrom c-alpha threshold
    at sequence separation >= 3."""
    return _HERE / "four_residue.pdb"

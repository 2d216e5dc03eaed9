"""The twenty standard amino acids and their code tables."""

from __future__ import annotations

# One-letter codes in lexicographic order; this ordering is the canonical
# axis for score tables and class universes everywhere in the package.
ONE_LETTER = "ACDEFGHIKLMNPQRSTVWY"

THREE_TO_ONE = {
    "ALA": "A", "ARG": "R", "ASN": "N", "ASP": "D", "CYS": "C",
    "GLN": "Q", "GLU": "E", "GLY": "G", "HIS": "H", "ILE": "I",
    "LEU": "L", "LYS": "K", "MET": "M", "PHE": "F", "PRO": "P",
    "SER": "S", "THR": "T", "TRP": "W", "TYR": "Y", "VAL": "V",
}

ONE_TO_THREE = {one: three for three, one in THREE_TO_ONE.items()}

LETTER_INDEX = {letter: i for i, letter in enumerate(ONE_LETTER)}

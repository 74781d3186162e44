"""Exact computational toolkit for character tables, Galois actions and
principal p-blocks of small permutation groups, plus a census runner that
verifies block-theoretic statements over a corpus of groups."""

__version__ = "0.1.0"

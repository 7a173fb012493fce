"""Constants module for the Bratteli toolkit.

This module contains constants used throughout the toolkit, including the
built-in graph families, the algebras whose branching graphs they are, and
the verdicts of the vanishing criterion.
"""

from enum import Enum

ENV_OUTPUT_DIR = "BRATTELI_OUTPUT_DIR"
ENV_SEED = "BRATTELI_SEED"
ENV_LOG_LEVEL = "BRATTELI_LOG_LEVEL"

ALGEBRA = "algebra"
QUOTIENT = "quotient"
A_FORMULA = "a_formula"
DESCRIPTION = "description"

PASCALIZED_PREFIX = "pascalized_"
CUSTOM_FAMILY = "custom"


class FamilyType(Enum):
    """Enumeration of the built-in graded graph families."""

    CHAIN = "chain"
    YOUNG = "young"
    WALLED_YOUNG = "walled_young"
    DOUBLED_YOUNG = "doubled_young"


class Direction(Enum):
    """Direction of a neighbor query across a level boundary."""

    UP = "up"
    DOWN = "down"


class Verdict(Enum):
    """Outcome of the vanishing criterion for off-diagonal cylinders."""

    VANISHES = "vanishes"
    POSITIVE_LIMIT = "positive_limit"


class OutputFormat(Enum):
    """Machine-readable output formats of the command line."""

    TSV = "tsv"
    JSON = "json"
    DOT = "dot"


# What the pascalization of each family is the branching graph of, and
# the quotient by the ideal of non-invertible generators.
FAMILY_DATA = {
    FamilyType.CHAIN: {
        ALGEBRA: "Temperley-Lieb algebra",
        QUOTIENT: "C",
        A_FORMULA: "a_l = 1",
        DESCRIPTION: (
            "The half line Z+ with edges n - (n+1); its pascalization is half the Pascal graph."
        ),
    },
    FamilyType.YOUNG: {
        ALGEBRA: "Brauer algebra",
        QUOTIENT: "C[S_n]",
        A_FORMULA: "a_l = l",
        DESCRIPTION: "Partitions ordered by single-box inclusion.",
    },
    FamilyType.WALLED_YOUNG: {
        ALGEBRA: "walled Brauer algebra",
        QUOTIENT: "C[S_p x S_q]",
        A_FORMULA: "a_l = [(l+1)/2]",
        DESCRIPTION: (
            "Pairs of partitions; steps from even levels grow the first partition, "
            "steps from odd levels grow the second."
        ),
    },
    FamilyType.DOUBLED_YOUNG: {
        ALGEBRA: "partition algebra",
        QUOTIENT: "C[S_[n/2]]",
        A_FORMULA: "a_2l = l, a_2l+1 = 1",
        DESCRIPTION: "The Young graph with every level repeated twice, joined by identity edges.",
    },
}
